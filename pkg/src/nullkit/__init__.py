"""Exact polynomial-method toolkit: grids, coefficient formulas and Nullstellensatz certificates."""
