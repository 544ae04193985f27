"""Interpolation over grids and reconstruction of polynomials from their values."""
from __future__ import annotations

import itertools
from typing import Sequence

from .errors import DomainError
from .gridcore import Grid, GridClass, GridMap, mode_products
from .multipoly import MultiPoly


def _coeffs_to_poly(grid: Grid, coeffs: list, to_ring) -> MultiPoly:
    R = grid.ring
    terms = {}
    for delta, c in zip(itertools.product(*(range(k + 1) for k in grid.d)), coeffs):
        c = to_ring(c)
        if c != R.zero:
            terms[delta] = c
    return MultiPoly._raw(R, grid.n, terms)


def _psi_apply(grid: Grid, values: list, arith) -> list:
    """Coefficient tensor of ``sum_x values[x] * L_{X,x}``."""
    return mode_products(values, grid.shape, grid.psi_matrices(arith), arith)


def psi_transform(grid: Grid, y: GridMap | Sequence[int]) -> MultiPoly:
    """The polynomial ``sum_x y(x) L_{X,x}``; it takes the value ``N(x) y(x)`` at each ``x``."""
    values = y.values if isinstance(y, GridMap) else [grid.ring.coerce(v) for v in y]
    if len(values) != grid.size:
        raise DomainError("grid map does not match grid")
    coeffs = _psi_apply(grid, list(values), grid.ring)
    return _coeffs_to_poly(grid, coeffs, lambda c: c)


def interpolate_division(grid: Grid, y: GridMap | Sequence[int]) -> MultiPoly:
    """Unique interpolant with partial degrees ``<= d`` on a division grid."""
    if grid.grid_class is not GridClass.DIVISION:
        raise DomainError("grid not division")
    values = y.values if isinstance(y, GridMap) else [grid.ring.coerce(v) for v in y]
    if len(values) != grid.size:
        raise DomainError("grid map does not match grid")
    arith, w = grid.inverse_N_weights()
    scaled = [arith.mul(a, b) for a, b in zip(w, values)]
    coeffs = _psi_apply(grid, scaled, arith)
    return _coeffs_to_poly(grid, coeffs, grid.to_ring)


def invert_integral(grid: Grid, P: MultiPoly | GridMap | Sequence[int]) -> MultiPoly:
    """Recover a polynomial with partial degrees ``<= d`` from its values on an integral grid.

    Accepts the polynomial itself (its values are taken) or a value table.
    Over Z the intermediate quotients ``P(x)/N(x)`` are exact rationals.
    """
    grid.require_integral()
    if isinstance(P, MultiPoly):
        if any(k > dj for k, dj in zip(P.partial_degrees(), grid.d)):
            raise DomainError("partial degrees exceed d")
        values = grid.values_of(P)
    elif isinstance(P, GridMap):
        values = P.values
    else:
        values = [grid.ring.coerce(v) for v in P]
    arith, scaled = grid.divide_by_N(values)
    coeffs = _psi_apply(grid, scaled, arith)
    return _coeffs_to_poly(grid, coeffs, grid.to_ring)


def inclusion_exclusion_coeff(values: GridMap | dict, delta: Sequence[int]) -> int:
    """``P_delta = sum_{x <= delta} (-1)^{|delta - x|} P(x)`` on the Boolean grid.

    ``values`` is a GridMap on ``{0,1}^n`` or a dict ``point -> value`` whose
    points are 0/1 tuples.
    """
    if isinstance(values, GridMap):
        grid = values.grid
        R = grid.ring
        if any(set(a) != {R.zero, R.one} for a in grid.axes):
            raise DomainError("inclusion-exclusion needs the Boolean grid")
        lookup = values.__getitem__
    else:
        raise DomainError("values must be a GridMap on {0,1}^n")
    if any(e not in (0, 1) for e in delta) or len(delta) != grid.n:
        raise DomainError("delta must be a 0/1 vector of length n")
    total = R.zero
    ones = [j for j, e in enumerate(delta) if e]
    for sub in itertools.product((0, 1), repeat=len(ones)):
        x = [R.zero] * grid.n
        for j, b in zip(ones, sub):
            if b:
                x[j] = R.one
        v = lookup(tuple(x))
        if (len(ones) - sum(sub)) % 2:
            v = R.neg(v)
        total = R.add(total, v)
    return total
