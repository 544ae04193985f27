"""d-leading multiindices and coefficient formulas over integral grids.

Every formula here reads a coefficient of ``P`` off its values on a grid.
The witness searches scan grid points in lexicographic enumeration order and
return the first hit, so results are deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, TheoremViolated
from .gridcore import Grid, mode_products
from .multipoly import MultiPoly


@dataclass(frozen=True)
class DLeadingReport:
    e: tuple
    is_leading: bool
    witness: tuple | None = None


def is_d_leading(P: MultiPoly, e: Sequence[int], d: Sequence[int]) -> DLeadingReport:
    """Whether every monomial of ``P`` is ``X^e`` or has a coordinate ``j`` with
    ``delta_j != e_j`` and ``delta_j <= d_j``.  The first offending monomial in
    lexicographic order is returned as witness.
    """
    e, d = tuple(e), tuple(d)
    if len(e) != len(d) or len(e) != P.nvars:
        raise DomainError("multiindex length mismatch")
    if any(a > b for a, b in zip(e, d)):
        raise DomainError(f"e = {e} is not <= d = {d}")
    for delta, _ in P.items():
        if delta == e:
            continue
        if any(dj != ej and dj <= bound for dj, ej, bound in zip(delta, e, d)):
            continue
        return DLeadingReport(e, False, delta)
    return DLeadingReport(e, True, None)


def _require_degree(P: MultiPoly, grid: Grid):
    if P.ring != grid.ring or P.nvars != grid.n:
        raise DomainError("polynomial does not match grid")
    if P.total_degree() > grid.sigma_d:
        raise DomainError("degree exceeds Σd")


def coeff_formula_general(grid: Grid, P: MultiPoly, e: Sequence[int]) -> int:
    """``P_e = sum_x psi_{e,x} N(x)^{-1} P(x)`` for ``e`` d-leading in ``P``."""
    grid.require_integral()
    if P.ring != grid.ring or P.nvars != grid.n:
        raise DomainError("polynomial does not match grid")
    report = is_d_leading(P, e, grid.d)
    if not report.is_leading:
        raise DomainError(f"{tuple(e)} is not d-leading (monomial {report.witness})")
    arith, scaled = grid.divide_by_N(grid.values_of(P))
    mats = grid.psi_matrices(arith)
    rows = [[m[k]] for m, k in zip(mats, e)]
    (total,) = mode_products(scaled, grid.shape, rows, arith) if grid.n else (scaled[0],)
    return grid.to_ring(total)


def coeff_formula_main(grid: Grid, P: MultiPoly) -> int:
    """``P_d = sum_x N(x)^{-1} P(x)`` for ``deg P <= Σd``."""
    grid.require_integral()
    _require_degree(P, grid)
    arith, scaled = grid.divide_by_N(grid.values_of(P))
    total = arith.zero
    for v in scaled:
        total = arith.add(total, v)
    return grid.to_ring(total)


def nonzero_exists(grid: Grid, P: MultiPoly) -> tuple:
    """A grid point where ``P`` does not vanish, given ``P_d != 0``."""
    grid.require_integral()
    _require_degree(P, grid)
    if P.coefficient(grid.d) == grid.ring.zero:
        raise DomainError("coefficient P_d is zero")
    z = grid.ring.zero
    for x, v in zip(grid.points(), grid.values_of(P)):
        if v != z:
            return x
    raise TheoremViolated("theorem violated: P_d != 0 but P vanishes on the grid")


def second_nonzero(grid: Grid, P: MultiPoly, x0: Sequence[int]) -> tuple:
    """A nonzero of ``P`` other than ``x0``, given ``P_d == 0`` with ``d`` d-leading."""
    grid.require_integral()
    if P.ring != grid.ring or P.nvars != grid.n:
        raise DomainError("polynomial does not match grid")
    report = is_d_leading(P, grid.d, grid.d)
    if not report.is_leading:
        raise DomainError(f"d is not d-leading in P (monomial {report.witness})")
    if P.coefficient(grid.d) != grid.ring.zero:
        raise DomainError("coefficient P_d is nonzero")
    x0 = tuple(x0)
    if x0 not in grid:
        raise DomainError(f"{x0} is not a grid point")
    z = grid.ring.zero
    if P.evaluate(x0) == z:
        raise DomainError(f"P vanishes at {x0}")
    for x, v in zip(grid.points(), grid.values_of(P)):
        if v != z and x != x0:
            return x
    raise TheoremViolated("theorem violated: exactly one nonzero although P_d = 0")


def common_zero_mask(grid: Grid, polys: Sequence[MultiPoly]) -> list[bool]:
    mask = [True] * grid.size
    z = grid.ring.zero
    for P in polys:
        for i, v in enumerate(grid.values_of(P)):
            if v != z:
                mask[i] = False
    return mask


def cw_variant_count(grid: Grid, polys: Sequence[MultiPoly]) -> int:
    """Number of common zeros on a grid over a finite field, asserted ``!= 1``.

    Requires ``(q - 1) * sum deg(P_i) < Σd``.
    """
    R = grid.ring
    if not R.is_field or R.size is None:
        raise DomainError("grid must lie over a finite field")
    q = R.size
    degs = sum(max(P.total_degree(), 0) for P in polys)
    if (q - 1) * degs >= grid.sigma_d:
        raise DomainError(f"degree condition violated: {(q - 1) * degs} >= Σd = {grid.sigma_d}")
    count = sum(common_zero_mask(grid, polys))
    if count == 1:
        raise TheoremViolated("theorem violated: exactly one common zero")
    return count
