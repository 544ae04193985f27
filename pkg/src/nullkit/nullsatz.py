"""Trimming polynomials modulo the axis polynomials ``L_j = prod_{x in X_j} (X_j - x)``.

``trim`` rewrites ``P = P/X + sum_j H_j L_j`` with ``deg_j(P/X) <= d_j``.
Offending terms are reduced largest-first in lexicographic order; each term
``c X^delta`` with ``delta_j > d_j`` (first such ``j``) is split using
``X_j^{delta_j} = q(X_j) L_j + r(X_j)``.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .coefficient import is_d_leading
from .errors import DomainError
from .gridcore import Grid, univariate_from_roots
from .multipoly import MultiPoly
from .ring import Ring


@dataclass(frozen=True)
class Certificate:
    trimmed: MultiPoly
    cofactors: tuple[MultiPoly, ...]
    axis_polys: tuple[MultiPoly, ...]

    def reconstruct(self) -> MultiPoly:
        total = self.trimmed
        for H, L in zip(self.cofactors, self.axis_polys):
            total = total + H * L
        return total

    def to_json(self) -> dict:
        return {
            "trimmed": self.trimmed.to_json(),
            "cofactors": [H.to_json() for H in self.cofactors],
            "axisPolys": [L.to_json() for L in self.axis_polys],
        }


@dataclass(frozen=True)
class NotVanishing:
    witness: tuple

    def to_json(self) -> dict:
        return {"notVanishing": list(self.witness)}


@lru_cache(maxsize=256)
def _power_division(ring: Ring, axis: tuple, k: int) -> tuple[tuple, tuple]:
    """``(quotient, remainder)`` of ``X^k`` divided by the monic ``L = prod (X - x)``."""
    L = univariate_from_roots(ring, axis)
    deg = len(L) - 1
    num = [ring.zero] * k + [ring.one]
    quo = [ring.zero] * max(k - deg + 1, 0)
    for i in range(k, deg - 1, -1):
        c = num[i]
        if c == ring.zero:
            continue
        quo[i - deg] = c
        for t in range(deg + 1):
            num[i - deg + t] = ring.sub(num[i - deg + t], ring.mul(c, L[t]))
    return tuple(quo), tuple(num[:deg])


def axis_polynomial(grid: Grid, j: int) -> MultiPoly:
    R = grid.ring
    coeffs = univariate_from_roots(R, grid.axes[j])
    terms = {}
    for k, c in enumerate(coeffs):
        if c != R.zero:
            e = [0] * grid.n
            e[j] = k
            terms[tuple(e)] = c
    return MultiPoly._raw(R, grid.n, terms)


def trim(grid: Grid, P: MultiPoly) -> Certificate:
    """Reduce ``P`` to partial degrees ``<= d`` and record the cofactors."""
    if P.ring != grid.ring or P.nvars != grid.n:
        raise DomainError("polynomial does not match grid")
    R, d, n = grid.ring, grid.d, grid.n
    work = dict(P._terms)
    H: list[dict] = [{} for _ in range(n)]

    def offending(e):
        return any(k > dj for k, dj in zip(e, d))

    heap = [tuple(-k for k in e) for e in work if offending(e)]
    heapq.heapify(heap)
    while heap:
        e = tuple(-k for k in heapq.heappop(heap))
        c = work.pop(e, None)
        if c is None:
            continue
        j = next(i for i, (k, dj) in enumerate(zip(e, d)) if k > dj)
        quo, rem = _power_division(R, grid.axes[j], e[j])
        for t, qc in enumerate(quo):
            if qc == R.zero:
                continue
            f = e[:j] + (t,) + e[j + 1 :]
            v = R.add(H[j].get(f, R.zero), R.mul(c, qc))
            if v == R.zero:
                H[j].pop(f, None)
            else:
                H[j][f] = v
        for t, rc in enumerate(rem):
            if rc == R.zero:
                continue
            f = e[:j] + (t,) + e[j + 1 :]
            old = work.get(f)
            v = R.add(R.zero if old is None else old, R.mul(c, rc))
            if v == R.zero:
                work.pop(f, None)
            else:
                if old is None and offending(f):
                    heapq.heappush(heap, tuple(-k for k in f))
                work[f] = v
    return Certificate(
        MultiPoly._raw(R, n, work),
        tuple(MultiPoly._raw(R, n, h) for h in H),
        tuple(axis_polynomial(grid, j) for j in range(n)),
    )


def certify_vanishing(grid: Grid, P: MultiPoly) -> Certificate | NotVanishing:
    """Certificate ``P = sum H_j L_j`` if ``P`` vanishes on the integral grid, else a nonzero."""
    grid.require_integral()
    cert = trim(grid, P)
    if cert.trimmed.is_zero():
        return cert
    z = grid.ring.zero
    for x, v in zip(grid.points(), grid.values_of(P)):
        if v != z:
            return NotVanishing(x)
    raise DomainError("trimmed polynomial is nonzero but P vanishes; grid is not integral")


def check_dleading_preserved(grid: Grid, P: MultiPoly, e: Sequence[int]) -> bool:
    """Whether trimming keeps the coefficient of a d-leading ``e``."""
    report = is_d_leading(P, e, grid.d)
    if not report.is_leading:
        raise DomainError(f"{tuple(e)} is not d-leading (monomial {report.witness})")
    return trim(grid, P).trimmed.coefficient(e) == P.coefficient(e)
