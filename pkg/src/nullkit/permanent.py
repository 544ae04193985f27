"""Matrix polynomials, delta-permanents and Alon-Tarsi orientation counts."""
from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import DomainError, SizeGuardError, TheoremViolated
from .gridcore import Grid
from .multipoly import MultiPoly
from .ring import Integers, Ring, ring_from_json

MAX_ORIENTATION_EDGES = 24


@dataclass(frozen=True)
class RingMatrix:
    ring: Ring
    rows: tuple[tuple[int, ...], ...]
    ncols: int

    @classmethod
    def from_rows(cls, ring: Ring, rows: Sequence[Sequence], ncols: int | None = None) -> "RingMatrix":
        rows = tuple(tuple(ring.coerce(a) for a in r) for r in rows)
        if ncols is None:
            if not rows:
                raise DomainError("ncols required for a matrix without rows")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise DomainError("matrix is not rectangular")
        return cls(ring, rows, ncols)

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return self.ncols

    def scale_row(self, i: int, u: int) -> "RingMatrix":
        R = self.ring
        rows = list(self.rows)
        rows[i] = tuple(R.mul(u, a) for a in rows[i])
        return RingMatrix(R, tuple(rows), self.ncols)

    def times(self, x: Sequence[int]) -> list[int]:
        R = self.ring
        return [R.sum(R.mul(a, v) for a, v in zip(row, x)) for row in self.rows]

    def to_json(self) -> dict:
        R = self.ring
        return {"ring": R.to_json(), "rows": [[R.element_to_json(a) for a in r] for r in self.rows], "ncols": self.ncols}

    @classmethod
    def from_json(cls, obj: dict) -> "RingMatrix":
        R = ring_from_json(obj["ring"])
        rows = [[R.element_from_json(a) for a in r] for r in obj["rows"]]
        return cls.from_rows(R, rows, obj.get("ncols"))


@dataclass(frozen=True)
class OrientedMultigraph:
    """Loopless directed multigraph; each edge is ``(head, tail)``."""

    vertices: tuple
    edges: tuple[tuple, ...]

    def __post_init__(self):
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise DomainError("duplicate vertex")
        for head, tail in self.edges:
            if head not in vs or tail not in vs:
                raise DomainError(f"edge ({head}, {tail}) uses an unknown vertex")
            if head == tail:
                raise DomainError(f"loop at vertex {head}")

    @classmethod
    def from_json(cls, obj: dict) -> "OrientedMultigraph":
        return cls(tuple(obj["vertices"]), tuple((e["head"], e["tail"]) for e in obj["edges"]))

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [{"head": h, "tail": t} for h, t in self.edges]}

    def head_degrees(self) -> tuple[int, ...]:
        idx = {v: i for i, v in enumerate(self.vertices)}
        out = [0] * len(self.vertices)
        for h, _ in self.edges:
            out[idx[h]] += 1
        return tuple(out)


def matrix_polynomial(A: RingMatrix, b: Sequence[int] | None = None) -> MultiPoly:
    """``prod_i (sum_j a_ij X_j - b_i)``."""
    R = A.ring
    if b is None:
        b = [R.zero] * A.m
    b = [R.coerce(v) for v in b]
    if len(b) != A.m:
        raise DomainError("b has wrong length")
    result = MultiPoly.one(R, A.n)
    for row, bi in zip(A.rows, b):
        result = result * MultiPoly.linear(R, row, R.neg(bi))
    return result


def _assignments(counts: list[int], m: int) -> Iterator[tuple[int, ...]]:
    """Every word of length ``m`` over columns using column ``j`` exactly ``counts[j]`` times."""
    word = [0] * m

    def rec(i):
        if i == m:
            yield tuple(word)
            return
        for j, c in enumerate(counts):
            if c:
                counts[j] -= 1
                word[i] = j
                yield from rec(i + 1)
                counts[j] += 1

    yield from rec(0)


def per_delta(A: RingMatrix, delta: Sequence[int]) -> int:
    """Sum over maps ``sigma: rows -> cols`` with fiber sizes ``delta`` of ``prod_i a_{i, sigma(i)}``."""
    R = A.ring
    delta = list(delta)
    if len(delta) != A.n or any(k < 0 for k in delta):
        raise DomainError("delta must be a non-negative vector of length n")
    if sum(delta) != A.m:
        return R.zero
    total = R.zero
    for sigma in _assignments(delta, A.m):
        v = R.one
        for row, j in zip(A.rows, sigma):
            v = R.mul(v, row[j])
            if v == R.zero:
                break
        total = R.add(total, v)
    return total


def permanent(A: RingMatrix) -> int:
    if A.m != A.n:
        raise DomainError("permanent needs a square matrix")
    return per_delta(A, [1] * A.n)


def per_delta_expansion_check(A: RingMatrix, delta: Sequence[int]) -> bool:
    return matrix_polynomial(A).coefficient(delta) == per_delta(A, delta)


def repeated_columns(A: RingMatrix, delta: Sequence[int]) -> RingMatrix:
    """Matrix containing column ``j`` of ``A`` exactly ``delta_j`` times."""
    cols = [j for j, k in enumerate(delta) for _ in range(k)]
    return RingMatrix(A.ring, tuple(tuple(r[j] for j in cols) for r in A.rows), len(cols))


def per_factorial_cross_check(A: RingMatrix, delta: Sequence[int]) -> bool | None:
    """``(prod delta_j!) per_delta(A) == per(A|delta)``; ``None`` when the factor is a zero divisor."""
    R = A.ring
    if sum(delta) != A.m:
        return None
    f = R.scalar(math.prod(math.factorial(k) for k in delta))
    if f == R.zero or R.is_zero_divisor(f):
        return None
    return R.mul(f, per_delta(A, delta)) == permanent(repeated_columns(A, delta))


def permanent_formula(A: RingMatrix, b: Sequence[int], grid: Grid) -> int:
    """``per_d(A) = sum_x N(x)^{-1} prod_i ((Ax)_i - b_i)``, asserted against :func:`per_delta`."""
    from .coefficient import coeff_formula_main

    if grid.ring != A.ring or grid.n != A.n:
        raise DomainError("grid does not match matrix")
    grid.require_integral()
    if A.m > grid.sigma_d:
        raise DomainError(f"m = {A.m} exceeds Σd = {grid.sigma_d}")
    P = matrix_polynomial(A, b)
    value = coeff_formula_main(grid, P)
    if value != per_delta(A, grid.d):
        raise TheoremViolated("theorem violated: grid sum differs from per_d(A)")
    return value


def incidence_matrix(G: OrientedMultigraph, ring: Ring | None = None) -> RingMatrix:
    """``a_{e,v} = [head(e) = v] - [tail(e) = v]``."""
    R = ring or Integers()
    if R.neg(R.one) == R.one:
        warnings.warn("-1 == 1 in this ring; the incidence matrix forgets edge directions", stacklevel=2)
    idx = {v: i for i, v in enumerate(G.vertices)}
    rows = []
    for h, t in G.edges:
        row = [R.zero] * len(G.vertices)
        row[idx[h]] = R.one
        row[idx[t]] = R.neg(R.one)
        rows.append(tuple(row))
    return RingMatrix(R, tuple(rows), len(G.vertices))


def alon_tarsi_count(G: OrientedMultigraph, delta: Sequence[int], max_edges: int = MAX_ORIENTATION_EDGES) -> tuple[int, int]:
    """Even and odd orientations with in-degree-like fiber vector ``delta``.

    Each edge is sent to its head (kept) or its tail (flipped); parity counts
    flipped edges.  Asserts ``even - odd == per_delta(A(G))`` over Z.
    """
    delta = tuple(delta)
    if len(delta) != len(G.vertices):
        raise DomainError("delta must have one entry per vertex")
    if sum(delta) != len(G.edges):
        raise DomainError("sum of delta must equal the number of edges")
    if len(G.edges) > max_edges:
        raise SizeGuardError(f"2^{len(G.edges)} orientations exceed the limit 2^{max_edges}")
    idx = {v: i for i, v in enumerate(G.vertices)}
    ends = [(idx[h], idx[t]) for h, t in G.edges]
    even = odd = 0
    for flips in itertools.product((0, 1), repeat=len(ends)):
        fiber = [0] * len(G.vertices)
        for (h, t), f in zip(ends, flips):
            fiber[t if f else h] += 1
        if tuple(fiber) == delta:
            if sum(flips) % 2:
                odd += 1
            else:
                even += 1
    if even - odd != per_delta(incidence_matrix(G), delta):
        raise TheoremViolated("theorem violated: |DE| - |DO| != per_delta(A(G))")
    return even, odd


def eulerian_counts(G: OrientedMultigraph) -> tuple[int, int]:
    """``(|EE|, |EO|)`` via the orientation count at the head-degree vector."""
    return alon_tarsi_count(G, G.head_degrees())


def coloring_search(A: RingMatrix, b: Sequence[int] | None, grid: Grid) -> tuple | None:
    """First grid point ``x`` (lexicographic) with ``(Ax)_i != b_i`` for all ``i``."""
    R = A.ring
    if grid.ring != R or grid.n != A.n:
        raise DomainError("grid does not match matrix")
    b = [R.zero] * A.m if b is None else [R.coerce(v) for v in b]
    for x in grid.points():
        if all(v != bi for v, bi in zip(A.times(x), b)):
            return x
    return None
