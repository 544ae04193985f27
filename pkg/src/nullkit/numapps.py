"""Checkers for the combinatorial applications and the integer / Z_m results.

Each checker pairs a degree audit (the algebraic side) with an exhaustive
scan that serves as the oracle.  The asserted property comes from the
theorem; a failed assertion raises :class:`TheoremViolated`.
"""
from __future__ import annotations

import itertools
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .coefficient import common_zero_mask
from .errors import DomainError, SizeGuardError, TheoremViolated
from .gridcore import Grid
from .multipoly import MultiPoly
from .ring import GaloisField, Integers, IntegersMod, Ring, is_prime

MAX_SCAN_POINTS = 2**24


def _guard(points: int, force: bool, limit: int = MAX_SCAN_POINTS):
    if points > limit and not force:
        raise SizeGuardError(f"scan of {points} points exceeds the limit {limit}; pass force=True")


def _boolean_grid(ring: Ring, n: int, force: bool) -> Grid:
    _guard(2**n, force)
    return Grid(ring, [(0, 1)] * n, max_points=None)


# -- regular subgraphs -----------------------------------------------------

@dataclass(frozen=True)
class SubgraphReport:
    edges: tuple[int, ...]
    common_zero_count: int
    vertices: int
    edge_count: int

    @property
    def audit(self) -> dict:
        return {"twoV": 2 * self.vertices, "edgesWithoutExtra": self.edge_count - 1, "edgesTotal": self.edge_count}

    def to_json(self) -> dict:
        return {"edges": list(self.edges), "commonZeroCount": self.common_zero_count, "audit": self.audit}


def regular_subgraph_check(vertices: Sequence, edges: Sequence[tuple], e0: int | None, force: bool = False) -> SubgraphReport:
    """Nonempty 3-regular subgraph of a loopless 4-regular multigraph plus the edge ``edges[e0]``.

    Uses the polynomials ``P_v = sum_{e ∋ v} X_e`` over F_3 on ``{0,1}^E``;
    their common zeros are the edge sets in which every vertex has degree 0 or 3.
    """
    if e0 is None:
        raise DomainError("an extra edge e0 is required")
    vertices = list(vertices)
    idx = {v: i for i, v in enumerate(vertices)}
    if len(idx) != len(vertices):
        raise DomainError("duplicate vertex")
    if not 0 <= e0 < len(edges):
        raise DomainError("e0 is not an edge index")
    deg = [0] * len(vertices)
    for k, (u, v) in enumerate(edges):
        if u not in idx or v not in idx:
            raise DomainError(f"edge {k} uses an unknown vertex")
        if u == v:
            raise DomainError(f"edge {k} is a loop")
        if k != e0:
            deg[idx[u]] += 1
            deg[idx[v]] += 1
    if any(k != 4 for k in deg):
        raise DomainError("graph minus e0 is not 4-regular")
    F3 = GaloisField(3)
    E = len(edges)
    polys = []
    for v in vertices:
        coeffs = [1 if v in e else 0 for e in edges]
        polys.append(MultiPoly.linear(F3, coeffs))
    # (q - 1) * sum deg = 2|V| = |E| - 1 < |E| = Σd
    if 2 * len(vertices) >= E:
        raise TheoremViolated("degree audit failed")
    grid = _boolean_grid(F3, E, force)
    mask = common_zero_mask(grid, polys)
    count = sum(mask)
    if count == 1:
        raise TheoremViolated("theorem violated: the empty edge set is the only solution")
    for x, ok in zip(grid.points(), mask):
        if ok and any(x):
            chosen = tuple(k for k, b in enumerate(x) if b)
            sub = [0] * len(vertices)
            for k in chosen:
                for w in edges[k]:
                    sub[idx[w]] += 1
            if any(s not in (0, 3) for s in sub):
                raise TheoremViolated("scan returned a non-regular subgraph")
            return SubgraphReport(chosen, count, len(vertices), E)
    raise TheoremViolated("no nonempty common zero found")


# -- cube covers -----------------------------------------------------------

@dataclass(frozen=True)
class CubeCoverReport:
    uncovered: tuple[tuple[int, ...], ...]
    m: int
    n: int
    theorem_consistent: bool
    polynomial_agrees: bool

    def to_json(self) -> dict:
        return {
            "uncovered": [list(x) for x in self.uncovered],
            "m": self.m,
            "n": self.n,
            "theoremConsistent": self.theorem_consistent,
            "polynomialAgrees": self.polynomial_agrees,
        }


def cube_cover_check(ring: Ring, hyperplanes: Sequence[tuple[Sequence[int], int]], n: int, force: bool = False) -> CubeCoverReport:
    """Vertices of ``{0,1}^n`` missed by the hyperplanes ``a.x = b``.

    If exactly one vertex is missed, at least ``n`` planes are needed.
    The product ``prod_i (a_i.X - b_i)`` is evaluated as a second route;
    its support on the cube must be the uncovered set.
    """
    if not ring.is_field:
        raise DomainError("hyperplanes must live over a field")
    planes = []
    for a, b in hyperplanes:
        if len(a) != n:
            raise DomainError("normal vector has wrong length")
        planes.append(([ring.coerce(c) for c in a], ring.coerce(b)))
    grid = _boolean_grid(ring, n, force)
    uncovered = []
    for x in grid.points():
        if all(ring.sum(ring.mul(c, v) for c, v in zip(a, x)) != b for a, b in planes):
            uncovered.append(x)
    P = MultiPoly.one(ring, n)
    for a, b in planes:
        P = P * MultiPoly.linear(ring, a, ring.neg(b))
    support = [x for x, v in zip(grid.points(), grid.values_of(P)) if v != ring.zero]
    consistent = len(uncovered) != 1 or len(planes) >= n
    if not consistent:
        raise TheoremViolated(f"theorem violated: {len(planes)} planes miss exactly one vertex of the {n}-cube")
    return CubeCoverReport(tuple(uncovered), len(planes), n, consistent, support == uncovered)


# -- parallel scans --------------------------------------------------------

def _slice_zero_count(args) -> int:
    ring, axes, polys = args
    grid = Grid(ring, axes, max_points=None)
    return sum(common_zero_mask(grid, polys))


def common_zero_count(ring: Ring, axes: Sequence[Sequence[int]], polys: Sequence[MultiPoly], jobs: int = 1) -> int:
    """Common zeros on a grid, optionally split over processes by the first coordinate.

    The reduction is a plain sum, so the result does not depend on ``jobs``.
    """
    if jobs < 1:
        raise DomainError("jobs must be >= 1")
    if not axes:
        return int(all(P.evaluate(()) == ring.zero for P in polys))
    if jobs == 1 or len(axes[0]) == 1:
        return _slice_zero_count((ring, list(axes), list(polys)))
    tasks = [(ring, [[a]] + list(axes[1:]), list(polys)) for a in axes[0]]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return sum(pool.map(_slice_zero_count, tasks))


# -- Chevalley-Warning -----------------------------------------------------

def chevalley_warning_count(field: Ring, polys: Sequence[MultiPoly], n: int, force: bool = False, jobs: int = 1) -> int:
    """Number of common zeros in ``F^n``; asserted divisible by the characteristic."""
    if not field.is_field or field.size is None:
        raise DomainError("need a finite field")
    for P in polys:
        if P.ring != field or P.nvars != n:
            raise DomainError("polynomial does not match the field or n")
    degs = sum(max(P.total_degree(), 0) for P in polys)
    if degs >= n:
        raise DomainError(f"degree condition violated: sum of degrees {degs} >= n = {n}")
    _guard(field.size**n, force)
    count = common_zero_count(field, [field.elements()] * n, polys, jobs)
    if count % field.characteristic:
        raise TheoremViolated(f"theorem violated: {field.characteristic} does not divide {count}")
    return count


# -- Cauchy-Davenport ------------------------------------------------------

def cauchy_davenport(A: Sequence[int], B: Sequence[int], p: int) -> tuple[int, int, bool]:
    """``(|A+B|, min(p, |A|+|B|-1), ok)`` in Z_p."""
    if not is_prime(p):
        raise DomainError(f"p = {p} is not prime")
    A = {a % p for a in A}
    B = {b % p for b in B}
    if not A or not B:
        raise DomainError("A and B must be nonempty")
    size = len({(a + b) % p for a in A for b in B})
    bound = min(p, len(A) + len(B) - 1)
    ok = size >= bound
    if not ok:
        raise TheoremViolated(f"theorem violated: |A+B| = {size} < {bound}")
    return size, bound, ok


# -- integer coefficient formula -------------------------------------------

def integer_coeff_formula(P: MultiPoly, d: Sequence[int]) -> tuple[int, int]:
    """Both sides of the binomial-weighted identity for ``P_d`` on ``[d]``."""
    if not isinstance(P.ring, Integers):
        raise DomainError("P must have integer coefficients")
    d = tuple(d)
    if len(d) != P.nvars or any(k < 0 for k in d):
        raise DomainError("d must be a non-negative vector of length nvars")
    if P.total_degree() > sum(d):
        raise DomainError("degree exceeds Σd")
    lhs = (-1) ** sum(d) * math.prod(math.factorial(k) for k in d) * P.coefficient(d)
    rhs = 0
    for x in itertools.product(*(range(k + 1) for k in d)):
        w = math.prod((-1) ** xj * math.comb(k, xj) for xj, k in zip(x, d))
        rhs += w * P.evaluate(x)
    if lhs != rhs:
        raise TheoremViolated(f"theorem violated: {lhs} != {rhs}")
    return lhs, rhs


# -- Z_m second nonzeros ---------------------------------------------------

@dataclass(frozen=True)
class ZmReport:
    nonzero_count: int
    exception: bool
    binomial_sum: int
    part_ii_witness: tuple | None
    asserted: bool

    def to_json(self) -> dict:
        return {
            "nonzeroCount": self.nonzero_count,
            "exception": self.exception,
            "binomialSum": self.binomial_sum,
            "partIIWitness": None if self.part_ii_witness is None else list(self.part_ii_witness),
            "asserted": self.asserted,
        }


def zm_second_nonzero(P: MultiPoly, m: int, n: int, force: bool = False) -> ZmReport:
    """Nonzero count of ``P`` on ``Z_m^n`` plus the vanishing binomial sum.

    For ``(m, n) = (4, 1)`` the statement has exceptions, so nothing is
    asserted and ``exception`` flags a count of exactly one.
    """
    if m < 2:
        raise DomainError("m must be at least 2")
    if is_prime(m):
        raise DomainError("m is prime: use field-case theorems")
    R = IntegersMod(m)
    if P.ring != R or P.nvars != n:
        raise DomainError("polynomial must live in Z_m[X_1..X_n]")
    _guard(m**n, force)
    grid = Grid(R, [range(m)] * n, max_points=None)
    values = grid.values_of(P)
    count = sum(1 for v in values if v)
    total = 0
    witness = None
    for x, v in zip(grid.points(), values):
        w = math.prod(math.comb(m - 1, xj) for xj in x)
        sign = (-1) ** sum(x)
        total += sign * w * v
        if witness is None and any(x) and (w * v) % m:
            witness = x
    total %= m
    special = (m, n) == (4, 1)
    if not special:
        if count == 1:
            raise TheoremViolated("theorem violated: exactly one nonzero")
        if total:
            raise TheoremViolated(f"theorem violated: binomial sum is {total}, not 0")
        if P.coefficient((0,) * n) and witness is None:
            raise TheoremViolated("theorem violated: P_0 != 0 but no weighted nonzero away from 0")
    return ZmReport(count, special and count == 1, total, witness, not special)


def normalized_cubic_exceptions() -> list[MultiPoly]:
    """All ``P`` in Z_4[X] with ``deg P <= 3``, ``P_3 != -1`` and ``P(x) != 0`` exactly at ``x = 0``."""
    R = IntegersMod(4)
    found = []
    for c3 in (0, 1, 2):
        for c2, c1, c0 in itertools.product(range(4), repeat=3):
            vals = [(c0 + c1 * x + c2 * x * x + c3 * x**3) % 4 for x in range(4)]
            if vals[0] and not any(vals[1:]):
                found.append(MultiPoly(R, 1, {(3,): c3, (2,): c2, (1,): c1, (0,): c0}))
    return found


# -- p-adic lemma ----------------------------------------------------------

def p_adic_valuation(v: int, p: int) -> float:
    if v == 0:
        return math.inf
    k = 0
    while v % p == 0:
        v //= p
        k += 1
    return k


@dataclass(frozen=True)
class PadicReport:
    c: int
    valuation: float
    divides: bool
    exact: bool
    pk_divides_y: bool

    def to_json(self) -> dict:
        val = None if self.valuation == math.inf else self.valuation
        return {"c": self.c, "valuation": val, "divides": self.divides, "exact": self.exact, "pkDividesY": self.pk_divides_y}


def padic_product_divisibility(y: int, p: int, k: int) -> PadicReport:
    """Valuation of ``prod_{0 < t < p^k} (y - t)`` against ``c = sum_{i<k} (p^i - 1)``."""
    if not is_prime(p):
        raise DomainError(f"p = {p} is not prime")
    if k < 1:
        raise DomainError("k must be positive")
    c = sum(p**i - 1 for i in range(k))
    prod = math.prod(y - t for t in range(1, p**k))
    val = p_adic_valuation(prod, p)
    divides = val >= c
    exact = val == c
    pk = y % p**k == 0
    if not divides or exact != pk:
        raise TheoremViolated(f"lemma violated at y={y}, p={p}, k={k}")
    return PadicReport(c, val, divides, exact, pk)


# -- Olson-type theorem ----------------------------------------------------

@dataclass(frozen=True)
class OlsonReport:
    count: int
    degree_bound: int
    sigma_d: int
    lemma_route_agrees: bool

    def to_json(self) -> dict:
        return {"count": self.count, "degreeBound": self.degree_bound, "sigmaD": self.sigma_d, "lemmaRouteAgrees": self.lemma_route_agrees}


def olson_generalized(polys: Sequence[MultiPoly], ks: Sequence[int], grid: Grid, p: int) -> OlsonReport:
    """Count of grid points with ``p^{k_i} | P_i(x)`` for all ``i``; asserted ``!= 1``.

    The grid must be p-integral.  As a second route each point is also
    tested through ``p^{c+1} ∤ prod_i prod_{0<t<p^{k_i}} (P_i(x) - t)``.
    """
    if not is_prime(p):
        raise DomainError(f"p = {p} is not prime")
    if not isinstance(grid.ring, Integers):
        raise DomainError("grid must lie in Z^n")
    if len(polys) != len(ks) or any(k < 1 for k in ks):
        raise DomainError("need one positive k per polynomial")
    for j, axis in enumerate(grid.axes):
        for a, b in itertools.combinations(axis, 2):
            if (a - b) % p == 0:
                raise DomainError(f"grid not p-integral: {p} divides {a} - {b} on axis {j + 1}")
    for P in polys:
        if P.ring != grid.ring or P.nvars != grid.n:
            raise DomainError("polynomial does not match grid")
    bound = sum((p**k - 1) * max(P.total_degree(), 0) for P, k in zip(polys, ks))
    if bound >= grid.sigma_d:
        raise DomainError(f"degree condition violated: {bound} >= Σd = {grid.sigma_d}")
    c = sum(sum(p**i - 1 for i in range(k)) for k in ks)
    table = [grid.values_of(P) for P in polys]
    count = 0
    agrees = True
    for i in range(grid.size):
        vals = [t[i] for t in table]
        hit = all(v % p**k == 0 for v, k in zip(vals, ks))
        prod = math.prod(math.prod(v - t for t in range(1, p**k)) for v, k in zip(vals, ks))
        agrees &= hit == (prod % p ** (c + 1) != 0)
        count += hit
    if count == 1:
        raise TheoremViolated("theorem violated: exactly one point satisfies all divisibilities")
    return OlsonReport(count, bound, grid.sigma_d, agrees)


# -- conjecture harness ----------------------------------------------------

@dataclass(frozen=True)
class ConjectureSearchConfig:
    n: int
    m: int
    k: int
    trials: int = 1000
    coef_range: int = 2
    seed: int = 0
    exhaustive_limit: int = 200_000


@dataclass
class ConjectureSearchResult:
    counterexample: list[list[int]] | None
    checked: int
    exhaustive: bool
    config: ConjectureSearchConfig = field(repr=False)

    def to_json(self) -> dict:
        return {"counterexample": self.counterexample, "checked": self.checked, "exhaustive": self.exhaustive}


def _count_hits(rows: Sequence[Sequence[int]], n: int, k: int) -> int:
    count = 0
    for x in itertools.product((0, 1), repeat=n):
        if all(sum(a * b for a, b in zip(r, x)) % k == 0 for r in rows):
            count += 1
            if count > 1:
                return count
    return count


def afk_conjecture_search(config: ConjectureSearchConfig) -> ConjectureSearchResult:
    """Search linear forms on ``{0,1}^n`` for a system with exactly one common k-divisible point.

    The zero vector always qualifies, so a hit count of one would refute the
    conjecture.  Coefficient matrices are enumerated exhaustively when there
    are at most ``exhaustive_limit`` of them, otherwise sampled.
    """
    n, m, k = config.n, config.m, config.k
    if n < 1 or m < 0 or k < 1:
        raise DomainError("need n >= 1, m >= 0, k >= 1")
    if (k - 1) * m >= n:
        raise DomainError(f"parameter condition violated: (k-1)m = {(k - 1) * m} >= n = {n}")
    _guard(2**n, False)
    if k == 1:
        return ConjectureSearchResult(None, 0, True, config)
    r = config.coef_range
    span = range(-r, r + 1)
    total = (2 * r + 1) ** (m * n)
    exhaustive = total <= config.exhaustive_limit
    if exhaustive:
        mats = itertools.product(span, repeat=m * n)
    else:
        rng = random.Random(config.seed)
        mats = (tuple(rng.choice(span) for _ in range(m * n)) for _ in range(config.trials))
    checked = 0
    for flat in mats:
        rows = [list(flat[i * n : (i + 1) * n]) for i in range(m)]
        checked += 1
        if _count_hits(rows, n, k) == 1:
            return ConjectureSearchResult(rows, checked, exhaustive, config)
    return ConjectureSearchResult(None, checked, exhaustive, config)
