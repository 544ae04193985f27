"""Acceptance criteria 1-9, runnable as ``nullkit selftest``.

Each criterion compares a library routine against an independent oracle
(stored coefficients, brute-force enumerations, direct scans) on seeded
random instances.  ``run_all`` returns one :class:`CriterionResult` each.
"""
from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass
from typing import Callable, TextIO

from . import randgen as rg
from .coefficient import coeff_formula_general, coeff_formula_main, is_d_leading
from .errors import DomainError
from .gridcore import Grid, GridClass
from .interpolate import interpolate_division, invert_integral, psi_transform
from .multipoly import MultiPoly, parse_univariate
from .nullsatz import trim
from .numapps import (
    cauchy_davenport,
    chevalley_warning_count,
    cube_cover_check,
    normalized_cubic_exceptions,
    padic_product_divisibility,
    regular_subgraph_check,
    zm_second_nonzero,
)
from .permanent import (
    OrientedMultigraph,
    RingMatrix,
    alon_tarsi_count,
    matrix_polynomial,
    per_delta,
    permanent,
    permanent_formula,
)
from .ring import GaloisField, Integers, IntegersMod


@dataclass(frozen=True)
class AcceptanceConfig:
    seed: int = 20240601
    coeff_instances_per_family: int = 500
    general_instances: int = 200
    roundtrip_instances: int = 200
    certificate_instances: int = 500
    permanent_instances: int = 200
    cw_instances: int = 100
    large_grid_every: int = 25


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] criterion {self.number}: {self.name} ({self.detail}; {self.seconds:.2f}s)"

    def to_json(self) -> dict:
        return {"number": self.number, "name": self.name, "passed": self.passed, "detail": self.detail,
                "seconds": round(self.seconds, 3)}


# -- independent oracles ---------------------------------------------------

def brute_per_delta(R, rows, ncols, delta) -> int:
    """Sum over all ``ncols^m`` maps with the right fiber sizes."""
    total = R.zero
    for sigma in itertools.product(range(ncols), repeat=len(rows)):
        if tuple(sigma.count(j) for j in range(ncols)) != tuple(delta):
            continue
        total = R.add(total, R.prod(row[j] for row, j in zip(rows, sigma)))
    return total


def permutation_permanent(rows) -> int:
    n = len(rows)
    return sum(math.prod(rows[i][s[i]] for i in range(n)) for s in itertools.permutations(range(n)))


def ryser_permanent(rows) -> int:
    n = len(rows)
    total = 0
    for r in range(1, n + 1):
        for cols in itertools.combinations(range(n), r):
            total += (-1) ** r * math.prod(sum(row[j] for j in cols) for row in rows)
    return (-1) ** n * total


def _grid_for(rng, R, cfg: AcceptanceConfig, i: int, **kw) -> Grid:
    if cfg.large_grid_every and i % cfg.large_grid_every == 0:
        return rg.random_grid(rng, R, max_n=3, max_axis=9, **kw)
    return rg.random_grid(rng, R, **kw)


# -- criteria --------------------------------------------------------------

def criterion_1(cfg: AcceptanceConfig) -> tuple[bool, str]:
    rng = random.Random(cfg.seed + 1)
    total = 0
    for family in rg.FAMILIES:
        for i in range(cfg.coeff_instances_per_family):
            R = rg.random_ring(rng, family)
            grid = _grid_for(rng, R, cfg, i)
            must = [grid.d] if rng.random() < 0.7 else []
            P = rg.random_poly(rng, R, grid.n, grid.sigma_d, must=must)
            if coeff_formula_main(grid, P) != P.coefficient(grid.d):
                return False, f"mismatch on {grid!r} with P = {P}"
            total += 1
    return True, f"{total} instances over {len(rg.FAMILIES)} ring families"


def _violates_both_cases(delta, e, d) -> bool:
    return delta != tuple(e) and all(a == b or a > bound for a, b, bound in zip(delta, e, d))


def criterion_2(cfg: AcceptanceConfig) -> tuple[bool, str]:
    rng = random.Random(cfg.seed + 2)
    leading = witnessed = 0
    for i in range(cfg.general_instances):
        R = rg.random_ring(rng, rng.choice(rg.FAMILIES))
        grid = rg.random_grid(rng, R, max_n=3, max_axis=3)
        cap = [k + 2 for k in grid.d]
        P = rg.random_poly(rng, R, grid.n, sum(cap), max_terms=5, cap=cap)
        for e in itertools.product(*(range(k + 1) for k in grid.d)):
            rep = is_d_leading(P, e, grid.d)
            if rep.is_leading:
                leading += 1
                if coeff_formula_general(grid, P, e) != P.coefficient(e):
                    return False, f"P_e mismatch at e={e} for P = {P} on {grid!r}"
            else:
                witnessed += 1
                if not _violates_both_cases(rep.witness, e, grid.d):
                    return False, f"bogus witness {rep.witness} for e={e}"
    return True, f"{cfg.general_instances} polynomials, {leading} d-leading checks, {witnessed} witnesses"


def _division_grid(rng, cfg, i) -> Grid:
    family = rng.choice(rg.FAMILIES)
    if family == "Z":
        n = rng.randint(1, 3)
        axes = []
        for _ in range(n):
            a = rng.randint(-5, 5)
            axes.append([a] if rng.random() < 0.3 else [a, a + rng.choice((1, -1))])
        return Grid(Integers(), axes)
    R = rg.random_ring(rng, family)
    return _grid_for(rng, R, cfg, i)


def criterion_3(cfg: AcceptanceConfig) -> tuple[bool, str]:
    rng = random.Random(cfg.seed + 3)
    for i in range(cfg.roundtrip_instances):
        R = rg.random_ring(rng, rng.choice(rg.FAMILIES))
        grid = rg.random_grid(rng, R)
        y = [rg.random_element(rng, R) for _ in range(grid.size)]
        vals = grid.values_of(psi_transform(grid, y))
        if vals != [R.mul(a, b) for a, b in zip(grid.N_values, y)]:
            return False, f"sum y(x) L_x differs from N*y on {grid!r}"
    for i in range(cfg.roundtrip_instances):
        grid = _division_grid(rng, cfg, i)
        if grid.grid_class is not GridClass.DIVISION:
            return False, f"generator produced a non-division grid {grid!r}"
        P = rg.random_poly(rng, grid.ring, grid.n, grid.sigma_d, cap=grid.d)
        if interpolate_division(grid, grid.values_of(P)) != P:
            return False, f"interpolation round trip failed for {P} on {grid!r}"
    for i in range(cfg.roundtrip_instances):
        R = rg.random_ring(rng, rng.choice(rg.FAMILIES))
        grid = _grid_for(rng, R, cfg, i)
        P = rg.random_poly(rng, R, grid.n, grid.sigma_d, cap=grid.d)
        if invert_integral(grid, P) != P:
            return False, f"integral inversion failed for {P} on {grid!r}"
    return True, f"3 x {cfg.roundtrip_instances} round trips"


def criterion_4(cfg: AcceptanceConfig) -> tuple[bool, str]:
    from .nullsatz import axis_polynomial

    rng = random.Random(cfg.seed + 4)
    vanishing = 0
    for i in range(cfg.certificate_instances):
        R = rg.random_ring(rng, rng.choice(rg.FAMILIES))
        grid = rg.random_grid(rng, R, max_n=3, max_axis=4)
        if rng.random() < 0.4:
            P = MultiPoly.zero(R, grid.n)
            for j in range(grid.n):
                H = rg.random_poly(rng, R, grid.n, 3, max_terms=3)
                P = P + H * axis_polynomial(grid, j)
        else:
            P = rg.random_poly(rng, R, grid.n, grid.sigma_d + 3)
        cert = trim(grid, P)
        if cert.reconstruct() != P:
            return False, f"reconstruction failed for {P} on {grid!r}"
        deg = P.total_degree()
        if any(k > dj for k, dj in zip(cert.trimmed.partial_degrees(), grid.d)):
            return False, "trimmed polynomial exceeds d"
        if cert.trimmed.total_degree() > deg:
            return False, "trimming raised the degree"
        for H, size in zip(cert.cofactors, grid.shape):
            if not H.is_zero() and H.total_degree() > deg - size:
                return False, f"cofactor degree bound violated for {P}"
        vanishes = not any(grid.values_of(P))
        vanishing += vanishes
        if cert.trimmed.is_zero() != vanishes:
            return False, f"trimmed = 0 does not match vanishing for {P} on {grid!r}"
    return True, f"{cfg.certificate_instances} certificates, {vanishing} vanishing"


def criterion_5(cfg: AcceptanceConfig) -> tuple[bool, str]:
    rng = random.Random(cfg.seed + 5)
    for i in range(cfg.permanent_instances):
        R = rg.random_ring(rng, rng.choice(rg.FAMILIES))
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        rows = rg.random_matrix_rows(rng, R, m, n)
        A = RingMatrix.from_rows(R, rows)
        poly = matrix_polynomial(A)
        for delta in rg.compositions(m, n):
            oracle = brute_per_delta(R, A.rows, n, delta)
            if poly.coefficient(delta) != oracle or per_delta(A, delta) != oracle:
                return False, f"per_delta mismatch for {rows} at {delta}"
        grid = None
        for _ in range(20):
            axes = [rg.random_axis(rng, R, rng.randint(1, 4)) for _ in range(n)]
            g = Grid(R, axes)
            if g.sigma_d >= m:
                grid = g
                break
        if grid is None:
            continue
        b = [rg.random_element(rng, R) for _ in range(m)]
        if permanent_formula(A, b, grid) != brute_per_delta(R, A.rows, n, grid.d):
            return False, f"grid sum mismatch for {rows}"
    Z = Integers()
    classical = {((1, 2), (3, 4)): 10, ((1, 2, 3), (4, 5, 6), (7, 8, 9)): 450}
    for rows, want in classical.items():
        got = permanent(RingMatrix.from_rows(Z, rows))
        if not got == want == permutation_permanent(rows) == ryser_permanent(rows):
            return False, f"permanent of {rows} = {got}, expected {want}"
    return True, f"{cfg.permanent_instances} matrices, classical 2x2 = 10 and 3x3 = 450"


def criterion_6(cfg: AcceptanceConfig) -> tuple[bool, str]:
    Z = Integers()
    graphs = cases = 0
    for nv in (1, 2, 3):
        arcs = [(h, t) for h in range(nv) for t in range(nv) if h != t]
        for ne in range(0, 5):
            for edges in itertools.combinations_with_replacement(arcs, ne):
                G = OrientedMultigraph(tuple(range(nv)), tuple(edges))
                graphs += 1
                rows = [[1 if v == h else -1 if v == t else 0 for v in range(nv)] for h, t in edges]
                for delta in rg.compositions(ne, nv):
                    even, odd = alon_tarsi_count(G, delta)
                    if even - odd != brute_per_delta(Z, rows, nv, delta):
                        return False, f"orientation count mismatch for {edges} at {delta}"
                    cases += 1
    return True, f"{graphs} digraphs, {cases} (graph, delta) pairs"


def criterion_7(cfg: AcceptanceConfig) -> tuple[bool, str]:
    R = IntegersMod(4)
    named = [parse_univariate("X^3+X+2", R), parse_univariate("X^3-2X^2-X+2", R)]
    for P in named:
        rep = zm_second_nonzero(P, 4, 1)
        if rep.nonzero_count != 1 or not rep.exception:
            return False, f"{P} has {rep.nonzero_count} nonzeros"
    found = normalized_cubic_exceptions()
    if sorted(map(str, found)) != sorted(map(str, named)):
        return False, f"search found {[str(p) for p in found]}"
    return True, "exactly the two normalized exceptions"


def criterion_8(cfg: AcceptanceConfig) -> tuple[bool, str]:
    checked = 0
    for p in (2, 3, 5):
        for k in (1, 2, 3):
            bound = p ** (2 * k)
            for y in range(-bound, bound + 1):
                rep = padic_product_divisibility(y, p, k)
                if rep.exact != (y % p**k == 0) or not rep.divides:
                    return False, f"lemma fails at y={y}, p={p}, k={k}"
                checked += 1
    return True, f"{checked} (y, p, k) triples"


def _random_cw_system(rng, F, n):
    budget = n - 1
    polys = []
    while budget > 0 and rng.random() < 0.8:
        deg = rng.randint(1, budget)
        P = rg.random_poly(rng, F, n, deg, max_terms=4, must=[rg.random_exponent(rng, n, deg)])
        d = max(P.total_degree(), 0)
        budget -= d
        polys.append(P)
    return polys


def criterion_9(cfg: AcceptanceConfig) -> tuple[bool, str]:
    rng = random.Random(cfg.seed + 9)
    cd = 0
    for p in (2, 3, 5, 7):
        subsets = list(rg.all_subsets(range(p)))
        for A in subsets:
            for B in subsets:
                size, bound, ok = cauchy_davenport(A, B, p)
                if len({(a + b) % p for a in A for b in B}) != size or not ok:
                    return False, f"Cauchy-Davenport fails for {A}, {B} mod {p}"
                cd += 1
    fields = [GaloisField(2), GaloisField(3), GaloisField(2, 2)]
    for i in range(cfg.cw_instances):
        F = fields[i % 3]
        n = rng.randint(1, 4)
        polys = _random_cw_system(rng, F, n)
        count = chevalley_warning_count(F, polys, n)
        direct = sum(all(P.evaluate(x) == F.zero for P in polys) for x in itertools.product(F.elements(), repeat=n))
        if count != direct or count % F.characteristic:
            return False, f"zero count {count} (direct {direct}) over {F}"
    cubes = 0
    for _ in range(cfg.cw_instances):
        F = GaloisField(rng.choice((3, 5, 7)))
        n = rng.randint(1, 4)
        planes = [([rng.randrange(F.size) for _ in range(n)], rng.randrange(F.size)) for _ in range(rng.randint(0, 5))]
        rep = cube_cover_check(F, planes, n)
        if not rep.theorem_consistent or not rep.polynomial_agrees:
            return False, f"cube cover check failed for {planes}"
        cubes += 1
    K5 = [(a, b) for a in range(5) for b in range(a + 1, 5)]
    graphs = [(list(range(5)), K5 + [(0, 1)], 10)]
    for nv in (5, 6):
        edges = rg.random_four_regular_multigraph(rng, nv)
        u, v = rng.sample(range(nv), 2)
        graphs.append((list(range(nv)), edges + [(u, v)], len(edges)))
    for vertices, edges, e0 in graphs:
        rep = regular_subgraph_check(vertices, edges, e0)
        if not rep.edges:
            return False, "empty subgraph returned"
    try:
        regular_subgraph_check(range(3), [(0, 1), (0, 1), (1, 2), (1, 2), (0, 2), (0, 2)], None)
        return False, "triangle with doubled edges and no extra edge was accepted"
    except DomainError:
        pass
    return True, f"{cd} sumset pairs, {cfg.cw_instances} CW systems, {cubes} cube covers, {len(graphs)} graphs"


CRITERIA: list[tuple[int, str, Callable[[AcceptanceConfig], tuple[bool, str]]]] = [
    (1, "coefficient formula oracle", criterion_1),
    (2, "general coefficient formula and d-leading witnesses", criterion_2),
    (3, "interpolation round trips", criterion_3),
    (4, "Nullstellensatz certificates", criterion_4),
    (5, "permanent suite", criterion_5),
    (6, "Alon-Tarsi orientation counts", criterion_6),
    (7, "Z_4 exception reproduction", criterion_7),
    (8, "p-adic product lemma", criterion_8),
    (9, "application checkers", criterion_9),
]


def run_criterion(number: int, cfg: AcceptanceConfig | None = None) -> CriterionResult:
    cfg = cfg or AcceptanceConfig()
    _, name, fn = CRITERIA[number - 1]
    start = time.perf_counter()
    try:
        passed, detail = fn(cfg)
    except Exception as exc:  # a raised assertion is a failed criterion, not a crash
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    return CriterionResult(number, name, passed, detail, time.perf_counter() - start)


def run_all(cfg: AcceptanceConfig | None = None, stream: TextIO | None = None) -> list[CriterionResult]:
    results = []
    for number, _, _ in CRITERIA:
        res = run_criterion(number, cfg)
        if stream is not None:
            print(res.line(), file=stream, flush=True)
        results.append(res)
    return results
