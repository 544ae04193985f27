"""Seeded random instances: rings, grids, polynomials, matrices and graphs."""
from __future__ import annotations

import itertools
import random
from typing import Sequence

from .gridcore import Grid
from .multipoly import MultiPoly
from .ring import GaloisField, Integers, IntegersMod, Ring

FAMILIES = ("Z", "Zm", "Fp", "Fq")

ZM_MODULI = (6, 10, 12, 15, 21, 25, 27, 35)
FP_PRIMES = (2, 3, 5, 7)
FQ_PARAMS = ((2, 2), (2, 3), (3, 2))


def random_ring(rng: random.Random, family: str) -> Ring:
    if family == "Z":
        return Integers()
    if family == "Zm":
        return IntegersMod(rng.choice(ZM_MODULI))
    if family == "Fp":
        return GaloisField(rng.choice(FP_PRIMES))
    if family == "Fq":
        return GaloisField(*rng.choice(FQ_PARAMS))
    raise ValueError(family)


def random_element(rng: random.Random, R: Ring, bound: int = 5) -> int:
    if R.size is None:
        return rng.randint(-bound, bound)
    return rng.randrange(R.size)


def random_axis(rng: random.Random, R: Ring, size: int, integral: bool = True) -> list[int]:
    """Distinct elements; pairwise differences are non-zero-divisors when ``integral``."""
    if R.size is None:
        return rng.sample(range(-8, 9), size)
    pool = list(R.elements())
    rng.shuffle(pool)
    axis: list[int] = []
    for a in pool:
        if len(axis) == size:
            break
        if not integral or all(not R.is_zero_divisor(R.sub(a, b)) for b in axis):
            axis.append(a)
    return axis


def random_grid(rng: random.Random, R: Ring, max_n: int = 3, max_axis: int = 4, max_points: int = 729,
                integral: bool = True) -> Grid:
    n = rng.randint(1, max_n)
    axes = []
    budget = max_points
    for _ in range(n):
        cap = max(1, min(max_axis, budget))
        axis = random_axis(rng, R, rng.randint(1, cap), integral)
        axes.append(axis)
        budget = max(1, budget // len(axis))
    return Grid(R, axes, max_points=max_points)


def random_exponent(rng: random.Random, n: int, total: int, cap: Sequence[int] | None = None) -> tuple[int, ...]:
    """Exponent vector with sum ``<= total`` (and ``<= cap`` coordinatewise if given)."""
    e = [rng.randint(0, total if cap is None else cap[j]) for j in range(n)]
    while sum(e) > total:
        j = rng.randrange(n)
        if e[j]:
            e[j] -= 1
    return tuple(e)


def random_poly(rng: random.Random, R: Ring, n: int, max_deg: int, max_terms: int = 6,
                must: Sequence[tuple] = (), cap: Sequence[int] | None = None) -> MultiPoly:
    terms: dict = {}
    for _ in range(rng.randint(0, max_terms)):
        e = random_exponent(rng, n, max_deg, cap)
        terms[e] = R.add(terms.get(e, R.zero), random_element(rng, R))
    for e in must:
        terms[tuple(e)] = R.add(terms.get(tuple(e), R.zero), random_element(rng, R))
    return MultiPoly(R, n, terms)


def random_matrix_rows(rng: random.Random, R: Ring, m: int, n: int, bound: int = 3) -> list[list[int]]:
    return [[random_element(rng, R, bound) for _ in range(n)] for _ in range(m)]


def random_four_regular_multigraph(rng: random.Random, nv: int, tries: int = 10_000) -> list[tuple[int, int]]:
    """Loopless 4-regular multigraph on ``nv`` vertices via the configuration model."""
    stubs = [v for v in range(nv) for _ in range(4)]
    for _ in range(tries):
        rng.shuffle(stubs)
        pairs = [(stubs[i], stubs[i + 1]) for i in range(0, len(stubs), 2)]
        if all(u != v for u, v in pairs):
            return sorted((min(u, v), max(u, v)) for u, v in pairs)
    raise RuntimeError("configuration model did not produce a loopless multigraph")


def all_subsets(items: Sequence, nonempty: bool = True):
    start = 1 if nonempty else 0
    for r in range(start, len(items) + 1):
        yield from itertools.combinations(items, r)


def compositions(total: int, parts: int):
    """Non-negative integer vectors of length ``parts`` summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def boolean_points(n: int):
    return itertools.product((0, 1), repeat=n)
