import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nullkit import randgen as rg
from nullkit.errors import DomainError, SizeGuardError
from nullkit.gridcore import Grid
from nullkit.multipoly import MultiPoly
from nullkit.numapps import (
    ConjectureSearchConfig,
    afk_conjecture_search,
    cauchy_davenport,
    chevalley_warning_count,
    common_zero_count,
    cube_cover_check,
    integer_coeff_formula,
    normalized_cubic_exceptions,
    olson_generalized,
    padic_product_divisibility,
    regular_subgraph_check,
    zm_second_nonzero,
)
from nullkit.ring import GaloisField, Integers, IntegersMod

Z = Integers()
F2, F3, F5 = GaloisField(2), GaloisField(3), GaloisField(5)


# -- regular subgraphs

def _is_three_regular(vertices, edges, chosen):
    deg = {v: 0 for v in vertices}
    for k in chosen:
        for w in edges[k]:
            deg[w] += 1
    return chosen and all(d in (0, 3) for d in deg.values())


def test_k5_plus_doubled_edge():
    V = list(range(5))
    E = list(itertools.combinations(V, 2)) + [(0, 1)]
    rep = regular_subgraph_check(V, E, e0=10)
    assert _is_three_regular(V, E, rep.edges)
    assert rep.audit == {"twoV": 10, "edgesWithoutExtra": 10, "edgesTotal": 11}
    brute = sum(_is_three_regular(V, E, c) or not c for c in rg.all_subsets(range(11), nonempty=False))
    assert rep.common_zero_count == brute


def test_doubled_triangle_needs_the_extra_edge():
    E = [(0, 1), (0, 1), (1, 2), (1, 2), (0, 2), (0, 2)]
    with pytest.raises(DomainError, match="e0"):
        regular_subgraph_check([0, 1, 2], E, e0=None)
    with pytest.raises(DomainError, match="4-regular"):
        regular_subgraph_check([0, 1, 2], E, e0=0)


def test_regular_subgraph_validation():
    with pytest.raises(DomainError, match="loop"):
        regular_subgraph_check([0], [(0, 0)], e0=0)


def test_random_four_regular_multigraphs():
    rng = random.Random(3)
    for _ in range(6):
        nv = rng.randint(3, 5)
        E = rg.random_four_regular_multigraph(rng, nv)
        E.append(tuple(rng.sample(range(nv), 2)))
        rep = regular_subgraph_check(range(nv), E, e0=len(E) - 1)
        assert _is_three_regular(range(nv), E, rep.edges)


# -- cube covers

def test_cube_cover_examples():
    rep = cube_cover_check(F5, [([1, 0], 1), ([0, 1], 1)], 2)
    assert rep.uncovered == ((0, 0),) and rep.m == 2 and rep.theorem_consistent and rep.polynomial_agrees
    rep = cube_cover_check(F5, [([1, 0], 1)], 2)
    assert rep.uncovered == ((0, 0), (0, 1)) and rep.theorem_consistent
    rep = cube_cover_check(F5, [([1], 1)], 1)
    assert rep.uncovered == ((0,),) and rep.m == 1
    with pytest.raises(DomainError):
        cube_cover_check(IntegersMod(6), [([1], 1)], 1)


def test_random_cube_covers():
    rng = random.Random(4)
    for _ in range(200):
        F = rg.random_ring(rng, rng.choice(["Fp", "Fq"]))
        n = rng.randint(1, 4)
        planes = [([rg.random_element(rng, F) for _ in range(n)], rg.random_element(rng, F)) for _ in range(rng.randint(0, 4))]
        rep = cube_cover_check(F, planes, n)
        assert rep.theorem_consistent and rep.polynomial_agrees


# -- Chevalley-Warning

def test_chevalley_warning_examples():
    assert chevalley_warning_count(F3, [MultiPoly.linear(F3, [1, 1])], 2) == 3
    P = MultiPoly(F2, 3, {(1, 1, 0): 1, (0, 0, 1): 1})
    assert chevalley_warning_count(F2, [P], 3) == 4
    assert chevalley_warning_count(GaloisField(2, 2), [], 2) == 16
    with pytest.raises(DomainError, match="degree"):
        chevalley_warning_count(F3, [MultiPoly(F3, 2, {(1, 1): 1})], 2)


def test_chevalley_warning_random_and_jobs_invariant():
    rng = random.Random(5)
    for _ in range(200):
        F = rg.random_ring(rng, rng.choice(["Fp", "Fq"]))
        n = rng.randint(1, 3 if F.size <= 5 else 2)
        budget = n - 1
        polys = []
        while budget > 0 and rng.random() < 0.7:
            d = rng.randint(1, budget)
            polys.append(rg.random_poly(rng, F, n, d, must=[(d,) + (0,) * (n - 1)]))
            budget -= max(polys[-1].total_degree(), 0)
        if sum(max(P.total_degree(), 0) for P in polys) >= n:
            continue
        count = chevalley_warning_count(F, polys, n)
        assert count % F.characteristic == 0
    P = MultiPoly.linear(F5, [1, 2, 3])
    axes = [F5.elements()] * 3
    assert common_zero_count(F5, axes, [P], jobs=1) == common_zero_count(F5, axes, [P], jobs=3) == 25


# -- Cauchy-Davenport

def test_cauchy_davenport_examples():
    assert cauchy_davenport([0, 1], [0, 1], 5) == (3, 3, True)
    assert cauchy_davenport([0, 1, 2], [0, 1, 2], 3) == (3, 3, True)
    assert cauchy_davenport([0], [2], 7) == (1, 1, True)
    with pytest.raises(DomainError, match="not prime"):
        cauchy_davenport([0], [0], 6)


@given(st.sampled_from([2, 3, 5, 7, 11]), st.data())
def test_cauchy_davenport_random(p, data):
    A = data.draw(st.sets(st.integers(0, p - 1), min_size=1))
    B = data.draw(st.sets(st.integers(0, p - 1), min_size=1))
    assert cauchy_davenport(A, B, p)[2]


# -- integer coefficient formula

def test_integer_coeff_formula_examples():
    assert integer_coeff_formula(MultiPoly(Z, 2, {(1, 1): 1}), (1, 1)) == (1, 1)
    assert integer_coeff_formula(MultiPoly(Z, 1, {(2,): 1}), (2,)) == (2, 2)
    assert integer_coeff_formula(MultiPoly.zero(Z, 2), (1, 0)) == (0, 0)
    with pytest.raises(DomainError, match="degree"):
        integer_coeff_formula(MultiPoly(Z, 1, {(3,): 1}), (2,))


@given(st.integers(1, 3), st.integers(0, 10**6))
def test_integer_coeff_formula_random(n, seed):
    rng = random.Random(seed)
    d = tuple(rng.randint(0, 4) for _ in range(n))
    P = rg.random_poly(rng, Z, n, sum(d), must=[d])
    lhs, rhs = integer_coeff_formula(P, d)
    assert lhs == rhs


# -- Z_m

def test_zm_exceptions():
    R = IntegersMod(4)
    a = MultiPoly(R, 1, {(3,): 1, (1,): 1, (0,): 2})
    b = MultiPoly(R, 1, {(3,): 1, (2,): -2, (1,): -1, (0,): 2})
    for P in (a, b):
        rep = zm_second_nonzero(P, 4, 1)
        assert rep.nonzero_count == 1 and rep.exception and not rep.asserted
    assert sorted(map(str, normalized_cubic_exceptions())) == sorted(map(str, (a, b)))


def test_zm_six():
    R = IntegersMod(6)
    rep = zm_second_nonzero(MultiPoly.linear(R, [1, 1], 1), 6, 2)
    assert rep.nonzero_count != 1 and rep.binomial_sum == 0 and rep.asserted
    assert rep.to_json()["nonzeroCount"] == rep.nonzero_count
    with pytest.raises(DomainError, match="use field-case theorems"):
        zm_second_nonzero(MultiPoly.one(IntegersMod(7), 1), 7, 1)


def test_zm_random():
    rng = random.Random(6)
    for _ in range(200):
        m = rng.choice([4, 6, 8, 9, 10, 12])
        n = rng.randint(1, 2) if m > 4 else 2
        R = IntegersMod(m)
        P = rg.random_poly(rng, R, n, 3 * n)
        rep = zm_second_nonzero(P, m, n)
        assert rep.nonzero_count != 1 and rep.binomial_sum == 0


# -- p-adic lemma

def test_padic_examples():
    r = padic_product_divisibility(4, 2, 2)
    assert (r.c, r.valuation, r.exact, r.pk_divides_y) == (1, 1, True, True)
    r = padic_product_divisibility(5, 2, 2)
    assert (r.c, r.valuation, r.exact, r.pk_divides_y) == (1, 3, False, False)
    r = padic_product_divisibility(3, 3, 1)
    assert (r.c, r.valuation, r.exact) == (0, 0, True)


@pytest.mark.parametrize("p,k", [(p, k) for p in (2, 3, 5) for k in (1, 2, 3) if p ** (2 * k) <= 15625])
def test_padic_exactness_iff_divisibility(p, k):
    for y in range(-(p ** (2 * k)), p ** (2 * k) + 1):
        r = padic_product_divisibility(y, p, k)
        assert r.exact == (y % p**k == 0)


# -- Olson

def test_olson_examples():
    g = Grid(Z, [[0, 1]] * 3)
    rep = olson_generalized([MultiPoly.linear(Z, [1, 1, 1])], [1], g, 2)
    assert rep.count == 4 and rep.lemma_route_agrees
    with pytest.raises(DomainError, match="p-integral"):
        olson_generalized([MultiPoly.linear(Z, [1, 1])], [1], Grid(Z, [[0, 2]] * 2), 2)


def test_olson_random_linear_forms():
    rng = random.Random(8)
    done = 0
    while done < 200:
        p = rng.choice([2, 3])
        n = rng.randint(2, 5)
        ks = [rng.randint(1, 2) for _ in range(rng.randint(1, 2))]
        if sum(p**k - 1 for k in ks) >= n:
            continue
        polys = [MultiPoly.linear(Z, [rng.randint(-4, 4) for _ in range(n)]) for _ in ks]
        rep = olson_generalized(polys, ks, Grid(Z, [[0, 1]] * n), p)
        assert rep.count != 1 and rep.lemma_route_agrees
        done += 1


# -- conjecture harness

def test_conjecture_search_examples():
    res = afk_conjecture_search(ConjectureSearchConfig(n=3, m=1, k=2))
    assert res.counterexample is None and res.exhaustive and res.checked == 125
    with pytest.raises(DomainError):
        afk_conjecture_search(ConjectureSearchConfig(n=2, m=2, k=2))
    assert afk_conjecture_search(ConjectureSearchConfig(n=3, m=2, k=1)).counterexample is None


def test_size_guard():
    with pytest.raises(SizeGuardError):
        zm_second_nonzero(MultiPoly.zero(IntegersMod(6), 10), 6, 10)
