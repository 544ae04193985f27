import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import FINITE_RINGS, elements_of
from nullkit.errors import DomainError
from nullkit.gridcore import Grid, GridMap
from nullkit.interpolate import inclusion_exclusion_coeff, interpolate_division, invert_integral, psi_transform
from nullkit.multipoly import MultiPoly
from nullkit.ring import Integers, IntegersMod
from oracles import vandermonde_interpolant
from test_gridcore import small_grids

Z = Integers()


def test_psi_transform_examples():
    g = Grid(Z, [[0, 1], [0, 1]])
    P = psi_transform(g, GridMap.indicator(g, (1, 1)))
    assert P == MultiPoly(Z, 2, {(1, 1): 1})
    assert g.values_of(P) == [0, 0, 0, 1]
    assert psi_transform(g, [0, 0, 0, 0]).is_zero()
    g3 = Grid(Z, [[0, 1, 2]])
    P3 = psi_transform(g3, [1, 0, 0])
    assert P3 == MultiPoly(Z, 1, {(2,): 1, (1,): -3, (0,): 2})
    assert g3.values_of(P3) == [2, 0, 0]


def test_interpolate_division_examples():
    g = Grid(Z, [[0, 1], [0, 1]])
    assert interpolate_division(g, GridMap.indicator(g, (1, 1))) == MultiPoly(Z, 2, {(1, 1): 1})
    Z3 = IntegersMod(3)
    assert interpolate_division(Grid(Z3, [[0, 1, 2]]), [0, 1, 2]) == MultiPoly.variable(Z3, 1, 0)
    Z6 = IntegersMod(6)
    assert interpolate_division(Grid(Z6, [[0, 1]]), [1, 0]) == MultiPoly(Z6, 1, {(0,): 1, (1,): 5})
    with pytest.raises(DomainError, match="grid not division"):
        interpolate_division(Grid(Z, [[0, 2]]), [1, 1])


def test_invert_integral_examples():
    g = Grid(Z, [[0, 1], [0, 1]])
    P = MultiPoly(Z, 2, {(1, 1): 1, (0, 0): 1})
    assert invert_integral(g, P) == P
    g3 = Grid(Z, [[0, 1, 2]])
    assert invert_integral(g3, MultiPoly.one(Z, 1)) == MultiPoly.one(Z, 1)
    assert invert_integral(g3, MultiPoly.zero(Z, 1)).is_zero()
    with pytest.raises(DomainError):
        invert_integral(Grid(IntegersMod(4), [[0, 2]]), [1, 1])
    with pytest.raises(DomainError):
        invert_integral(g3, MultiPoly(Z, 1, {(3,): 1}))


def test_invert_integral_rejects_non_polynomial_values():
    # values (0, 1, 0) on {0, 2, 4} need rational coefficients
    with pytest.raises(DomainError):
        invert_integral(Grid(Z, [[0, 2, 4]]), [0, 1, 0])


def test_inclusion_exclusion_examples():
    g = Grid(Z, [[0, 1], [0, 1]])
    P = MultiPoly(Z, 2, {(0, 0): 1, (1, 1): 1})
    assert inclusion_exclusion_coeff(g.grid_map(P), (1, 1)) == 1
    assert inclusion_exclusion_coeff(g.grid_map(P), (0, 0)) == P.evaluate((0, 0))
    c = g.grid_map(MultiPoly.constant(Z, 2, 7))
    assert [inclusion_exclusion_coeff(c, d) for d in [(0, 1), (1, 0), (1, 1)]] == [0, 0, 0]


@given(small_grids(), st.data())
def test_psi_transform_values_are_N_times_y(grid, data):
    R = grid.ring
    y = [data.draw(elements_of(R)) for _ in range(grid.size)]
    assert grid.values_of(psi_transform(grid, y)) == [R.mul(a, b) for a, b in zip(grid.N_values, y)]


@given(st.sampled_from(FINITE_RINGS), st.data())
def test_division_round_trip(R, data):
    n = data.draw(st.integers(1, 3))
    axes = []
    for _ in range(n):
        size = data.draw(st.integers(1, 3))
        axis = []
        for a in data.draw(st.permutations(R.elements())):
            if len(axis) < size and all(R.is_unit(R.sub(a, b)) for b in axis):
                axis.append(a)
        axes.append(axis)
    grid = Grid(R, axes)
    y = [data.draw(elements_of(R)) for _ in range(grid.size)]
    assert grid.values_of(interpolate_division(grid, y)) == y


@given(small_grids(), st.data())
def test_integral_round_trip(grid, data):
    if not grid.is_integral:
        return
    R = grid.ring
    terms = {e: data.draw(elements_of(R)) for e in itertools.product(*(range(k + 1) for k in grid.d))}
    P = MultiPoly(R, grid.n, terms)
    assert invert_integral(grid, grid.values_of(P)) == P


@given(st.data())
def test_integer_inversion_matches_vandermonde_solve(data):
    n = data.draw(st.integers(1, 2))
    axes = [data.draw(st.lists(st.integers(-5, 5), min_size=1, max_size=3, unique=True)) for _ in range(n)]
    grid = Grid(Z, axes)
    terms = {e: data.draw(st.integers(-4, 4)) for e in itertools.product(*(range(k + 1) for k in grid.d))}
    P = MultiPoly(Z, n, terms)
    want = {e: int(c) for e, c in vandermonde_interpolant(axes, grid.values_of(P)).items() if c}
    assert invert_integral(grid, P).terms == want


@given(st.integers(1, 6), st.data())
def test_inclusion_exclusion_agrees_with_interpolation(n, data):
    R = data.draw(st.sampled_from([Z, IntegersMod(6), IntegersMod(5)]))
    grid = Grid(R, [[0, 1]] * n)
    y = [data.draw(elements_of(R)) for _ in range(grid.size)]
    P = interpolate_division(grid, y)
    gm = GridMap(grid, y)
    for delta in itertools.product((0, 1), repeat=n):
        assert inclusion_exclusion_coeff(gm, delta) == P.coefficient(delta)
