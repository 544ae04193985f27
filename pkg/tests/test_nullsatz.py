import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nullkit import randgen as rg
from nullkit.errors import DomainError
from nullkit.gridcore import Grid
from nullkit.multipoly import MultiPoly
from nullkit.nullsatz import Certificate, NotVanishing, axis_polynomial, certify_vanishing, check_dleading_preserved, trim
from nullkit.ring import Integers, IntegersMod
from test_gridcore import small_grids

Z = Integers()


def test_trim_square_on_boolean_grid():
    g = Grid(Z, [[0, 1], [0, 1]])
    cert = trim(g, MultiPoly(Z, 2, {(2, 0): 1}))
    assert cert.trimmed == MultiPoly.variable(Z, 2, 0)
    assert cert.cofactors[0] == MultiPoly.one(Z, 2)
    assert cert.cofactors[1].is_zero()
    assert cert.axis_polys[0] == MultiPoly(Z, 2, {(2, 0): 1, (1, 0): -1})


def test_trim_is_identity_below_d():
    g = Grid(Z, [[0, 1, 2], [0, 1]])
    P = MultiPoly(Z, 2, {(2, 1): 3, (0, 0): -1})
    cert = trim(g, P)
    assert cert.trimmed == P and all(H.is_zero() for H in cert.cofactors)


def test_trim_on_cube_roots_of_unity():
    R = IntegersMod(7)
    g = Grid(R, [[1, 2, 4]])
    assert axis_polynomial(g, 0) == MultiPoly(R, 1, {(3,): 1, (0,): 6})
    cert = trim(g, MultiPoly(R, 1, {(4,): 1}))
    assert cert.trimmed == MultiPoly.variable(R, 1, 0)
    assert cert.cofactors[0] == MultiPoly.variable(R, 1, 0)


def test_certify_examples():
    cert = certify_vanishing(Grid(Z, [[0, 1]]), MultiPoly(Z, 1, {(2,): 1, (1,): -1}))
    assert isinstance(cert, Certificate) and cert.trimmed.is_zero()
    assert cert.cofactors[0] == MultiPoly.one(Z, 1)
    g = Grid(Z, [[0, 1, 2], [0, 1]])
    L = g.lagrange_polynomial((2, 1))
    assert certify_vanishing(g, L) == NotVanishing((2, 1))
    s = MultiPoly.linear(Z, [1, 1])
    one = MultiPoly.one(Z, 2)
    P = s * (s - one) * (s - one - one)
    cert = certify_vanishing(Grid(Z, [[0, 1], [0, 1]]), P)
    assert isinstance(cert, Certificate) and cert.reconstruct() == P
    with pytest.raises(DomainError, match="not integral"):
        certify_vanishing(Grid(IntegersMod(4), [[0, 2]]), MultiPoly.one(IntegersMod(4), 1))


def test_certificate_json_keys():
    cert = trim(Grid(Z, [[0, 1]]), MultiPoly(Z, 1, {(3,): 1}))
    assert set(cert.to_json()) == {"trimmed", "cofactors", "axisPolys"}


def test_dleading_preserved_examples():
    g = Grid(Z, [[0, 1, 2], [0, 1]])
    assert check_dleading_preserved(g, MultiPoly(Z, 2, {(2, 1): 1, (3, 0): 1}), (2, 1))
    assert check_dleading_preserved(g, MultiPoly(Z, 2, {(1, 1): 5}), (0, 1))
    with pytest.raises(DomainError, match="not d-leading"):
        check_dleading_preserved(Grid(Z, [[0, 1]]), MultiPoly(Z, 1, {(3,): 1}), (1,))


def _random_poly(data, grid, extra=3):
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    return rg.random_poly(rng, grid.ring, grid.n, grid.sigma_d + extra)


@given(small_grids(), st.data())
def test_certificate_identities(grid, data):
    P = _random_poly(data, grid)
    cert = trim(grid, P)
    assert cert.reconstruct() == P
    assert all(k <= dj for k, dj in zip(cert.trimmed.partial_degrees(), grid.d))
    for H, size in zip(cert.cofactors, grid.shape):
        assert H.is_zero() or H.total_degree() <= P.total_degree() - size
    assert grid.values_of(cert.trimmed) == grid.values_of(P)
    again = trim(grid, cert.trimmed)
    assert again.trimmed == cert.trimmed and all(H.is_zero() for H in again.cofactors)


@given(small_grids(), st.data())
def test_trimmed_form_is_unique_on_integral_grids(grid, data):
    if not grid.is_integral:
        return
    P = _random_poly(data, grid)
    Q = P
    for j in range(grid.n):
        Q = Q + _random_poly(data, grid, extra=0) * axis_polynomial(grid, j)
    assert trim(grid, P).trimmed == trim(grid, Q).trimmed
    vanishes = not any(grid.values_of(P))
    assert trim(grid, P).trimmed.is_zero() == vanishes
