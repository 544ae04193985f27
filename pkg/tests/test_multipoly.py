import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import elements_of, rings
from nullkit.errors import DomainError
from nullkit.multipoly import MINUS_INFINITY, MultiPoly, parse_univariate
from nullkit.ring import Integers, IntegersMod

Z = Integers()
X1, X2 = MultiPoly.variable(Z, 2, 0), MultiPoly.variable(Z, 2, 1)


def test_difference_of_squares():
    assert (X1 + X2) * (X1 - X2) == X1**2 - X2**2


def test_characteristic_two_square():
    R = IntegersMod(2)
    x = MultiPoly.variable(R, 1, 0)
    one = MultiPoly.one(R, 1)
    assert (x + one) * (x + one) == x**2 + one


def test_scale_by_zero_is_empty():
    assert (X1 * X2).scale(0).terms == {}


def test_evaluate():
    R = IntegersMod(5)
    P = MultiPoly(R, 2, {(1, 1): 1, (0, 0): 1})
    assert P.evaluate((2, 3)) == 2
    assert parse_univariate("X^3+X+2", IntegersMod(4)).evaluate((1,)) == 0
    assert MultiPoly.zero(Z, 3).evaluate((1, 2, 3)) == 0
    with pytest.raises(DomainError):
        P.evaluate((1,))


def test_coefficients():
    P = MultiPoly(Z, 2, {(2, 1): 3})
    assert P.coefficient((2, 1)) == 3
    assert P.coefficient((0, 0)) == 0
    assert ((X1 + X2) ** 2).coefficient((1, 1)) == 2


def test_degrees():
    P = MultiPoly(Z, 2, {(2, 1): 1, (0, 3): 1})
    assert P.total_degree() == 3
    assert P.partial_degree(0) == 2 and P.partial_degree(1) == 3
    assert MultiPoly.constant(Z, 2, 5).total_degree() == 0
    assert MultiPoly.zero(Z, 2).total_degree() == MINUS_INFINITY
    assert MultiPoly.zero(Z, 2).total_degree() < 0


def test_shift():
    x = MultiPoly.variable(Z, 1, 0)
    assert (x**2).substitute_shift(0, 1) == MultiPoly(Z, 1, {(2,): 1, (1,): 2, (0,): 1})
    assert (X1 + X2).substitute_shift(1, -1) == X1 + X2 - MultiPoly.one(Z, 2)
    assert (X1 * X2).substitute_shift(0, 0) == X1 * X2


def test_mismatched_polynomials():
    with pytest.raises(DomainError):
        X1 + MultiPoly.variable(IntegersMod(3), 2, 0)
    with pytest.raises(DomainError):
        X1 + MultiPoly.variable(Z, 3, 0)


def test_parse_univariate():
    R = IntegersMod(4)
    assert parse_univariate("X^3-2X^2-X+2", R) == MultiPoly(R, 1, {(3,): 1, (2,): 2, (1,): 3, (0,): 2})
    assert parse_univariate("-X", Z) == MultiPoly(Z, 1, {(1,): -1})
    assert parse_univariate("7", Z) == MultiPoly.constant(Z, 1, 7)
    for bad in ("", "X^", "2Y", "X++1"):
        with pytest.raises(DomainError):
            parse_univariate(bad, Z)


def test_str_and_json_are_deterministic():
    P = MultiPoly(Z, 2, {(0, 0): 3, (2, 1): 1})
    assert str(P) == "X1^2*X2 + 3"
    assert MultiPoly.from_json(P.to_json()) == P
    assert P.to_json() == MultiPoly(Z, 2, {(2, 1): 1, (0, 0): 3}).to_json()


def polys(R, n=2, deg=3):
    exps = st.tuples(*[st.integers(0, deg)] * n)
    return st.dictionaries(exps, elements_of(R), max_size=5).map(lambda t: MultiPoly(R, n, t))


@st.composite
def poly_pair_and_point(draw):
    R = draw(rings)
    P, Q = draw(polys(R)), draw(polys(R))
    x = draw(st.tuples(elements_of(R), elements_of(R)))
    c = draw(elements_of(R))
    return R, P, Q, x, c


@given(poly_pair_and_point())
def test_evaluation_is_a_homomorphism(args):
    R, P, Q, x, _ = args
    assert (P * Q).evaluate(x) == R.mul(P.evaluate(x), Q.evaluate(x))
    assert (P + Q).evaluate(x) == R.add(P.evaluate(x), Q.evaluate(x))


@given(poly_pair_and_point())
def test_canonical_cancellation_and_shift_inverse(args):
    R, P, _, _, c = args
    assert (P + (-P)).terms == {}
    assert P.substitute_shift(1, c).substitute_shift(1, R.neg(c)) == P


@given(poly_pair_and_point())
def test_shift_agrees_with_evaluation(args):
    R, P, _, x, c = args
    shifted = P.substitute_shift(0, c)
    assert shifted.evaluate(x) == P.evaluate((R.add(x[0], c), x[1]))
