import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import FINITE_RINGS, SMALL_RINGS, elements_of, rings
from nullkit.errors import DomainError, RingMismatch
from nullkit.ring import (
    GaloisField,
    Integers,
    IntegersMod,
    enumerate_elements,
    factorize,
    is_nilpotent,
    is_zero_divisor,
    ring_add,
    ring_from_json,
    ring_mul,
    ring_neg,
    solve_scalar,
    try_invert,
)

Z = Integers()
F4 = GaloisField(2, 2)


def test_zm_addition_reduces():
    R = IntegersMod(6)
    assert ring_add(R(4), R(5)).value == 3


def test_f4_t_squared_is_t_plus_one():
    t = 2  # payload of t
    assert F4.format(ring_mul(F4(t), F4(t)).value) == "t+1"


def test_integer_product():
    assert ring_mul(Z(-3), Z(7)).value == -21


def test_negation():
    assert ring_neg(IntegersMod(6)(1)).value == 5


def test_mixed_rings_rejected():
    with pytest.raises(RingMismatch, match="ring mismatch"):
        ring_add(IntegersMod(6)(1), IntegersMod(7)(1))
    with pytest.raises(RingMismatch):
        IntegersMod(6)(1) * Z(1)


def test_try_invert_examples():
    R = IntegersMod(6)
    assert try_invert(R(5)).value == 5
    assert try_invert(R(2)) is None
    assert try_invert(Z(-1)).value == -1
    assert try_invert(Z(2)) is None


def test_zero_divisor_examples():
    assert is_zero_divisor(IntegersMod(6)(2))
    assert not is_zero_divisor(IntegersMod(7)(3))
    assert not is_zero_divisor(Z(5))


def test_nilpotent_examples():
    assert is_nilpotent(IntegersMod(4)(2))
    assert not is_nilpotent(IntegersMod(12)(4))
    assert is_nilpotent(IntegersMod(12)(6))


def test_enumeration():
    assert [e.value for e in enumerate_elements(IntegersMod(3))] == [0, 1, 2]
    assert [F4.format(e.value) for e in enumerate_elements(F4)] == ["0", "1", "t", "t+1"]
    with pytest.raises(DomainError, match="infinite ring"):
        enumerate_elements(Z)


def test_modulus_validation():
    with pytest.raises(DomainError):
        IntegersMod(1)
    with pytest.raises(DomainError):
        GaloisField(2, 2, (0, 0, 1))  # t^2 is reducible
    with pytest.raises(DomainError):
        GaloisField(4)


def test_json_round_trip():
    for R in SMALL_RINGS:
        assert ring_from_json(R.to_json()) == R
        for a in (R.elements() if R.size else range(-3, 4)):
            assert R.element_from_json(R.element_to_json(a)) == a


def test_factorize():
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert factorize(97) == {97: 1}


def test_solve_scalar():
    R = IntegersMod(12)
    x = solve_scalar(R, 4, 8)
    assert R.mul(4, x) == 8
    assert solve_scalar(Z, -3, 12) == -4
    with pytest.raises(DomainError):
        solve_scalar(Z, 2, 3)


@given(rings.flatmap(lambda R: st.tuples(st.just(R), elements_of(R), elements_of(R), elements_of(R))))
def test_ring_axioms(args):
    R, a, b, c = args
    assert R.add(a, b) == R.add(b, a)
    assert R.mul(a, b) == R.mul(b, a)
    assert R.add(R.add(a, b), c) == R.add(a, R.add(b, c))
    assert R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c))
    assert R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c))
    assert R.add(a, R.zero) == a and R.mul(a, R.one) == a
    assert R.add(a, R.neg(a)) == R.zero


@given(rings.flatmap(lambda R: st.tuples(st.just(R), elements_of(R))))
def test_inverse_is_inverse(args):
    R, a = args
    b = R.try_invert(a)
    if b is not None:
        assert R.mul(a, b) == R.one


@pytest.mark.parametrize("R", FINITE_RINGS, ids=str)
def test_zero_unit_zero_divisor_trichotomy(R):
    for a in R.elements():
        kinds = [a == R.zero, R.is_unit(a), a != R.zero and R.is_zero_divisor(a)]
        assert sum(kinds) == 1


@pytest.mark.parametrize("R", FINITE_RINGS, ids=str)
def test_nilpotent_matches_iteration(R):
    for a in R.elements():
        v, seen_zero = a, a == R.zero
        for _ in range(R.size):
            v = R.mul(v, v)
            seen_zero |= v == R.zero
        assert R.is_nilpotent(a) == seen_zero


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (2, 4), (3, 2), (5, 2), (7, 2)])
def test_galois_field_multiplicative_group_is_cyclic_of_order_q_minus_1(p, k):
    F = GaloisField(p, k)
    q = F.size
    for a in F.elements():
        if a != F.zero:
            assert F.pow(a, q - 1) == F.one
    orders = []
    for a in F.elements()[1:]:
        e, v = 1, a
        while v != F.one:
            v, e = F.mul(v, a), e + 1
        orders.append(e)
    assert max(orders) == q - 1
