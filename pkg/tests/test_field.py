"""Field axioms and serialization for Q(phi) elements."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from h4geproci.field import FieldElement, ONE, PHI, PHI2, ZERO


def _random_element(rng: random.Random) -> FieldElement:
    return FieldElement(Fraction(rng.randint(-50, 50), rng.randint(1, 20)),
                        Fraction(rng.randint(-50, 50), rng.randint(1, 20)))


def test_phi_satisfies_its_minimal_polynomial():
    assert PHI * PHI == PHI + ONE
    assert PHI2 == PHI + ONE
    assert PHI.norm() == -1
    assert PHI.inverse() == PHI - ONE


def test_field_axioms_on_random_triples():
    rng = random.Random(20260824)
    for _ in range(10_000):
        x, y, z = (_random_element(rng) for _ in range(3))
        assert (x + y) + z == x + (y + z)
        assert x + y == y + x
        assert (x * y) * z == x * (y * z)
        assert x * y == y * x
        assert x * (y + z) == x * y + x * z
        assert x + ZERO == x and x * ONE == x
        assert x + (-x) == ZERO


def test_inverses_and_norm_multiplicativity():
    rng = random.Random(7)
    for _ in range(2_000):
        x, y = _random_element(rng), _random_element(rng)
        if not x.is_zero():
            assert x * x.inverse() == ONE
            assert (ONE / x) * x == ONE
        assert (x * y).norm() == x.norm() * y.norm()
        assert x * x.conjugate() == FieldElement(x.norm())


def test_conjugation_is_a_field_homomorphism():
    rng = random.Random(11)
    for _ in range(2_000):
        x, y = _random_element(rng), _random_element(rng)
        assert (x + y).conjugate() == x.conjugate() + y.conjugate()
        assert (x * y).conjugate() == x.conjugate() * y.conjugate()
        assert x.conjugate().conjugate() == x


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_powers_match_repeated_multiplication():
    x = FieldElement(Fraction(3, 2), Fraction(-1, 3))
    acc = ONE
    for k in range(8):
        assert x ** k == acc
        acc = acc * x
    assert x ** -2 == (x * x).inverse()


def test_coercion_from_int_and_fraction():
    assert FieldElement(2) + 3 == FieldElement(5)
    assert 2 * PHI == PHI + PHI
    assert PHI - Fraction(1, 2) == FieldElement(Fraction(-1, 2), 1)


_rationals = st.fractions(min_value=-10**6, max_value=10**6,
                          max_denominator=10**4)
_elements = st.builds(FieldElement, _rationals, _rationals)


@settings(max_examples=300, deadline=None)
@given(_elements, _elements)
def test_subtraction_inverts_addition(x, y):
    assert (x + y) - y == x


@settings(max_examples=300, deadline=None)
@given(_elements, _elements)
def test_division_inverts_multiplication(x, y):
    if not y.is_zero():
        assert (x * y) / y == x


@settings(max_examples=300, deadline=None)
@given(_elements)
def test_json_roundtrip(x):
    assert FieldElement.from_json(x.to_json()) == x


def test_json_accepts_bare_values():
    assert FieldElement.from_json(3) == FieldElement(3)
    assert FieldElement.from_json("5/2") == FieldElement(Fraction(5, 2))
    assert FieldElement.from_json({"b": "1"}) == PHI


def test_immutability_and_hash_consistency():
    x = FieldElement(1, 2)
    with pytest.raises(AttributeError):
        x.a = Fraction(3)
    assert hash(FieldElement(1, 2)) == hash(x)
    assert len({FieldElement(1, 2), FieldElement(1, 2), PHI}) == 2
