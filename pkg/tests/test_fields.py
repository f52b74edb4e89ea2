import random
from fractions import Fraction

import pytest

import locring as L
from locring.errors import (
    DescriptorMismatch,
    DivisionByZero,
    UnsupportedAutomorphism,
)

F2 = L.PrimeField(2)
F3 = L.PrimeField(3)
Q = L.Rationals()
F2T = L.RationalFunctionField(2, "t")
F4 = L.ExtensionField(F2, (1, 1, 1))  # F2[a]/(a^2+a+1)
QSQRT2 = L.ExtensionField(Q, (-2, 0, 1), assume_irreducible=True)

ALL_FIELDS = [F2, F3, Q, F2T, F4, QSQRT2]


def test_prime_field_mul():
    assert F3.from_int(2) * F3.from_int(2) == F3.from_int(1)


def test_rational_add():
    assert Q.element(Fraction(1, 2)) + Q.element(Fraction(1, 3)) == Fraction(5, 6)


def test_function_field_cancellation():
    t = F2T.gen()
    assert (1 / t) * t == F2T.one()


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        Q.one() / Q.zero()
    with pytest.raises(DivisionByZero):
        F3.one() / F3.zero()
    with pytest.raises(DivisionByZero):
        F2T.one() / F2T.zero()


def test_descriptor_mismatch():
    with pytest.raises(DescriptorMismatch):
        F2.one() + F3.one()


@pytest.mark.parametrize("field", ALL_FIELDS, ids=repr)
def test_field_axioms_sampled(field):
    rng = random.Random(7)
    one = field.one()
    for _ in range(200):
        a = field.random_element(rng)
        b = field.random_element(rng)
        c = field.random_element(rng)
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        if not a.is_zero():
            assert a * a ** (-1) == one


@pytest.mark.parametrize("field", ALL_FIELDS, ids=repr)
def test_canonicalization_idempotent(field):
    rng = random.Random(11)
    for _ in range(50):
        a = field.random_element(rng)
        assert field._canon(a.payload) == a.payload


def test_identity_automorphism():
    a = Q.element(Fraction(5, 7))
    assert L.IDENTITY.apply(a) == a


def test_frobenius_on_prime_field_is_trivial():
    assert L.frobenius(1).apply(F3.from_int(2)) == F3.from_int(2)


def test_frobenius_on_f4_generator():
    # a^2 = a + 1 modulo a^2 + a + 1
    a = F4.gen()
    assert L.frobenius(1).apply(a) == a + 1


def test_frobenius_unsupported_fields():
    with pytest.raises(UnsupportedAutomorphism):
        L.frobenius(1).apply(Q.one())
    with pytest.raises(UnsupportedAutomorphism):
        L.frobenius(1).apply(F2T.gen())


@pytest.mark.parametrize("field", [F2, F3, F4])
def test_frobenius_is_a_field_morphism(field):
    rng = random.Random(3)
    frob = L.frobenius(1)
    for _ in range(200):
        a = field.random_element(rng)
        b = field.random_element(rng)
        assert frob.apply(a + b) == frob.apply(a) + frob.apply(b)
        assert frob.apply(a * b) == frob.apply(a) * frob.apply(b)


def test_frobenius_iteration():
    # frob^e applied k times equals frob^(e*k)
    rng = random.Random(5)
    for _ in range(50):
        a = F4.random_element(rng)
        twice = L.frobenius(1).apply(L.frobenius(1).apply(a))
        assert twice == L.frobenius(2).apply(a)
        assert twice == a  # frob^2 = id on F4


def test_f9_as_extension():
    F9 = L.ExtensionField(F3, (1, 0, 1))  # a^2 = -1
    a = F9.gen()
    assert a * a == F9.from_int(-1)
    assert len(list(F9.elements())) == 9
    assert F9.order() == 9


def test_extension_inverse_exhaustive():
    for a in F4.elements():
        if not a.is_zero():
            assert a * a ** (-1) == F4.one()


def test_parse_format_field_round_trip():
    for text in ["Q", "F2", "F3", "F3(t)", "F2[x]/(x^2+x+1)"]:
        field = L.parse_field(text)
        assert L.format_field(field) == text


def test_parse_field_rejects_garbage():
    from locring.errors import NotIrreducible, ParseError
    for bad in ["R", "F", "F4x"]:
        with pytest.raises(ParseError):
            L.parse_field(bad)
    with pytest.raises(NotIrreducible):
        L.parse_field("F2[x]/(x^2)")
    with pytest.raises(ValueError):
        L.parse_field("F4")  # 4 is not prime


def test_element_formatting():
    t = F2T.gen()
    assert str(1 / t) == "1/t"
    assert str((1 + t) / t) == "(t+1)/t"
    a = F4.gen()
    assert str(a + 1) == "a+1"
