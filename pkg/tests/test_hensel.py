import random

import pytest

import locring as L
from locring.errors import NotSeparable
from locring.hensel import digits_mul, structure_isomorphism_check
from locring.poly import Poly

F2 = L.PrimeField(2)
F3 = L.PrimeField(3)
Q = L.Rationals()
F2T = L.RationalFunctionField(2, "t")


def P(field, text):
    return L.parse_poly(field, text)


# -- Taylor shift certificate ----------------------------------------------

def test_shift_certificate_square():
    # (x+c)^2 = x^2 + 2cx + c^2, so the quadratic cofactor is 1
    for c in [1, 2, 5]:
        r = L.taylor_shift_certificate(P(Q, "x^2"), Poly(Q, (c,)))
        assert r == Poly.one(Q)


def test_shift_certificate_quadratic_general():
    rng = random.Random(0)
    p = P(Q, "x^2-2")
    for _ in range(20):
        d = rng.randint(0, 3)
        q = Poly(Q, [Q.random_element(rng) for _ in range(d + 1)])
        if q.is_zero():
            continue
        assert L.taylor_shift_certificate(p, q) == Poly.one(Q)


def test_shift_certificate_cubic_over_f2():
    # q = x over F2: p(x+q) = p(0) = 1 and p + p'*q = 1, so the cofactor
    # vanishes identically
    p = P(F2, "x^3+x+1")
    r = L.taylor_shift_certificate(p, Poly.x(F2))
    assert r.is_zero()
    assert p.compose(Poly.x(F2) + Poly.x(F2)) == Poly.one(F2)


@pytest.mark.parametrize("field", [F2, F3, Q], ids=repr)
def test_shift_certificate_identity_holds(field):
    rng = random.Random(1)
    x = Poly.x(field)
    for _ in range(100):
        p = Poly(field, [field.random_element(rng) for _ in range(5)])
        q = Poly(field, [field.random_element(rng) for _ in range(3)])
        r = L.taylor_shift_certificate(p, q)
        assert p.compose(x + q) == p + p.derivative() * q + r * q * q


def test_shift_certificate_zero_q():
    assert L.taylor_shift_certificate(P(Q, "x^2"), Poly.zero(Q)).is_zero()


# -- root series ------------------------------------------------------------

def test_root_series_sqrt2():
    rs = L.hensel_root_series(P(Q, "x^2-2"), 2)
    assert rs.q_list == (P(Q, "-x/4"),)
    assert rs.u == Poly.x(Q) - P(Q, "x/4") * P(Q, "x^2-2")
    assert rs.certificate_residual().is_zero()


def test_root_series_f2():
    p = P(F2, "x^2+x+1")
    rs = L.hensel_root_series(p, 2)
    assert rs.q_list == (Poly.one(F2),)
    assert rs.u == P(F2, "x^2+1")
    assert rs.r_cert == Poly.one(F2)  # P(U) = P^2 exactly
    assert p.compose(rs.u) == p * p


def test_root_series_inseparable():
    with pytest.raises(NotSeparable):
        L.hensel_root_series(P(F2T, "x^2+t"), 3)


def test_root_series_k1_is_trivial():
    rs = L.hensel_root_series(P(F3, "x^2+1"), 1)
    assert rs.u == Poly.x(F3)
    assert rs.q_list == ()
    assert rs.r_cert == Poly.one(F3)


@pytest.mark.parametrize("field,ptext", [(F2, "x^3+x+1"), (F3, "x^3+2*x+1"),
                                         (Q, "x^2-2"), (Q, "x^3-2")])
@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_root_series_certificate(field, ptext, k):
    rs = L.hensel_root_series(P(field, ptext), k)
    assert rs.certificate_residual().is_zero()
    assert all(q.degree < rs.p.degree for q in rs.q_list)


# -- embedding --------------------------------------------------------------

def test_embed_k1_is_identity():
    f = L.embed_residue_field(P(F3, "x^2+1"), 1)
    assert f.is_identity()


def test_embed_example_f2():
    f = L.embed_residue_field(P(F2, "x^2+x+1"), 2)
    assert f.q_image == P(F2, "x^2+1")


def test_embed_section_property():
    for field, ptext, k in [(F2, "x^2+x+1", 3), (F3, "x^2+1", 2),
                            (F2, "x^3+x+1", 2)]:
        p = P(field, ptext)
        f = L.embed_residue_field(p, k)
        for a in f.source.elements():
            assert f(a).project(1) == a


def test_embed_is_ring_morphism_sampled():
    p = P(Q, "x^2-2")
    f = L.embed_residue_field(p, 3, assume_irreducible=True)
    rng = random.Random(2)
    for _ in range(100):
        a = f.source.random_element(rng)
        b = f.source.random_element(rng)
        assert f(a + b) == f(a) + f(b)
        assert f(a * b) == f(a) * f(b)


# -- digits -----------------------------------------------------------------

def test_digits_example():
    ring = L.make_ring(P(F2, "x^2+x+1"), 2)
    d = L.to_digits(ring.gen())
    res = ring.residue_ring()
    assert d.digits == (res.gen(), res.one())


def test_digits_of_embedded_element():
    p = P(F3, "x^2+1")
    f = L.embed_residue_field(p, 3)
    res = f.source
    zero = res.zero()
    for b in res.elements():
        d = L.to_digits(f(b))
        assert d.digits == (b, zero, zero)


def test_digits_of_powers_of_p():
    ring = L.make_ring(P(F2, "x^2+x+1"), 3)
    res = ring.residue_ring()
    for j in range(3):
        d = L.to_digits(ring.element(ring.p ** j))
        expected = tuple(res.one() if i == j else res.zero() for i in range(3))
        assert d.digits == expected


def test_digits_round_trip_exhaustive():
    ring = L.make_ring(P(F2, "x^2+x+1"), 2)
    for a in ring.elements():
        assert L.from_digits(L.to_digits(a)) == a


def test_digits_round_trip_char0():
    ring = L.make_ring(P(Q, "x^2-2"), 4, assume_irreducible=True)
    rng = random.Random(3)
    for _ in range(50):
        a = ring.random_element(rng)
        assert L.from_digits(L.to_digits(a)) == a


def test_freeness():
    # sum embed(a_j) P^j = 0 implies all digits zero
    ring = L.make_ring(P(F3, "x^2+1"), 3)
    d = L.to_digits(ring.zero())
    assert all(a.is_zero() for a in d.digits)


def test_digit_lengths_and_dimension():
    ring = L.make_ring(P(F3, "x^3+2*x+1"), 2)
    assert len(L.to_digits(ring.gen())) == 2
    assert ring.dimension == 6


def test_digits_mul_matches_ring_mul():
    ring = L.make_ring(P(F2, "x^2+x+1"), 3)
    rng = random.Random(4)
    for _ in range(100):
        a = ring.random_element(rng)
        b = ring.random_element(rng)
        assert L.to_digits(a * b) == digits_mul(L.to_digits(a), L.to_digits(b))


# -- structure isomorphism check -------------------------------------------

def test_structure_check_exhaustive_f2():
    for k in (1, 2, 3, 4):
        report = structure_isomorphism_check(P(F2, "x^2+x+1"), k)
        assert report.passed
        assert report.exhaustive == (2 ** (2 * k) <= 3 ** 6)


def test_structure_check_f3():
    report = structure_isomorphism_check(P(F3, "x^2+1"), 3)
    assert report.passed and report.exhaustive


def test_structure_check_inseparable():
    with pytest.raises(NotSeparable):
        structure_isomorphism_check(P(F2T, "x^2+t"), 2,
                                    assume_irreducible=True)
