import itertools
import random

import pytest

import locring as L
from locring.errors import (
    DegreeMismatch,
    NotAMorphism,
    NotSeparable,
    UnsupportedField,
)
from locring.lift import kernel_witness
from locring.poly import Poly

F2 = L.PrimeField(2)
F3 = L.PrimeField(3)
Q = L.Rationals()
F2T = L.RationalFunctionField(2, "t")
F9 = L.ExtensionField(F3, (1, 0, 1))


def P(field, text):
    return L.parse_poly(field, text)


# -- sigma^X ----------------------------------------------------------------

def test_extend_identity():
    a = P(Q, "x^2-2")
    assert L.extend_automorphism(L.IDENTITY, a) == a


def test_extend_frobenius_over_f9():
    c = F9.gen()
    a = Poly(F9, (c, F9.one()))  # x + c
    shifted = L.extend_automorphism(L.frobenius(1), a)
    assert shifted == Poly(F9, (c ** 3, F9.one()))


def test_extend_frobenius_over_prime_field_fixes():
    a = P(F2, "x^3+x+1")
    assert L.extend_automorphism(L.frobenius(1), a) == a


# -- residue morphisms ------------------------------------------------------

def test_residue_morphism_cross_f3():
    f = L.residue_morphism_from_Q(P(F3, "x^2+1"), P(F3, "x^2+x+2"),
                                  L.IDENTITY, P(F3, "x+2"))
    assert f.s_cert == Poly.one(F3)


def test_residue_morphism_frobenius_style():
    p = P(F2, "x^3+x+1")
    f = L.residue_morphism_from_Q(p, p, L.IDENTITY, P(F2, "x^2"))
    assert f.s_cert == p  # P(X^2) = P^2 in char 2


def test_residue_morphism_rejects_non_morphism():
    with pytest.raises(NotAMorphism) as exc:
        L.residue_morphism_from_Q(P(F3, "x^2+1"), P(F3, "x^2+x+2"),
                                  L.IDENTITY, Poly.x(F3))
    # (x^2+1) - (x^2+x+2) = 2x+2 over F3
    assert exc.value.witness == P(F3, "2*x+2")


def test_residue_morphism_rejects_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        L.residue_morphism_from_Q(P(F3, "x^2+1"), P(F3, "x^3+2*x+1"),
                                  L.IDENTITY, Poly.x(F3))


def test_find_residue_isomorphisms_f3():
    found = L.find_residue_isomorphisms(P(F3, "x^2+1"), P(F3, "x^2+x+2"))
    assert [f.q_image for f in found] == [P(F3, "2*x+1"), P(F3, "x+2")]


def test_find_residue_isomorphisms_f8():
    found = L.find_residue_isomorphisms(P(F2, "x^3+x+1"), P(F2, "x^3+x^2+1"))
    assert len(found) == 3


def test_find_residue_isomorphisms_self_includes_identity():
    p = P(F2, "x^2+x+1")
    found = L.find_residue_isomorphisms(p, p)
    assert any(f.q_image == Poly.x(F2) for f in found)


def test_find_residue_isomorphisms_count_is_0_or_degree():
    for p1, p2 in itertools.product(L.enumerate_irreducibles(F3, 3), repeat=2):
        found = L.find_residue_isomorphisms(p1, p2)
        assert len(found) == 3


def test_find_residue_isomorphisms_requires_finite():
    with pytest.raises(UnsupportedField):
        L.find_residue_isomorphisms(P(Q, "x^2-2"), P(Q, "x^2-2"))


# -- lifting ----------------------------------------------------------------

def cross_f3():
    return L.residue_morphism_from_Q(P(F3, "x^2+1"), P(F3, "x^2+x+2"),
                                     L.IDENTITY, P(F3, "x+2"))


def frob_f2():
    p = P(F2, "x^3+x+1")
    return L.residue_morphism_from_Q(p, p, L.IDENTITY, P(F2, "x^2"))


def test_lift_morphism_n1_is_f():
    f = cross_f3()
    assert L.lift_morphism(f, 1) is f


def test_lift_morphism_certificate_holds():
    lifted = L.lift_morphism(cross_f3(), 3)
    assert lifted.source.n == 3 and lifted.target.n == 3
    # lifted Frobenius-style morphism is well defined too (P(X^2)^2 = P^4)
    L.lift_morphism(frob_f2(), 2)


def test_lift_report_true_case():
    report = L.lift_is_isomorphism(cross_f3(), 3)
    assert report.verdict
    assert report.s_f == Poly.one(F3)
    assert report.q_f_derivative_nonzero and report.gcd_sf_p2_is_one


def test_lift_report_false_case():
    f = frob_f2()
    report = L.lift_is_isomorphism(f, 2)
    assert not report.verdict
    assert not report.q_f_derivative_nonzero
    assert not report.gcd_sf_p2_is_one
    assert report.s_f == f.target.p


def test_lift_report_n1_always_true():
    report = L.lift_is_isomorphism(frob_f2(), 1)
    assert report.verdict
    assert not report.q_f_derivative_nonzero


def test_linear_q_always_lifts():
    for p in L.enumerate_irreducibles(F2, 2) + L.enumerate_irreducibles(F3, 2):
        for f in L.find_residue_isomorphisms(p, p):
            if f.q_image.degree == 1:
                assert L.lift_is_isomorphism(f, 3).verdict


def test_kernel_witness():
    f = frob_f2()
    for n in (2, 3, 4):
        w = kernel_witness(f, n)
        assert not w.is_zero()
        lifted = L.lift_morphism(f, n)
        assert lifted(w).is_zero()


def test_functoriality_with_projections():
    f = cross_f3()
    f3_lift = L.lift_morphism(f, 3)
    f2_lift = L.lift_morphism(f, 2)
    rng = random.Random(6)
    for _ in range(100):
        a = f3_lift.source.random_element(rng)
        assert f3_lift(a).project(2) == f2_lift(a.project(2))


def test_induced_residue_morphism_round_trip():
    f = cross_f3()
    lifted = L.lift_morphism(f, 3)
    back = L.induced_residue_morphism(lifted)
    assert back.q_image == f.q_image
    assert back.source == f.source and back.target == f.target


def test_induced_residue_morphism_strips_multiples():
    # X-image x^2 + P2*(x+1) at level 2 reduces to q = x^2
    p2 = P(F2, "x^3+x+1")
    f = frob_f2()
    lifted = L.lift_morphism(f, 2)
    r = P(F2, "x^2") + p2 * P(F2, "x+1")
    same = L.make_morphism(lifted.source, lifted.target, L.IDENTITY, r)
    induced = L.induced_residue_morphism(same)
    assert induced.q_image == P(F2, "x^2")


def test_induced_identity():
    ring = L.make_ring(P(F3, "x^2+1"), 3)
    ident = L.StabilizingMorphism.identity(ring)
    assert L.induced_residue_morphism(ident).is_identity()


# -- roots bijection --------------------------------------------------------

def test_roots_bijection_cross_f3():
    report = L.roots_bijection_check(cross_f3())
    assert report.passed and report.n_roots == 2


def test_roots_bijection_identity():
    p = P(F3, "x^2+1")
    f = L.residue_morphism_from_Q(p, p, L.IDENTITY, Poly.x(F3))
    assert L.roots_bijection_check(f).passed


def test_roots_bijection_f8():
    for f in L.find_residue_isomorphisms(P(F2, "x^3+x+1"),
                                         P(F2, "x^3+x^2+1")):
        report = L.roots_bijection_check(f)
        assert report.passed and report.n_roots == 3


# -- full pipeline ----------------------------------------------------------

def test_rings_isomorphic_cross_f3():
    iso = L.rings_isomorphic_separable(P(F3, "x^2+1"), P(F3, "x^2+x+2"), 3)
    assert iso is not None
    assert iso.q_image % iso.target.p == P(F3, "2*x+1")  # first lex candidate
    assert L.certify_isomorphism(iso)


def test_rings_isomorphic_degree_mismatch():
    assert L.rings_isomorphic_separable(P(F3, "x^2+1"),
                                        P(F3, "x^3+2*x+1"), 2) is None


def test_rings_isomorphic_self():
    p = P(F3, "x^2+1")
    iso = L.rings_isomorphic_separable(p, p, 4)
    assert iso is not None and L.certify_isomorphism(iso)


def test_rings_isomorphic_degree_one():
    iso = L.rings_isomorphic_separable(P(F3, "x"), P(F3, "x+1"), 3)
    assert iso is not None
    assert iso.q_image == P(F3, "x+1")
    assert L.certify_isomorphism(iso)
    # the morphism sends the maximal ideal generator onto the other one
    src_p = iso.source.element(iso.source.p)
    assert iso(src_p) == iso.target.element(iso.target.p)


def test_rings_isomorphic_inseparable_raises():
    p = P(F2T, "x^2+t")
    with pytest.raises(NotSeparable):
        L.rings_isomorphic_separable(p, p, 2, assume_irreducible=True)


def test_rings_isomorphic_char0_with_supplied_residue_morphism():
    p = P(Q, "x^2-2")
    ring = L.make_ring(p, 1, assume_irreducible=True)
    f = L.make_morphism(ring, ring, L.IDENTITY, P(Q, "-x"), s_cert=Poly.one(Q))
    iso = L.rings_isomorphic_separable(p, p, 3, residue_morphism=f,
                                       assume_irreducible=True)
    assert iso is not None
    assert iso.q_image == P(Q, "-x")
    assert L.certify_isomorphism(iso)


def test_rings_isomorphic_char0_without_morphism_raises():
    p = P(Q, "x^2-2")
    with pytest.raises(UnsupportedField):
        L.rings_isomorphic_separable(p, p, 2, assume_irreducible=True)
