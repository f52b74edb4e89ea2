"""Lifting residue-field isomorphisms to the level-n quotient rings.

Given irreducible P1, P2 and a residue-level morphism f: K[X]/(P1) ->
K[X]/(P2) with X-image Q_f, the cofactor S_f satisfies
sigma^X(P1) o Q_f = S_f * P2.  The same X-image defines a morphism
K[X]/(P1^n) -> K[X]/(P2^n) for every n, and that lift is an isomorphism
exactly when gcd(S_f, P2) = 1, equivalently when Q_f' != 0.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import (
    DegreeMismatch,
    NotAMorphism,
    NotSeparable,
    NotWellDefined,
    UnsupportedField,
)
from .fields import IDENTITY, ExtensionField, PrimeField
from .hensel import from_digits, to_digits, ResidueDigits
from .poly import (
    Poly,
    apply_automorphism_to_poly,
    enumerate_polys,
    format_poly,
    gcd,
)
from .quotient import QuotientRing, StabilizingMorphism


def extend_automorphism(sigma, a):
    """sigma^X: apply the base automorphism to every coefficient, fix X."""
    return apply_automorphism_to_poly(sigma, a)


def residue_morphism_from_Q(p1, p2, sigma, q, assume_irreducible=False):
    """Level-1 morphism K[X]/(P1) -> K[X]/(P2) from a candidate X-image.

    Verifies that sigma^X(P1) o Q is divisible by P2 and stores the exact
    cofactor S_f.  A level-1 morphism between the residue fields is
    automatically injective and hence (equal dimensions) an isomorphism.
    """
    if p1.degree != p2.degree:
        raise DegreeMismatch(
            f"deg {format_poly(p1)} = {p1.degree} != {p2.degree} = "
            f"deg {format_poly(p2)}")
    if p2.degree < 2:
        raise DegreeMismatch(
            "X-image morphisms need degree >= 2 (degree-1 moduli are handled "
            "by rings_isomorphic_separable)")
    if q.degree < 1 or q.degree >= p2.degree:
        raise DegreeMismatch(
            f"X-image must be nonconstant of degree < {p2.degree}")
    comp = extend_automorphism(sigma, p1).compose(q)
    s, rem = divmod(comp, p2)
    if not rem.is_zero():
        raise NotAMorphism(
            f"x -> {format_poly(q)} is not a morphism: remainder "
            f"{format_poly(rem)}", witness=rem)
    source = QuotientRing(p1, 1, assume_irreducible=assume_irreducible)
    target = QuotientRing(p2, 1, assume_irreducible=assume_irreducible)
    return StabilizingMorphism(source, target, sigma, q, s_cert=s)


@functools.lru_cache(maxsize=None)
def find_residue_isomorphisms(p1, p2, sigma=IDENTITY):
    """All residue-level morphisms K[X]/(P1) -> K[X]/(P2) for a fixed base
    automorphism, by brute force over the q^d candidate X-images, in
    lexicographic order of ascending coefficient vectors.

    The result is empty or has exactly deg(P2) entries (conjugate roots).
    """
    field = p1.field
    if not field.is_finite():
        raise UnsupportedField(
            f"residue isomorphism search requires a finite field, got {field}")
    if p1.degree != p2.degree:
        raise DegreeMismatch("search requires equal degrees")
    d = p2.degree
    found = []
    for deg_q in range(1, d):
        for q in enumerate_polys(field, deg_q, monic=False):
            try:
                found.append(residue_morphism_from_Q(p1, p2, sigma, q))
            except NotAMorphism:
                pass
    found.sort(key=lambda f: _vec_key(f.q_image, d))
    return tuple(found)


def _vec_key(q, d):
    # ascending coefficient vector, constant term first, padded to length d
    return tuple(_elem_key(q.coeff(i)) for i in range(d))


def _elem_key(c):
    payload = c.payload
    if isinstance(payload, tuple):
        return tuple(x.payload for x in payload)
    return payload


def lift_morphism(f, n):
    """The level-n morphism with the same sigma and X-image.

    Well-definedness follows from sigma^X(P1^n) o Q_f = S_f^n * P2^n and is
    re-verified by the morphism constructor.
    """
    if n < 1:
        raise ValueError("power must be >= 1")
    if n == f.source.n == f.target.n:
        return f
    source = f.source.at_power(n)
    target = f.target.at_power(n)
    return StabilizingMorphism(source, target, f.sigma, f.q_image,
                               s_cert=f.s_cert)


@dataclass(frozen=True)
class LiftReport:
    """Outcome of the isomorphism criterion for a lifted morphism."""

    q_f: Poly
    s_f: Poly
    n: int
    q_f_derivative_nonzero: bool
    gcd_sf_p2_is_one: bool
    verdict: bool


def _cofactor(f):
    if f.s_cert is not None:
        return f.s_cert
    comp = extend_automorphism(f.sigma, f.source.p).compose(f.q_image % f.target.p)
    from .poly import exact_div
    return exact_div(comp, f.target.p)


def lift_is_isomorphism(f, n):
    """Decide whether the level-n lift of a residue morphism is bijective.

    Evaluates both equivalent criteria -- gcd(S_f, P2) = 1 and Q_f' != 0 --
    and asserts their agreement; any disagreement is an arithmetic bug.
    For n = 1 the verdict is always true (field map, equal dimensions).
    """
    if n < 1:
        raise ValueError("power must be >= 1")
    q_f = f.q_image % f.target.p
    s_f = _cofactor(f)
    p2 = f.target.p
    deriv_nonzero = not q_f.derivative().is_zero()
    gcd_one = gcd(s_f, p2).degree == 0
    if deriv_nonzero != gcd_one:
        from .errors import CriterionDisagreement
        raise CriterionDisagreement(
            f"gcd(S_f, P2) = 1 is {gcd_one} but Q_f' != 0 is {deriv_nonzero} "
            f"for Q_f = {format_poly(q_f)}")
    verdict = True if n == 1 else deriv_nonzero
    return LiftReport(q_f=q_f, s_f=s_f, n=n,
                      q_f_derivative_nonzero=deriv_nonzero,
                      gcd_sf_p2_is_one=gcd_one, verdict=verdict)


def kernel_witness(f, n):
    """For a residue morphism whose level-n lift (n >= 2) is NOT injective:
    the nonzero class of P1^e killed by the lift, where e = ceil(n/m) and m
    is the multiplicity of P2 in sigma^X(P1) o Q_f."""
    if n < 2:
        raise ValueError("kernel witnesses exist only for n >= 2")
    comp = extend_automorphism(f.sigma, f.source.p).compose(f.q_image % f.target.p)
    p2 = f.target.p
    m = 0
    while True:
        quo, rem = divmod(comp, p2)
        if not rem.is_zero():
            break
        comp = quo
        m += 1
    if m < 2:
        raise ValueError("lift is injective; no kernel witness")
    e = -(-n // m)  # ceil(n/m); e*m >= n and e < n, so P1^e is nonzero
    ring = f.source.at_power(n)
    return ring.element(f.source.p ** e)


def induced_residue_morphism(f_m):
    """The residue-level morphism induced by a level-m morphism: reduce the
    X-image mod P2 (independent of the stored representative)."""
    source = f_m.source.residue_ring()
    target = f_m.target.residue_ring()
    q = f_m.q_image % target.p
    try:
        return StabilizingMorphism(source, target, f_m.sigma, q)
    except NotWellDefined as e:
        raise NotAMorphism(
            f"level-{f_m.source.n} morphism does not induce a residue "
            f"morphism: {e}", witness=e.witness) from e


@dataclass(frozen=True)
class RootsBijectionReport:
    passed: bool
    n_roots: int
    roots_p2: tuple
    images: tuple

    def __bool__(self):
        return self.passed


def roots_bijection_check(f):
    """Enumerate the splitting field F_{q^d} and verify that alpha ->
    Q_f(alpha) maps the roots of P2 bijectively onto the roots of
    sigma^X(P1)."""
    base = f.source.field
    if not isinstance(base, PrimeField):
        raise UnsupportedField(
            f"root enumeration is implemented for prime fields, got {base}")
    p1 = f.source.p
    p2 = f.target.p
    q_f = f.q_image % p2
    shifted_p1 = extend_automorphism(f.sigma, p1)
    d = p2.degree
    if d == 1:
        ext = base
        lift = lambda poly: poly
    else:
        # P2 itself serves as the minimal polynomial of F_{q^d}
        ext = ExtensionField(base, p2.coeffs, gen="a")
        lift = lambda poly: Poly(ext, [ext.from_base(c) for c in poly.coeffs])
    p1_ext, p2_ext, q_ext = lift(shifted_p1), lift(p2), lift(q_f)
    roots_p2 = [a for a in ext.elements() if p2_ext.evaluate(a).is_zero()]
    roots_p1 = {a for a in ext.elements() if p1_ext.evaluate(a).is_zero()}
    images = [q_ext.evaluate(a) for a in roots_p2]
    passed = (len(roots_p2) == len(roots_p1)
              and len(set(images)) == len(images)
              and set(images) == roots_p1)
    return RootsBijectionReport(passed=passed, n_roots=len(roots_p2),
                                roots_p2=tuple(roots_p2), images=tuple(images))


def _check_separable(p):
    if p.derivative().is_zero():
        raise NotSeparable(f"{format_poly(p)} has zero derivative")


def _affine_isomorphism(p1, p2, n, assume_irreducible):
    # degree-1 moduli: P_i = X + a_i with root c_i = -a_i; the substitution
    # X -> X + (a_2 - a_1) sends P1 to P2 exactly
    shift = p2.coeff(0) - p1.coeff(0)
    q = Poly.x(p1.field) + shift
    source = QuotientRing(p1, n, assume_irreducible=assume_irreducible)
    target = QuotientRing(p2, n, assume_irreducible=assume_irreducible)
    return StabilizingMorphism(source, target, IDENTITY, q,
                               s_cert=Poly.one(p1.field))


def _digit_transport_isomorphism(f, n, assume_irreducible):
    # Route through the digit decompositions of both sides: the composite
    # K[X]/(P1^n) ~ (K[X]/(P1))[Y]/(Y^n) ~ (K[X]/(P2))[Y]/(Y^n) ~ K[X]/(P2^n)
    # is determined by where it sends the class of X.
    p1 = f.source.p
    p2 = f.target.p
    source = QuotientRing(p1, n, assume_irreducible=assume_irreducible)
    target = QuotientRing(p2, n, assume_irreducible=assume_irreducible)
    digits = to_digits(source.gen())
    moved = ResidueDigits(ring=target,
                          digits=tuple(f(d) for d in digits.digits))
    q = from_digits(moved).rep
    return StabilizingMorphism(source, target, f.sigma, q)


def rings_isomorphic_separable(p1, p2, n, sigma=IDENTITY,
                               residue_morphism=None,
                               assume_irreducible=False):
    """Produce an isomorphism K[X]/(P1^n) -> K[X]/(P2^n) for separable
    irreducible P1, P2, or None when the residue fields differ.

    Over finite fields the residue fields are isomorphic iff the degrees
    agree; over other fields a residue morphism must be supplied by the
    caller.  Candidates whose lift criterion holds are lifted directly; if
    every candidate has Q_f' = 0, the isomorphism is routed through the
    digit decompositions of both sides instead.
    """
    _check_separable(p1)
    _check_separable(p2)
    if n < 1:
        raise ValueError("power must be >= 1")
    if p1.degree != p2.degree:
        return None
    if p1.degree == 1:
        return _affine_isomorphism(p1, p2, n, assume_irreducible)
    if residue_morphism is not None:
        candidates = (residue_morphism,)
    elif p1.field.is_finite():
        candidates = find_residue_isomorphisms(p1, p2, sigma)
    else:
        raise UnsupportedField(
            f"no residue morphism supplied and search is unavailable over "
            f"{p1.field}")
    if not candidates:
        return None
    for f in candidates:
        if lift_is_isomorphism(f, n).verdict:
            return lift_morphism(f, n)
    return _digit_transport_isomorphism(candidates[0], n, assume_irreducible)
