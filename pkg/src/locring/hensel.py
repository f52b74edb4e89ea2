"""Hensel-style constructions for K[X]/(P^k) with P separable irreducible.

Provides the shift certificate P(X+Q) = P + P'Q + R Q^2, the iterative root
series U with P(U) = R_cert * P^k, the induced embedding of the residue field
K[X]/(P) into K[X]/(P^k), and the digit expansion of elements along the
basis 1, P, ..., P^{k-1} over the embedded residue field.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass

from .errors import InexactDivision, NotSeparable
from .fields import IDENTITY
from .poly import Poly, exact_div, format_poly, inverse_mod
from .quotient import QuotientRing, StabilizingMorphism


def taylor_shift_certificate(p, q):
    """The cofactor R with p(X + q) = p + p'*q + R*q^2, by exact division.

    R = 0 by convention when q = 0.
    """
    if q.is_zero():
        return Poly.zero(p.field)
    x = Poly.x(p.field)
    num = p.compose(x + q) - p - p.derivative() * q
    return exact_div(num, q * q)


@dataclass(frozen=True)
class RootSeries:
    """The data (Q_1..Q_{k-1}, U, R_cert) with P(U) = R_cert * P^k exactly."""

    p: Poly
    k: int
    q_list: tuple
    u: Poly
    r_cert: Poly

    def certificate_residual(self):
        """P(U) - R_cert * P^k; zero for every valid series."""
        return self.p.compose(self.u) - self.r_cert * self.p ** self.k


@functools.lru_cache(maxsize=None)
def hensel_root_series(p, k):
    """Iteratively build U = X + sum Q_i P^i with P(U) divisible by P^k.

    One power of P is gained per step: given P(U) = R * P^j, the update
    Q_j = -R * (P' o U)^(-1) mod P makes P(U + Q_j P^j) divisible by P^(j+1).
    Raises NotSeparable when P' = 0.
    """
    if k < 1:
        raise ValueError("power must be >= 1")
    if not p.is_monic() or p.degree < 1:
        raise ValueError("base polynomial must be monic of degree >= 1")
    dp = p.derivative()
    if dp.is_zero():
        raise NotSeparable(f"{format_poly(p)} has zero derivative")
    # U = X mod P throughout (Q_0 = 0), so P' o U = P' mod P and one Bezout
    # inverse serves every step
    inv_dp = inverse_mod(dp, p)
    u = Poly.x(p.field)
    r = Poly.one(p.field)
    q_list = []
    for j in range(1, k):
        s = (-(r % p) * inv_dp) % p
        q_list.append(s)
        u = u + s * p ** j
        r = exact_div(p.compose(u), p ** (j + 1))
    return RootSeries(p=p, k=k, q_list=tuple(q_list), u=u, r_cert=r)


def _ring(p, k, assume_irreducible):
    return QuotientRing(p, k, assume_irreducible=assume_irreducible)


def embed_residue_field(p, k, assume_irreducible=False):
    """The section K[X]/(P) -> K[X]/(P^k) given by X -> U."""
    series = hensel_root_series(p, k)
    source = _ring(p, 1, assume_irreducible)
    target = source.at_power(k)
    return StabilizingMorphism(source, target, IDENTITY,
                               series.u % target.modulus)


@functools.lru_cache(maxsize=None)
def _embedding_tables(p, k):
    """Per level l <= k, the images U^i mod P^l of the residue-field basis
    monomials X^i (i < deg P).  Shared by the digit routines."""
    series = hensel_root_series(p, k)
    tables = {}
    modulus = Poly.one(p.field)
    for level in range(1, k + 1):
        modulus = modulus * p
        u = series.u % modulus
        basis = [Poly.one(p.field)]
        for _ in range(1, p.degree):
            basis.append(basis[-1] * u % modulus)
        tables[level] = (modulus, tuple(basis))
    return series, tables


def _embed_rep(digit_rep, basis):
    """Linear combination sum digit_i * U^i from a precomputed basis table."""
    acc = Poly.zero(digit_rep.field)
    for i, c in enumerate(digit_rep.coeffs):
        if not c.is_zero():
            acc = acc + c * basis[i]
    return acc


@dataclass(frozen=True)
class ResidueDigits:
    """Digits a_0..a_{k-1} in K[X]/(P) of an element of K[X]/(P^k), so that
    the element equals sum embed(a_j) * P^j."""

    ring: QuotientRing
    digits: tuple

    def __iter__(self):
        return iter(self.digits)

    def __len__(self):
        return len(self.digits)


def to_digits(a):
    """Digit expansion: repeatedly strip the residue of the element, subtract
    its embedded image and divide the representative exactly by P."""
    ring = a.ring
    p, k = ring.p, ring.n
    _, tables = _embedding_tables(p, k)
    residue_ring = ring.residue_ring()
    rep = a.rep
    digits = []
    for j in range(k):
        d = rep % p
        digits.append(residue_ring.element(d))
        if j == k - 1:
            break
        modulus, basis = tables[k - j]
        embedded = _embed_rep(d, basis)
        diff = (rep - embedded) % modulus
        rep = exact_div(diff, p)
    return ResidueDigits(ring=ring, digits=tuple(digits))


def from_digits(d):
    """Evaluate the digit vector: sum embed(a_j) * P^j in K[X]/(P^k)."""
    ring = d.ring
    p, k = ring.p, ring.n
    if len(d.digits) != k:
        raise ValueError(f"expected {k} digits, got {len(d.digits)}")
    _, tables = _embedding_tables(p, k)
    basis = tables[k][1]
    acc = Poly.zero(p.field)
    pj = Poly.one(p.field)
    for digit in d.digits:
        acc = acc + _embed_rep(digit.rep, basis) * pj
        pj = pj * p
    return ring.element(acc)


def digits_mul(d1, d2):
    """Product in (K[X]/(P))[Y]/(Y^k): truncated convolution of digit
    vectors with residue-field coefficient arithmetic."""
    if d1.ring != d2.ring:
        raise ValueError("digit vectors from different rings")
    k = d1.ring.n
    zero = d1.ring.residue_ring().zero()
    out = [zero] * k
    for i, a in enumerate(d1.digits):
        if a.is_zero():
            continue
        for j, b in enumerate(d2.digits):
            if i + j >= k:
                break
            out[i + j] = out[i + j] + a * b
    return ResidueDigits(ring=d1.ring, digits=tuple(out))


def digits_add(d1, d2):
    if d1.ring != d2.ring:
        raise ValueError("digit vectors from different rings")
    return ResidueDigits(ring=d1.ring,
                         digits=tuple(a + b for a, b in zip(d1.digits, d2.digits)))


@dataclass(frozen=True)
class StructureCheckReport:
    passed: bool
    exhaustive: bool
    n_checked: int
    counterexample: object = None

    def __bool__(self):
        return self.passed


_EXHAUSTIVE_LIMIT = 3 ** 6


def structure_isomorphism_check(p, k, assume_irreducible=False, seed=0,
                                n_samples=1000, n_pairs=200):
    """Verify that digit expansion realizes an isomorphism with the
    truncated polynomial ring over the residue field.

    Round-trips every element when the ring has at most 3^6 elements,
    otherwise ``n_samples`` random elements; multiplicativity is checked on
    sampled pairs against truncated convolution.
    """
    ring = _ring(p, k, assume_irreducible)
    hensel_root_series(p, k)  # raises NotSeparable early
    exhaustive = ring.field.is_finite() and ring.order() <= _EXHAUSTIVE_LIMIT
    rng = random.Random(seed)
    if exhaustive:
        test_set = list(ring.elements())
    else:
        test_set = [ring.random_element(rng) for _ in range(n_samples)]
    checked = 0
    for a in test_set:
        if from_digits(to_digits(a)) != a:
            return StructureCheckReport(False, exhaustive, checked, a)
        checked += 1
    for _ in range(n_pairs):
        a = rng.choice(test_set)
        b = rng.choice(test_set)
        lhs = to_digits(a * b)
        rhs = digits_mul(to_digits(a), to_digits(b))
        if lhs != rhs:
            return StructureCheckReport(False, exhaustive, checked, (a, b))
        checked += 1
    return StructureCheckReport(True, exhaustive, checked)
