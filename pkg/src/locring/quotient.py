"""Quotient rings K[X]/(P^n), their elements, and X-image morphisms.

A morphism between two such rings is stored as the pair (base automorphism,
image of the class of X); its action on a representative r is
``sigma^X(r)(q_image) mod target modulus``.  Well-definedness is certified
eagerly at construction time.
"""

from __future__ import annotations

import json

from . import fields as _fields
from .errors import (
    BadTarget,
    NotAUnit,
    NotIrreducible,
    NotMonic,
    NotWellDefined,
    RingMismatch,
    UnsupportedField,
)
from .poly import (
    Poly,
    apply_automorphism_to_poly,
    ext_gcd,
    format_poly,
    is_irreducible,
    parse_poly,
)


class QuotientRing:
    """K[X]/(P^n) for P monic irreducible, n >= 1.

    Irreducibility is verified over finite fields and caller-asserted
    (``assume_irreducible=True``) over Q and F_p(t).
    """

    __slots__ = ("field", "p", "n", "modulus")

    def __init__(self, p, n, assume_irreducible=False):
        if p.degree < 1:
            raise NotIrreducible("modulus base must have degree >= 1")
        if not p.is_monic():
            raise NotMonic(f"{p} is not monic")
        if n < 1:
            raise ValueError("power must be >= 1")
        if p.field.is_finite():
            if not assume_irreducible and not is_irreducible(p):
                raise NotIrreducible(f"{p} is reducible over {p.field}")
        elif not assume_irreducible:
            raise UnsupportedField(
                f"cannot verify irreducibility over {p.field}; "
                "pass assume_irreducible=True")
        object.__setattr__(self, "field", p.field)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "modulus", p ** n)

    def __setattr__(self, name, value):
        raise AttributeError("QuotientRing is immutable")

    @property
    def dimension(self):
        """Dimension over the base field."""
        return self.n * self.p.degree

    def element(self, rep):
        """Class of a polynomial (or int, or field element)."""
        if isinstance(rep, (int, _fields.FieldElement)):
            rep = Poly(self.field, (rep,))
        if rep.field != self.field:
            raise RingMismatch("representative over the wrong field")
        return QuotientElement(self, rep % self.modulus)

    def zero(self):
        return self.element(Poly.zero(self.field))

    def one(self):
        return self.element(Poly.one(self.field))

    def gen(self):
        """The class of X."""
        return self.element(Poly.x(self.field))

    def residue_ring(self):
        """K[X]/(P)."""
        if self.n == 1:
            return self
        return QuotientRing(self.p, 1, assume_irreducible=True)

    def at_power(self, m):
        """K[X]/(P^m), same P."""
        if m == self.n:
            return self
        return QuotientRing(self.p, m, assume_irreducible=True)

    def order(self):
        return self.field.order() ** self.dimension

    def elements(self):
        """All elements (finite fields only), deterministic order."""
        import itertools
        elems = list(self.field.elements())
        for tup in itertools.product(elems, repeat=self.dimension):
            yield self.element(Poly(self.field, tup))

    def random_element(self, rng):
        coeffs = [self.field.random_element(rng) for _ in range(self.dimension)]
        return self.element(Poly(self.field, coeffs))

    def __eq__(self, other):
        return (isinstance(other, QuotientRing)
                and other.p == self.p and other.n == self.n)

    def __hash__(self):
        return hash((self.p, self.n))

    def __repr__(self):
        return f"{self.field}[x]/(({format_poly(self.p)})^{self.n})"


class QuotientElement:
    """Element of a QuotientRing, representative reduced mod the modulus."""

    __slots__ = ("ring", "rep")

    def __init__(self, ring, rep):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rep", rep)

    def __setattr__(self, name, value):
        raise AttributeError("QuotientElement is immutable")

    def _coerce(self, other):
        if isinstance(other, QuotientElement):
            if other.ring != self.ring:
                raise RingMismatch(
                    f"elements of {self.ring} and {other.ring} combined")
            return other
        if isinstance(other, (int, _fields.FieldElement, Poly)):
            return self.ring.element(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.ring.element(self.rep + o.rep)

    __radd__ = __add__

    def __neg__(self):
        return self.ring.element(-self.rep)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.ring.element(self.rep - o.rep)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.ring.element(self.rep * o.rep)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        return self.ring.element(self.rep.pow_mod(e, self.ring.modulus))

    def is_zero(self):
        return self.rep.is_zero()

    def is_unit(self):
        """Units of the local ring are exactly the classes coprime to P."""
        return not (self.rep % self.ring.p).is_zero()

    def invert(self):
        g, u, _ = ext_gcd(self.rep, self.ring.modulus)
        if g.degree != 0:
            raise NotAUnit(f"{self} is not a unit")
        return self.ring.element(u)

    def project(self, m):
        """Image in K[X]/(P^m) under the canonical projection, 1 <= m <= n."""
        if not 1 <= m <= self.ring.n:
            raise BadTarget(f"cannot project level {self.ring.n} to level {m}")
        target = self.ring.at_power(m)
        return target.element(self.rep % target.modulus)

    def __eq__(self, other):
        if isinstance(other, QuotientElement):
            return self.ring == other.ring and self.rep == other.rep
        if isinstance(other, (int, Poly)):
            o = self._coerce(other)
            return o is not None and self == o
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.rep))

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        return format_poly(self.rep)

    def __repr__(self):
        return f"<{self} in {self.ring}>"


class StabilizingMorphism:
    """Ring morphism between quotient rings given by (sigma, image of X).

    The constructor verifies the well-definedness certificate
    ``sigma^X(P1^n1)(q) = 0 mod P2^n2`` and raises :class:`NotWellDefined`
    with the nonzero residue as witness when it fails.

    ``s_cert`` optionally carries the exact cofactor S with
    ``sigma^X(P1) o Q = S * P2`` for level-1 morphisms.
    """

    __slots__ = ("source", "target", "sigma", "q_image", "s_cert")

    def __init__(self, source, target, sigma, q, s_cert=None):
        if q.field != target.field:
            raise RingMismatch("X-image over the wrong field")
        q = q % target.modulus
        shifted = apply_automorphism_to_poly(sigma, source.modulus)
        residue = shifted.compose_mod(q, target.modulus)
        if not residue.is_zero():
            raise NotWellDefined(
                f"x -> {format_poly(q)} does not map ({format_poly(source.p)})^"
                f"{source.n} into ({format_poly(target.p)})^{target.n}; "
                f"residue {format_poly(residue)}",
                witness=residue)
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "q_image", q)
        object.__setattr__(self, "s_cert", s_cert)

    def __setattr__(self, name, value):
        raise AttributeError("StabilizingMorphism is immutable")

    @classmethod
    def identity(cls, ring):
        return cls(ring, ring, _fields.IDENTITY, Poly.x(ring.field))

    def is_identity(self):
        return (self.source == self.target and self.sigma.is_identity
                and self.q_image == Poly.x(self.target.field))

    def __call__(self, a):
        if a.ring != self.source:
            raise RingMismatch(f"{a!r} is not in {self.source}")
        rep = apply_automorphism_to_poly(self.sigma, a.rep)
        return self.target.element(
            rep.compose_mod(self.q_image, self.target.modulus))

    def compose(self, other):
        """self o other (apply ``other`` first)."""
        if other.target != self.source:
            raise RingMismatch("morphism composition: target/source mismatch")
        q = apply_automorphism_to_poly(self.sigma, other.q_image)
        q = q.compose_mod(self.q_image, self.target.modulus)
        return StabilizingMorphism(other.source, self.target,
                                   self.sigma.compose(other.sigma), q)

    def __eq__(self, other):
        return (isinstance(other, StabilizingMorphism)
                and other.source == self.source
                and other.target == self.target
                and other.sigma == self.sigma
                and other.q_image == self.q_image)

    def __hash__(self):
        return hash((self.source, self.target, self.sigma, self.q_image))

    def __repr__(self):
        return (f"<morphism {self.source} -> {self.target}: "
                f"x -> {format_poly(self.q_image)}, sigma={self.sigma.label()}>")

    # -- JSON wire format ---------------------------------------------------
    def to_dict(self):
        return {
            "source": _ring_to_dict(self.source),
            "target": _ring_to_dict(self.target),
            "sigma": self.sigma.label(),
            "q_image": format_poly(self.q_image),
        }

    def to_json(self, indent=None):
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    @classmethod
    def from_dict(cls, data):
        source = _ring_from_dict(data["source"])
        target = _ring_from_dict(data["target"])
        sigma = _fields.FieldAutomorphism.parse(data["sigma"])
        q = parse_poly(target.field, data["q_image"])
        return cls(source, target, sigma, q)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


def _ring_to_dict(ring):
    return {"field": _fields.format_field(ring.field),
            "p": format_poly(ring.p),
            "n": ring.n}


def _ring_from_dict(data):
    field = _fields.parse_field(data["field"])
    p = parse_poly(field, data["p"])
    # serialized rings originate from validated rings; over infinite fields
    # irreducibility remains caller-asserted
    return QuotientRing(p, int(data["n"]),
                        assume_irreducible=not field.is_finite())


def make_ring(p, n, assume_irreducible=False):
    """Build K[X]/(P^n); verifies monicity and (finite fields) irreducibility."""
    return QuotientRing(p, n, assume_irreducible=assume_irreducible)


def make_morphism(source, target, sigma, q, s_cert=None):
    """Build a morphism given by an X-image; certifies well-definedness."""
    return StabilizingMorphism(source, target, sigma, q, s_cert=s_cert)
