"""Dense univariate polynomials over any supported exact field.

Coefficients are stored in ascending degree order with no trailing zeros;
the zero polynomial has an empty coefficient tuple and degree -1.
"""

from __future__ import annotations

import itertools
import re

from . import fields
from .errors import (
    DescriptorMismatch,
    DivisionByZero,
    InexactDivision,
    ParseError,
    UnsupportedField,
)


class Poly:
    """Immutable dense polynomial over one field."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        cs = [field.coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (1,))

    @classmethod
    def x(cls, field):
        return cls(field, (0, 1))

    @classmethod
    def const(cls, c):
        return cls(c.field, (c,))

    @classmethod
    def monomial(cls, field, k, c=1):
        return cls(field, (0,) * k + (c,))

    # -- basic queries ------------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        if not self.coeffs:
            raise DivisionByZero("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one()

    def coeff(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero()

    def is_constant(self):
        return len(self.coeffs) <= 1

    # -- arithmetic ---------------------------------------------------------
    @classmethod
    def _from_ints(cls, field, ints):
        # fast constructor for prime fields: payloads already reduced mod p
        while ints and ints[-1] == 0:
            ints.pop()
        obj = object.__new__(cls)
        object.__setattr__(obj, "field", field)
        object.__setattr__(obj, "coeffs",
                           tuple(fields.FieldElement(field, c) for c in ints))
        return obj

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise DescriptorMismatch(
                    f"mixed coefficient fields: {self.field} and {other.field}")
            return other
        if isinstance(other, (int, fields.FieldElement)):
            return Poly(self.field, (other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        if isinstance(self.field, fields.PrimeField):
            p = self.field.p
            out = [c.payload for c in a]
            for i, c in enumerate(b):
                out[i] = (out[i] + c.payload) % p
            return Poly._from_ints(self.field, out)
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Poly.zero(self.field)
        if isinstance(self.field, fields.PrimeField):
            p = self.field.p
            ai_list = [c.payload for c in a]
            bj_list = [c.payload for c in b]
            out = [0] * (len(a) + len(b) - 1)
            for i, ai in enumerate(ai_list):
                if ai:
                    for j, bj in enumerate(bj_list):
                        out[i + j] += ai * bj
            return Poly._from_ints(self.field, [c % p for c in out])
        zero = self.field.zero()
        out = [zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai.is_zero():
                for j, bj in enumerate(b):
                    out[i + j] = out[i + j] + ai * bj
        return Poly(self.field, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise DivisionByZero("polynomial division by zero")
        if isinstance(self.field, fields.PrimeField):
            p = self.field.p
            rem = [c.payload for c in self.coeffs]
            bo = [c.payload for c in o.coeffs]
            db = len(bo) - 1
            inv_lead = pow(bo[-1], -1, p)
            quo = [0] * max(len(rem) - db, 1)
            while len(rem) - 1 >= db:
                top = rem[-1] % p
                if not top:
                    rem.pop()
                    continue
                k = len(rem) - 1 - db
                c = top * inv_lead % p
                quo[k] = c
                for j in range(db):
                    rem[k + j] -= c * bo[j]
                rem.pop()
            return (Poly._from_ints(self.field, quo),
                    Poly._from_ints(self.field, [c % p for c in rem]))
        zero = self.field.zero()
        rem = list(self.coeffs)
        db = o.degree
        inv_lead = o.coeffs[-1] ** (-1)
        quo = [zero] * max(len(rem) - db, 1)
        while len(rem) - 1 >= db:
            if rem[-1].is_zero():
                rem.pop()
                continue
            k = len(rem) - 1 - db
            c = rem[-1] * inv_lead
            quo[k] = c
            for j in range(db):
                rem[k + j] = rem[k + j] - c * o.coeffs[j]
            rem.pop()
        return Poly(self.field, quo), Poly(self.field, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        acc = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def pow_mod(self, e, m):
        """self**e reduced mod m, by square and multiply."""
        acc = Poly.one(self.field) % m
        base = self % m
        while e:
            if e & 1:
                acc = acc * base % m
            base = base * base % m
            e >>= 1
        return acc

    # -- calculus and composition ------------------------------------------
    def derivative(self):
        return Poly(self.field,
                    [i * c for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, v):
        """Horner evaluation at a field element (or any ring value)."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * v + c
        if acc is None:
            return self.field.zero()
        return acc

    def compose(self, q):
        """Naive composition self(q)."""
        acc = Poly.zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def compose_mod(self, q, m):
        """self(q) reduced mod m, Horner with reduction after each step."""
        if m.is_zero():
            raise DivisionByZero("composition modulus is zero")
        acc = Poly.zero(self.field)
        q = q % m
        for c in reversed(self.coeffs):
            acc = (acc * q + c) % m
        return acc

    def map_coeffs(self, fn):
        return Poly(self.field, [fn(c) for c in self.coeffs])

    def monic(self):
        if self.is_zero():
            return self
        inv = self.coeffs[-1] ** (-1)
        return Poly(self.field, [c * inv for c in self.coeffs])

    # -- value semantics ----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == Poly(self.field, (other,))
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({self.field}, {format_poly(self)!r})"


# ---------------------------------------------------------------------------
# gcd machinery

def ext_gcd(a, b):
    """Extended Euclid: returns (g, u, v) with g = u*a + v*b, g monic."""
    if a.is_zero() and b.is_zero():
        raise DivisionByZero("gcd(0, 0) is undefined")
    field = a.field
    r0, r1 = a, b
    u0, u1 = Poly.one(field), Poly.zero(field)
    v0, v1 = Poly.zero(field), Poly.one(field)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    scale = r0.leading() ** (-1)
    return r0 * scale, u0 * scale, v0 * scale


def gcd(a, b):
    """Monic gcd."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def exact_div(a, b):
    """a / b when b divides a exactly; InexactDivision otherwise."""
    q, r = divmod(a, b)
    if not r.is_zero():
        raise InexactDivision(f"{b} does not divide {a}")
    return q


def inverse_mod(a, m):
    """Inverse of a modulo m; raises DivisionByZero if gcd(a, m) != 1."""
    g, u, _ = ext_gcd(a, m)
    if g.degree != 0:
        raise DivisionByZero(f"{a} is not invertible modulo {m}")
    return u % m


def apply_automorphism_to_poly(sigma, a):
    """sigma^X: apply a base-field automorphism coefficient-wise, fixing X."""
    if sigma.is_identity:
        return a
    return a.map_coeffs(sigma.apply)


# ---------------------------------------------------------------------------
# irreducibility over finite fields

def is_irreducible(a):
    """True iff a is irreducible over its (finite) coefficient field.

    Checks gcd(a, X^(q^i) - X) = 1 for i <= deg(a)/2; a polynomial of
    degree d is reducible iff it has an irreducible factor of degree <= d/2.
    """
    field = a.field
    if not field.is_finite():
        raise UnsupportedField(
            f"irreducibility test requires a finite field, got {field}")
    d = a.degree
    if d < 1:
        return False
    if d == 1:
        return True
    q = field.order()
    x = Poly.x(field)
    h = x
    for _ in range(d // 2):
        h = h.pow_mod(q, a)
        if gcd(a, h - x).degree != 0:
            return False
    return True


def enumerate_polys(field, degree, monic=True):
    """All polynomials of exact degree ``degree`` in counting order
    (lexicographic on the ascending coefficient vector, constant term most
    significant)."""
    elems = list(field.elements())
    nonzero = [e for e in elems if not e.is_zero()]
    leads = [field.one()] if monic else nonzero
    for lower in itertools.product(elems, repeat=degree):
        for lead in leads:
            yield Poly(field, lower + (lead,))


def enumerate_irreducibles(field, degree):
    """All monic irreducible polynomials of exact degree over a finite field."""
    if not field.is_finite():
        raise UnsupportedField(
            f"cannot enumerate irreducibles over {field}")
    if degree < 1:
        raise ValueError("degree must be >= 1")
    return [p for p in enumerate_polys(field, degree) if is_irreducible(p)]


# ---------------------------------------------------------------------------
# text syntax: x^3+x+1, x^2-2, (1/2)*x^2+t, ...

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|([-+*/^()]))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r} at position {pos}")
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("int", num))
        elif name is not None:
            tokens.append(("name", name))
        elif op is not None:
            tokens.append(("op", op))
        pos = m.end()
    tokens.append(("end", ""))
    return tokens


class _Parser:
    def __init__(self, field, tokens, var):
        self.field = field
        self.tokens = tokens
        self.i = 0
        self.var = var

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, text = self.next()
        if kind != "op" or text != op:
            raise ParseError(f"expected {op!r}, got {text!r}")

    def parse_expr(self):
        node = self.parse_term()
        while True:
            kind, text = self.peek()
            if kind == "op" and text in "+-":
                self.next()
                rhs = self.parse_term()
                node = node + rhs if text == "+" else node - rhs
            else:
                return node

    def parse_term(self):
        node = self.parse_factor()
        while True:
            kind, text = self.peek()
            if kind == "op" and text in "*/":
                self.next()
                start = self.i
                rhs = self.parse_factor()
                if text == "*":
                    node = node * rhs
                else:
                    spelled = "".join(t for _, t in self.tokens[start:self.i])
                    node = self._divide(node, rhs, spelled)
            else:
                return node

    def _divide(self, a, b, spelled):
        if not b.is_constant():
            raise ParseError(
                f"division by non-constant polynomial '{spelled}' "
                "is not supported")
        if b.is_zero():
            raise ParseError(
                f"cannot divide by '{spelled}': it is zero over {self.field}")
        try:
            inv = b.coeffs[0] ** (-1)
        except DivisionByZero:
            raise ParseError(
                f"'{spelled}' is not invertible over {self.field}") from None
        return a * inv

    def parse_factor(self):
        kind, text = self.peek()
        if kind == "op" and text in "+-":
            self.next()
            node = self.parse_factor()
            return node if text == "+" else -node
        return self.parse_power()

    def parse_power(self):
        node = self.parse_atom()
        kind, text = self.peek()
        if kind == "op" and text == "^":
            self.next()
            kind, text = self.next()
            if kind != "int":
                raise ParseError(f"expected integer exponent, got {text!r}")
            return node ** int(text)
        return node

    def parse_atom(self):
        kind, text = self.next()
        if kind == "int":
            try:
                return Poly(self.field, (int(text),))
            except DivisionByZero:
                raise ParseError(f"invalid coefficient '{text}' over {self.field}")
        if kind == "name":
            if text == self.var:
                return Poly.x(self.field)
            gen = self._field_generator(text)
            if gen is not None:
                return Poly.const(gen)
            raise ParseError(f"unknown symbol {text!r} over {self.field}")
        if kind == "op" and text == "(":
            node = self.parse_expr()
            self.expect_op(")")
            return node
        raise ParseError(f"unexpected token {text!r}")

    def _field_generator(self, name):
        f = self.field
        if isinstance(f, fields.RationalFunctionField) and name == f.var:
            return f.gen()
        if isinstance(f, fields.ExtensionField) and name == f.gen_name:
            return f.gen()
        return None


def parse_poly(field, text, var="x"):
    """Parse a polynomial expression over ``field`` in the variable ``var``."""
    if not text.strip():
        raise ParseError("empty polynomial expression")
    parser = _Parser(field, _tokenize(text), var)
    node = parser.parse_expr()
    kind, tok = parser.peek()
    if kind != "end":
        raise ParseError(f"trailing input starting at {tok!r}")
    return node


def parse_element(field, text):
    """Parse a field element written in polynomial syntax."""
    p = parse_poly(field, text, var="\x00never")
    return p.coeff(0)


def format_poly(a, var="x"):
    """Deterministic text form, highest degree first, ``0`` for zero."""
    if a.is_zero():
        return "0"
    parts = []
    for i in range(a.degree, -1, -1):
        c = a.coeff(i)
        if c.is_zero():
            continue
        cs = str(c)
        if i == 0:
            term = f"({cs})" if _needs_parens(cs) else cs
            parts.append(term)
            continue
        xs = var if i == 1 else f"{var}^{i}"
        if cs == "1":
            term = xs
        elif cs == "-1":
            term = f"-{xs}"
        else:
            if _needs_parens(cs):
                cs = f"({cs})"
            term = f"{cs}*{xs}"
        parts.append(term)
    out = parts[0]
    for t in parts[1:]:
        out += t if t.startswith("-") else "+" + t
    return out


def _needs_parens(s):
    return "+" in s[1:] or "-" in s[1:] or "/" in s or "*" in s
