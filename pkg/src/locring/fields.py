"""Exact base fields: Q, F_p, F_p(t) and simple extensions, with automorphisms.

Every element is stored in a canonical reduced form, so equality of elements
is equality of payloads.  Supported fields:

  * ``Rationals()``            -- payload: ``fractions.Fraction``
  * ``PrimeField(p)``          -- payload: int in ``[0, p)``
  * ``RationalFunctionField(p, var)`` -- payload: pair of int-coefficient
    polynomial tuples (numerator, denominator), denominator monic, coprime
  * ``ExtensionField(base, min_coeffs, gen)`` -- payload: tuple of base-field
    elements of length ``deg(min poly)``, i.e. the reduced representative

Fields are immutable and hashable; elements are immutable value objects.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import (
    DescriptorMismatch,
    DivisionByZero,
    UnsupportedAutomorphism,
    UnsupportedField,
)


# ---------------------------------------------------------------------------
# small integer-coefficient polynomial helpers mod p, used for F_p(t) payloads
# (tuples of ints in [0, p), ascending degree, no trailing zeros, () is zero)

def _ip_trim(c):
    i = len(c)
    while i and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _ip_add(a, b, p):
    n = max(len(a), len(b))
    return _ip_trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
                     for i in range(n)])


def _ip_neg(a, p):
    return tuple((-c) % p for c in a)


def _ip_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ip_trim(out)


def _ip_divmod(a, b, p):
    if not b:
        raise DivisionByZero("polynomial division by zero")
    inv_lead = pow(b[-1], -1, p)
    rem = list(a)
    quo = [0] * max(len(a) - len(b) + 1, 0)
    while len(rem) >= len(b):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) < len(b):
            break
        k = len(rem) - len(b)
        c = rem[-1] * inv_lead % p
        quo[k] = c
        for j in range(len(b)):
            rem[k + j] = (rem[k + j] - c * b[j]) % p
        rem.pop()
    return _ip_trim(quo), _ip_trim(rem)


def _ip_monic(a, p):
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return tuple(c * inv % p for c in a)


def _ip_gcd(a, b, p):
    while b:
        a, b = b, _ip_divmod(a, b, p)[1]
    return _ip_monic(a, p)


def _ip_str(a, var):
    if not a:
        return "0"
    parts = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if c == 0:
            continue
        if i == 0:
            term = str(c)
        else:
            xs = var if i == 1 else f"{var}^{i}"
            term = xs if c == 1 else f"{c}*{xs}"
        parts.append(term)
    return "+".join(parts)


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# fields

class Field:
    """Abstract base: exact arithmetic on canonical payloads."""

    char = None

    # subclasses implement payload-level ops
    def _add(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _inv(self, a):
        raise NotImplementedError

    def _canon(self, a):
        raise NotImplementedError

    def _from_int(self, k):
        raise NotImplementedError

    def _is_zero(self, a):
        raise NotImplementedError

    def format_payload(self, a):
        raise NotImplementedError

    def is_finite(self):
        return False

    def order(self):
        raise UnsupportedField(f"{self} is not a finite field")

    def elements(self):
        raise UnsupportedField(f"cannot enumerate elements of {self}")

    def random_payload(self, rng):
        raise NotImplementedError

    # element-level convenience
    def element(self, payload):
        return FieldElement(self, self._canon(payload))

    def from_int(self, k):
        return FieldElement(self, self._from_int(k))

    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def random_element(self, rng):
        return FieldElement(self, self.random_payload(rng))

    def coerce(self, v):
        if isinstance(v, FieldElement):
            if v.field != self:
                raise DescriptorMismatch(f"element of {v.field} used in {self}")
            return v
        if isinstance(v, int):
            return self.from_int(v)
        if isinstance(v, Fraction) and isinstance(self, Rationals):
            return self.element(v)
        raise DescriptorMismatch(f"cannot interpret {v!r} as an element of {self}")

    def __ne__(self, other):
        return not self.__eq__(other)


class Rationals(Field):
    """The field Q, elements are Fractions."""

    char = 0

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _inv(self, a):
        if a == 0:
            raise DivisionByZero("1/0 in Q")
        return 1 / a

    def _canon(self, a):
        return Fraction(a)

    def _from_int(self, k):
        return Fraction(k)

    def _is_zero(self, a):
        return a == 0

    def format_payload(self, a):
        return str(a)

    def random_payload(self, rng):
        return Fraction(rng.randint(-9, 9), rng.randint(1, 9))

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField(Field):
    """F_p, elements are residues in [0, p)."""

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.char = p

    def _add(self, a, b):
        return (a + b) % self.p

    def _neg(self, a):
        return (-a) % self.p

    def _mul(self, a, b):
        return a * b % self.p

    def _inv(self, a):
        if a == 0:
            raise DivisionByZero(f"1/0 in F{self.p}")
        return pow(a, -1, self.p)

    def _canon(self, a):
        return a % self.p

    def _from_int(self, k):
        return k % self.p

    def _is_zero(self, a):
        return a == 0

    def format_payload(self, a):
        return str(a)

    def is_finite(self):
        return True

    def order(self):
        return self.p

    def elements(self):
        for a in range(self.p):
            yield FieldElement(self, a)

    def random_payload(self, rng):
        return rng.randrange(self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"F{self.p}"


class RationalFunctionField(Field):
    """F_p(t): reduced ratios of polynomials over F_p with monic denominator."""

    def __init__(self, p, var="t"):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.var = var
        self.char = p

    def gen(self):
        """The element t."""
        return FieldElement(self, ((0, 1), (1,)))

    def _reduce(self, num, den):
        p = self.p
        if not den:
            raise DivisionByZero(f"zero denominator in {self}")
        if not num:
            return ((), (1,))
        g = _ip_gcd(num, den, p)
        if len(g) > 1:
            num = _ip_divmod(num, g, p)[0]
            den = _ip_divmod(den, g, p)[0]
        inv = pow(den[-1], -1, p)
        num = tuple(c * inv % p for c in num)
        den = _ip_monic(den, p)
        return (num, den)

    def _add(self, a, b):
        p = self.p
        num = _ip_add(_ip_mul(a[0], b[1], p), _ip_mul(b[0], a[1], p), p)
        return self._reduce(num, _ip_mul(a[1], b[1], p))

    def _neg(self, a):
        return (_ip_neg(a[0], self.p), a[1])

    def _mul(self, a, b):
        p = self.p
        return self._reduce(_ip_mul(a[0], b[0], p), _ip_mul(a[1], b[1], p))

    def _inv(self, a):
        if not a[0]:
            raise DivisionByZero(f"1/0 in {self}")
        return self._reduce(a[1], a[0])

    def _canon(self, a):
        num, den = a
        return self._reduce(_ip_trim(tuple(c % self.p for c in num)),
                            _ip_trim(tuple(c % self.p for c in den)))

    def _from_int(self, k):
        k %= self.p
        return ((k,) if k else (), (1,))

    def _is_zero(self, a):
        return not a[0]

    def format_payload(self, a):
        num, den = a
        ns = _ip_str(num, self.var)
        if den == (1,):
            return ns
        ds = _ip_str(den, self.var)
        if "+" in ns or "*" in ns:
            ns = f"({ns})"
        if "+" in ds or "*" in ds:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def random_payload(self, rng):
        num = _ip_trim(tuple(rng.randrange(self.p) for _ in range(rng.randint(1, 3))))
        den = ()
        while not den:
            den = _ip_trim(tuple(rng.randrange(self.p) for _ in range(rng.randint(1, 3))))
        return self._reduce(num, den)

    def __eq__(self, other):
        return (isinstance(other, RationalFunctionField)
                and other.p == self.p and other.var == self.var)

    def __hash__(self):
        return hash(("Fp(t)", self.p, self.var))

    def __repr__(self):
        return f"F{self.p}({self.var})"


class ExtensionField(Field):
    """Simple extension base[a]/(m(a)), m monic irreducible of degree >= 2.

    Irreducibility of the minimal polynomial is verified over prime fields
    and caller-asserted over Q.  Only PrimeField and Rationals bases are
    supported.
    """

    def __init__(self, base, min_coeffs, gen="a", assume_irreducible=False):
        if not isinstance(base, (PrimeField, Rationals)):
            raise UnsupportedField(f"extensions of {base} are not supported")
        min_coeffs = tuple(base.coerce(c) for c in min_coeffs)
        if len(min_coeffs) < 3:
            raise ValueError("minimal polynomial must have degree >= 2")
        if min_coeffs[-1] != base.one():
            raise ValueError("minimal polynomial must be monic")
        self.base = base
        self.min_coeffs = min_coeffs
        self.degree = len(min_coeffs) - 1
        self.gen_name = gen
        self.char = base.char
        if isinstance(base, PrimeField):
            from .poly import Poly, is_irreducible
            if not is_irreducible(Poly(base, min_coeffs)):
                from .errors import NotIrreducible
                raise NotIrreducible(
                    f"minimal polynomial is reducible over {base}")
        elif not assume_irreducible:
            raise UnsupportedField(
                "irreducibility over Q cannot be verified; "
                "pass assume_irreducible=True")

    def gen(self):
        """The class of the adjoined root."""
        d = self.degree
        payload = tuple(self.base.one() if i == 1 else self.base.zero()
                        for i in range(d))
        return FieldElement(self, payload)

    def from_base(self, c):
        c = self.base.coerce(c)
        return FieldElement(self, (c,) + (self.base.zero(),) * (self.degree - 1))

    # coefficient-list helpers over the base field (ascending, fixed tasks)
    def _reduce_list(self, coeffs):
        # reduce a list of base elements mod the minimal polynomial
        d = self.degree
        coeffs = list(coeffs)
        for i in range(len(coeffs) - 1, d - 1, -1):
            c = coeffs[i]
            if not self.base._is_zero(c.payload):
                for j in range(d + 1):
                    coeffs[i - d + j] = coeffs[i - d + j] - c * self.min_coeffs[j]
        coeffs = coeffs[:d]
        while len(coeffs) < d:
            coeffs.append(self.base.zero())
        return tuple(coeffs)

    def _add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def _neg(self, a):
        return tuple(-x for x in a)

    def _mul(self, a, b):
        d = self.degree
        zero = self.base.zero()
        out = [zero] * (2 * d - 1)
        for i, ai in enumerate(a):
            if not self.base._is_zero(ai.payload):
                for j, bj in enumerate(b):
                    out[i + j] = out[i + j] + ai * bj
        return self._reduce_list(out)

    def _inv(self, a):
        # extended Euclid between the representative and the minimal polynomial
        zero = self.base.zero()
        one = self.base.one()

        def trim(c):
            i = len(c)
            while i and self.base._is_zero(c[i - 1].payload):
                i -= 1
            return list(c[:i])

        def pdivmod(x, y):
            q = [zero] * max(len(x) - len(y) + 1, 1)
            r = list(x)
            inv_lead = y[-1] ** (-1)
            while len(r) >= len(y):
                r = trim(r)
                if len(r) < len(y):
                    break
                k = len(r) - len(y)
                c = r[-1] * inv_lead
                q[k] = c
                for j in range(len(y)):
                    r[k + j] = r[k + j] - c * y[j]
                r = r[:-1]
            return trim(q), trim(r)

        r0 = trim(list(self.min_coeffs))
        r1 = trim(list(a))
        if not r1:
            raise DivisionByZero(f"1/0 in {self}")
        s0, s1 = [], [one]
        while r1:
            q, r = pdivmod(r0, r1)
            # s_new = s0 - q*s1
            prod = [zero] * (len(q) + len(s1) if s1 else 1)
            for i, qi in enumerate(q):
                for j, sj in enumerate(s1):
                    prod[i + j] = prod[i + j] + qi * sj
            n = max(len(s0), len(prod))
            s_new = [(s0[i] if i < len(s0) else zero) -
                     (prod[i] if i < len(prod) else zero) for i in range(n)]
            r0, r1 = r1, r
            s0, s1 = s1, trim(s_new)
        # r0 = gcd = constant (minimal polynomial irreducible); scale s0 by 1/r0
        scale = r0[0] ** (-1)
        inv = [c * scale for c in s0]
        return self._reduce_list(inv)

    def _canon(self, a):
        return self._reduce_list([self.base.coerce(c) for c in a])

    def _from_int(self, k):
        return (self.base.from_int(k),) + (self.base.zero(),) * (self.degree - 1)

    def _is_zero(self, a):
        return all(self.base._is_zero(c.payload) for c in a)

    def format_payload(self, a):
        parts = []
        for i in range(self.degree - 1, -1, -1):
            c = a[i]
            if self.base._is_zero(c.payload):
                continue
            cs = self.base.format_payload(c.payload)
            if i == 0:
                parts.append(cs)
                continue
            xs = self.gen_name if i == 1 else f"{self.gen_name}^{i}"
            if cs == "1":
                parts.append(xs)
            elif cs == "-1":
                parts.append(f"-{xs}")
            else:
                if "+" in cs[1:] or "-" in cs[1:] or "/" in cs:
                    cs = f"({cs})"
                parts.append(f"{cs}*{xs}")
        if not parts:
            return "0"
        out = parts[0]
        for t in parts[1:]:
            out += t if t.startswith("-") else "+" + t
        return out

    def is_finite(self):
        return self.base.is_finite()

    def order(self):
        return self.base.order() ** self.degree

    def elements(self):
        base_elems = list(self.base.elements())
        for tup in itertools.product(base_elems, repeat=self.degree):
            yield FieldElement(self, tup)

    def random_payload(self, rng):
        return tuple(self.base.random_element(rng) for _ in range(self.degree))

    def __eq__(self, other):
        return (isinstance(other, ExtensionField)
                and other.base == self.base
                and other.min_coeffs == self.min_coeffs)

    def __hash__(self):
        return hash(("ext", self.base, self.min_coeffs))

    def __repr__(self):
        from .poly import Poly
        m = Poly(self.base, self.min_coeffs)
        return f"{self.base}[x]/({m})"


# ---------------------------------------------------------------------------
# elements

class FieldElement:
    """Immutable element of a :class:`Field`, payload always canonical."""

    __slots__ = ("field", "payload")

    def __init__(self, field, payload):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "payload", payload)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def is_zero(self):
        return self.field._is_zero(self.payload)

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise DescriptorMismatch(
                    f"mixed fields: {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.coerce(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._add(self.payload, o.payload))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.payload))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field,
                            self.field._add(self.payload, self.field._neg(o.payload)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.payload, o.payload))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o ** (-1)

    def __rtruediv__(self, other):
        return self.field.coerce(other) / self

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        f = self.field
        if e < 0:
            base = f._inv(self.payload)
            e = -e
        else:
            base = self.payload
        if isinstance(f, PrimeField):
            return FieldElement(f, pow(base, e, f.p))
        acc = f._from_int(1)
        while e:
            if e & 1:
                acc = f._mul(acc, base)
            base = f._mul(base, base)
            e >>= 1
        return FieldElement(f, acc)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.payload == other.payload
        if isinstance(other, (int, Fraction)):
            try:
                return self == self.field.coerce(other)
            except DescriptorMismatch:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.payload))

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        return self.field.format_payload(self.payload)

    def __repr__(self):
        return f"<{self} in {self.field}>"


# ---------------------------------------------------------------------------
# automorphisms

class FieldAutomorphism:
    """Identity or a positive power of the Frobenius x -> x^p.

    Frobenius powers are only valid on finite fields (F_p and simple
    extensions of F_p); applying one elsewhere raises
    :class:`UnsupportedAutomorphism`.
    """

    __slots__ = ("power",)

    def __init__(self, power=0):
        if power < 0:
            raise ValueError("Frobenius power must be >= 0")
        object.__setattr__(self, "power", power)

    def __setattr__(self, name, value):
        raise AttributeError("FieldAutomorphism is immutable")

    @property
    def is_identity(self):
        return self.power == 0

    def apply(self, a):
        if self.power == 0:
            return a
        f = a.field
        if not f.is_finite():
            raise UnsupportedAutomorphism(
                f"Frobenius is not an automorphism of {f}")
        p = f.char
        if isinstance(f, PrimeField):
            return a  # x^p = x on F_p
        m = f.degree
        e = self.power % m
        if e == 0:
            return a
        return a ** (p ** e)

    def compose(self, other):
        """self o other."""
        return FieldAutomorphism(self.power + other.power)

    def inverse_on(self, field):
        """The inverse automorphism of the given finite field."""
        if self.power == 0:
            return IDENTITY
        if not field.is_finite():
            raise UnsupportedAutomorphism(
                f"Frobenius is not an automorphism of {field}")
        m = field.degree if isinstance(field, ExtensionField) else 1
        e = self.power % m
        return FieldAutomorphism((m - e) % m) if e else IDENTITY

    def label(self):
        return "id" if self.power == 0 else f"frob^{self.power}"

    @staticmethod
    def parse(text):
        text = text.strip()
        if text in ("id", "identity"):
            return IDENTITY
        if text == "frob":
            return FieldAutomorphism(1)
        if text.startswith("frob^"):
            return FieldAutomorphism(int(text[5:]))
        from .errors import ParseError
        raise ParseError(f"unknown automorphism {text!r} (expected id or frob^e)")

    def __eq__(self, other):
        return isinstance(other, FieldAutomorphism) and other.power == self.power

    def __hash__(self):
        return hash(("auto", self.power))

    def __repr__(self):
        return self.label()


IDENTITY = FieldAutomorphism(0)


def frobenius(e=1):
    if e < 1:
        raise ValueError("Frobenius power must be >= 1")
    return FieldAutomorphism(e)


def apply_automorphism(sigma, a):
    """Apply a field automorphism to one element."""
    return sigma.apply(a)


# ---------------------------------------------------------------------------
# descriptor text syntax: Q | F2 | F3(t) | F2[x]/(x^2+x+1)

def parse_field(text):
    """Parse a field descriptor such as ``Q``, ``F2``, ``F3(t)`` or
    ``F2[x]/(x^2+x+1)``."""
    from .errors import ParseError
    s = text.strip()
    if s == "Q":
        return Rationals()
    if not s.startswith("F"):
        raise ParseError(f"unknown field descriptor {text!r}")
    rest = s[1:]
    i = 0
    while i < len(rest) and rest[i].isdigit():
        i += 1
    if i == 0:
        raise ParseError(f"missing characteristic in field descriptor {text!r}")
    p = int(rest[:i])
    tail = rest[i:]
    if not tail:
        return PrimeField(p)
    if tail.startswith("(") and tail.endswith(")"):
        var = tail[1:-1].strip()
        if not var.isidentifier():
            raise ParseError(f"bad function-field variable {tail!r}")
        return RationalFunctionField(p, var)
    if tail.startswith("[") :
        # F2[x]/(x^2+x+1)
        close = tail.find("]")
        if close < 0 or not tail[close + 1:].startswith("/(") or not tail.endswith(")"):
            raise ParseError(f"malformed extension descriptor {text!r}")
        var = tail[1:close].strip()
        body = tail[close + 3:-1]
        from .poly import parse_poly
        base = PrimeField(p)
        m = parse_poly(base, body, var=var)
        return ExtensionField(base, m.coeffs)
    raise ParseError(f"unknown field descriptor {text!r}")


def format_field(field):
    """Inverse of :func:`parse_field` for the supported descriptors."""
    if isinstance(field, Rationals):
        return "Q"
    if isinstance(field, PrimeField):
        return f"F{field.p}"
    if isinstance(field, RationalFunctionField):
        return f"F{field.p}({field.var})"
    if isinstance(field, ExtensionField):
        from .poly import Poly, format_poly
        m = Poly(field.base, field.min_coeffs)
        return f"{format_field(field.base)}[x]/({format_poly(m, var='x')})"
    raise UnsupportedField(f"cannot format {field!r}")
