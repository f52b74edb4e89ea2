"""Independent oracles for constructed morphisms: exact matrices, kernels,
and exhaustive morphism-law checks on small rings.

A morphism between quotient rings is linear over the base field when its
base automorphism is the identity (or acts trivially, as on prime fields);
a genuine Frobenius twist over an extension field is verified over the
prime subfield, where it becomes linear.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import TooLarge, UnsupportedAutomorphism
from .fields import ExtensionField, PrimeField


@dataclass(frozen=True)
class Matrix:
    """Rectangular matrix over one field, row-major."""

    field: object
    rows: tuple

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    def mat_vec(self, v):
        zero = self.field.zero()
        out = []
        for row in self.rows:
            acc = zero
            for a, x in zip(row, v):
                if not a.is_zero() and not x.is_zero():
                    acc = acc + a * x
            out.append(acc)
        return out

    @staticmethod
    def from_columns(field, columns):
        nrows = len(columns[0])
        rows = tuple(tuple(col[r] for col in columns) for r in range(nrows))
        return Matrix(field=field, rows=rows)


def rank(m):
    return len(_row_echelon(m)[1])


def kernel_basis(m):
    """Basis of the null space by exact Gaussian elimination; empty list
    iff the matrix is injective."""
    rows, pivots = _row_echelon(m)
    ncols = m.ncols
    field = m.field
    zero, one = field.zero(), field.one()
    pivot_cols = {c: r for r, c in enumerate(pivots)}
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        v = [zero] * ncols
        v[fc] = one
        # back-substitute pivot coordinates (rows are reduced echelon)
        for c, r in pivot_cols.items():
            v[c] = -rows[r][fc]
        basis.append(v)
    return basis


def _row_echelon(m):
    """Reduced row echelon form; returns (rows, pivot column list)."""
    if isinstance(m.field, PrimeField):
        return _row_echelon_prime(m)
    rows = [list(r) for r in m.rows]
    nrows, ncols = len(rows), m.ncols
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if not rows[i][c].is_zero()),
                     None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c] ** (-1)
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def _row_echelon_prime(m):
    # int fast path for F_p
    p = m.field.p
    field = m.field
    rows = [[x.payload for x in row] for row in m.rows]
    nrows, ncols = len(rows), m.ncols
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    wrapped = [[field.element(x) for x in row] for row in rows]
    return wrapped, pivots


def _sigma_is_trivial(f):
    return f.sigma.is_identity or isinstance(f.source.field, PrimeField)


def morphism_matrix(f):
    """Matrix of the morphism on the monomial basis of the source.

    Linear morphisms give a matrix over the base field K; Frobenius-twisted
    morphisms over an extension of F_p give a matrix over F_p on the basis
    a^j * X^i.
    """
    if _sigma_is_trivial(f):
        return _matrix_linear(f)
    field = f.source.field
    if isinstance(field, ExtensionField) and isinstance(field.base, PrimeField):
        return _matrix_prime_subfield(f)
    raise UnsupportedAutomorphism(
        f"cannot linearize sigma = {f.sigma.label()} over {field}")


def _column_of(f, elem):
    rep = elem.rep
    dim = f.target.dimension
    return [rep.coeff(i) for i in range(dim)]


def _matrix_linear(f):
    field = f.source.field
    fx = f(f.source.gen())
    columns = []
    img = f.target.one()
    for i in range(f.source.dimension):
        if i:
            img = img * fx
        columns.append(_column_of(f, img))
    return Matrix.from_columns(field, columns)


def _matrix_prime_subfield(f):
    ext = f.source.field
    base = ext.base
    gen_img = f(f.source.gen())
    columns = []
    # basis a^j X^i of the source over F_p, X fastest
    alpha = ext.gen()
    for j in range(ext.degree):
        scalar = alpha ** j
        sig_scalar = f.sigma.apply(scalar)
        img = f.target.one() * sig_scalar
        for i in range(f.source.dimension):
            if i:
                img = img * gen_img
            columns.append(_flatten_column(f, img))
    return Matrix.from_columns(base, columns)


def _flatten_column(f, elem):
    ext = f.target.field
    rep = elem.rep
    out = []
    for i in range(f.target.dimension):
        c = rep.coeff(i)
        out.extend(c.payload)  # tuple of prime-field elements
    return out


def certify_isomorphism(f):
    """True iff the morphism is injective with equal source/target
    dimensions (then bijective)."""
    m = morphism_matrix(f)
    return m.nrows == m.ncols and not kernel_basis(m)


def kernel_dimension(f):
    return len(kernel_basis(morphism_matrix(f)))


@dataclass(frozen=True)
class ExhaustiveCheckReport:
    passed: bool
    n_pairs: int
    witness: object = None

    def __bool__(self):
        return self.passed


_EXHAUSTIVE_CAP = 2 ** 10


def exhaustive_morphism_check(f):
    """Brute-force the morphism law f(a+b) = f(a)+f(b), f(ab) = f(a)f(b)
    over all pairs of a small finite source ring."""
    ring = f.source
    if not ring.field.is_finite():
        raise TooLarge(f"cannot enumerate {ring}")
    if ring.order() > _EXHAUSTIVE_CAP:
        raise TooLarge(
            f"{ring} has {ring.order()} elements (cap {_EXHAUSTIVE_CAP})")
    elems = list(ring.elements())
    images = {a: f(a) for a in elems}
    n = 0
    for a, b in itertools.product(elems, repeat=2):
        n += 1
        if images[a] + images[b] != f(a + b):
            return ExhaustiveCheckReport(False, n, (a, b, "add"))
        if images[a] * images[b] != f(a * b):
            return ExhaustiveCheckReport(False, n, (a, b, "mul"))
    return ExhaustiveCheckReport(True, n)
