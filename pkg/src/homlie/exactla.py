"""Exact linear algebra over the rationals.

Everything here works with :class:`fractions.Fraction` entries.  Vectors
are plain tuples of fractions; :class:`Matrix` is a small immutable dense
matrix; :class:`Subspace` keeps its basis in reduced row-echelon form so
that two subspaces are equal exactly when their bases are equal.

>>> a = Subspace.span([(1, 0, 0), (0, 1, 0)])
>>> b = Subspace.span([(1, 1, 1), (0, 0, 1)])
>>> subspace_intersect(a, b).basis
((Fraction(1, 1), Fraction(1, 1), Fraction(0, 1)),)
"""

from fractions import Fraction
from numbers import Rational

from .errors import DimensionMismatch

ZERO = Fraction(0)
ONE = Fraction(1)


# -- scalars and vectors -----------------------------------------------------

def as_fraction(x):
    """Coerce ``x`` to a Fraction.

    Integers, Fractions and strings such as ``"-3/4"`` are accepted.  Floats
    are refused: silently importing a binary approximation would defeat the
    point of exact arithmetic.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot use {type(x).__name__} {x!r} as an exact rational")


def format_fraction(x):
    """``"p/q"``, or ``"p"`` when the denominator is one."""
    x = as_fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def as_vector(values, dim=None):
    v = tuple(as_fraction(x) for x in values)
    if dim is not None and len(v) != dim:
        raise DimensionMismatch(f"expected a vector of length {dim}, got {len(v)}")
    return v


def zero_vector(n):
    return (ZERO,) * n


def unit_vector(n, i):
    v = [ZERO] * n
    v[i] = ONE
    return tuple(v)


def is_zero(v):
    return not any(v)


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v):
    return tuple(c * a for a in v)


def combine(coeffs, vectors, dim):
    """The linear combination ``sum(c * v)`` as a tuple of length ``dim``."""
    out = [ZERO] * dim
    for c, v in zip(coeffs, vectors):
        if not c:
            continue
        for k, a in enumerate(v):
            if a:
                out[k] += c * a
    return tuple(out)


def outer(u, v):
    """Flattened outer product: index ``i * len(v) + j`` holds ``u[i] * v[j]``."""
    n = len(v)
    out = [ZERO] * (len(u) * n)
    for i, a in enumerate(u):
        if not a:
            continue
        base = i * n
        for j, b in enumerate(v):
            if b:
                out[base + j] = a * b
    return out


# -- matrices ----------------------------------------------------------------

class Matrix:
    """Immutable dense matrix with Fraction entries (row-major)."""

    __slots__ = ("_rows", "nrows", "ncols", "_hash")

    def __init__(self, rows, ncols=None):
        rows = tuple(as_vector(r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatch("ragged matrix rows")
        self._rows = rows
        self.nrows = len(rows)
        self.ncols = ncols
        self._hash = None

    @classmethod
    def _raw(cls, rows, ncols):
        m = cls.__new__(cls)
        m._rows = rows
        m.nrows = len(rows)
        m.ncols = ncols
        m._hash = None
        return m

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls._raw(tuple(zero_vector(ncols) for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, n):
        return cls._raw(tuple(unit_vector(n, i) for i in range(n)), n)

    @classmethod
    def from_columns(cls, columns, nrows):
        columns = [as_vector(c, nrows) for c in columns]
        rows = tuple(tuple(c[i] for c in columns) for i in range(nrows))
        return cls._raw(rows, len(columns))

    @property
    def rows(self):
        return self._rows

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def row(self, i):
        return self._rows[i]

    def column(self, j):
        return tuple(r[j] for r in self._rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self):
        return Matrix._raw(tuple(self.columns()), self.nrows)

    T = property(transpose)

    def apply(self, v):
        if len(v) != self.ncols:
            raise DimensionMismatch(f"cannot apply a {self.shape} matrix to a vector of length {len(v)}")
        nz = [(j, a) for j, a in enumerate(v) if a]
        return tuple(sum((r[j] * a for j, a in nz), ZERO) for r in self._rows)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
            cols = other.columns()
            rows = tuple(tuple(self._dot_row(r, c) for c in cols) for r in self._rows)
            return Matrix._raw(rows, other.ncols)
        return self.apply(other)

    @staticmethod
    def _dot_row(r, c):
        s = ZERO
        for a, b in zip(r, c):
            if a and b:
                s += a * b
        return s

    def __add__(self, other):
        self._check_same(other)
        return Matrix._raw(tuple(vadd(a, b) for a, b in zip(self._rows, other._rows)), self.ncols)

    def __sub__(self, other):
        self._check_same(other)
        return Matrix._raw(tuple(vsub(a, b) for a, b in zip(self._rows, other._rows)), self.ncols)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        c = as_fraction(c)
        return Matrix._raw(tuple(vscale(c, r) for r in self._rows), self.ncols)

    def _check_same(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"shape {self.shape} != {other.shape}")

    def power(self, k):
        if self.nrows != self.ncols:
            raise DimensionMismatch("only square matrices have powers")
        out = Matrix.identity(self.nrows)
        for _ in range(k):
            out = self @ out
        return out

    def is_zero(self):
        return all(is_zero(r) for r in self._rows)

    def is_identity(self):
        return self.nrows == self.ncols and self == Matrix.identity(self.nrows)

    def rank(self):
        return len(_Echelon.of(self._rows, self.ncols).rows)

    def flat(self):
        return tuple(a for r in self._rows for a in r)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nrows, self.ncols, self._rows))
        return self._hash

    def __repr__(self):
        body = ", ".join("[" + ", ".join(format_fraction(a) for a in r) + "]" for r in self._rows)
        return f"Matrix([{body}], ncols={self.ncols})"

    def tolist(self):
        return [list(r) for r in self._rows]


def as_matrix(m, nrows=None, ncols=None):
    """Accept a Matrix or a nested sequence of scalars."""
    if not isinstance(m, Matrix):
        rows = [list(r) for r in m]
        m = Matrix(rows, ncols=ncols if not rows else None)
    if nrows is not None and m.nrows != nrows or ncols is not None and m.ncols != ncols:
        raise DimensionMismatch(f"expected a {nrows}x{ncols} matrix, got {m.nrows}x{m.ncols}")
    return m


def hstack(blocks, nrows):
    rows = [[] for _ in range(nrows)]
    ncols = 0
    for b in blocks:
        if b.nrows != nrows:
            raise DimensionMismatch("hstack blocks must have equal row counts")
        for i in range(nrows):
            rows[i].extend(b.row(i))
        ncols += b.ncols
    return Matrix._raw(tuple(tuple(r) for r in rows), ncols)


def vstack(blocks, ncols):
    rows = []
    for b in blocks:
        if b.ncols != ncols:
            raise DimensionMismatch("vstack blocks must have equal column counts")
        rows.extend(b.rows)
    return Matrix._raw(tuple(rows), ncols)


# -- row reduction -------------------------------------------------------------

class _Echelon:
    """Incrementally maintained reduced row-echelon basis.

    Rows are kept fully reduced at all times (every pivot column is zero in
    every other row), so reducing a new vector is a single pass.
    """

    __slots__ = ("ncols", "rows")

    def __init__(self, ncols):
        self.ncols = ncols
        self.rows = {}  # pivot -> (row list, nonzero column indices)

    @classmethod
    def of(cls, vectors, ncols):
        e = cls(ncols)
        for v in vectors:
            e.add(v)
        return e

    @property
    def full(self):
        return len(self.rows) == self.ncols

    def reduce(self, v):
        v = list(v)
        for p, (row, nz) in self.rows.items():
            c = v[p]
            if c:
                for k in nz:
                    v[k] -= c * row[k]
        return v

    def add(self, v):
        """Insert ``v``; return True if it enlarged the span."""
        if len(v) != self.ncols:
            raise DimensionMismatch(f"vector of length {len(v)} in a {self.ncols}-dimensional space")
        if len(self.rows) == self.ncols:
            return False
        v = self.reduce(v)
        p = next((k for k, a in enumerate(v) if a), None)
        if p is None:
            return False
        lead = v[p]
        if lead != 1:
            v = [a / lead for a in v]
        nz = [k for k, a in enumerate(v) if a]
        for q, (row, rnz) in list(self.rows.items()):
            c = row[p]
            if c:
                for k in nz:
                    row[k] -= c * v[k]
                self.rows[q] = (row, [k for k, a in enumerate(row) if a])
        self.rows[p] = (v, nz)
        return True

    def basis(self):
        return tuple(tuple(self.rows[p][0]) for p in sorted(self.rows))

    def pivots(self):
        return tuple(sorted(self.rows))


def rref(m):
    """Reduced row-echelon form of ``m``; zero rows are kept at the bottom.

    >>> rref(Matrix([[2, 4], [1, 2]]))
    Matrix([[1, 2], [0, 0]], ncols=2)
    """
    m = as_matrix(m)
    basis = _Echelon.of(m.rows, m.ncols).basis()
    pad = tuple(zero_vector(m.ncols) for _ in range(m.nrows - len(basis)))
    return Matrix._raw(basis + pad, m.ncols)


# -- subspaces -----------------------------------------------------------------

class Subspace:
    """A subspace of Q^n held in canonical (RREF) form.

    Build one with :meth:`span`, :meth:`zero` or :meth:`full`.  Equality and
    hashing are structural, which is sound because the basis is canonical.
    """

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim, basis, pivots):
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def span(cls, vectors, ambient_dim=None):
        vectors = [as_vector(v) for v in vectors]
        if ambient_dim is None:
            if not vectors:
                raise ValueError("ambient_dim is required to span an empty family")
            ambient_dim = len(vectors[0])
        e = _Echelon.of(vectors, ambient_dim)
        return cls._from_echelon(e)

    @classmethod
    def _from_echelon(cls, e):
        return cls(e.ncols, e.basis(), e.pivots())

    @classmethod
    def zero(cls, n):
        return cls(n, (), ())

    @classmethod
    def full(cls, n):
        return cls(n, tuple(unit_vector(n, i) for i in range(n)), tuple(range(n)))

    @property
    def dim(self):
        return len(self.basis)

    def is_zero(self):
        return not self.basis

    def is_full(self):
        return len(self.basis) == self.ambient_dim

    def basis_matrix(self):
        return Matrix._raw(self.basis, self.ambient_dim)

    def inclusion(self):
        """The ambient_dim x dim matrix whose columns are the basis vectors."""
        return Matrix.from_columns(self.basis, self.ambient_dim)

    def reduce(self, v):
        v = list(v)
        for p, b in zip(self.pivots, self.basis):
            c = v[p]
            if c:
                for k, a in enumerate(b):
                    if a:
                        v[k] -= c * a
        return v

    def __contains__(self, v):
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} tested against Q^{self.ambient_dim}")
        return not any(self.reduce(v))

    def coordinates(self, v):
        """Coordinates of ``v`` in the canonical basis (``ValueError`` if v is outside)."""
        if v not in self:
            raise ValueError("vector does not lie in the subspace")
        return tuple(v[p] for p in self.pivots)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __le__(self, other):
        return subspace_leq(self, other)

    def __repr__(self):
        vecs = ", ".join("(" + ", ".join(format_fraction(a) for a in b) + ")" for b in self.basis)
        return f"Subspace(dim={self.dim} in Q^{self.ambient_dim}: [{vecs}])"


def _check_ambient(a, b):
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(f"subspaces of Q^{a.ambient_dim} and Q^{b.ambient_dim}")


def kernel(m):
    """Null space {v : m v = 0}.

    >>> kernel(Matrix([[1, 1]])).basis
    ((Fraction(1, 1), Fraction(-1, 1)),)
    """
    m = as_matrix(m)
    n = m.ncols
    e = _Echelon.of(m.rows, n)
    pivots = set(e.rows)
    vecs = []
    for free in range(n):
        if free in pivots:
            continue
        v = [ZERO] * n
        v[free] = ONE
        for p, (row, _) in e.rows.items():
            v[p] = -row[free]
        vecs.append(v)
    return Subspace.span(vecs, n)


def image(m):
    """Column space of ``m``."""
    m = as_matrix(m)
    return Subspace.span(m.columns(), m.nrows)


def subspace_sum(a, b):
    _check_ambient(a, b)
    e = _Echelon.of(a.basis, a.ambient_dim)
    for v in b.basis:
        e.add(v)
    return Subspace._from_echelon(e)


def subspace_intersect(a, b):
    """Intersection, solved as the kernel of ``[A^T | -B^T]``."""
    _check_ambient(a, b)
    n = a.ambient_dim
    if a.is_zero() or b.is_zero():
        return Subspace.zero(n)
    cols = list(a.basis) + [vscale(-ONE, v) for v in b.basis]
    system = Matrix.from_columns(cols, n)
    sols = kernel(system)
    k = a.dim
    return Subspace.span([combine(s[:k], a.basis, n) for s in sols.basis], n)


def contains(a, v):
    return as_vector(v) in a


def subspace_leq(a, b):
    _check_ambient(a, b)
    return all(v in b for v in a.basis)


def apply_to_subspace(f, w):
    """The image f(W) of a subspace under a linear map."""
    f = as_matrix(f)
    if f.ncols != w.ambient_dim:
        raise DimensionMismatch(f"a map from Q^{f.ncols} applied to a subspace of Q^{w.ambient_dim}")
    return Subspace.span([f.apply(v) for v in w.basis], f.nrows)


def preimage(f, w):
    """{v : f v in W} for f: Q^a -> Q^b and W a subspace of Q^b."""
    f = as_matrix(f)
    if f.nrows != w.ambient_dim:
        raise DimensionMismatch(f"a map into Q^{f.nrows} and a subspace of Q^{w.ambient_dim}")
    q = QuotientSpace(w)
    return kernel(q.projection @ f)


def largest_invariant_subspace(a, c):
    """Largest W inside C with a(W) contained in W.

    Iterates W <- W cap a^{-1}(W) starting from C.  Each strict step lowers
    the dimension, so at most ``dim C`` rounds are needed.
    """
    a = as_matrix(a)
    if a.nrows != a.ncols or a.ncols != c.ambient_dim:
        raise DimensionMismatch(f"{a.shape} operator on a subspace of Q^{c.ambient_dim}")
    w = c
    while True:
        nxt = subspace_intersect(w, preimage(a, w))
        if nxt == w:
            return w
        w = nxt


def is_invariant(a, w):
    return all(a.apply(v) in w for v in w.basis)


# -- quotients -----------------------------------------------------------------

class QuotientSpace:
    """Q^n / K with coordinates taken on the non-pivot columns of K.

    The section sends the k-th quotient basis vector to the standard basis
    vector of its representative column, so ``projection @ section`` is
    the identity.
    """

    __slots__ = ("ambient_dim", "killed", "representative_columns", "_projection", "_section")

    def __init__(self, killed):
        self.ambient_dim = killed.ambient_dim
        self.killed = killed
        piv = set(killed.pivots)
        self.representative_columns = tuple(j for j in range(self.ambient_dim) if j not in piv)
        self._projection = None
        self._section = None

    @property
    def dim(self):
        return len(self.representative_columns)

    def project(self, v):
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} projected from Q^{self.ambient_dim}")
        r = self.killed.reduce(v)
        return tuple(r[j] for j in self.representative_columns)

    def lift(self, q):
        v = [ZERO] * self.ambient_dim
        for j, a in zip(self.representative_columns, q):
            v[j] = a
        return tuple(v)

    @property
    def projection(self):
        if self._projection is None:
            cols = [self.project(unit_vector(self.ambient_dim, i)) for i in range(self.ambient_dim)]
            self._projection = Matrix.from_columns(cols, self.dim)
        return self._projection

    @property
    def section(self):
        if self._section is None:
            cols = [unit_vector(self.ambient_dim, j) for j in self.representative_columns]
            self._section = Matrix.from_columns(cols, self.ambient_dim)
        return self._section

    def __repr__(self):
        return f"QuotientSpace(Q^{self.ambient_dim} / dim {self.killed.dim})"
