"""Exact linear algebra over Q (fractions) and over prime fields.

Matrices act on column vectors. Subspaces are stored by the reduced row
echelon form of a spanning set, so two subspaces are equal exactly when their
stored bases are equal.
"""
from fractions import Fraction
from numbers import Rational

from .errors import PreconditionError

try:                            # same semantics as Fraction, about ten times faster
    from gmpy2 import mpq as _Q
except ImportError:
    _Q = Fraction


class Rationals:
    char = 0

    def __call__(self, x):
        if isinstance(x, _Q):
            return x
        if isinstance(x, str):
            return _Q(Fraction(x.strip()))
        return _Q(x)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


QQ = Rationals()


class Mod:
    """Element of Z/p."""
    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, Mod):
            return other.v
        if isinstance(other, Rational) and not isinstance(other, int):
            return int(other.numerator) * pow(int(other.denominator), -1, self.p)
        return other

    def __add__(self, o):
        return Mod(self.v + self._lift(o), self.p)

    __radd__ = __add__

    def __sub__(self, o):
        return Mod(self.v - self._lift(o), self.p)

    def __rsub__(self, o):
        return Mod(self._lift(o) - self.v, self.p)

    def __mul__(self, o):
        return Mod(self.v * self._lift(o), self.p)

    __rmul__ = __mul__

    def __truediv__(self, o):
        d = self._lift(o) % self.p
        if d == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return Mod(self.v * pow(d, -1, self.p), self.p)

    def __rtruediv__(self, o):
        return Mod(self._lift(o), self.p) / self

    def __neg__(self):
        return Mod(-self.v, self.p)

    def __eq__(self, o):
        return (self.v - self._lift(o)) % self.p == 0

    def __hash__(self):
        return hash(self.v)

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return "%d" % self.v


def _is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class GF:
    def __init__(self, p):
        if not _is_prime(p):
            raise PreconditionError("field characteristic %r is not prime" % (p,))
        self.char = p

    def __call__(self, x):
        if isinstance(x, Mod):
            return x
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, Rational) and not isinstance(x, int):
            x = Fraction(int(x.numerator), int(x.denominator))
            if x.denominator % self.char == 0:
                raise PreconditionError("%s is not defined mod %d" % (x, self.char))
            return Mod(x.numerator * pow(x.denominator, -1, self.char), self.char)
        return Mod(int(x), self.char)

    def __eq__(self, other):
        return isinstance(other, GF) and other.char == self.char

    def __hash__(self):
        return hash(("GF", self.char))

    def __repr__(self):
        return "GF(%d)" % self.char


class Matrix:
    """Immutable m x n matrix; `rows` is a tuple of row tuples."""

    def __init__(self, rows, ncols=None, field=QQ):
        rows = [[field(x) for x in r] for r in rows]
        if ncols is None:
            if not rows:
                raise PreconditionError("ncols required for a matrix with no rows")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise PreconditionError("ragged matrix rows")
        self.rows = tuple(tuple(r) for r in rows)
        self.nrows = len(rows)
        self.ncols = ncols
        self.field = field

    @classmethod
    def zeros(cls, m, n, field=QQ):
        return cls([[0] * n for _ in range(m)], n, field)

    @classmethod
    def identity(cls, n, field=QQ):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n, field)

    @classmethod
    def from_columns(cls, cols, nrows, field=QQ):
        return cls([[c[i] for c in cols] for i in range(nrows)], len(cols), field)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return [r[j] for r in self.rows]

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self):
        return Matrix([self.column(j) for j in range(self.ncols)], self.nrows, self.field)

    T = property(transpose)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise PreconditionError("shape mismatch %s @ %s" % (self.shape, other.shape))
            cols = other.columns()
            return Matrix([[_dot(r, c, self.field) for c in cols] for r in self.rows],
                          other.ncols, self.field)
        return [_dot(r, other, self.field) for r in self.rows]

    def __add__(self, other):
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                      self.ncols, self.field)

    def __sub__(self, other):
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                      self.ncols, self.field)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.shape == other.shape
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.shape, self.rows))

    def is_zero(self):
        return all(x == 0 for r in self.rows for x in r)

    def submatrix(self, rows, cols):
        return Matrix([[self.rows[i][j] for j in cols] for i in rows], len(cols), self.field)

    def tolist(self):
        return [list(r) for r in self.rows]

    def __repr__(self):
        return "Matrix(%s)" % [list(map(str, r)) for r in self.rows]


def _dot(a, b, field):
    s = field(0)
    for x, y in zip(a, b):
        if x and y:
            s = s + x * y
    return s


def _as_matrix(a, field=None):
    if isinstance(a, Matrix):
        return a
    return Matrix(a, field=field or QQ)


def _rref_rows(rows, ncols):
    """In-place Gauss-Jordan on a list of row lists; returns pivot columns.

    Pivots are chosen leftmost column first, topmost usable row first."""
    pivots = []
    r = 0
    m = len(rows)
    for c in range(ncols):
        if r == m:
            break
        piv = None
        for i in range(r, m):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rr = [x * inv if x else x for x in rows[r]]
        rows[r] = rr
        # the rows are usually sparse, so only touch the nonzero positions
        nz = [j for j, y in enumerate(rr) if y]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                ri = rows[i]
                for j in nz:
                    ri[j] = ri[j] - f * rr[j]
        pivots.append(c)
        r += 1
    return pivots


def rref(a):
    """Return (R, pivots) with R the reduced row echelon form of a."""
    a = _as_matrix(a)
    rows = [list(r) for r in a.rows]
    pivots = _rref_rows(rows, a.ncols)
    return Matrix(rows, a.ncols, a.field), pivots


def rank(a):
    a = _as_matrix(a)
    rows = [list(r) for r in a.rows]
    return len(_rref_rows(rows, a.ncols))


def kernel_basis(a):
    """Basis of {x : a x = 0}, one vector per free column, as a list."""
    a = _as_matrix(a)
    field = a.field
    rows = [list(r) for r in a.rows]
    pivots = _rref_rows(rows, a.ncols)
    free = [j for j in range(a.ncols) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [field(0)] * a.ncols
        v[f] = field(1)
        for i, p in enumerate(pivots):
            v[p] = -rows[i][f]
        basis.append(v)
    return basis


def image_basis(a):
    """Columns of a at the pivot positions of its rref."""
    a = _as_matrix(a)
    rows = [list(r) for r in a.rows]
    pivots = _rref_rows(rows, a.ncols)
    return [a.column(j) for j in pivots]


class Subspace:
    """Subspace of K^ambient, kept as the rref of a spanning set."""

    def __init__(self, vectors, ambient, field=QQ, _clean=False):
        # _clean: the vectors are fresh lists of field elements already
        rows = vectors if _clean else [[field(x) for x in v] for v in vectors]
        for r in rows:
            if len(r) != ambient:
                raise PreconditionError("vector of length %d in K^%d" % (len(r), ambient))
        piv = _rref_rows(rows, ambient)
        self.basis = tuple(tuple(r) for r in rows[:len(piv)])
        self.pivots = tuple(piv)
        self.ambient = ambient
        self.field = field

    @classmethod
    def full(cls, n, field=QQ):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n, field)

    @classmethod
    def zero(cls, n, field=QQ):
        return cls([], n, field)

    @property
    def dim(self):
        return len(self.basis)

    def vectors(self):
        return [list(b) for b in self.basis]

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient == other.ambient
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __le__(self, other):
        return contains(other, self)

    def __lt__(self, other):
        return self.dim < other.dim and contains(other, self)

    def __repr__(self):
        return "Subspace(dim=%d, ambient=%d)" % (self.dim, self.ambient)


def contains(w, u):
    """Is the subspace (or vector) u contained in w?"""
    if isinstance(u, Subspace):
        if u.dim > w.dim:
            return False
        return all(membership_test(w, v) for v in u.basis)
    return membership_test(w, u)


def membership_test(w, v):
    field = w.field
    if not isinstance(v, tuple):
        v = [field(x) for x in v]
    for b, p in zip(w.basis, w.pivots):
        c = v[p]
        if c != 0:
            v = [x - c * y for x, y in zip(v, b)]
    return all(x == 0 for x in v)


def sum_subspaces(u, w):
    return Subspace([list(b) for b in u.basis + w.basis], u.ambient, u.field, _clean=True)


def intersect(u, w):
    """u ∩ w via the kernel of [U | -W]."""
    if u.dim == 0 or w.dim == 0:
        return Subspace.zero(u.ambient, u.field)
    field = u.field
    n = u.ambient
    cols = [list(b) for b in u.basis] + [[-x for x in b] for b in w.basis]
    a = Matrix.from_columns(cols, n, field)
    vecs = []
    for k in kernel_basis(a):
        v = [field(0)] * n
        for coef, b in zip(k[:u.dim], u.basis):
            if coef != 0:
                v = [x + coef * y for x, y in zip(v, b)]
        vecs.append(v)
    return Subspace(vecs, n, field)


def complement_in(u, w):
    """A basis of a complement of u inside w (u must lie in w).

    Greedy: basis vectors of w are added in order whenever they are
    independent of what has been collected so far."""
    if not contains(w, u):
        raise PreconditionError("complement_in: first space is not contained in the second")
    field = u.field
    cur = u
    out = []
    for b in w.basis:
        if cur.dim == w.dim:
            break
        if not membership_test(cur, b):
            out.append(list(b))
            cur = Subspace([list(x) for x in cur.basis + (b,)], u.ambient, field, _clean=True)
    return out


def solve_linear(a, b):
    """Some x with a x = b, or None when there is none."""
    a = _as_matrix(a)
    field = a.field
    rows = [list(r) + [field(bi)] for r, bi in zip(a.rows, b)]
    pivots = _rref_rows(rows, a.ncols + 1)
    if pivots and pivots[-1] == a.ncols:
        return None
    x = [field(0)] * a.ncols
    for i, p in enumerate(pivots):
        x[p] = rows[i][a.ncols]
    return x


def coordinates(basis, v, field=QQ):
    """Coordinates of v in the given list of independent vectors."""
    if not basis:
        if any(field(x) != 0 for x in v):
            return None
        return []
    a = Matrix.from_columns(basis, len(v), field)
    return solve_linear(a, v)


def stack_columns(vectors, n, field=QQ):
    return Matrix.from_columns(vectors, n, field)
