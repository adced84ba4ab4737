"""
Exact dense linear algebra over Q (default) or a prime field F_p.

Matrices are small here (a few hundred rows at most), so everything is
dense row-major tuples of ``Fraction`` (or of ``int`` residues mod p).
Pivoting is deterministic: columns are scanned left to right and the
first row carrying a nonzero entry in that column becomes the pivot row.

Example:

>>> m = Matrix.from_rows([[1, 2], [2, 4], [0, 1]])
>>> rank(m)
2
>>> hb = homology_basis(Matrix.from_rows([[1], [1]]), Matrix.from_rows([[1, -1]]))
>>> hb.h
0
"""

from dataclasses import dataclass
from fractions import Fraction

from lcderham.errors import ComplexViolation, ShapeMismatch, SingularMatrix


def _coerce(x, prime):
    if prime is None:
        return x if type(x) is Fraction else Fraction(x)
    x = Fraction(x)
    num = x.numerator % prime
    if x.denominator == 1:
        return num
    den = x.denominator % prime
    if den == 0:
        raise ZeroDivisionError("denominator vanishes mod %d" % prime)
    return num * pow(den, -1, prime) % prime


def fstr(x):
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


class Matrix:
    """Immutable dense matrix over Q (``prime is None``) or F_prime.

    A 0 x m or m x 0 matrix is a legal zero map.
    """

    __slots__ = ("rows", "cols", "data", "prime")

    def __init__(self, rows, cols, data=None, prime=None):
        if rows < 0 or cols < 0:
            raise ShapeMismatch("negative dimension %dx%d" % (rows, cols))
        if data is None:
            zero = _coerce(0, prime)
            data = tuple((zero,) * cols for _ in range(rows))
        else:
            data = tuple(tuple(_coerce(x, prime) for x in row) for row in data)
            if len(data) != rows or any(len(row) != cols for row in data):
                raise ShapeMismatch("entry grid does not match %dx%d" % (rows, cols))
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "prime", prime)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def from_rows(cls, rows, cols=None, prime=None):
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ShapeMismatch("column count needed for a matrix with no rows")
            cols = len(rows[0])
        return cls(len(rows), cols, rows, prime)

    @classmethod
    def from_columns(cls, columns, rows, prime=None):
        columns = [list(c) for c in columns]
        data = [[c[i] for c in columns] for i in range(rows)]
        return cls(rows, len(columns), data, prime)

    @classmethod
    def zeros(cls, rows, cols, prime=None):
        return cls(rows, cols, None, prime)

    @classmethod
    def identity(cls, n, prime=None):
        return cls(n, n, [[int(i == j) for j in range(n)] for i in range(n)], prime)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def column(self, j):
        return tuple(row[j] for row in self.data)

    def tolist(self):
        return [list(row) for row in self.data]

    def transpose(self):
        return Matrix(self.cols, self.rows, [self.column(j) for j in range(self.cols)], self.prime)

    T = property(transpose)

    def is_zero(self):
        return all(x == 0 for row in self.data for x in row)

    def _check_field(self, other):
        if self.prime != other.prime:
            raise ShapeMismatch("field mismatch: %r vs %r" % (self.prime, other.prime))

    def __matmul__(self, other):
        self._check_field(other)
        if self.cols != other.rows:
            raise ShapeMismatch("cannot multiply %dx%d by %dx%d" % (self.shape + other.shape))
        p = self.prime
        zero = _coerce(0, p)
        ocols = [other.column(j) for j in range(other.cols)]
        out = []
        for row in self.data:
            nz = [(k, x) for k, x in enumerate(row) if x != 0]
            line = []
            for col in ocols:
                s = zero
                for k, x in nz:
                    y = col[k]
                    if y != 0:
                        s += x * y
                line.append(s % p if p else s)
            out.append(line)
        return Matrix(self.rows, other.cols, out, p)

    def _zip(self, other, op):
        self._check_field(other)
        if self.shape != other.shape:
            raise ShapeMismatch("shape %r vs %r" % (self.shape, other.shape))
        return Matrix(self.rows, self.cols,
                      [[op(x, y) for x, y in zip(r, s)] for r, s in zip(self.data, other.data)],
                      self.prime)

    def __add__(self, other):
        return self._zip(other, lambda x, y: x + y)

    def __sub__(self, other):
        return self._zip(other, lambda x, y: x - y)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        c = _coerce(c, self.prime)
        return Matrix(self.rows, self.cols, [[c * x for x in row] for row in self.data], self.prime)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.prime == other.prime and self.data == other.data

    def __hash__(self):
        return hash((self.rows, self.cols, self.data, self.prime))

    def __repr__(self):
        body = "; ".join(" ".join(fstr(x) for x in row) for row in self.data)
        field = "" if self.prime is None else ", F_%d" % self.prime
        return "Matrix(%dx%d%s: [%s])" % (self.rows, self.cols, field, body)

    def to_strings(self):
        return [[fstr(x) for x in row] for row in self.data]


def hstack(blocks, rows, prime=None):
    data = [[] for _ in range(rows)]
    for b in blocks:
        if b.rows != rows:
            raise ShapeMismatch("hstack row count %d != %d" % (b.rows, rows))
        for i in range(rows):
            data[i].extend(b.data[i])
    cols = sum(b.cols for b in blocks)
    return Matrix(rows, cols, data, prime)


def _rref(m):
    """Reduced row echelon form as (list of pivot rows, pivot columns)."""
    p = m.prime
    rows = [list(r) for r in m.data]
    pivots = []
    r = 0
    for c in range(m.cols):
        piv = None
        for i in range(r, m.rows):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = pow(prow[c], -1, p) if p else 1 / prow[c]
        if prow[c] != 1:
            prow[:] = [(x * inv) % p if p else x * inv for x in prow]
        for i in range(m.rows):
            if i == r:
                continue
            f = rows[i][c]
            if f != 0:
                row = rows[i]
                for k in range(c, m.cols):
                    if prow[k] != 0:
                        row[k] = (row[k] - f * prow[k]) % p if p else row[k] - f * prow[k]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return rows[:r], pivots


def _bareiss_rank(data, nrows, ncols):
    a = [list(r) for r in data]
    prev = 1
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if a[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pr = a[r]
        pc = pr[c]
        for i in range(r + 1, nrows):
            row = a[i]
            f = row[c]
            for k in range(c + 1, ncols):
                row[k] = (row[k] * pc - f * pr[k]) // prev
            row[c] = 0
        prev = pc
        r += 1
        if r == nrows:
            break
    return r


def rank(m, prime=None):
    """Rank of ``m``. Passing ``prime`` reduces a rational matrix mod p first."""
    if prime is not None and m.prime is None:
        m = Matrix(m.rows, m.cols, m.data, prime)
    if m.rows == 0 or m.cols == 0:
        return 0
    if m.prime is None and all(x.denominator == 1 for row in m.data for x in row):
        ints = [[x.numerator for x in row] for row in m.data]
        return _bareiss_rank(ints, m.rows, m.cols)
    return len(_rref(m)[1])


def pivot_columns(m):
    return _rref(m)[1]


def nullspace(m):
    """Basis of ker(m) as the columns of a (cols x k) matrix."""
    rows, pivots = _rref(m)
    p = m.prime
    pivset = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivset:
            continue
        v = [_coerce(0, p)] * m.cols
        v[f] = _coerce(1, p)
        for row, pc in zip(rows, pivots):
            if row[f] != 0:
                v[pc] = (-row[f]) % p if p else -row[f]
        basis.append(v)
    return Matrix.from_columns(basis, m.cols, p)


def inverse(m):
    if m.rows != m.cols:
        raise ShapeMismatch("inverse of non-square %dx%d" % m.shape)
    n = m.rows
    aug = hstack([m, Matrix.identity(n, m.prime)], n, m.prime)
    rows, pivots = _rref(aug)
    if pivots[:n] != list(range(n)) or len(rows) < n:
        raise SingularMatrix("matrix is singular")
    return Matrix(n, n, [row[n:] for row in rows], m.prime)


def is_invertible(m):
    return m.rows == m.cols and rank(m) == m.rows


@dataclass(frozen=True)
class HomologyBasis:
    """Chosen basis of ker(d_out)/im(d_in).

    ``representatives`` holds cycle representatives as columns and
    ``project`` sends a cycle to its class coordinates; boundaries go to 0.
    """

    ambient_dim: int
    representatives: Matrix
    project: Matrix

    @property
    def h(self):
        return self.representatives.cols


def homology_basis(d_in, d_out):
    """Homology at the middle spot of ``. --d_in--> V --d_out--> .``."""
    if d_in.rows != d_out.cols:
        raise ShapeMismatch("d_in lands in dim %d but d_out starts from dim %d"
                            % (d_in.rows, d_out.cols))
    d_in._check_field(d_out)
    p = d_in.prime
    if not (d_out @ d_in).is_zero():
        raise ComplexViolation("d_out . d_in != 0")
    m = d_in.rows
    cycles = nullspace(d_out)
    bound = [d_in.column(j) for j in pivot_columns(d_in)]
    r = len(bound)
    stacked = hstack([Matrix.from_columns(bound, m, p), cycles], m, p)
    chosen = [c for c in pivot_columns(stacked) if c >= r]
    reps = [stacked.column(c) for c in chosen]
    h = len(reps)
    if h == 0:
        return HomologyBasis(m, Matrix.zeros(m, 0, p), Matrix.zeros(0, m, p))
    # complete boundaries + representatives to a basis of the ambient space
    partial = Matrix.from_columns(bound + reps, m, p)
    full = hstack([partial, Matrix.identity(m, p)], m, p)
    extra = [full.column(c) for c in pivot_columns(full) if c >= r + h]
    q = Matrix.from_columns(bound + reps + extra, m, p)
    qinv = inverse(q)
    project = Matrix(h, m, qinv.data[r:r + h], p)
    return HomologyBasis(m, Matrix.from_columns(reps, m, p), project)


def induced_on_homology(f, src, tgt):
    """Matrix of the map induced by the chain-level map ``f`` in the given bases."""
    if f.cols != src.ambient_dim or f.rows != tgt.ambient_dim:
        raise ShapeMismatch("map %dx%d does not go from dim %d to dim %d"
                            % (f.rows, f.cols, src.ambient_dim, tgt.ambient_dim))
    return tgt.project @ f @ src.representatives
