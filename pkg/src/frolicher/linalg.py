"""Dense exact linear algebra over the Gaussian rationals.

Vectors are tuples of :class:`Scalar`. Elimination picks the first nonzero
entry of each column as pivot (greedy, fixed basis order), so every result
is deterministic.
"""

from dataclasses import dataclass

from .errors import AmbientMismatchError, NotSubquotientError
from .scalar import ONE, ZERO, Scalar


@dataclass(frozen=True)
class Mat:
    rows: int
    cols: int
    entries: tuple  # row-major, length rows * cols

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [[Scalar.coerce(x) for x in r] for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns, rows):
        columns = list(columns)
        return cls(rows, len(columns),
                   tuple(Scalar.coerce(columns[j][i]) for i in range(rows) for j in range(len(columns))))

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n):
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j):
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_zero(self):
        return not any(self.entries)

    def apply(self, v):
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} for {self.rows}x{self.cols} matrix")
        out = []
        for i in range(self.rows):
            acc = ZERO
            for a, x in zip(self.row(i), v):
                if a and x:
                    acc = acc + a * x
            out.append(acc)
        return tuple(out)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        m = other.cols
        ocols = [other.column(j) for j in range(m)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            nz = [(k, a) for k, a in enumerate(r) if a]
            for j in range(m):
                c = ocols[j]
                acc = ZERO
                for k, a in nz:
                    b = c[k]
                    if b:
                        acc = acc + a * b
                out.append(acc)
        return Mat(self.rows, m, tuple(out))

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError(f"cannot add {self.shape} and {other.shape}")
        return Mat(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __neg__(self):
        return Mat(self.rows, self.cols, tuple(-a for a in self.entries))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Scalar.coerce(c)
        return Mat(self.rows, self.cols, tuple(c * a for a in self.entries))

    def conjugate(self):
        return Mat(self.rows, self.cols, tuple(a.conjugate() for a in self.entries))

    def transpose(self):
        return Mat(self.cols, self.rows, tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def __repr__(self):
        return f"Mat({self.rows}x{self.cols}, {[[str(x) for x in r] for r in self.to_rows()]})"


# -- elimination ------------------------------------------------------------


def rref(rows, ncols):
    """Reduce ``rows`` (list of lists, modified in place) to reduced row echelon form.

    Returns the list of pivot columns; the first ``len(pivots)`` rows are the
    nonzero ones afterwards.
    """
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for k in range(r, nrows):
            if rows[k][c]:
                piv = k
                break
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = prow[c].inverse()
        if inv != ONE:
            for j in range(c, ncols):
                if prow[j]:
                    prow[j] = prow[j] * inv
        nz = [j for j in range(c, ncols) if prow[j]]
        for k in range(nrows):
            if k == r:
                continue
            row = rows[k]
            f = row[c]
            if f:
                for j in nz:
                    row[j] = row[j] - f * prow[j]
        pivots.append(c)
        r += 1
    return pivots


class Reducer:
    """Incremental echelon basis: test membership and grow a span vector by vector."""

    def __init__(self, n):
        self.n = n
        self.rows = {}  # pivot column -> row with 1 at the pivot

    def reduce(self, v):
        v = list(v)
        for c in range(self.n):
            x = v[c]
            if x and c in self.rows:
                prow = self.rows[c]
                for j in range(c, self.n):
                    if prow[j]:
                        v[j] = v[j] - x * prow[j]
        return v

    def add(self, v):
        """Add ``v`` to the span; return True iff it was independent."""
        w = self.reduce(v)
        for c in range(self.n):
            if w[c]:
                inv = w[c].inverse()
                self.rows[c] = [x * inv if x else x for x in w]
                return True
        return False

    def contains(self, v):
        return not any(self.reduce(v))

    @property
    def dim(self):
        return len(self.rows)


def rank(m):
    rows = m.to_rows()
    return len(rref(rows, m.cols))


def independent_indices(vectors, n):
    """Indices of the greedy maximal independent subfamily of ``vectors``."""
    red = Reducer(n)
    return [i for i, v in enumerate(vectors) if red.add(v)]


def _kernel_vectors(rows, ncols):
    pivots = rref(rows, ncols)
    pivset = set(pivots)
    out = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [ZERO] * ncols
        v[f] = ONE
        for r, c in enumerate(pivots):
            x = rows[r][f]
            if x:
                v[c] = -x
        out.append(tuple(v))
    return out


def solve(m, b):
    """A particular solution ``x`` of ``m x = b`` or None if inconsistent."""
    if len(b) != m.rows:
        raise ValueError("right-hand side has the wrong length")
    rows = [list(m.row(i)) + [Scalar.coerce(b[i])] for i in range(m.rows)]
    pivots = rref(rows, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [ZERO] * m.cols
    for r, c in enumerate(pivots):
        x[c] = rows[r][m.cols]
    return tuple(x)


def inverse(m):
    if m.rows != m.cols:
        raise ValueError("only square matrices are invertible")
    n = m.rows
    rows = [list(m.row(i)) + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    pivots = rref(rows, 2 * n)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return Mat(n, n, tuple(x for r in rows for x in r[n:]))


# -- subspaces --------------------------------------------------------------


@dataclass(frozen=True)
class Subspace:
    """Span of independent column vectors inside a space of dimension ``ambient_dim``."""

    ambient_dim: int
    vectors: tuple

    @classmethod
    def span(cls, vectors, ambient_dim):
        vectors = [tuple(Scalar.coerce(x) for x in v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise AmbientMismatchError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        keep = independent_indices(vectors, ambient_dim)
        return cls(ambient_dim, tuple(vectors[i] for i in keep))

    @classmethod
    def zero(cls, n):
        return cls(n, ())

    @classmethod
    def full(cls, n):
        return cls(n, Mat.identity(n).columns())

    @property
    def dim(self):
        return len(self.vectors)

    @property
    def basis(self):
        return Mat.from_columns(self.vectors, self.ambient_dim)

    def contains_vector(self, v):
        red = Reducer(self.ambient_dim)
        for w in self.vectors:
            red.add(w)
        return red.contains(v)

    def contains(self, other):
        """True iff ``other`` is a subspace of ``self``."""
        _same_ambient(self, other)
        red = Reducer(self.ambient_dim)
        for w in self.vectors:
            red.add(w)
        return all(red.contains(v) for v in other.vectors)

    def same_as(self, other):
        return self.dim == other.dim and self.contains(other)

    def coordinates(self, v):
        """Coordinates of ``v`` in this basis; ValueError when ``v`` is outside."""
        x = solve(self.basis, v)
        if x is None:
            raise ValueError("vector is not in the subspace")
        return x

    def __add__(self, other):
        return sum_(self, other)

    def __and__(self, other):
        return intersection(self, other)

    def __repr__(self):
        return f"Subspace(dim={self.dim} in {self.ambient_dim})"


def _same_ambient(a, b):
    if a.ambient_dim != b.ambient_dim:
        raise AmbientMismatchError(f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}")


def kernel(m):
    return Subspace(m.cols, tuple(_kernel_vectors(m.to_rows(), m.cols)))


def image(m):
    """Column span, basis = the greedy pivot columns of ``m``."""
    cols = m.columns()
    keep = independent_indices(cols, m.rows)
    return Subspace(m.rows, tuple(cols[j] for j in keep))


def sum_(a, b):
    _same_ambient(a, b)
    return Subspace.span(a.vectors + b.vectors, a.ambient_dim)


def intersection(a, b):
    _same_ambient(a, b)
    if not a.dim or not b.dim:
        return Subspace.zero(a.ambient_dim)
    n, ka = a.ambient_dim, a.dim
    rows = [[a.vectors[j][i] for j in range(ka)] + [-w[i] for w in b.vectors] for i in range(n)]
    vecs = []
    for sol in _kernel_vectors(rows, ka + b.dim):
        vecs.append(tuple(_comb(a.vectors, sol[:ka], n)))
    return Subspace.span(vecs, n)


def preimage(m, b):
    """``{x : m x in b}`` for a map ``m`` whose target contains ``b``."""
    if m.rows != b.ambient_dim:
        raise AmbientMismatchError(f"map has target dimension {m.rows}, subspace lives in {b.ambient_dim}")
    n = m.cols
    rows = [list(m.row(i)) + [-w[i] for w in b.vectors] for i in range(m.rows)]
    vecs = [sol[:n] for sol in _kernel_vectors(rows, n + b.dim)]
    return Subspace.span(vecs, n)


def image_of(m, a):
    """Image of the subspace ``a`` under ``m``."""
    if m.cols != a.ambient_dim:
        raise AmbientMismatchError(f"map has source dimension {m.cols}, subspace lives in {a.ambient_dim}")
    return Subspace.span([m.apply(v) for v in a.vectors], m.rows)


def quotient_dim(z, b):
    _same_ambient(z, b)
    if not z.contains(b):
        raise NotSubquotientError(f"subspace of dim {b.dim} is not contained in subspace of dim {z.dim}")
    return z.dim - b.dim


def _comb(vectors, coeffs, n):
    out = [ZERO] * n
    for v, c in zip(vectors, coeffs):
        if c:
            for i in range(n):
                if v[i]:
                    out[i] = out[i] + c * v[i]
    return out


def combine(vectors, coeffs, n):
    """Linear combination ``sum(c * v)`` as a tuple."""
    return tuple(_comb(vectors, coeffs, n))


class Coordinates:
    """Fast coordinates with respect to a fixed independent family.

    Picks rows where the basis is invertible once; afterwards ``of(v)`` is a
    small matrix-vector product. Only meaningful for ``v`` in the span.
    """

    def __init__(self, vectors, n):
        self.vectors = [tuple(v) for v in vectors]
        self.n = n
        k = len(self.vectors)
        if not k:
            self.rows, self.inv = [], None
            return
        rows_as_vectors = [tuple(v[i] for v in self.vectors) for i in range(n)]
        self.rows = independent_indices(rows_as_vectors, k)
        if len(self.rows) != k:
            raise ValueError("vectors are dependent")
        self.inv = inverse(Mat.from_rows([rows_as_vectors[i] for i in self.rows], k))

    def of(self, v):
        if self.inv is None:
            return ()
        return self.inv.apply(tuple(v[i] for i in self.rows))
