"""Exact rational linear algebra: matrices, rank, kernels and solving.

Matrices are stored as a list of sparse rows ({column: Fraction}).  Every
operation is exact; pivots are chosen as the first nonzero entry in
row-major order, so identical inputs always give identical bases.
"""

import heapq
from fractions import Fraction


def Q(x):
    """Coerce an int, Fraction or "p/q" string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    # numpy integers and similar
    if hasattr(x, "__index__"):
        return Fraction(int(x))
    raise TypeError("cannot read %r as a rational" % (x,))


def rational_str(x):
    x = Q(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


class DimensionError(ValueError):
    pass


class Matrix:
    """Immutable rows x cols matrix over the rationals."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows, cols, data=None):
        self.rows = int(rows)
        self.cols = int(cols)
        if data is None:
            data = [dict() for _ in range(self.rows)]
        if len(data) != self.rows:
            raise DimensionError("expected %d rows, got %d" % (self.rows, len(data)))
        clean = []
        for r in data:
            row = {}
            for j, v in r.items():
                if not 0 <= j < self.cols:
                    raise DimensionError("column %d out of range for %d columns" % (j, self.cols))
                v = Q(v)
                if v:
                    row[j] = v
            clean.append(row)
        self._data = clean

    @classmethod
    def _trusted(cls, rows, cols, data):
        m = cls.__new__(cls)
        m.rows, m.cols, m._data = rows, cols, data
        return m

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionError("ragged matrix rows")
        return cls(len(rows), cols, [{j: v for j, v in enumerate(r)} for r in rows])

    @classmethod
    def identity(cls, n):
        return cls._trusted(n, n, [{i: Fraction(1)} for i in range(n)])

    @classmethod
    def zero(cls, rows, cols):
        return cls._trusted(rows, cols, [dict() for _ in range(rows)])

    @classmethod
    def from_columns(cls, columns, rows):
        data = [dict() for _ in range(rows)]
        for j, c in enumerate(columns):
            if len(c) != rows:
                raise DimensionError("column length %d, expected %d" % (len(c), rows))
            for i, v in enumerate(c):
                v = Q(v)
                if v:
                    data[i][j] = v
        return cls._trusted(rows, len(columns), data)

    def row(self, i):
        return dict(self._data[i])

    def sparse_rows(self):
        return [dict(r) for r in self._data]

    def entry(self, i, j):
        return self._data[i].get(j, Fraction(0))

    def to_lists(self):
        return [[r.get(j, Fraction(0)) for j in range(self.cols)] for r in self._data]

    def column(self, j):
        return [r.get(j, Fraction(0)) for r in self._data]

    def nnz(self):
        return sum(len(r) for r in self._data)

    def is_zero(self):
        return all(not r for r in self._data)

    def transpose(self):
        data = [dict() for _ in range(self.cols)]
        for i, r in enumerate(self._data):
            for j, v in r.items():
                data[j][i] = v
        return Matrix._trusted(self.cols, self.rows, data)

    def apply(self, x):
        if len(x) != self.cols:
            raise DimensionError("vector length %d, matrix has %d columns" % (len(x), self.cols))
        x = [Q(v) for v in x]
        return [sum((v * x[j] for j, v in r.items()), Fraction(0)) for r in self._data]

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise DimensionError("cannot multiply %dx%d by %dx%d"
                                 % (self.rows, self.cols, other.rows, other.cols))
        out = []
        orows = other._data
        for r in self._data:
            acc = {}
            for k, v in r.items():
                for j, w in orows[k].items():
                    acc[j] = acc.get(j, 0) + v * w
            out.append({j: v for j, v in acc.items() if v})
        return Matrix._trusted(self.rows, other.cols, out)

    def scale(self, c):
        c = Q(c)
        if not c:
            return Matrix.zero(self.rows, self.cols)
        return Matrix._trusted(self.rows, self.cols,
                               [{j: v * c for j, v in r.items()} for r in self._data])

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("shape mismatch in matrix sum")
        out = []
        for a, b in zip(self._data, other._data):
            r = dict(a)
            for j, v in b.items():
                s = r.get(j, 0) + v
                if s:
                    r[j] = s
                else:
                    r.pop(j, None)
            out.append(r)
        return Matrix._trusted(self.rows, self.cols, out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(sorted(r.items())) for r in self._data)))

    def __repr__(self):
        return "Matrix(%d, %d, nnz=%d)" % (self.rows, self.cols, self.nnz())


class Subspace:
    """A subspace of Q^n given by a linearly independent basis."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim, basis=(), check=True):
        self.ambient_dim = int(ambient_dim)
        basis = tuple(tuple(Q(v) for v in b) for b in basis)
        for b in basis:
            if len(b) != self.ambient_dim:
                raise DimensionError("basis vector of length %d in ambient dimension %d"
                                     % (len(b), self.ambient_dim))
        if check and basis and rank(Matrix.from_rows(basis, self.ambient_dim)) != len(basis):
            raise ValueError("basis vectors are linearly dependent")
        self.basis = basis

    @property
    def dim(self):
        return len(self.basis)

    @classmethod
    def span(cls, ambient_dim, vectors):
        """Subspace spanned by arbitrary vectors, basis in reduced echelon form."""
        vectors = [list(v) for v in vectors]
        if not vectors:
            return cls(ambient_dim, ())
        ech = _Echelon(ambient_dim)
        for v in vectors:
            ech.add({j: Q(x) for j, x in enumerate(v) if Q(x)})
        return cls(ambient_dim, ech.reduced_basis(), check=False)

    def contains(self, v):
        if not self.basis:
            return all(Q(x) == 0 for x in v)
        ech = _Echelon(self.ambient_dim)
        for b in self.basis:
            ech.add({j: x for j, x in enumerate(b) if x})
        return not ech.reduce({j: Q(x) for j, x in enumerate(v) if Q(x)})

    def contains_subspace(self, other):
        if other.ambient_dim != self.ambient_dim:
            raise DimensionError("ambient dimensions differ")
        ech = _Echelon(self.ambient_dim)
        for b in self.basis:
            ech.add({j: x for j, x in enumerate(b) if x})
        return all(not ech.reduce({j: x for j, x in enumerate(b) if x}) for b in other.basis)

    def __eq__(self, other):
        """Same ambient space and the same stored basis (not just the same span)."""
        return (isinstance(other, Subspace) and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __repr__(self):
        return "Subspace(ambient=%d, dim=%d)" % (self.ambient_dim, self.dim)


class _Echelon:
    """Incremental row echelon form over sparse rows."""

    def __init__(self, ncols):
        self.ncols = ncols
        self.pivots = {}  # pivot column -> row normalised to 1 at the pivot
        self.order = []

    def reduce(self, row):
        row = dict(row)
        pivots = self.pivots
        # pivot rows only carry columns >= their pivot, so a heap of
        # candidate columns visits every pivot hit in increasing order
        heap = [c for c in row if c in pivots]
        heapq.heapify(heap)
        done = set()
        while heap:
            c = heapq.heappop(heap)
            if c in done:
                continue
            done.add(c)
            f = row.get(c)
            if not f:
                continue
            for j, v in pivots[c].items():
                s = row.get(j, 0) - f * v
                if s:
                    if j not in row and j in pivots:
                        heapq.heappush(heap, j)
                    row[j] = s
                else:
                    row.pop(j, None)
        return row

    def add(self, row):
        row = self.reduce(row)
        if not row:
            return False
        p = min(row)
        inv = 1 / row[p]
        self.pivots[p] = {j: v * inv for j, v in row.items()}
        self.order.append(p)
        return True

    def rank(self):
        return len(self.pivots)

    def reduced_rows(self):
        """Pivot rows in fully reduced form, sorted by pivot column."""
        cols = sorted(self.pivots)
        rows = {c: dict(self.pivots[c]) for c in cols}
        for c in reversed(cols):
            r = rows[c]
            for c2 in cols:
                if c2 <= c:
                    continue
                f = r.get(c2)
                if f:
                    for j, v in rows[c2].items():
                        s = r.get(j, 0) - f * v
                        if s:
                            r[j] = s
                        else:
                            r.pop(j, None)
        return [(c, rows[c]) for c in cols]

    def reduced_basis(self):
        out = []
        for _, r in self.reduced_rows():
            out.append(tuple(r.get(j, Fraction(0)) for j in range(self.ncols)))
        return out


def _echelon_of(m):
    ech = _Echelon(m.cols)
    for r in m._data:
        if r:
            ech.add(r)
    return ech


def rank(m):
    """Row rank of m by exact elimination."""
    return _echelon_of(m).rank()


def kernel_basis(m):
    """Basis of {x : m x = 0}, one vector per free column, in echelon form."""
    ech = _echelon_of(m)
    reduced = ech.reduced_rows()
    pivot_cols = {c for c, _ in reduced}
    basis = []
    for f in range(m.cols):
        if f in pivot_cols:
            continue
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for c, r in reduced:
            x = r.get(f)
            if x:
                v[c] = -x
        basis.append(tuple(v))
    return Subspace(m.cols, basis, check=False)


def image_basis(m):
    """Basis of the column space of m (reduced echelon form)."""
    return Subspace(m.rows, _echelon_of(m.transpose()).reduced_basis(), check=False)


def solve_in_image(m, b):
    """Return some x with m x = b, or None when b is not in the image."""
    if len(b) != m.rows:
        raise DimensionError("right-hand side has length %d, matrix has %d rows" % (len(b), m.rows))
    b = [Q(v) for v in b]
    # eliminate on the augmented rows [m | b]; column m.cols carries b
    aug = _Echelon(m.cols + 1)
    for r, bi in zip(m._data, b):
        row = dict(r)
        if bi:
            row[m.cols] = bi
        if row:
            aug.add(row)
    if m.cols in aug.pivots:
        return None
    x = [Fraction(0)] * m.cols
    for c, r in aug.reduced_rows():
        x[c] = r.get(m.cols, Fraction(0))
    if m.apply(x) != b:  # back-substitution check
        raise ArithmeticError("solve_in_image produced a non-solution")
    return x


def quotient_dim(z, b):
    """dim(z) - dim(b) after checking that b lies inside z."""
    if z.ambient_dim != b.ambient_dim:
        raise DimensionError("ambient dimensions differ: %d vs %d" % (z.ambient_dim, b.ambient_dim))
    if not z.contains_subspace(b):
        raise ArithmeticError("coboundary space is not contained in the cocycle space")
    return z.dim - b.dim
