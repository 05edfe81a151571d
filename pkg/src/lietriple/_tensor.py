"""Dense object-dtype tensors of Fractions and the small helpers around them."""

import itertools
import math
from fractions import Fraction

import numpy as np

from .exactla import Q, Matrix

ZERO = Fraction(0)
ONE = Fraction(1)


def zeros(shape):
    return np.full(shape, ZERO, dtype=object)


def tensor(data, shape):
    """Build a Fraction tensor from nested sequences, a numpy array or a sparse dict."""
    shape = tuple(int(s) for s in shape)
    if isinstance(data, dict):
        out = zeros(shape)
        for idx, v in data.items():
            out[tuple(idx)] = Q(v)
        return out
    arr = np.array(data, dtype=object)
    if arr.size == 0:
        return zeros(shape)
    if arr.shape != shape:
        raise ValueError("expected tensor of shape %s, got %s" % (shape, arr.shape))
    out = np.empty(shape, dtype=object)
    for idx in itertools.product(*(range(s) for s in shape)):
        out[idx] = Q(arr[idx])
    return out


def frozen(arr):
    arr = np.array(arr, dtype=object, copy=True)
    arr.setflags(write=False)
    return arr


_INT_LIMIT = 2 ** 62
_to_den = np.frompyfunc(lambda v: Q(v).denominator, 1, 1)
_to_fraction = np.frompyfunc(lambda n, L: Fraction(n, L), 2, 1)


def _scaled(op):
    """(integer array, scale) with op = array / scale exactly."""
    if op.dtype != object:
        return op.astype(object), 1
    L = math.lcm(*{int(v) for v in _to_den(op).reshape(-1)}) if op.size else 1
    return (op * L).astype(object), L


def _as_int64(ints):
    flat = ints.reshape(-1)
    big = max((abs(int(v)) for v in flat), default=0)
    if big >= _INT_LIMIT:
        return None, big
    return np.array([int(v) for v in flat], dtype=np.int64).reshape(ints.shape), big


def _contract(spec, ops):
    """(integer result, scale) of an einsum, without converting to Fractions."""
    ins, out_idx = spec.split("->")
    dims = {}
    for sub, o in zip(ins.split(","), ops):
        letters = sub.replace("...", "")
        shape = o.shape[o.ndim - len(letters):]  # explicit letters follow any ellipsis
        dims.update(zip(letters, shape))
    scaled = [_scaled(o) for o in ops]
    L = 1
    for _, l in scaled:
        L *= l
    ints, bound = [], 1
    for a, _ in scaled:
        arr, big = _as_int64(a)
        ints.append(arr)
        bound *= big
    summed = 1
    for ch, n in dims.items():
        if ch not in out_idx:
            summed *= n
    if all(a is not None for a in ints) and bound * summed < _INT_LIMIT:
        return np.asarray(np.einsum(spec, *ints, optimize=True)), L
    res = np.einsum(spec, *[a for a, _ in scaled], dtype=object, optimize=False)
    return np.asarray(res, dtype=object), L


def _finish(res, L):
    res = res.astype(object)
    if not res.size:
        return zeros(res.shape)
    if L == 1:
        # integral result: Python ints mix exactly with Fractions and add faster
        return res
    return _to_fraction(res, L).astype(object)


def _out_shape(spec, ops):
    """Output shape of an einsum, or None when it involves an ellipsis."""
    ins, out_idx = spec.split("->")
    if "..." in out_idx:
        return ops[0].shape if ins == "..." else None
    dims = {}
    for sub, o in zip(ins.split(","), ops):
        letters = sub.replace("...", "")
        dims.update(zip(letters, o.shape[o.ndim - len(letters):]))
    return tuple(dims[ch] for ch in out_idx)


def einsum(spec, *ops):
    """Exact einsum over Fraction tensors.

    Operands are scaled to integers and contracted in int64 when an a-priori
    bound on every output entry rules out overflow; otherwise the contraction
    runs on Python objects.
    """
    if any(o.size == 0 for o in ops):
        shape = _out_shape(spec, ops)
        if shape is not None:
            return zeros(shape)
    return _finish(*_contract(spec, ops))


def lincomb(terms):
    """Exact sum of c * einsum(spec, *ops) over terms (c, spec, ops).

    Terms are accumulated as integers over a common scale and converted to
    Fractions once.
    """
    parts = []
    for c, spec, ops in terms:
        c = Q(c)
        if any(o.size == 0 for o in ops):
            continue
        res, L = _contract(spec, ops)
        parts.append((res, c.numerator, L * c.denominator))
    if not parts:
        c, spec, ops = terms[0]
        return zeros(_out_shape(spec, ops))
    L = math.lcm(*(l for _, _, l in parts))
    scaled = [(res, num * (L // l)) for res, num, l in parts]
    bound = sum(int(np.abs(res).max(initial=0)) * abs(f) for res, f in scaled)
    fast = bound < _INT_LIMIT and all(res.dtype != object for res, _ in scaled)
    total = None
    for res, f in scaled:
        term = res * f if fast else res.astype(object) * f
        total = term if total is None else total + term
    return _finish(total, L)


class Lazy:
    """A pending linear combination of einsums, evaluated by lincomb."""

    __array_ufunc__ = None  # keep numpy from broadcasting over us

    def __init__(self, terms):
        self.terms = list(terms)

    @classmethod
    def of(cls, x):
        if isinstance(x, Lazy):
            return x
        x = np.asarray(x, dtype=object)
        return cls([(1, "...->...", (x,))])

    def __add__(self, other):
        return Lazy(self.terms + Lazy.of(other).terms)

    __radd__ = __add__

    def __neg__(self):
        return Lazy([(-Q(c), sp, ops) for c, sp, ops in self.terms])

    def __sub__(self, other):
        return self + (-Lazy.of(other))

    def __rsub__(self, other):
        return Lazy.of(other) + (-self)

    def value(self):
        return lincomb(self.terms)


def normalize(arr):
    """Replace plain int zeros produced by numpy reductions with Fractions."""
    out = np.empty(arr.shape, dtype=object)
    flat = arr.reshape(-1)
    oflat = out.reshape(-1)
    for i, v in enumerate(flat):
        oflat[i] = Q(v)
    return out


def first_nonzero(arr):
    """Lexicographically first index with a nonzero entry, or None."""
    if arr.size == 0:
        return None
    nz = np.argwhere(arr != 0)
    if len(nz) == 0:
        return None
    return tuple(int(i) for i in nz[0])


def is_zero(arr):
    return arr.size == 0 or not np.any(arr != 0)


def equal(a, b):
    return a.shape == b.shape and (a.size == 0 or bool(np.all(a == b)))


def matrix_to_array(m):
    out = zeros((m.rows, m.cols))
    for i, r in enumerate(m.sparse_rows()):
        for j, v in r.items():
            out[i, j] = v
    return out


def array_to_matrix(a):
    rows, cols = a.shape
    return Matrix(rows, cols, [{j: a[i, j] for j in range(cols) if a[i, j] != 0}
                               for i in range(rows)])


def as_array(m):
    if isinstance(m, Matrix):
        return matrix_to_array(m)
    return normalize(np.array(m, dtype=object))


def sparse_items(arr):
    """(index tuple, value) pairs of nonzero entries in lexicographic order."""
    if arr.size == 0:
        return []
    return [(tuple(int(i) for i in idx), arr[tuple(idx)]) for idx in np.argwhere(arr != 0)]


def inverse(a):
    """Exact inverse of a square Fraction array."""
    n = a.shape[0]
    aug = [[Q(a[i, j]) for j in range(n)] + [ONE if i == j else ZERO for j in range(n)]
           for i in range(n)]
    for c in range(n):
        p = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("matrix is singular")
        aug[c], aug[p] = aug[p], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [v * inv for v in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    out = zeros((n, n))
    for i in range(n):
        for j in range(n):
            out[i, j] = aug[i][n + j]
    return out
