"""Cochains C^n(T, V), evaluation, and the coboundary operators as exact matrices.

A cochain is stored by its coordinates in a canonical basis: for each skew
pair an ordered index i < j, for each free slot a full index, then the
target index, most significant first.  Raw tensors are indexed
(args..., target).

Two independent assemblies are provided.  The matrix path builds operator
rows symbolically from term tables; the pointwise path evaluates the
formulas on full tensors with einsum and is used as an oracle.
"""

import itertools
import math
import os
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _tensor as T
from .exactla import Matrix, Q, DimensionError
from .lya import InvalidInput
from .rep import verify_rep, _check_dims

MAX_CODOMAIN_ENV = "LIETRIPLE_MAX_CODOMAIN"
DEFAULT_MAX_CODOMAIN = 10 ** 6


class SizeLimitError(RuntimeError):
    """An operator would exceed the configured codomain size."""


def max_codomain():
    v = os.environ.get(MAX_CODOMAIN_ENV)
    return int(v) if v else DEFAULT_MAX_CODOMAIN


# signatures

@dataclass(frozen=True)
class SkewSignature:
    arity: int
    skew_pairs: tuple = ()

    def __post_init__(self):
        pairs = tuple(tuple(sorted((int(i), int(j)))) for i, j in self.skew_pairs)
        seen = set()
        for i, j in pairs:
            if i == j or j >= self.arity or i < 0:
                raise ValueError("bad skew pair (%d, %d) for arity %d" % (i, j, self.arity))
            if i in seen or j in seen:
                raise ValueError("skew pairs must be disjoint")
            seen.update((i, j))
        object.__setattr__(self, "arity", int(self.arity))
        object.__setattr__(self, "skew_pairs", pairs)

    @property
    def free_slots(self):
        used = {s for p in self.skew_pairs for s in p}
        return tuple(s for s in range(self.arity) if s not in used)

    def space_dim(self, d, m):
        p = d * (d - 1) // 2
        return p ** len(self.skew_pairs) * d ** len(self.free_slots) * m

    def to_dict(self):
        return {"arity": self.arity, "skew_pairs": [list(p) for p in self.skew_pairs]}


def yamaguti_signature(n):
    """C^n of Yamaguti: slots (0,1), (2,3), ... are skew."""
    return SkewSignature(n, tuple((2 * k, 2 * k + 1) for k in range(n // 2)))


SIG_NU = SkewSignature(2, ((0, 1),))
SIG_OMEGA = SkewSignature(3, ((0, 1),))
SIG_L3 = SkewSignature(3, ((0, 1),))
SIG_L4HAT = SkewSignature(4, ((0, 1),))
SIG_L4TILDE = SkewSignature(4, ((0, 1), (2, 3)))
SIG_L5 = SkewSignature(5, ((0, 1), (2, 3)))
SIG_SI3 = SkewSignature(5, ((0, 1), (2, 3)))
SIG_SII3 = SkewSignature(6, ((0, 1), (2, 3)))


def _pair_table(d):
    return np.array([(i, j) for i in range(d) for j in range(i + 1, d)],
                    dtype=np.int64).reshape(-1, 2)


def canonical_args(sig, d):
    """All canonical argument tuples, one row each, in basis order."""
    pairs = _pair_table(d)
    npairs, free = len(sig.skew_pairs), sig.free_slots
    shape = (len(pairs),) * npairs + (d,) * len(free)
    if not shape:
        return np.zeros((1, 0), dtype=np.int64)
    grid = np.indices(shape, dtype=np.int64).reshape(len(shape), -1).T
    out = np.empty((grid.shape[0], sig.arity), dtype=np.int64)
    for t, (i, j) in enumerate(sig.skew_pairs):
        out[:, i] = pairs[grid[:, t], 0]
        out[:, j] = pairs[grid[:, t], 1]
    for t, s in enumerate(free):
        out[:, s] = grid[:, npairs + t]
    return out


def canonicalize(sig, d, args):
    """Vectorized (valid, sign, base index) for rows of argument tuples.

    The coordinate of (args, o) is base * m + o; invalid rows repeat an
    index inside a skew pair and carry no coordinate.
    """
    args = np.asarray(args, dtype=np.int64)
    n = args.shape[0]
    valid = np.ones(n, dtype=bool)
    sign = np.ones(n, dtype=np.int64)
    idx = np.zeros(n, dtype=np.int64)
    p = d * (d - 1) // 2
    for i, j in sig.skew_pairs:
        u, v = args[:, i], args[:, j]
        valid &= u != v
        sign = np.where(u > v, -sign, sign)
        lo, hi = np.minimum(u, v), np.maximum(u, v)
        idx = idx * p + lo * d - lo * (lo + 1) // 2 + (hi - lo - 1)
    for s in sig.free_slots:
        idx = idx * d + args[:, s]
    return valid, sign, idx


# cochains

class Cochain:
    """An element of C(T, V) for a given skew signature."""

    def __init__(self, signature, source_dim, target_dim, coeffs=None):
        self.signature = signature
        self.source_dim = d = int(source_dim)
        self.target_dim = m = int(target_dim)
        n = signature.space_dim(d, m)
        if coeffs is None:
            coeffs = [0] * n
        coeffs = tuple(Q(c) for c in coeffs)
        if len(coeffs) != n:
            raise DimensionError("cochain needs %d coefficients, got %d" % (n, len(coeffs)))
        self.coeffs = coeffs

    @property
    def arity(self):
        return self.signature.arity

    @property
    def dim(self):
        return len(self.coeffs)

    @classmethod
    def basis_element(cls, signature, source_dim, target_dim, k):
        c = [0] * signature.space_dim(source_dim, target_dim)
        c[k] = 1
        return cls(signature, source_dim, target_dim, c)

    def index(self, args, o):
        """(coordinate, sign) of the basis tuple args with target o, or None."""
        valid, sign, base = canonicalize(self.signature, self.source_dim, [list(args)])
        if not valid[0]:
            return None
        return int(base[0]) * self.target_dim + o, int(sign[0])

    def to_tensor(self):
        d, m, sig = self.source_dim, self.target_dim, self.signature
        out = T.zeros((d,) * sig.arity + (m,))
        if not self.dim:
            return out
        args = canonical_args(sig, d)
        for r, a in enumerate(args):
            for o in range(m):
                v = self.coeffs[r * m + o]
                if not v:
                    continue
                # spread over all orderings of each skew pair
                for flips in itertools.product((False, True), repeat=len(sig.skew_pairs)):
                    b = list(a)
                    s = 1
                    for flip, (i, j) in zip(flips, sig.skew_pairs):
                        if flip:
                            b[i], b[j] = b[j], b[i]
                            s = -s
                    out[tuple(b) + (o,)] = s * v
        return out

    @classmethod
    def from_tensor(cls, signature, arr, check=True):
        """Read canonical coordinates off a raw tensor (args..., target)."""
        arr = np.asarray(arr, dtype=object)
        d, m = (arr.shape[0] if signature.arity else 0), arr.shape[-1]
        if check:
            bad = audit_pairs(arr, signature.skew_pairs)
            if bad:
                raise ValueError("tensor is not skew in slot pairs %s" % (bad,))
        args = canonical_args(signature, d)
        coeffs = []
        for a in args:
            coeffs.extend(arr[tuple(a)])
        return cls(signature, d, m, coeffs)

    @classmethod
    def from_sparse(cls, signature, source_dim, target_dim, entries):
        """Build from {(args..., o): value}; entries must be canonical tuples."""
        c = cls(signature, source_dim, target_dim)
        coeffs = list(c.coeffs)
        for key, v in entries.items():
            key = tuple(key)
            hit = c.index(key[:-1], key[-1])
            if hit is None:
                if Q(v):
                    raise ValueError("nonzero value on a degenerate tuple %s" % (key,))
                continue
            k, s = hit
            if s != 1:
                raise ValueError("tuple %s is not in canonical order" % (key,))
            coeffs[k] = Q(v)
        return cls(signature, source_dim, target_dim, coeffs)

    def sparse(self):
        """Nonzero coordinates as [(args..., o), value] in basis order."""
        out = []
        m = self.target_dim
        if not any(self.coeffs):
            return out
        args = canonical_args(self.signature, self.source_dim)
        for k, v in enumerate(self.coeffs):
            if v:
                out.append((tuple(int(x) for x in args[k // m]) + (k % m,), v))
        return out

    def is_zero(self):
        return not any(self.coeffs)

    def _same_space(self, other):
        if (self.signature, self.source_dim, self.target_dim) != \
                (other.signature, other.source_dim, other.target_dim):
            raise DimensionError("cochains live in different spaces")

    def __add__(self, other):
        self._same_space(other)
        return Cochain(self.signature, self.source_dim, self.target_dim,
                       [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Q(c)
        return Cochain(self.signature, self.source_dim, self.target_dim,
                       [c * v for v in self.coeffs])

    def __eq__(self, other):
        return (isinstance(other, Cochain) and self.signature == other.signature
                and self.source_dim == other.source_dim and self.target_dim == other.target_dim
                and self.coeffs == other.coeffs)

    def __repr__(self):
        return "Cochain(arity=%d, pairs=%s, d=%d, m=%d)" % (
            self.arity, list(self.signature.skew_pairs), self.source_dim, self.target_dim)


class _Tuple:
    """Fixed-length family of cochains with a concatenated coordinate vector."""

    names = ()
    signatures = ()

    def __init__(self, *parts):
        if len(parts) != len(self.names):
            raise TypeError("expected %d cochains" % len(self.names))
        d, m = parts[0].source_dim, parts[0].target_dim
        for p, sig in zip(parts, self.signatures):
            if p.signature != sig:
                raise ValueError("cochain signature %s, expected %s" % (p.signature, sig))
            if (p.source_dim, p.target_dim) != (d, m):
                raise DimensionError("cochain dims disagree")
        self.parts = tuple(parts)
        self.source_dim, self.target_dim = d, m

    def __getattr__(self, name):
        if name in type(self).names:
            return self.parts[type(self).names.index(name)]
        raise AttributeError(name)

    def vector(self):
        return [v for p in self.parts for v in p.coeffs]

    @classmethod
    def from_vector(cls, d, m, vec):
        vec = list(vec)
        parts, pos = [], 0
        for sig in cls.signatures:
            n = sig.space_dim(d, m)
            parts.append(Cochain(sig, d, m, vec[pos:pos + n]))
            pos += n
        if pos != len(vec):
            raise DimensionError("vector length %d, expected %d" % (len(vec), pos))
        return cls(*parts)

    @classmethod
    def zero(cls, d, m):
        return cls(*(Cochain(sig, d, m) for sig in cls.signatures))

    @classmethod
    def space_dim(cls, d, m):
        return sum(sig.space_dim(d, m) for sig in cls.signatures)

    def is_zero(self):
        return all(p.is_zero() for p in self.parts)

    def __add__(self, other):
        return type(self)(*(a + b for a, b in zip(self.parts, other.parts)))

    def __sub__(self, other):
        return type(self)(*(a - b for a, b in zip(self.parts, other.parts)))

    def scale(self, c):
        return type(self)(*(p.scale(c) for p in self.parts))

    def __eq__(self, other):
        return type(self) is type(other) and self.parts == other.parts

    def __repr__(self):
        return "%s(d=%d, m=%d)" % (type(self).__name__, self.source_dim, self.target_dim)


class CochainPair(_Tuple):
    names = ("nu", "omega")
    signatures = (SIG_NU, SIG_OMEGA)


class CochainQuadruple(_Tuple):
    names = ("l3", "l4hat", "l4tilde", "l5")
    signatures = (SIG_L3, SIG_L4HAT, SIG_L4TILDE, SIG_L5)


def eval_cochain(c, args):
    """Multilinear evaluation at vectors args (each of length dim T)."""
    if len(args) != c.arity:
        raise DimensionError("cochain takes %d arguments, got %d" % (c.arity, len(args)))
    out = c.to_tensor()
    for x in args:
        x = np.array([Q(v) for v in x], dtype=object)
        if len(x) != c.source_dim:
            raise DimensionError("argument of length %d, expected %d" % (len(x), c.source_dim))
        out = np.tensordot(x, out, axes=(0, 0)) if c.source_dim else out[0]
    return [Q(v) for v in out]


def audit_pairs(arr, pairs):
    """Pairs (i, j) in which the raw tensor fails to be skew."""
    bad = []
    for i, j in pairs:
        if arr.size and not T.is_zero(arr + np.swapaxes(arr, i, j)):
            bad.append((i, j))
    return bad


@dataclass(frozen=True)
class SymmetryAudit:
    satisfied: tuple
    violated: tuple

    @property
    def holds(self):
        return not self.violated


def symmetry_audit(c, candidate):
    """Which skew pairs of the candidate signature the cochain's tensor satisfies."""
    if candidate.arity != c.arity:
        raise DimensionError("candidate arity %d, cochain arity %d" % (candidate.arity, c.arity))
    arr = c.to_tensor() if isinstance(c, Cochain) else np.asarray(c, dtype=object)
    bad = audit_pairs(arr, candidate.skew_pairs)
    good = tuple(p for p in candidate.skew_pairs if p not in bad)
    return SymmetryAudit(good, tuple(bad))


# term tables for the matrix path
#
# A term is coef * [op(...)] g(slots) where g is a domain block, slots hold
# output positions or one bracket ('b', i, j) / ('t', i, j, k) of output
# positions, and op is None or ('rho', i) / ('D', i, j) / ('theta', i, j).
# Every term carries at most one structure constant.

@dataclass(frozen=True)
class Term:
    coef: int
    block: int
    slots: tuple
    op: tuple = None


def _cyc3(terms_of):
    out = []
    for a, b, c in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        out.extend(terms_of(a, b, c))
    return out


def _hat(k, n):
    """Positions 0..n-1 without the pair (2k, 2k+1)."""
    return [s for s in range(n) if s not in (2 * k, 2 * k + 1)]


def yamaguti_terms(n, f, g):
    """Terms of (delta_I f, delta_II g) for f in C^{2n}, g in C^{2n+1}."""
    N = 2 * n + 2
    dI = [Term(1, g, tuple(range(2 * n)) + (2 * n + 1,), ("rho", 2 * n)),
          Term(-1, g, tuple(range(2 * n + 1)), ("rho", 2 * n + 1)),
          Term(-1, g, tuple(range(2 * n)) + (("b", 2 * n, 2 * n + 1),))]
    for k in range(n):
        sgn = (-1) ** (n + k)  # (-1)^(n+k+1) with k counted from 1
        rest = _hat(k, N)
        dI.append(Term(sgn, f, tuple(rest), ("D", 2 * k, 2 * k + 1)))
        for j in range(2 * k + 2, N):
            dI.append(Term(-sgn, f, tuple(("t", 2 * k, 2 * k + 1, j) if s == j else s
                                          for s in rest)))
    N = 2 * n + 3
    dII = [Term(1, g, tuple(range(2 * n + 1)), ("theta", 2 * n + 1, 2 * n + 2)),
           Term(-1, g, tuple(range(2 * n)) + (2 * n + 1,), ("theta", 2 * n, 2 * n + 2))]
    for k in range(n + 1):
        sgn = (-1) ** (n + k)
        rest = _hat(k, N)
        dII.append(Term(sgn, g, tuple(rest), ("D", 2 * k, 2 * k + 1)))
        for j in range(2 * k + 2, N):
            dII.append(Term(-sgn, g, tuple(("t", 2 * k, 2 * k + 1, j) if s == j else s
                                           for s in rest)))
    return dI, dII


def _delta2_star_terms():
    nu, om = 0, 1
    sI = _cyc3(lambda a, b, c: [Term(1, om, (a, b, c)),
                                Term(-1, nu, (b, c), ("rho", a)),
                                Term(1, nu, (("b", a, b), c))])
    sII = _cyc3(lambda a, b, c: [Term(1, nu, (b, c), ("theta", a, 3)),
                                 Term(1, om, (("b", a, b), c, 3))])
    return sI, sII


def _delta3_star_terms():
    l3, l4h, l4t, l5 = 0, 1, 2, 3
    sI = [Term(1, l3, (2, 3, 4), ("D", 0, 1)),
          Term(-1, l3, (("t", 0, 1, 2), 3, 4)),
          Term(-1, l3, (2, ("t", 0, 1, 3), 4)),
          Term(-1, l3, (2, 3, ("t", 0, 1, 4))),
          Term(1, l4t, (0, 1, ("b", 2, 3), 4)),
          Term(1, l4t, (0, 1, 3, ("b", 2, 4))),
          Term(-1, l4t, (0, 1, 2, ("b", 3, 4))),
          Term(-1, l4t, (0, 1, 3, 4), ("rho", 2)),
          Term(1, l4t, (0, 1, 2, 4), ("rho", 3)),
          Term(-1, l4t, (0, 1, 2, 3), ("rho", 4)),
          Term(1, l5, (0, 1, 2, 3, 4)),
          Term(1, l5, (0, 1, 3, 4, 2)),
          Term(1, l5, (0, 1, 4, 2, 3))]
    sII = [Term(1, l4h, (2, 3, 4, 5), ("D", 0, 1)),
           Term(-1, l4h, (("t", 0, 1, 2), 3, 4, 5)),
           Term(-1, l4h, (2, ("t", 0, 1, 3), 4, 5)),
           Term(-1, l4h, (2, 3, ("t", 0, 1, 4), 5)),
           Term(-1, l4h, (2, 3, 4, ("t", 0, 1, 5))),
           Term(1, l4t, (0, 1, 3, 4), ("theta", 2, 5)),
           Term(1, l4t, (0, 1, 2, 3), ("theta", 4, 5)),
           Term(-1, l4t, (0, 1, 2, 4), ("theta", 3, 5)),
           Term(1, l5, (0, 1, ("b", 2, 3), 4, 5)),
           Term(1, l5, (0, 1, 3, ("b", 2, 4), 5)),
           Term(-1, l5, (0, 1, 2, ("b", 3, 4), 5))]
    return sI, sII


# operator matrices

class OperatorMatrix:
    """Exact matrix of a linear operator between products of cochain spaces.

    Entries are stored as integer triplets (rows, cols, vals) together with
    a common denominator, so the operator is vals / denominator.
    """

    def __init__(self, label, domain, codomain, source_dim, target_dim,
                 rows, cols, vals, denominator=1):
        self.label = label
        self.domain = tuple(domain)  # ((name, SkewSignature), ...)
        self.codomain = tuple(codomain)
        self.source_dim, self.target_dim = source_dim, target_dim
        self.rows, self.cols, self.vals = rows, cols, vals
        self.denominator = int(denominator)
        self.shape = (sum(s.space_dim(source_dim, target_dim) for _, s in self.codomain),
                      sum(s.space_dim(source_dim, target_dim) for _, s in self.domain))
        self._matrix = None

    def _entries(self):
        return zip((int(r) for r in self.rows), (int(c) for c in self.cols),
                   (int(v) for v in self.vals))

    @property
    def matrix(self):
        """The operator as an exact Matrix."""
        if self._matrix is None:
            data = [dict() for _ in range(self.shape[0])]
            L = self.denominator
            for r, c, v in self._entries():
                data[r][c] = Fraction(v, L)
            self._matrix = Matrix(self.shape[0], self.shape[1], data)
        return self._matrix

    def integer_matrix(self):
        """denominator * operator, same kernel and image."""
        data = [dict() for _ in range(self.shape[0])]
        for r, c, v in self._entries():
            data[r][c] = v
        return Matrix(self.shape[0], self.shape[1], data)

    def apply(self, x):
        if len(x) != self.shape[1]:
            raise DimensionError("vector length %d, operator has %d columns"
                                 % (len(x), self.shape[1]))
        x = [Q(v) for v in x]
        acc = [0] * self.shape[0]
        for r, c, v in self._entries():
            if x[c]:
                acc[r] += v * x[c]
        return [Fraction(a) / self.denominator for a in acc]

    def is_zero(self):
        return len(self.vals) == 0

    def compose_is_zero(self, first):
        """True iff self o first is the zero map."""
        if self.shape[1] != first.shape[0]:
            raise DimensionError("cannot compose %s after %s" % (self.shape, first.shape))
        if self.is_zero() or first.is_zero():
            return True
        amax = int(np.max(np.abs(self.vals)))
        bmax = int(np.max(np.abs(first.vals)))
        if (self.vals.dtype != object and first.vals.dtype != object
                and amax * bmax * self.shape[1] < 2 ** 62):
            from scipy import sparse
            a = sparse.csr_matrix((self.vals.astype(np.int64), (self.rows, self.cols)),
                                  shape=self.shape)
            b = sparse.csr_matrix((first.vals.astype(np.int64), (first.rows, first.cols)),
                                  shape=first.shape)
            prod = (a @ b).tocoo()
            return not np.any(prod.data)
        return (self.integer_matrix() @ first.integer_matrix()).is_zero()

    def block_offsets(self, which="codomain"):
        blocks = self.codomain if which == "codomain" else self.domain
        out, pos = [], 0
        for name, sig in blocks:
            n = sig.space_dim(self.source_dim, self.target_dim)
            out.append((name, pos, pos + n))
            pos += n
        return out

    def describe_row(self, row):
        """(component name, argument tuple, target index) of a codomain row."""
        for name, lo, hi in self.block_offsets():
            if lo <= row < hi:
                sig = dict(self.codomain)[name]
                base, o = divmod(row - lo, self.target_dim)
                args = canonical_args(sig, self.source_dim)[base]
                return name, tuple(int(x) for x in args), o
        raise IndexError(row)

    def __repr__(self):
        return "OperatorMatrix(%r, %dx%d)" % (self.label, self.shape[0], self.shape[1])


def _lcm_denominator(arrs):
    L = 1
    for a in arrs:
        for v in a.reshape(-1):
            v = Q(v)
            if v:
                L = L * v.denominator // math.gcd(L, v.denominator)
    return L


def _scaled(a, L, dtype):
    out = np.empty(a.shape, dtype=dtype)
    flat, oflat = a.reshape(-1), out.reshape(-1)
    for i, v in enumerate(flat):
        x = Q(v) * L
        oflat[i] = int(x.numerator)
    return out


class _Assembler:
    def __init__(self, a, r, domain, codomain, terms):
        self.d, self.m = d, m = a.dim, r.module_dim
        self.domain, self.codomain, self.terms = domain, codomain, terms
        consts = [a.binary, a.ternary, r.rho, r.D, r.theta]
        self.L = L = _lcm_denominator(consts)
        big = max([L] + [abs(int(Q(v) * L)) for c in consts for v in c.reshape(-1)])
        nterms = max([len(t) for t in terms] + [1])
        self.dtype = np.int64 if big * nterms * 4 < 2 ** 62 else object
        self.b, self.t, self.rho, self.D, self.theta = (_scaled(c, L, self.dtype) for c in consts)
        self.dom_off = []
        pos = 0
        for _, sig in domain:
            self.dom_off.append(pos)
            pos += sig.space_dim(d, m)
        self.ncols = pos

    def _columns(self, term, A):
        """(domain args, bracket constant, source row) for each expanded row.

        Without a bracket the constant and source rows are None.
        """
        bracket = [(s, sl) for s, sl in enumerate(term.slots) if not isinstance(sl, int)]
        if not bracket:
            return A[:, list(term.slots)], None, None
        (pos, br), = bracket
        d = self.d
        R = A.shape[0]
        args = np.empty((R, d, len(term.slots)), dtype=np.int64)
        for s, sl in enumerate(term.slots):
            args[:, :, s] = np.arange(d)[None, :] if s == pos else A[:, sl][:, None]
        if br[0] == "b":
            const = self.b[A[:, br[1]], A[:, br[2]], :]
        else:
            const = self.t[A[:, br[1]], A[:, br[2]], A[:, br[3]], :]
        return args.reshape(R * d, -1), const.reshape(R * d), np.repeat(np.arange(R), d)

    def component(self, sig, terms, row_off):
        d, m = self.d, self.m
        A = canonical_args(sig, d)
        R = A.shape[0]
        rows, cols, vals = [], [], []
        if R == 0 or m == 0:
            return rows, cols, vals
        o = np.arange(m)
        for term in terms:
            dsig = self.domain[term.block][1]
            coff = self.dom_off[term.block]
            args, const, which = self._columns(term, A)
            if which is None:
                which = np.arange(R)
            valid, sign, base = canonicalize(dsig, d, args)
            if const is not None:
                valid &= const != 0
            which, sign, base = which[valid], sign[valid], base[valid]
            k = term.coef * sign
            if const is not None:
                k = k * const[valid]
            elif term.op is None:
                k = k * self.L
            rbase = row_off + which * m
            cbase = coff + base * m
            if term.op is None:
                rows.append((rbase[:, None] + o[None, :]).reshape(-1))
                cols.append((cbase[:, None] + o[None, :]).reshape(-1))
                vals.append(np.repeat(np.asarray(k, dtype=self.dtype), m))
                continue
            kind, pos = term.op[0], term.op[1:]
            src = A[which]
            if kind == "rho":
                M = self.rho[src[:, pos[0]]]
            else:
                M = (self.D if kind == "D" else self.theta)[src[:, pos[0]], src[:, pos[1]]]
            # M[:, o, P]: output o, input coordinate P
            v = (np.asarray(k, dtype=self.dtype)[:, None, None] * M).reshape(-1)
            rr = np.broadcast_to(rbase[:, None, None] + o[None, :, None],
                                 M.shape).reshape(-1)
            cc = np.broadcast_to(cbase[:, None, None] + o[None, None, :],
                                 M.shape).reshape(-1)
            keep = v != 0
            rows.append(rr[keep])
            cols.append(cc[keep])
            vals.append(v[keep])
        return rows, cols, vals

    def build(self, label):
        d, m = self.d, self.m
        total = sum(sig.space_dim(d, m) for _, sig in self.codomain)
        if total > max_codomain():
            raise SizeLimitError("%s needs %d codomain rows, limit is %d (set %s)"
                                 % (label, total, max_codomain(), MAX_CODOMAIN_ENV))
        rows, cols, vals = [], [], []
        off = 0
        for (_, sig), terms in zip(self.codomain, self.terms):
            r, c, v = self.component(sig, terms, off)
            rows += r
            cols += c
            vals += v
            off += sig.space_dim(d, m)
        if rows:
            rows = np.concatenate(rows).astype(np.int64)
            cols = np.concatenate(cols).astype(np.int64)
            vals = np.concatenate([np.asarray(v, dtype=self.dtype) for v in vals])
        else:
            rows = cols = np.zeros(0, dtype=np.int64)
            vals = np.zeros(0, dtype=self.dtype)
        # sum duplicates and drop cancellations
        key = rows * max(self.ncols, 1) + cols
        uniq, inv = np.unique(key, return_inverse=True)
        acc = np.zeros(len(uniq), dtype=self.dtype)
        np.add.at(acc, inv, vals)
        keep = acc != 0
        uniq, acc = uniq[keep], acc[keep]
        n = max(self.ncols, 1)
        return OperatorMatrix(label, self.domain, self.codomain, d, m,
                              uniq // n, uniq % n, acc, self.L)


def _require_rep(a, r, check):
    _check_dims(a, r)
    if check:
        rep = verify_rep(a, r)
        if not rep.passed:
            raise InvalidInput("not a representation: %s fails" % ", ".join(rep.failed()), rep)


def yamaguti_delta(n, a, r, check=True):
    """Matrix of delta: C^{2n} x C^{2n+1} -> C^{2n+2} x C^{2n+3}."""
    if n < 1:
        raise ValueError("n must be at least 1")
    _require_rep(a, r, check)
    dom = (("f", yamaguti_signature(2 * n)), ("g", yamaguti_signature(2 * n + 1)))
    cod = (("delta_I", yamaguti_signature(2 * n + 2)),
           ("delta_II", yamaguti_signature(2 * n + 3)))
    return _Assembler(a, r, dom, cod, yamaguti_terms(n, 0, 1)).build("yamaguti_delta(%d)" % n)


DELTA2_DOMAIN = (("nu", SIG_NU), ("omega", SIG_OMEGA))
DELTA2_CODOMAIN = (("l3", SIG_L3), ("l4hat", SIG_L4HAT),
                   ("l4tilde", SIG_L4TILDE), ("l5", SIG_L5))
DELTA3_CODOMAIN = (("star_I", SIG_SI3), ("star_II", SIG_SII3),
                   ("delta_I", yamaguti_signature(6)), ("delta_II", yamaguti_signature(7)))


def delta2(a, r, check=True):
    """Matrix of Delta2: C^(2,3) -> C^(3,4) x C^(4,5)."""
    _require_rep(a, r, check)
    sI, sII = _delta2_star_terms()
    dI, dII = yamaguti_terms(1, 0, 1)
    return _Assembler(a, r, DELTA2_DOMAIN, DELTA2_CODOMAIN,
                      (sI, sII, dI, dII)).build("delta2")


def delta3(a, r, check=True):
    """Matrix of Delta3: C^(3,4) x C^(4,5) -> C^(5,6) x C^(6,7)."""
    _require_rep(a, r, check)
    sI, sII = _delta3_star_terms()
    dI, dII = yamaguti_terms(2, 2, 3)
    return _Assembler(a, r, DELTA2_CODOMAIN, DELTA3_CODOMAIN,
                      (sI, sII, dI, dII)).build("delta3")


# pointwise path (oracle)

class _Pointwise:
    """Evaluate formula terms on full tensors.

    ev(f, slots, out, op) returns the tensor indexed out + 'o' of the term
    op(f(slots)); slots are letters of out or brackets ('b', u, v) /
    ('t', u, v, w) of letters.
    """

    def __init__(self, a, r):
        self.b, self.t = a.binary, a.ternary
        self.ops = {"rho": r.rho, "D": r.D, "theta": r.theta}

    def ev(self, f, slots, out, op=None):
        return self.term(f, slots, out, op).value()

    def term(self, f, slots, out, op=None):
        """Like ev, but returns a T.Lazy so that sums are evaluated in one pass."""
        fresh = iter("KLMNQRSTUVW")
        fidx, subs, ops = "", [], []
        for sl in slots:
            if isinstance(sl, str):
                fidx += sl
                continue
            k = next(fresh)
            fidx += k
            ops.append(self.b if sl[0] == "b" else self.t)
            subs.append("".join(sl[1:]) + k)
        if op is None:
            spec = ",".join([fidx + "o"] + subs) + "->" + out + "o"
            return T.Lazy([(1, spec, (f, *ops))])
        M = self.ops[op[0]]
        spec = ",".join([fidx + "P", "".join(op[1:]) + "oP"] + subs) + "->" + out + "o"
        return T.Lazy([(1, spec, (f, M, *ops))])


def _cyc(F, out):
    """Sum of F over cyclic permutations of the first three letters of out."""
    a, b, c = out[:3]
    rest = out[3:]
    return (F + T.einsum(out + "o->" + b + c + a + rest + "o", F)
            + T.einsum(out + "o->" + c + a + b + rest + "o", F))


def _B(u, v):
    return ("b", u, v)


def _Tr(u, v, w):
    return ("t", u, v, w)


def pointwise_delta2(a, r, pair):
    """Delta2 of a CochainPair by direct formula evaluation."""
    P = _Pointwise(a, r)
    ev = P.ev
    nu, om = pair.nu.to_tensor(), pair.omega.to_tensor()
    F = om - ev(nu, "bc", "abc", ("rho", "a")) + ev(nu, [_B("a", "b"), "c"], "abc")
    sI = _cyc(F, "abc")
    F = ev(nu, "bc", "abcg", ("theta", "a", "g")) + ev(om, [_B("a", "b"), "c", "g"], "abcg")
    sII = _cyc(F, "abcg")
    dI, dII = _pointwise_yamaguti1(P, nu, om)
    return CochainQuadruple(*(Cochain.from_tensor(sig, x)
                              for (_, sig), x in zip(DELTA2_CODOMAIN, (sI, sII, dI, dII))))


def _pointwise_yamaguti1(P, nu, om):
    ev = P.term
    o = "abce"
    dI = (-ev(om, ["a", "b", _B("c", "e")], o) - ev(om, "abc", o, ("rho", "e"))
          + ev(om, "abe", o, ("rho", "c")) - ev(nu, "ce", o, ("D", "a", "b"))
          + ev(nu, [_Tr("a", "b", "c"), "e"], o) + ev(nu, ["c", _Tr("a", "b", "e")], o))
    o = "abcef"
    dII = (-ev(om, ["a", "b", _Tr("c", "e", "f")], o) + ev(om, [_Tr("a", "b", "c"), "e", "f"], o)
           + ev(om, ["c", _Tr("a", "b", "e"), "f"], o) + ev(om, ["c", "e", _Tr("a", "b", "f")], o)
           - ev(om, "cef", o, ("D", "a", "b")) + ev(om, "abc", o, ("theta", "e", "f"))
           - ev(om, "abe", o, ("theta", "c", "f")) + ev(om, "abf", o, ("D", "c", "e")))
    return dI.value(), dII.value()


def pointwise_yamaguti1(a, r, f, g):
    """(delta_I f, delta_II g) for n = 1 by direct formula evaluation."""
    dI, dII = _pointwise_yamaguti1(_Pointwise(a, r), f.to_tensor(), g.to_tensor())
    return (Cochain.from_tensor(yamaguti_signature(4), dI),
            Cochain.from_tensor(yamaguti_signature(5), dII))


def pointwise_delta3(a, r, quad):
    """Delta3 of a CochainQuadruple by direct formula evaluation."""
    ev = _Pointwise(a, r).term
    l3, l4h, l4t, l5 = (p.to_tensor() for p in quad.parts)
    o = "abcef"
    sI = (ev(l3, "cef", o, ("D", "a", "b")) - ev(l3, [_Tr("a", "b", "c"), "e", "f"], o)
          - ev(l3, ["c", _Tr("a", "b", "e"), "f"], o) - ev(l3, ["c", "e", _Tr("a", "b", "f")], o)
          + ev(l4t, ["a", "b", _B("c", "e"), "f"], o) + ev(l4t, ["a", "b", "e", _B("c", "f")], o)
          - ev(l4t, ["a", "b", "c", _B("e", "f")], o)
          - ev(l4t, "abef", o, ("rho", "c")) + ev(l4t, "abcf", o, ("rho", "e"))
          - ev(l4t, "abce", o, ("rho", "f"))
          + ev(l5, "abcef", o) + ev(l5, "abefc", o) + ev(l5, "abfce", o))
    o = "abcefg"
    sII = (ev(l4h, "cefg", o, ("D", "a", "b")) - ev(l4h, [_Tr("a", "b", "c"), "e", "f", "g"], o)
           - ev(l4h, ["c", _Tr("a", "b", "e"), "f", "g"], o)
           - ev(l4h, ["c", "e", _Tr("a", "b", "f"), "g"], o)
           - ev(l4h, ["c", "e", "f", _Tr("a", "b", "g")], o)
           + ev(l4t, "abef", o, ("theta", "c", "g")) + ev(l4t, "abce", o, ("theta", "f", "g"))
           - ev(l4t, "abcf", o, ("theta", "e", "g"))
           + ev(l5, ["a", "b", _B("c", "e"), "f", "g"], o)
           + ev(l5, ["a", "b", "e", _B("c", "f"), "g"], o)
           - ev(l5, ["a", "b", "c", _B("e", "f"), "g"], o))
    o = "abcegh"
    tI = (ev(l4t, "cegh", o, ("D", "a", "b")) - ev(l4t, "abgh", o, ("D", "c", "e"))
          + ev(l5, "abceh", o, ("rho", "g")) - ev(l5, "abceg", o, ("rho", "h"))
          - ev(l5, ["a", "b", "c", "e", _B("g", "h")], o)
          - ev(l4t, [_Tr("a", "b", "c"), "e", "g", "h"], o)
          - ev(l4t, ["c", _Tr("a", "b", "e"), "g", "h"], o)
          - ev(l4t, ["c", "e", _Tr("a", "b", "g"), "h"], o)
          - ev(l4t, ["c", "e", "g", _Tr("a", "b", "h")], o)
          + ev(l4t, ["a", "b", _Tr("c", "e", "g"), "h"], o)
          + ev(l4t, ["a", "b", "g", _Tr("c", "e", "h")], o))
    o = "abceghi"
    tII = (ev(l5, "abceg", o, ("theta", "h", "i")) - ev(l5, "abceh", o, ("theta", "g", "i"))
           + ev(l5, "ceghi", o, ("D", "a", "b")) - ev(l5, "abghi", o, ("D", "c", "e"))
           + ev(l5, "abcei", o, ("D", "g", "h"))
           - ev(l5, [_Tr("a", "b", "c"), "e", "g", "h", "i"], o)
           - ev(l5, ["c", _Tr("a", "b", "e"), "g", "h", "i"], o)
           - ev(l5, ["c", "e", _Tr("a", "b", "g"), "h", "i"], o)
           - ev(l5, ["c", "e", "g", _Tr("a", "b", "h"), "i"], o)
           - ev(l5, ["c", "e", "g", "h", _Tr("a", "b", "i")], o)
           + ev(l5, ["a", "b", _Tr("c", "e", "g"), "h", "i"], o)
           + ev(l5, ["a", "b", "g", _Tr("c", "e", "h"), "i"], o)
           + ev(l5, ["a", "b", "g", "h", _Tr("c", "e", "i")], o)
           - ev(l5, ["a", "b", "c", "e", _Tr("g", "h", "i")], o))
    return [Cochain.from_tensor(sig, x)
            for (_, sig), x in zip(DELTA3_CODOMAIN,
                                   (sI.value(), sII.value(), tI.value(), tII.value()))]


def pointwise_matrix(label, a, r):
    """Operator matrix assembled column by column from the pointwise path.

    label is one of "yamaguti1", "delta2", "delta3".
    """
    _check_dims(a, r)
    d, m = a.dim, r.module_dim
    if label == "yamaguti1":
        dom = [yamaguti_signature(2), yamaguti_signature(3)]

        def image(parts):
            return pointwise_yamaguti1(a, r, *parts)
    elif label == "delta2":
        dom = list(CochainPair.signatures)

        def image(parts):
            return pointwise_delta2(a, r, CochainPair(*parts)).parts
    elif label == "delta3":
        dom = list(CochainQuadruple.signatures)

        def image(parts):
            return pointwise_delta3(a, r, CochainQuadruple(*parts))
    else:
        raise ValueError("unknown operator %r" % label)
    sizes = [s.space_dim(d, m) for s in dom]
    columns = []
    for b, n in enumerate(sizes):
        for k in range(n):
            parts = [Cochain.basis_element(s, d, m, k) if i == b else Cochain(s, d, m)
                     for i, s in enumerate(dom)]
            columns.append([v for c in image(parts) for v in c.coeffs])
    rows = sum(c.dim for c in image([Cochain(s, d, m) for s in dom]))
    return Matrix.from_columns(columns, rows) if columns else Matrix.zero(rows, 0)
