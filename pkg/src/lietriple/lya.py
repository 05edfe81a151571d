"""Lie-Yamaguti (Lie triple) algebras, Lie and Leibniz algebras, and the
constructions that turn one into another.

Structure constants are dense object arrays of Fractions:
``binary[i, j, k]`` is the coefficient of e_k in [e_i, e_j] and
``ternary[i, j, k, l]`` the coefficient of e_l in [e_i, e_j, e_k].
"""

import numpy as np

from . import _tensor as T
from .exactla import Matrix, Subspace, Q, DimensionError
from .report import AxiomReport, AxiomEntry, check_zero, check_zero_operator


class InvalidInput(ValueError):
    """Input data violates a precondition; carries an optional report."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


def _swap01(a):
    axes = list(range(a.ndim))
    axes[0], axes[1] = 1, 0
    return a.transpose(axes)


class LYAlgebra:
    """Finite-dimensional Lie-Yamaguti algebra given by structure constants."""

    def __init__(self, dim, binary=None, ternary=None, validate=True):
        self.dim = d = int(dim)
        b = T.tensor(binary, (d, d, d)) if binary is not None else T.zeros((d, d, d))
        t = T.tensor(ternary, (d, d, d, d)) if ternary is not None else T.zeros((d, d, d, d))
        if validate:
            if not T.is_zero(b + _swap01(b)):
                raise InvalidInput("binary bracket is not skew-symmetric (LY1)")
            if not T.is_zero(t + _swap01(t)):
                raise InvalidInput("ternary bracket is not skew in its first two slots (LY2)")
        self.binary = T.frozen(b)
        self.ternary = T.frozen(t)

    def bracket(self, x, y):
        x, y = _vec(x, self.dim), _vec(y, self.dim)
        return T.einsum("i,j,ijk->k", x, y, self.binary)

    def triple(self, x, y, z):
        x, y, z = _vec(x, self.dim), _vec(y, self.dim), _vec(z, self.dim)
        return T.einsum("i,j,k,ijkl->l", x, y, z, self.ternary)

    def change_basis(self, p):
        """Same algebra in the basis given by the columns of p."""
        p = T.as_array(p)
        pinv = T.inverse(p)
        b = T.einsum("ai,bj,abc,kc->ijk", p, p, self.binary, pinv)
        t = T.einsum("ai,bj,ce,abcg,kg->ijek", p, p, p, self.ternary, pinv)
        return LYAlgebra(self.dim, b, t)

    def __eq__(self, other):
        return (isinstance(other, LYAlgebra) and self.dim == other.dim
                and T.equal(self.binary, other.binary) and T.equal(self.ternary, other.ternary))

    def __repr__(self):
        return "LYAlgebra(dim=%d)" % self.dim


class LieAlgebra:
    """Lie algebra by skew structure constants; Jacobi checked on construction."""

    def __init__(self, dim, bracket=None, validate=True):
        self.dim = d = int(dim)
        b = T.tensor(bracket, (d, d, d)) if bracket is not None else T.zeros((d, d, d))
        self.bracket_tensor = T.frozen(b)
        if validate:
            rep = verify_lie(self)
            if not rep.passed:
                raise InvalidInput("not a Lie algebra: %s fails" % ", ".join(rep.failed()), rep)

    def bracket(self, x, y):
        return T.einsum("i,j,ijk->k", _vec(x, self.dim), _vec(y, self.dim), self.bracket_tensor)

    def change_basis(self, p):
        p = T.as_array(p)
        pinv = T.inverse(p)
        b = T.einsum("ai,bj,abc,kc->ijk", p, p, self.bracket_tensor, pinv)
        return LieAlgebra(self.dim, b)

    def __eq__(self, other):
        return (isinstance(other, LieAlgebra) and self.dim == other.dim
                and T.equal(self.bracket_tensor, other.bracket_tensor))

    def __repr__(self):
        return "LieAlgebra(dim=%d)" % self.dim


class LeibnizAlgebra:
    """Left Leibniz algebra: x(yz) = (xy)z + y(xz)."""

    def __init__(self, dim, product=None):
        self.dim = d = int(dim)
        p = T.tensor(product, (d, d, d)) if product is not None else T.zeros((d, d, d))
        self.product = T.frozen(p)

    def mul(self, x, y):
        return T.einsum("i,j,ijk->k", _vec(x, self.dim), _vec(y, self.dim), self.product)

    def change_basis(self, p):
        p = T.as_array(p)
        pinv = T.inverse(p)
        return LeibnizAlgebra(self.dim, T.einsum("ai,bj,abc,kc->ijk", p, p, self.product, pinv))

    def __eq__(self, other):
        return (isinstance(other, LeibnizAlgebra) and self.dim == other.dim
                and T.equal(self.product, other.product))

    def __repr__(self):
        return "LeibnizAlgebra(dim=%d)" % self.dim


def _vec(x, n):
    x = T.as_array(x).reshape(-1)
    if x.shape[0] != n:
        raise DimensionError("vector of length %d, expected %d" % (x.shape[0], n))
    return x


# ---------------------------------------------------------------- axioms

def ly_defects(b, t):
    """Defect tensors of LY1..LY6, each indexed (args..., output)."""
    def E(spec, *ops):
        return T.Lazy([(1, spec, ops)])

    J = T.einsum("abk,kco->abco", b, b) + t
    ly3 = (E("abco->abco", J) + E("bcao->abco", J) + E("cabo->abco", J)).value()
    F = T.einsum("abk,kcgo->abcgo", b, t)
    ly4 = (E("abcgo->abcgo", F) + E("bcago->abcgo", F) + E("cabgo->abcgo", F)).value()
    ly5 = (E("cek,abko->abceo", b, t)
           - E("abck,keo->abceo", t, b)
           - E("abek,cko->abceo", t, b)).value()
    ly6 = (E("cefk,abko->abcefo", t, t)
           - E("abck,kefo->abcefo", t, t)
           - E("abek,ckfo->abcefo", t, t)
           - E("abfk,ceko->abcefo", t, t)).value()
    return {"LY1": b + _swap01(b), "LY2": t + _swap01(t),
            "LY3": ly3, "LY4": ly4, "LY5": ly5, "LY6": ly6}


def verify_ly(a):
    """Check LY1-LY6 on all basis tuples."""
    rep = AxiomReport()
    for label, defect in ly_defects(a.binary, a.ternary).items():
        rep.add(check_zero(label, defect))
    return rep


def verify_lie(g):
    b = g.bracket_tensor
    J = T.einsum("abk,kco->abco", b, b)
    jac = J + J.transpose(2, 0, 1, 3) + J.transpose(1, 2, 0, 3)
    rep = AxiomReport()
    rep.add(check_zero("skew", b + _swap01(b)))
    rep.add(check_zero("Jacobi", jac))
    return rep


def verify_leibniz(l):
    p = l.product
    defect = (T.einsum("bck,ako->abco", p, p)
              - T.einsum("abk,kco->abco", p, p)
              - T.einsum("ack,bko->abco", p, p))
    rep = AxiomReport()
    rep.add(check_zero("Leibniz", defect))
    return rep


def check_homomorphism_lya(source, target, phi):
    """Check phi[x,y] = [phi x, phi y]' and the ternary analogue.

    phi is a target.dim x source.dim matrix.
    """
    f = T.as_array(phi)
    if f.shape != (target.dim, source.dim):
        raise DimensionError("homomorphism matrix is %dx%d, expected %dx%d"
                             % (f.shape + (target.dim, source.dim)))
    bin_def = (T.einsum("abk,ok->abo", source.binary, f)
               - T.einsum("ia,jb,ijo->abo", f, f, target.binary))
    ter_def = (T.einsum("abck,ok->abco", source.ternary, f)
               - T.einsum("ia,jb,lc,ijlo->abco", f, f, f, target.ternary))
    rep = AxiomReport()
    rep.add(check_zero("hom-binary", bin_def))
    rep.add(check_zero("hom-ternary", ter_def))
    return rep


# ---------------------------------------------------------- constructions

def lie_to_lya(lie):
    """Lie algebra with [x,y,z] := [[x,y],z]."""
    if not isinstance(lie, LieAlgebra):
        lie = LieAlgebra(len(lie), lie)
    b = T.as_array(lie.bracket_tensor)
    return LYAlgebra(lie.dim, b, T.einsum("abk,kco->abco", b, b))


def leibniz_to_lya(l):
    """[x,y] = xy - yx and [x,y,z] = -(xy)z."""
    rep = verify_leibniz(l)
    if not rep.passed:
        raise InvalidInput("Leibniz identity fails", rep)
    p = T.as_array(l.product)
    return LYAlgebra(l.dim, p - _swap01(p), -T.einsum("abk,kco->abco", p, p))


def lie_as_leibniz(lie):
    return LeibnizAlgebra(lie.dim, lie.bracket_tensor)


class ReductiveDecomposition:
    """g = h + m with [h,h] in h and [h,m] in m, both checked on construction."""

    def __init__(self, lie, h_basis, m_basis):
        self.lie = lie
        n = lie.dim
        self.h = h_basis if isinstance(h_basis, Subspace) else Subspace(n, h_basis)
        self.m = m_basis if isinstance(m_basis, Subspace) else Subspace(n, m_basis)
        if self.h.ambient_dim != n or self.m.ambient_dim != n:
            raise DimensionError("subspace ambient dimension differs from the Lie algebra")
        if self.h.dim + self.m.dim != n:
            raise InvalidInput("h and m do not span g (dimensions %d + %d != %d)"
                               % (self.h.dim, self.m.dim, n))
        basis = T.zeros((n, n))
        for j, v in enumerate(self.h.basis + self.m.basis):
            basis[:, j] = v
        try:
            self._coords = T.inverse(basis)  # g-coordinates -> (h, m) coordinates
        except ZeroDivisionError:
            raise InvalidInput("h and m intersect nontrivially")
        self._basis = basis
        rep = self.report()
        if not rep.passed:
            raise InvalidInput("decomposition is not reductive: %s" % ", ".join(rep.failed()), rep)

    def __eq__(self, other):
        return (isinstance(other, ReductiveDecomposition) and self.lie == other.lie
                and self.h == other.h and self.m == other.m)

    @property
    def h_matrix(self):
        return self._basis[:, :self.h.dim]

    @property
    def m_matrix(self):
        return self._basis[:, self.h.dim:]

    def split(self, v):
        """(h-coordinates, m-coordinates) of a vector of g."""
        c = T.einsum("ij,j->i", self._coords, T.as_array(v))
        return c[:self.h.dim], c[self.h.dim:]

    def report(self):
        b = self.lie.bracket_tensor
        H, M = self.h_matrix, self.m_matrix
        hh = T.einsum("ia,jb,ijk,ck->abc", H, H, b, self._coords)[:, :, self.h.dim:]
        hm = T.einsum("ia,jb,ijk,ck->abc", H, M, b, self._coords)[:, :, :self.h.dim]
        rep = AxiomReport()
        rep.add(check_zero("[h,h] in h", hh))
        rep.add(check_zero("[h,m] in m", hm))
        return rep


def reductive_to_lya(dec):
    """LY algebra on m: [x,y] = pi_m[x,y], [x,y,z] = [pi_h[x,y], z]."""
    b = dec.lie.bracket_tensor
    H, M, C = dec.h_matrix, dec.m_matrix, dec._coords
    nh = dec.h.dim
    # [m_a, m_b] in (h, m) coordinates
    mm = T.einsum("ia,jb,ijk,ck->abc", M, M, b, C)
    bm = mm[:, :, nh:]
    hpart = mm[:, :, :nh]
    # [h_e, m_c] in m coordinates
    hm = T.einsum("ie,jc,ijk,lk->ecl", H, M, b, C)[:, :, nh:]
    tm = T.einsum("abe,ecl->abcl", hpart, hm)
    return LYAlgebra(dec.m.dim, bm, tm)


def fundamental_leibniz(a):
    """Leibniz algebra on T (x) T with X o Y = ([X,y1],y2) + (y1,[X,y2])."""
    rep = verify_ly(a)
    if not rep.passed:
        raise InvalidInput("input is not an LY algebra", rep)
    d = a.dim
    t = a.ternary
    p = T.zeros((d * d, d * d, d * d))
    for x1 in range(d):
        for x2 in range(d):
            X = x1 * d + x2
            for y1 in range(d):
                for y2 in range(d):
                    Y = y1 * d + y2
                    for k in range(d):
                        c = t[x1, x2, y1, k]
                        if c:
                            p[X, Y, k * d + y2] += c
                        c = t[x1, x2, y2, k]
                        if c:
                            p[X, Y, y1 * d + k] += c
    return LeibnizAlgebra(d * d, p)


def adl_homomorphism_report(a):
    """ad^L(X)ad^L(Y) - ad^L(Y)ad^L(X) = ad^L(X o Y) on all basis pairs."""
    d = a.dim
    # adl[X, o, w] : coefficient of e_o in [x1, x2, e_w]
    adl = a.ternary.reshape(d * d, d, d).transpose(0, 2, 1)
    prod = fundamental_leibniz(a).product
    lhs = T.einsum("xow,ywv->xyov", adl, adl) - T.einsum("yow,xwv->xyov", adl, adl)
    rhs = T.einsum("xyz,zov->xyov", prod, adl)
    out = AxiomReport()
    out.add(check_zero_operator("adL-homomorphism", lhs - rhs))
    return out


def omni_lie(n):
    """LY algebra on gl_n + k^n: [(A,x),(B,y)] = (2[A,B], Ay - Bx),
    [(A,x),(B,y),(C,z)] = -([[A,B],C], [A,B]z)."""
    n = int(n)
    if n < 1:
        raise InvalidInput("omni-Lie needs n >= 1")
    N = n * n + n

    def unit(i):
        A = T.zeros((n, n))
        x = T.zeros((n,))
        if i < n * n:
            A[i // n, i % n] = T.ONE
        else:
            x[i - n * n] = T.ONE
        return A, x

    def flat(A, x):
        return np.concatenate([A.reshape(-1), x])

    units = [unit(i) for i in range(N)]
    b = T.zeros((N, N, N))
    t = T.zeros((N, N, N, N))
    for i, (A, x) in enumerate(units):
        for j, (B, y) in enumerate(units):
            AB = A.dot(B) - B.dot(A)
            b[i, j] = flat(2 * AB, A.dot(y) - B.dot(x))
            for k, (C, z) in enumerate(units):
                t[i, j, k] = flat(-(AB.dot(C) - C.dot(AB)), -AB.dot(z))
    return LYAlgebra(N, T.normalize(b), T.normalize(t))
