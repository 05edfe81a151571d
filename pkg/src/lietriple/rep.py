"""Representations (rho, D, theta) of an LY algebra, actions and semidirect products.

Operators are stored as matrices: ``rho[i, p, o]`` is entry (p, o) of
rho(e_i), so rho(e_i) f_o = sum_p rho[i, p, o] f_p; likewise D[i, j, p, o]
and theta[i, j, p, o].
"""

from . import _tensor as T
from .exactla import DimensionError
from .lya import LYAlgebra, InvalidInput, verify_ly
from .report import AxiomReport, check_zero_operator


class Representation:
    def __init__(self, algebra_dim, module_dim, rho=None, D=None, theta=None):
        self.algebra_dim = d = int(algebra_dim)
        self.module_dim = m = int(module_dim)
        self.rho = T.frozen(T.tensor(rho, (d, m, m)) if rho is not None else T.zeros((d, m, m)))
        self.D = T.frozen(T.tensor(D, (d, d, m, m)) if D is not None else T.zeros((d, d, m, m)))
        self.theta = T.frozen(T.tensor(theta, (d, d, m, m)) if theta is not None
                              else T.zeros((d, d, m, m)))

    def tensors(self):
        return self.rho, self.D, self.theta

    def change_basis(self, p_alg=None, p_mod=None):
        """Conjugate by new bases (columns of p_alg on T, p_mod on V)."""
        d, m = self.algebra_dim, self.module_dim
        pa = T.as_array(p_alg) if p_alg is not None else _eye(d)
        pm = T.as_array(p_mod) if p_mod is not None else _eye(m)
        pmi = T.inverse(pm)
        rho = T.einsum("ai,qp,apo,or->iqr", pa, pmi, self.rho, pm)
        D = T.einsum("ai,bj,qp,abpo,or->ijqr", pa, pa, pmi, self.D, pm)
        th = T.einsum("ai,bj,qp,abpo,or->ijqr", pa, pa, pmi, self.theta, pm)
        return Representation(d, m, rho, D, th)

    def __eq__(self, other):
        return (isinstance(other, Representation)
                and (self.algebra_dim, self.module_dim) == (other.algebra_dim, other.module_dim)
                and T.equal(self.rho, other.rho) and T.equal(self.D, other.D)
                and T.equal(self.theta, other.theta))

    def __repr__(self):
        return "Representation(algebra_dim=%d, module_dim=%d)" % (self.algebra_dim, self.module_dim)


def _eye(n):
    e = T.zeros((n, n))
    for i in range(n):
        e[i, i] = T.ONE
    return e


def _check_dims(a, r):
    if a.dim != r.algebra_dim:
        raise DimensionError("algebra has dimension %d, representation expects %d"
                             % (a.dim, r.algebra_dim))


def rep_defects(a, r):
    """Defect operators of R31..R62, each indexed (args..., row, col)."""
    b, t = a.binary, a.ternary
    rho, D, th = r.rho, r.D, r.theta
    r31 = (D - th.transpose(1, 0, 2, 3) + th + T.einsum("abk,kpo->abpo", b, rho)
           - T.einsum("apo,boq->abpq", rho, rho) + T.einsum("bpo,aoq->abpq", rho, rho))
    Db = T.einsum("abk,kcpo->abcpo", b, D)
    r41 = Db + Db.transpose(2, 0, 1, 3, 4) + Db.transpose(1, 2, 0, 3, 4)
    r42 = (T.einsum("abk,kcpo->abcpo", b, th) - T.einsum("acpo,boq->abcpq", th, rho)
           + T.einsum("bcpo,aoq->abcpq", th, rho))
    r51 = (T.einsum("abpo,eoq->abepq", D, rho) - T.einsum("epo,aboq->abepq", rho, D)
           - T.einsum("abek,kpo->abepo", t, rho))
    r52 = (T.einsum("cek,akpo->acepo", b, th) - T.einsum("cpo,aeoq->acepq", rho, th)
           + T.einsum("epo,acoq->acepq", rho, th))
    r61 = (T.einsum("abpo,ceoq->abcepq", D, th) - T.einsum("cepo,aboq->abcepq", th, D)
           - T.einsum("abck,kepo->abcepo", t, th) - T.einsum("abek,ckpo->abcepo", t, th))
    r62 = (T.einsum("cefk,akpo->acefpo", t, th) - T.einsum("efpo,acoq->acefpq", th, th)
           + T.einsum("cfpo,aeoq->acefpq", th, th) - T.einsum("cepo,afoq->acefpq", D, th))
    return {"R31": r31, "R41": r41, "R42": r42, "R51": r51, "R52": r52, "R61": r61, "R62": r62}


def verify_rep(a, r):
    """Check R31-R62 on all basis tuples."""
    _check_dims(a, r)
    out = AxiomReport()
    for label, defect in rep_defects(a, r).items():
        out.add(check_zero_operator(label, defect))
    return out


def d_skew_report(r):
    """D(x,y) + D(y,x) = 0 on all basis pairs (a consequence of R31)."""
    out = AxiomReport()
    out.add(check_zero_operator("D-skew", r.D + r.D.transpose(1, 0, 2, 3)))
    return out


def adjoint_rep(a):
    """rho(x)y = [x,y], D(x,y)z = [x,y,z], theta(x,y)z = [z,x,y]."""
    rep = verify_ly(a)
    if not rep.passed:
        raise InvalidInput("adjoint representation needs an LY algebra", rep)
    b, t = a.binary, a.ternary
    return Representation(a.dim, a.dim,
                          b.transpose(0, 2, 1),
                          t.transpose(0, 1, 3, 2),
                          t.transpose(1, 2, 3, 0))


class LYAction:
    """Representation of T on an LY algebra V (the acted-on target)."""

    def __init__(self, rep, target):
        if rep.module_dim != target.dim:
            raise DimensionError("representation module has dimension %d, target has %d"
                                 % (rep.module_dim, target.dim))
        self.rep = rep
        self.target = target

    def __eq__(self, other):
        return isinstance(other, LYAction) and self.rep == other.rep and self.target == other.target


def semidirect(t, action, module_brackets=True):
    """LY structure on T + V:

    [x+u, y+v] = [x,y] + rho(x)v - rho(y)u + [u,v]_V
    [x+u, y+v, z+w] = [x,y,z] + D(x,y)w + theta(y,z)u - theta(x,z)v + [u,v,w]_V

    With module_brackets=False the V brackets are dropped.
    """
    r = action.rep
    _check_dims(t, r)
    d, m = t.dim, r.module_dim
    N = d + m
    b = T.zeros((N, N, N))
    tt = T.zeros((N, N, N, N))
    X, V = slice(0, d), slice(d, N)
    b[X, X, X] = t.binary
    # [x, v] = rho(x) v ; b[x, v, p] = rho[x, p, v]
    b[X, V, V] = r.rho.transpose(0, 2, 1)
    b[V, X, V] = -r.rho.transpose(2, 0, 1)
    tt[X, X, X, X] = t.ternary
    tt[X, X, V, V] = r.D.transpose(0, 1, 3, 2)
    # [u, y, z] = theta(y,z) u
    tt[V, X, X, V] = r.theta.transpose(3, 0, 1, 2)
    # [x, v, z] = -theta(x,z) v
    tt[X, V, X, V] = -r.theta.transpose(0, 3, 1, 2)
    if module_brackets:
        b[V, V, V] = action.target.binary
        tt[V, V, V, V] = action.target.ternary
    return LYAlgebra(N, b, tt, validate=False)


def check_action(t, action):
    """Action validity.

    The module brackets are checked as an LY algebra on their own, and the
    maps (rho, D, theta) by the LY axioms of the semidirect product with
    the module brackets set to zero (equivalent to R31-R62).
    """
    out = AxiomReport()
    out.extend(verify_ly(semidirect(t, action, module_brackets=False)), "semidirect-")
    out.extend(verify_ly(action.target), "V-")
    return out
