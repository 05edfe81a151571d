"""2-term L-infinity triple algebras, their homomorphisms, and the skeletal
correspondence with (LY algebra, representation, (3,4,4,5)-cocycle).

Mixed brackets are stored as operators on V1, as in a representation:
[x, u] = rho(x)u, [x, y, u] = D(x, y)u and [u, x, y] = theta(x, y)u.
The remaining placements follow from the skew conditions:
[u, x] = -rho(x)u and [x, u, y] = -theta(x, y)u.  Brackets with two or
more arguments in V1 vanish.
"""

from types import SimpleNamespace

import numpy as np

from . import _tensor as T
from .cochain import (Cochain, CochainQuadruple, SIG_NU, SIG_OMEGA, _Pointwise, _B, _Tr)
from .exactla import DimensionError
from .lya import LYAlgebra, InvalidInput
from .rep import Representation
from .report import AxiomReport, check_zero


def _swap01(a):
    return np.swapaxes(a, 0, 1)


def _cyc3(F):
    """Sum of F over cyclic permutations of its first three axes."""
    rest = tuple(range(3, F.ndim))
    return F + F.transpose((2, 0, 1) + rest) + F.transpose((1, 2, 0) + rest)


class TwoTermAlgebra:
    def __init__(self, v0_dim, v1_dim, d=None, b00=None, t000=None, rho=None, D=None,
                 theta=None, l3=None, l4hat=None, l4tilde=None, l5=None, validate=True):
        self.v0_dim = n0 = int(v0_dim)
        self.v1_dim = n1 = int(v1_dim)
        self.d = T.frozen(T.tensor(d, (n0, n1)) if d is not None else T.zeros((n0, n1)))
        self.b00 = T.frozen(T.tensor(b00, (n0,) * 3) if b00 is not None else T.zeros((n0,) * 3))
        self.t000 = T.frozen(T.tensor(t000, (n0,) * 4) if t000 is not None
                             else T.zeros((n0,) * 4))
        rep = Representation(n0, n1, rho, D, theta)
        self.rho, self.D, self.theta = rep.rho, rep.D, rep.theta
        maps = []
        for c, sig in zip((l3, l4hat, l4tilde, l5), CochainQuadruple.signatures):
            c = c if c is not None else Cochain(sig, n0, n1)
            if (c.signature, c.source_dim, c.target_dim) != (sig, n0, n1):
                raise DimensionError("correction map has the wrong signature or dims")
            maps.append(c)
        self.l3, self.l4hat, self.l4tilde, self.l5 = maps
        if validate:
            rep = structural_report(self)
            if not rep.passed:
                raise InvalidInput("skew conditions fail: %s" % ", ".join(rep.failed()), rep)

    def quadruple(self):
        return CochainQuadruple(self.l3, self.l4hat, self.l4tilde, self.l5)

    def representation(self):
        return Representation(self.v0_dim, self.v1_dim, self.rho, self.D, self.theta)

    def v0_algebra(self, validate=True):
        return LYAlgebra(self.v0_dim, self.b00, self.t000, validate=validate)

    # bracket-oriented views: b01[x, u, out], tD[x, y, u, out], tTheta[u, x, y, out]
    @property
    def b01(self):
        return self.rho.transpose(0, 2, 1)

    @property
    def tD(self):
        return self.D.transpose(0, 1, 3, 2)

    @property
    def tTheta(self):
        return self.theta.transpose(3, 0, 1, 2)

    @property
    def is_skeletal(self):
        return T.is_zero(self.d)

    @property
    def is_strict(self):
        return self.quadruple().is_zero()

    def __eq__(self, other):
        if not isinstance(other, TwoTermAlgebra):
            return False
        if (self.v0_dim, self.v1_dim) != (other.v0_dim, other.v1_dim):
            return False
        pairs = [(self.d, other.d), (self.b00, other.b00), (self.t000, other.t000),
                 (self.rho, other.rho), (self.D, other.D), (self.theta, other.theta)]
        return all(T.equal(x, y) for x, y in pairs) and self.quadruple() == other.quadruple()

    def __repr__(self):
        return "TwoTermAlgebra(v0_dim=%d, v1_dim=%d)" % (self.v0_dim, self.v1_dim)


def structural_report(t):
    """Conditions (i) and (ii)."""
    out = AxiomReport()
    out.add(check_zero("i", t.b00 + _swap01(t.b00)))
    out.add(check_zero("ii", t.t000 + _swap01(t.t000)))
    # D indexed (x, y, out, in); reorder to (x, y, u, out)
    Dx = t.D.transpose(0, 1, 3, 2)
    out.add(check_zero("ii-mixed", Dx + _swap01(Dx)))
    return out


E1_CONVENTIONS = ("cyclic", "single-ternary")


def _defects(t, e1="cyclic"):
    """Defect tensors, each indexed (arguments..., output).

    e1 selects how the second line of (e1) reads its cyclic sums: "cyclic"
    cycles both the binary and the ternary term over (x1, x2, u);
    "single-ternary" cycles only the binary term.
    """
    if e1 not in E1_CONVENTIONS:
        raise ValueError("unknown (e1) convention %r" % e1)
    E = T.einsum
    dm, b, tt = t.d, t.b00, t.t000
    rho, D, th = t.rho, t.D, t.theta
    L3, L4h, L4t, L5 = (c.to_tensor() for c in (t.l3, t.l4hat, t.l4tilde, t.l5))
    out = {}
    # (a) d[x,u] = [x,du] ; [du,v] = [u,dv]
    out["a1"] = E("ap,ipo->ioa", dm, rho) - E("ika,ko->ioa", b, dm)
    out["a2"] = E("ko,kpq->oqp", dm, rho) + E("kq,kpo->oqp", dm, rho)
    # (b) d[x1,x2,u] = [x1,x2,du] ; d[u,x1,x2] = [du,x1,x2]
    out["b1"] = E("ap,ijpo->ijoa", dm, D) - E("ijka,ko->ijoa", tt, dm)
    out["b2"] = E("ap,ijpo->oija", dm, th) - E("ko,kija->oija", dm, tt)
    # (d) [du,v,x] = [u,dv,x] ; [x,du,v] = [x,u,dv]
    out["d1"] = E("kq,kipo->oqip", dm, th) + E("ko,kipq->oqip", dm, th)
    out["d2"] = E("ko,ikpq->ioqp", dm, D) + E("kq,ikpo->ioqp", dm, th)
    # (e1)
    J = E("ijm,mka->ijka", b, b) + tt
    out["e1.1"] = E("ap,ijkp->ijka", dm, L3) - _cyc3(J)
    # [[x1,x2],u] + [[x2,u],x1] + [[u,x1],x2]
    R = (E("ijk,kpo->ijop", b, rho) - E("ipq,jqo->ijop", rho, rho)
         + E("jpq,iqo->ijop", rho, rho) + D.transpose(0, 1, 3, 2))
    if e1 == "cyclic":
        # [x2,u,x1] + [u,x1,x2]
        R = R - th.transpose(1, 0, 3, 2) + th.transpose(0, 1, 3, 2)
    out["e1.2"] = E("ko,ijkp->ijop", dm, L3) - R
    # (e2)
    out["e2.1"] = E("ap,ijkgp->ijkga", dm, L4h) - _cyc3(E("ijm,mkga->ijkga", b, tt))
    out["e2.2"] = E("mo,ijkmp->ijkop", dm, L4h) - _cyc3(E("ijm,mkpo->ijkop", b, D))
    # (e3)
    out["e3.1"] = E("ap,ijklp->ijkla", dm, L4t) - (
        -E("klm,ijma->ijkla", b, tt) + E("ijkm,mla->ijkla", tt, b)
        + E("ijlm,kma->ijkla", tt, b))
    out["e3.2"] = E("mo,ijkmp->ijkop", dm, L4t) - (
        -E("ijpq,kqo->ijkop", D, rho) + E("ijkm,mpo->ijkop", tt, rho)
        + E("kpq,ijqo->ijkop", rho, D))
    out["e3.3"] = E("mo,imklp->ioklp", dm, L4t) - (
        E("klm,impo->ioklp", b, th) + E("lpq,ikqo->ioklp", rho, th)
        - E("kpq,ilqo->ioklp", rho, th))
    # (e4)
    out["e4.1"] = E("ap,ijklnp->ijklna", dm, L5) - (
        -E("klnm,ijma->ijklna", tt, tt) + E("ijkm,mlna->ijklna", tt, tt)
        + E("ijlm,kmna->ijklna", tt, tt) + E("ijnm,klma->ijklna", tt, tt))
    out["e4.2"] = E("mo,ijklmp->ijklop", dm, L5) - (
        -E("ijpq,klqo->ijklop", D, D) + E("ijkm,mlpo->ijklop", tt, D)
        + E("ijlm,kmpo->ijklop", tt, D) + E("klpq,ijqo->ijklop", D, D))
    out["e4.3"] = E("mo,imklnp->ioklnp", dm, L5) - (
        E("klnm,impo->ioklnp", tt, th) - E("lnpq,ikqo->ioklnp", th, th)
        + E("knpq,ilqo->ioklnp", th, th) - E("klpq,inqo->ioklnp", D, th))
    out.update(_f_defects(t, L3, L4h, L4t, L5))
    return out


def _f_defects(t, L3, L4h, L4t, L5):
    """(f1)-(f4) as left side minus right side."""
    ev = _Pointwise(SimpleNamespace(binary=t.b00, ternary=t.t000),
                    SimpleNamespace(rho=t.rho, D=t.D, theta=t.theta)).term
    B, Tr = _B, _Tr
    out = {}
    o = "abcef"
    lhs = (ev(L3, "cef", o, ("D", "a", "b")) + ev(L4t, ["a", "b", B("c", "e"), "f"], o)
           + ev(L4t, ["a", "b", "e", B("c", "f")], o) - ev(L4t, "abce", o, ("rho", "f"))
           + ev(L4t, "abcf", o, ("rho", "e")) + ev(L5, "abcef", o) + ev(L5, "abfce", o))
    rhs = (ev(L4t, ["a", "b", "c", B("e", "f")], o) + ev(L4t, "abef", o, ("rho", "c"))
           + ev(L3, [Tr("a", "b", "c"), "e", "f"], o) + ev(L3, ["c", Tr("a", "b", "e"), "f"], o)
           + ev(L3, ["c", "e", Tr("a", "b", "f")], o) + ev(L5, "abfec", o))
    out["f1"] = (lhs - rhs).value()
    o = "abcefg"
    lhs = (ev(L4h, "cefg", o, ("D", "a", "b")) + ev(L5, ["a", "b", B("c", "e"), "f", "g"], o)
           + ev(L5, ["a", "b", "e", B("c", "f"), "g"], o)
           + ev(L4t, "abce", o, ("theta", "f", "g")) - ev(L4t, "abcf", o, ("theta", "e", "g")))
    rhs = (ev(L5, ["a", "b", "c", B("e", "f"), "g"], o)
           + ev(L4h, [Tr("a", "b", "c"), "e", "f", "g"], o)
           - ev(L4t, "abef", o, ("theta", "c", "g"))
           + ev(L4h, ["c", "e", "f", Tr("a", "b", "g")], o)
           + ev(L4h, ["c", Tr("a", "b", "e"), "f", "g"], o)
           + ev(L4h, ["c", "e", Tr("a", "b", "f"), "g"], o))
    out["f2"] = (lhs - rhs).value()
    o = "abcegh"
    lhs = (ev(L4t, "cegh", o, ("D", "a", "b")) + ev(L4t, ["a", "b", Tr("c", "e", "g"), "h"], o)
           + ev(L4t, ["a", "b", "g", Tr("c", "e", "h")], o)
           - ev(L5, "abceg", o, ("rho", "h")) + ev(L5, "abceh", o, ("rho", "g")))
    # X o Y = ([X,y1], y2) + (y1, [X,y2])
    rhs = (ev(L5, ["a", "b", "c", "e", B("g", "h")], o) + ev(L4t, "abgh", o, ("D", "c", "e"))
           + ev(L4t, [Tr("a", "b", "c"), "e", "g", "h"], o)
           + ev(L4t, ["c", Tr("a", "b", "e"), "g", "h"], o)
           + ev(L4t, ["c", "e", Tr("a", "b", "g"), "h"], o)
           + ev(L4t, ["c", "e", "g", Tr("a", "b", "h")], o))
    out["f3"] = (lhs - rhs).value()
    o = "abceghi"
    lhs = (ev(L5, "abceg", o, ("theta", "h", "i")) - ev(L5, "abceh", o, ("theta", "g", "i"))
           + ev(L5, "ceghi", o, ("D", "a", "b")) + ev(L5, "abcei", o, ("D", "g", "h"))
           + ev(L5, ["a", "b", Tr("c", "e", "g"), "h", "i"], o)
           + ev(L5, ["a", "b", "g", Tr("c", "e", "h"), "i"], o)
           + ev(L5, ["a", "b", "g", "h", Tr("c", "e", "i")], o))
    rhs = (ev(L5, "abghi", o, ("D", "c", "e"))
           + ev(L5, [Tr("a", "b", "c"), "e", "g", "h", "i"], o)
           + ev(L5, ["c", Tr("a", "b", "e"), "g", "h", "i"], o)
           + ev(L5, ["c", "e", Tr("a", "b", "g"), "h", "i"], o)
           + ev(L5, ["c", "e", "g", Tr("a", "b", "h"), "i"], o)
           + ev(L5, ["a", "b", "c", "e", Tr("g", "h", "i")], o)
           + ev(L5, ["c", "e", "g", "h", Tr("a", "b", "i")], o))
    out["f4"] = (lhs - rhs).value()
    return out


def verify_two_term(t, e1="cyclic"):
    """Check (i), (ii), (a)-(d), (e1)-(e4) and (f1)-(f4) on basis tuples.

    Arguments in V1 run over the V1 basis; the rest over the V0 basis.
    See _defects for the e1 flag.
    """
    out = structural_report(t)
    for label, defect in _defects(t, e1).items():
        out.add(check_zero(label, defect))
    return out


# homomorphisms

class TwoTermHomomorphism:
    """(phi0, phi1, phi2, phi3); phi0, phi1 are target x source matrices."""

    def __init__(self, phi0, phi1, phi2, phi3):
        self.phi0 = T.frozen(T.as_array(phi0))
        self.phi1 = T.frozen(T.as_array(phi1))
        n0t, n0 = self.phi0.shape
        n1t, n1 = self.phi1.shape
        if (phi2.signature, phi2.source_dim, phi2.target_dim) != (SIG_NU, n0, n1t):
            raise DimensionError("phi2 must be a skew bilinear map V0 -> V1'")
        if (phi3.signature, phi3.source_dim, phi3.target_dim) != (SIG_OMEGA, n0, n1t):
            raise DimensionError("phi3 must be a trilinear map V0 -> V1' skew in slots 0, 1")
        self.phi2, self.phi3 = phi2, phi3

    @classmethod
    def identity(cls, t):
        return cls(_eye(t.v0_dim), _eye(t.v1_dim), Cochain(SIG_NU, t.v0_dim, t.v1_dim),
                   Cochain(SIG_OMEGA, t.v0_dim, t.v1_dim))

    def __eq__(self, other):
        return (isinstance(other, TwoTermHomomorphism)
                and T.equal(self.phi0, other.phi0) and T.equal(self.phi1, other.phi1)
                and self.phi2 == other.phi2 and self.phi3 == other.phi3)

    def __repr__(self):
        return "TwoTermHomomorphism(%dx%d, %dx%d)" % (self.phi0.shape + self.phi1.shape)


def _eye(n):
    e = T.zeros((n, n))
    for i in range(n):
        e[i, i] = T.ONE
    return e


def _hom_defects(s, t, h):
    E = T.einsum
    f0, f1 = h.phi0, h.phi1
    P2, P3 = h.phi2.to_tensor(), h.phi3.to_tensor()
    out = {}
    out["chain"] = E("ao,ba->ob", s.d, f0) - E("bq,qo->ob", t.d, f1)
    # brackets of t evaluated on phi0 images, indexed by source basis
    b_img = E("ia,jb,ijc->abc", f0, f0, t.b00)
    t_img = E("ia,jb,kc,ijke->abce", f0, f0, f0, t.t000)
    rho_t = E("ia,ipq->apq", f0, t.rho)  # rho'(phi0 x)
    D_t = E("ia,jb,ijpq->abpq", f0, f0, t.D)
    th_t = E("ia,jb,ijpq->abpq", f0, f0, t.theta)
    out["homo01"] = (E("ep,abp->abe", t.d, P2) - E("abk,ek->abe", s.b00, f0) + b_img)
    # phi2(x, du) = phi1[x,u] - [phi0 x, phi1 u]'
    out["homo02"] = (E("ko,akp->aop", s.d, P2) - E("pq,aqo->aop", f1, s.rho)
                     + E("apq,qo->aop", rho_t, f1))
    out["homo03"] = (E("ep,abcp->abce", t.d, P3) - E("abck,ek->abce", s.t000, f0) + t_img)
    out["homo04"] = (E("ko,abkp->abop", s.d, P3) - E("pq,abqo->abop", f1, s.D)
                     + E("abpq,qo->abop", D_t, f1))
    # morph11, with l3'(phi0 x1, phi0 x2, phi0 x3) on the right
    L3s, L5s = s.l3.to_tensor(), s.l5.to_tensor()
    L3t, L5t = t.l3.to_tensor(), t.l5.to_tensor()
    b = s.b00
    lhs = (-E("cpq,abq->abcp", rho_t, P2) + E("abk,kcp->abcp", b, P2)
           + E("pq,abcq->abcp", f1, L3s))
    rhs = (E("ia,jb,kc,ijkp->abcp", f0, f0, f0, L3t) + E("apq,bcq->abcp", rho_t, P2)
           - E("bpq,acq->abcp", rho_t, P2) + E("bck,akp->abcp", b, P2)
           + E("ack,kbp->abcp", b, P2))
    out["morph11"] = lhs - rhs
    # morph12, with the l3' term read as [phi3(x1,x2,x3), phi0 x4, phi0 x5]'
    tt = s.t000
    lhs = (E("abpq,ceiq->abceip", D_t, P3) + E("ceik,abkp->abceip", tt, P3)
           + E("pq,abceiq->abceip", f1, L5s))
    rhs = (E("xa,yb,zc,we,vi,xyzwvp->abceip", f0, f0, f0, f0, f0, L5t)
           + E("eipq,abcq->abceip", th_t, P3) - E("cipq,abeq->abceip", th_t, P3)
           + E("cepq,abiq->abceip", D_t, P3)
           + E("abck,keip->abceip", tt, P3) + E("abek,ckip->abceip", tt, P3)
           + E("abik,cekp->abceip", tt, P3))
    out["morph12"] = lhs - rhs
    return out


def verify_homomorphism(src, dst, h):
    """Chain-map identity, (homo01)-(homo04), (morph11) and (morph12)."""
    if h.phi0.shape != (dst.v0_dim, src.v0_dim) or h.phi1.shape != (dst.v1_dim, src.v1_dim):
        raise DimensionError("homomorphism dims do not match source and target")
    out = AxiomReport()
    for label, defect in _hom_defects(src, dst, h).items():
        out.add(check_zero(label, defect))
    return out


def compose_homomorphisms(f, g):
    """g after f: (g0 f0, g1 f1, g2(f0, f0) + g1 f2, g3(f0, f0, f0) + g1 f3)."""
    if g.phi0.shape[1] != f.phi0.shape[0] or g.phi1.shape[1] != f.phi1.shape[0]:
        raise DimensionError("homomorphisms are not composable")
    E = T.einsum
    f0, f1, g0, g1 = f.phi0, f.phi1, g.phi0, g.phi1
    G2, G3 = g.phi2.to_tensor(), g.phi3.to_tensor()
    F2, F3 = f.phi2.to_tensor(), f.phi3.to_tensor()
    p2 = E("ia,jb,ijp->abp", f0, f0, G2) + E("pq,abq->abp", g1, F2)
    p3 = E("ia,jb,kc,ijkp->abcp", f0, f0, f0, G3) + E("pq,abcq->abcp", g1, F3)
    return TwoTermHomomorphism(E("ij,jk->ik", g0, f0), E("ij,jk->ik", g1, f1),
                               Cochain.from_tensor(SIG_NU, p2), Cochain.from_tensor(SIG_OMEGA, p3))


# skeletal correspondence

def skeletal_from_data(a, r, q, check=True):
    """Skeletal algebra (d = 0) with V0 = a, mixed brackets from r, corrections q."""
    if (a.dim, r.algebra_dim, q.source_dim) != (a.dim,) * 3 or r.module_dim != q.target_dim:
        raise DimensionError("algebra, representation and quadruple dims disagree")
    if check:
        from .cohomology import is_cocycle_3445
        res = is_cocycle_3445(q, a, r)
        if not res:
            raise InvalidInput("quadruple is not a (3,4,4,5)-cocycle; first defect at %s"
                               % (res.witness,))
    return TwoTermAlgebra(a.dim, r.module_dim, None, a.binary, a.ternary, r.rho, r.D, r.theta,
                          *q.parts)


def data_from_skeletal(t):
    """(LY algebra on V0, representation on V1, correction quadruple)."""
    if not t.is_skeletal:
        raise InvalidInput("differential is nonzero; the algebra is not skeletal")
    return t.v0_algebra(), t.representation(), t.quadruple()
