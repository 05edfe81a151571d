"""Crossed modules of LY algebras, the strict correspondence, the constructions
from Leibniz and reductive Lie crossed modules, and the cocycle of a crossed
module extension.

Matrices of linear maps are target x source arrays.  Actions of Leibniz and
Lie algebras are tensors: ``left[x, u, w]`` is the coefficient of w in x > u
and ``right[u, x, w]`` the coefficient of w in u < x.
"""

from . import _tensor as T
from .cochain import (Cochain, CochainPair, CochainQuadruple, SIG_NU, SIG_OMEGA,
                      SIG_L3, SIG_L4HAT, SIG_L4TILDE, SIG_L5, _Pointwise, _B, _Tr, _cyc,
                      pointwise_delta2)
from .cohomology import is_coboundary_3445
from .exactla import DimensionError, rank
from .lya import (LYAlgebra, LeibnizAlgebra, InvalidInput, ReductiveDecomposition,
                  check_homomorphism_lya, leibniz_to_lya, reductive_to_lya, verify_lie,
                  verify_leibniz)
from .rep import LYAction, Representation, check_action
from .report import AxiomEntry, AxiomReport, check_zero
from .twoterm import TwoTermAlgebra, verify_two_term

E = T.einsum


def _shape(m, shape, what):
    m = T.as_array(m)
    if m.shape != shape:
        raise DimensionError("%s is %s, expected %s" % (what, m.shape, shape))
    return T.frozen(m)


class CrossedModuleLYA:
    """Boundary V -> T with an action (rho, D, theta) of T on V."""

    def __init__(self, t, v, rep, boundary):
        if (rep.algebra_dim, rep.module_dim) != (t.dim, v.dim):
            raise DimensionError("action has dims (%d, %d), expected (%d, %d)"
                                 % (rep.algebra_dim, rep.module_dim, t.dim, v.dim))
        self.t, self.v, self.rep = t, v, rep
        self.boundary = _shape(boundary, (t.dim, v.dim), "boundary")

    @property
    def action(self):
        return LYAction(self.rep, self.v)

    def __eq__(self, other):
        return (isinstance(other, CrossedModuleLYA) and self.t == other.t and self.v == other.v
                and self.rep == other.rep and T.equal(self.boundary, other.boundary))

    def __repr__(self):
        return "CrossedModuleLYA(t_dim=%d, v_dim=%d)" % (self.t.dim, self.v.dim)


def crossed_defects(c):
    """(cmc01)-(cmc3) as defect tensors indexed (args..., output)."""
    dd = c.boundary
    bT, tT = c.t.binary, c.t.ternary
    bV, tV = c.v.binary, c.v.ternary
    rho, D, th = c.rep.rho, c.rep.D, c.rep.theta
    return {
        "cmc01": E("ap,xpu->xua", dd, rho) - E("xka,ku->xua", bT, dd),
        "cmc1-D": E("ap,xypu->xyua", dd, D) - E("xyka,ku->xyua", tT, dd),
        "cmc1-theta": E("ap,xypu->xyua", dd, th) - E("kxya,ku->xyua", tT, dd),
        "cmc02": bV - E("ku,kwv->uvw", dd, rho),
        "cmc2-D": tV - E("ku,lv,klpw->uvwp", dd, dd, D),
        "cmc2-theta": tV - E("kv,lw,klpu->uvwp", dd, dd, th),
        "cmc3": E("ku,xkpv->xuvp", dd, D) + E("kv,xkpu->xuvp", dd, th),
    }


def verify_crossed_module(c):
    """Boundary homomorphism, action validity and (cmc01)-(cmc3) on basis tuples."""
    out = AxiomReport()
    out.extend(check_homomorphism_lya(c.v, c.t, c.boundary), "boundary-")
    out.extend(check_action(c.t, c.action), "action-")
    for label, defect in crossed_defects(c).items():
        out.add(check_zero(label, defect))
    return out


def _require(report, what):
    if not report.passed:
        raise InvalidInput("%s: %s fails" % (what, ", ".join(report.failed())), report)


# strict correspondence

def strict_from_crossed(c, check=True):
    """Strict 2-term algebra with V1 = V, V0 = T and d the boundary."""
    if check:
        _require(verify_crossed_module(c), "not a crossed module")
    r = c.rep
    return TwoTermAlgebra(c.t.dim, c.v.dim, c.boundary, c.t.binary, c.t.ternary,
                          r.rho, r.D, r.theta, validate=check)


def crossed_from_strict(t, check=True):
    """Crossed module with [u,v]_V = [du, v] and [u,v,w]_V = [du, dv, w]."""
    if not t.is_strict:
        raise InvalidInput("correction maps are nonzero; the algebra is not strict")
    if check:
        _require(verify_two_term(t), "not a 2-term algebra")
    dm = t.d
    bV = E("ku,kwv->uvw", dm, t.rho)
    tV = E("ku,lv,klpw->uvwp", dm, dm, t.D)
    v = LYAlgebra(t.v1_dim, bV, tV, validate=check)
    return CrossedModuleLYA(t.v0_algebra(validate=check), v, t.representation(), dm)


# Leibniz crossed modules

class LeibnizCrossedModule:
    """phi: V -> L with actions x > u (left) and u < x (right)."""

    def __init__(self, l, v, left, right, phi):
        self.l, self.v = l, v
        n, m = l.dim, v.dim
        self.left = _shape(left, (n, m, m), "left action")
        self.right = _shape(right, (m, n, m), "right action")
        self.phi = _shape(phi, (n, m), "phi")

    def semidirect(self):
        """(x+u)(y+v) = xy + x>v + u<y + uv on L + V."""
        n, m = self.l.dim, self.v.dim
        N = n + m
        p = T.zeros((N, N, N))
        X, V = slice(0, n), slice(n, N)
        p[X, X, X] = self.l.product
        p[X, V, V] = self.left
        p[V, X, V] = self.right
        p[V, V, V] = self.v.product
        return LeibnizAlgebra(N, p)

    def __eq__(self, other):
        return (isinstance(other, LeibnizCrossedModule) and self.l == other.l
                and self.v == other.v and T.equal(self.left, other.left)
                and T.equal(self.right, other.right) and T.equal(self.phi, other.phi))


def verify_leibniz_crossed(lc):
    """Homomorphism, action (semidirect Leibniz identity), (L1) and (L2)."""
    pL, pV, f = lc.l.product, lc.v.product, lc.phi
    out = AxiomReport()
    out.extend(verify_leibniz(lc.l), "L-")
    out.extend(verify_leibniz(lc.v), "V-")
    out.add(check_zero("phi-hom", E("uvk,ak->uva", pV, f) - E("iu,jv,ija->uva", f, f, pL)))
    out.extend(verify_leibniz(lc.semidirect()), "semidirect-")
    out.add(check_zero("L1-left", E("xuw,aw->xua", lc.left, f) - E("ku,xka->xua", f, pL)))
    out.add(check_zero("L1-right", E("uxw,aw->uxa", lc.right, f) - E("ku,kxa->uxa", f, pL)))
    out.add(check_zero("L2-left", E("ku,kvw->uvw", f, lc.left) - pV))
    out.add(check_zero("L2-right", E("kv,ukw->uvw", f, lc.right) - pV))
    return out


def crossed_from_leibniz(lc, check=True):
    """rho(x)u = x>u - u<x, D(x,y)u = -(xy)>u, theta(x,y)u = -(u<x)<y."""
    if check:
        _require(verify_leibniz_crossed(lc), "not a Leibniz crossed module")
    rho = lc.left.transpose(0, 2, 1) - lc.right.transpose(1, 2, 0)
    D = -E("xyk,kuw->xywu", lc.l.product, lc.left)
    th = -E("uxk,kyw->xywu", lc.right, lc.right)
    rep = Representation(lc.l.dim, lc.v.dim, rho, D, th)
    return CrossedModuleLYA(leibniz_to_lya(lc.l), leibniz_to_lya(lc.v), rep, lc.phi)


# reductive Lie crossed modules

class ReductiveCrossedModule:
    """Lie crossed module phi: V -> g with g = h + m and V = V1 + V2.

    act[x, u, w] is the coefficient of w in x > u.
    """

    def __init__(self, v, g, act, phi, g_dec, v_dec):
        self.v, self.g = v, g
        self.act = _shape(act, (g.dim, v.dim, v.dim), "action")
        self.phi = _shape(phi, (g.dim, v.dim), "phi")
        if g_dec.lie is not g and g_dec.lie != g:
            raise InvalidInput("g decomposition belongs to a different Lie algebra")
        if v_dec.lie is not v and v_dec.lie != v:
            raise InvalidInput("V decomposition belongs to a different Lie algebra")
        self.g_dec, self.v_dec = g_dec, v_dec

    @classmethod
    def build(cls, v, g, act, phi, h_basis, m_basis, v1_basis, v2_basis):
        return cls(v, g, act, phi, ReductiveDecomposition(g, h_basis, m_basis),
                   ReductiveDecomposition(v, v1_basis, v2_basis))

    def __eq__(self, other):
        return (isinstance(other, ReductiveCrossedModule) and self.g_dec == other.g_dec
                and self.v_dec == other.v_dec and T.equal(self.act, other.act)
                and T.equal(self.phi, other.phi))


def verify_reductive_crossed(rc):
    """Lie crossed module axioms, (C1)-(C2), (R1)-(R2) and the splitting of phi."""
    bg, bv, act, f = rc.g.bracket_tensor, rc.v.bracket_tensor, rc.act, rc.phi
    out = AxiomReport()
    out.extend(verify_lie(rc.g), "g-")
    out.extend(verify_lie(rc.v), "V-")
    out.extend(rc.g_dec.report(), "g-")
    out.extend(rc.v_dec.report(), "V-")
    out.add(check_zero("phi-hom", E("uvk,ak->uva", bv, f) - E("iu,jv,ija->uva", f, f, bg)))
    out.add(check_zero("action-derivation",
                       E("uvk,xkw->xuvw", bv, act) - E("xuk,kvw->xuvw", act, bv)
                       - E("xvk,ukw->xuvw", act, bv)))
    out.add(check_zero("action-bracket",
                       E("xyk,kuw->xyuw", bg, act) - E("yuk,xkw->xyuw", act, act)
                       + E("xuk,ykw->xyuw", act, act)))
    out.add(check_zero("C1", E("xuw,aw->xua", act, f) - E("ku,xka->xua", f, bg)))
    out.add(check_zero("C2", E("ku,kvw->uvw", f, act) - bv))
    gd, vd = rc.g_dec, rc.v_dec
    H, C = gd.h_matrix, gd._coords
    V1, V2, Cv = vd.h_matrix, vd.m_matrix, vd._coords
    nh, n1 = gd.h.dim, vd.h.dim
    out.add(check_zero("R1-phi", E("ju,aj,la->ul", V1, f, C)[:, nh:]))
    out.add(check_zero("R1-action", E("ix,ju,ijk,lk->xul", H, V1, act, Cv)[:, :, n1:]))
    out.add(check_zero("R2", E("ix,ju,ijk,lk->xul", H, V2, act, Cv)[:, :, :n1]))
    out.add(check_zero("phi-split", E("ju,aj,la->ul", V2, f, C)[:, :nh]))
    return out


def crossed_from_reductive(rc, check=True):
    """Crossed module phi2: V2 -> m with rho(x)u = pi_V2(x > u),
    D(x,y)u = pi_h[x,y] > u and theta(x,y)u = pi_V2(y > pi_V1(x > u))."""
    if check:
        _require(verify_reductive_crossed(rc), "not a reductive crossed module")
    gd, vd = rc.g_dec, rc.v_dec
    H, M, C = gd.h_matrix, gd.m_matrix, gd._coords
    V1, V2, Cv = vd.h_matrix, vd.m_matrix, vd._coords
    nh, n1 = gd.h.dim, vd.h.dim
    act = rc.act
    boundary = E("ju,aj,la->lu", V2, rc.phi, C)[nh:, :]
    # x > u for x in m, u in V2, in (V1, V2) coordinates
    mv2 = E("ix,ju,ijk,lk->xul", M, V2, act, Cv)
    rho = mv2[:, :, n1:].transpose(0, 2, 1)
    hpart = E("ix,jy,ijk,ek->xye", M, M, rc.g.bracket_tensor, C)[:, :, :nh]
    hv2 = E("ie,ju,ijk,lk->eul", H, V2, act, Cv)[:, :, n1:]
    D = E("xye,euw->xywu", hpart, hv2)
    mv1 = E("iy,jr,ijk,lk->yrl", M, V1, act, Cv)[:, :, n1:]
    th = E("xur,yrw->xywu", mv2[:, :, :n1], mv1)
    rep = Representation(gd.m.dim, vd.m.dim, rho, D, th)
    return CrossedModuleLYA(reductive_to_lya(gd), reductive_to_lya(vd), rep, boundary)


# crossed module extensions

class CrossedExtension:
    """0 -> M -i-> V -d-> S -pi-> T -> 0 with sections s: T -> S and q: Im d -> V.

    q is stored as a V x S matrix; only its values on Im d matter.
    """

    def __init__(self, crossed, t, i, pi, s, q):
        self.crossed, self.t = crossed, t
        sd, vd = crossed.t.dim, crossed.v.dim
        i = T.as_array(i)
        self.m_dim = i.shape[1] if i.ndim == 2 else 0
        self.i = _shape(i.reshape(vd, self.m_dim), (vd, self.m_dim), "i")
        self.pi = _shape(pi, (t.dim, sd), "pi")
        self.s = _shape(s, (sd, t.dim), "s")
        self.q = _shape(q, (vd, sd), "q")

    def with_sections(self, s, q):
        return CrossedExtension(self.crossed, self.t, self.i, self.pi, s, q)

    def __eq__(self, other):
        return (isinstance(other, CrossedExtension) and self.crossed == other.crossed
                and self.t == other.t and self.m_dim == other.m_dim
                and all(T.equal(getattr(self, k), getattr(other, k))
                        for k in ("i", "pi", "s", "q")))


def _rank(a):
    return rank(T.array_to_matrix(a)) if a.size else 0


def _rank_entry(label, observed, expected):
    ok = observed == expected
    return AxiomEntry(label, ok, None if ok else (observed,), None if ok else (expected,))


def section_report(e, s, q):
    """pi s = id on T and d q = id on Im d."""
    d = e.crossed.boundary
    out = AxiomReport()
    out.add(check_zero("pi-s", E("ak,kb->ba", e.pi, s) - _eye(e.t.dim)))
    out.add(check_zero("d-q", E("ak,kv,vu->ua", d, q, d) - d.T))
    return out


def exactness_report(e):
    """Exactness of the sequence, pi a homomorphism, and the sections.

    Rank failures carry (observed,) as witness and (expected,) as defect.
    """
    c = e.crossed
    d = c.boundary
    sd, vd = c.t.dim, c.v.dim
    rd = _rank(d)
    out = AxiomReport()
    out.extend(verify_crossed_module(c), "crossed-")
    out.add(_rank_entry("i-injective", _rank(e.i), e.m_dim))
    out.add(check_zero("d-i", E("av,vm->ma", d, e.i)))
    out.add(_rank_entry("ker-d-dim", vd - rd, e.m_dim))
    out.add(_rank_entry("pi-surjective", _rank(e.pi), e.t.dim))
    out.add(check_zero("pi-d", E("ak,kv->va", e.pi, d)))
    out.add(_rank_entry("ker-pi-dim", sd - e.t.dim, rd))
    out.extend(check_homomorphism_lya(c.t, e.t, e.pi), "pi-")
    out.extend(section_report(e, e.s, e.q))
    return out


def _eye(n):
    out = T.zeros((n, n))
    for k in range(n):
        out[k, k] = T.ONE
    return out


def _left_inverse(i):
    """(i^T i)^-1 i^T for an injective i."""
    if i.shape[1] == 0:
        return T.zeros((0, i.shape[0]))
    return E("mk,vk->mv", T.inverse(E("vm,vk->mk", i, i)), i)


def induced_report(e):
    """The action of S on V restricts to M, and elements of Im d act by zero on M."""
    c = e.crossed
    d, i = c.boundary, e.i
    rho, D, th = c.rep.rho, c.rep.D, c.rep.theta
    out = AxiomReport()
    out.add(check_zero("M-invariant-rho", E("ap,kpo,om->kma", d, rho, i)))
    out.add(check_zero("M-invariant-D", E("ap,klpo,om->klma", d, D, i)))
    out.add(check_zero("M-invariant-theta", E("ap,klpo,om->klma", d, th, i)))
    out.add(check_zero("M-independent-rho", E("kv,kpo,om->vmp", d, rho, i)))
    for name, op in (("D", D), ("theta", th)):
        out.add(check_zero("M-independent-%s-first" % name, E("kv,klpo,om->vlmp", d, op, i)))
        out.add(check_zero("M-independent-%s-second" % name, E("kv,lkpo,om->vlmp", d, op, i)))
    return out


def induced_representation(e, check=True):
    """Representation of T on M through the section s."""
    if check:
        _require(induced_report(e), "action does not induce a representation on M")
    c, s, i = e.crossed, e.s, e.i
    Li = _left_inverse(i)
    rho = E("ia,qp,ipo,om->aqm", s, Li, c.rep.rho, i)
    D = E("ia,jb,qp,ijpo,om->abqm", s, s, Li, c.rep.D, i)
    th = E("ia,jb,qp,ijpo,om->abqm", s, s, Li, c.rep.theta, i)
    return Representation(e.t.dim, e.m_dim, rho, D, th)


def _nu_omega(e, s, q):
    S, Tt = e.crossed.t, e.t
    Bs = E("ia,jb,ijk->abk", s, s, S.binary) - E("abc,kc->abk", Tt.binary, s)
    Ts = E("ia,jb,lc,ijlk->abck", s, s, s, S.ternary) - E("abce,ke->abck", Tt.ternary, s)
    return E("abk,vk->abv", Bs, q), E("abck,vk->abcv", Ts, q)


def _pulled_back(e, s):
    r = e.crossed.rep
    return Representation(e.t.dim, e.crossed.v.dim, E("ia,ipo->apo", s, r.rho),
                          E("ia,jb,ijpo->abpo", s, s, r.D), E("ia,jb,ijpo->abpo", s, s, r.theta))


def _to_m(e, parts, sigs):
    d, Li = e.crossed.boundary, _left_inverse(e.i)
    out = []
    for x, sig in zip(parts, sigs):
        if not T.is_zero(E("...v,av->...a", x, d)):
            raise ArithmeticError("extracted component does not lie in ker d")
        xm = E("...v,mv->...m", x, Li)
        if not T.equal(E("...m,vm->...v", xm, e.i), x):
            raise ArithmeticError("extracted component does not lie in the image of i")
        out.append(Cochain.from_tensor(sig, T.normalize(xm)))
    return CochainQuadruple(*out)


def _sections(e, s, q, check):
    s = e.s if s is None else _shape(s, e.s.shape, "s")
    q = e.q if q is None else _shape(q, e.q.shape, "q")
    if check:
        _require(section_report(e, s, q), "invalid sections")
    return s, q


def extract_theta(e, s=None, q=None, check=True):
    """The (3,4,4,5)-cocycle of the extension for the sections (s, q), valued in M.

    nu(x,y) = q([sx, sy] - s[x,y]) and omega likewise; the components are
    Delta2 of (nu, omega) with S acting on V through s.
    """
    if check:
        _require(exactness_report(e), "not an exact crossed extension")
    s, q = _sections(e, s, q, check)
    nu, om = _nu_omega(e, s, q)
    pair = CochainPair(Cochain.from_tensor(SIG_NU, T.normalize(nu)),
                       Cochain.from_tensor(SIG_OMEGA, T.normalize(om)))
    quad = pointwise_delta2(e.t, _pulled_back(e, s), pair)
    return _to_m(e, [p.to_tensor() for p in quad.parts], CochainQuadruple.signatures)


def displayed_theta(e, s=None, q=None, check=True):
    """The four components as displayed, with mixed brackets read through the
    action: [sx, v] = rho(sx)v and [sx, v, sy] = -theta(sx, sy)v.

    Related to extract_theta by the signs (+, -, -, -).
    """
    if check:
        _require(exactness_report(e), "not an exact crossed extension")
    s, q = _sections(e, s, q, check)
    nu, om = _nu_omega(e, s, q)
    ev = _Pointwise(e.t, _pulled_back(e, s)).ev
    B, Tr = _B, _Tr
    th3 = _cyc(om - ev(nu, "bc", "abc", ("rho", "a")) + ev(nu, [B("a", "b"), "c"], "abc"), "abc")
    o = "abcg"
    th4h = _cyc(-ev(nu, "bc", o, ("theta", "a", "g")) - ev(om, [B("a", "b"), "c", "g"], o), o)
    o = "abce"
    th4t = (ev(om, ["a", "b", B("c", "e")], o) - ev(om, "abe", o, ("rho", "c"))
            + ev(om, "abc", o, ("rho", "e")) + ev(nu, "ce", o, ("D", "a", "b"))
            - ev(nu, [Tr("a", "b", "c"), "e"], o) - ev(nu, ["c", Tr("a", "b", "e")], o))
    o = "abcef"
    th5 = (ev(om, ["a", "b", Tr("c", "e", "f")], o) + ev(om, "cef", o, ("D", "a", "b"))
           - ev(om, [Tr("a", "b", "c"), "e", "f"], o) - ev(om, ["c", Tr("a", "b", "e"), "f"], o)
           - ev(om, ["c", "e", Tr("a", "b", "f")], o) - ev(om, "abc", o, ("theta", "e", "f"))
           + ev(om, "abe", o, ("theta", "c", "f")) - ev(om, "abf", o, ("D", "c", "e")))
    return _to_m(e, [th3, th4h, th4t, th5], (SIG_L3, SIG_L4HAT, SIG_L4TILDE, SIG_L5))


def section_independence(e, s2, q2, check=True):
    """Whether the cocycles for (e.s, e.q) and (s2, q2) differ by a coboundary."""
    s2, q2 = _sections(e, s2, q2, True)
    diff = extract_theta(e, check=check) - extract_theta(e, s2, q2, check=False)
    rep = induced_representation(e, check)
    return is_coboundary_3445(diff, e.t, rep, check=False) is not None
