"""Named fixtures and randomized valid inputs.

Random Lie algebras come from the small classified families (abelian, the
2-dim affine algebra, so(3), Heisenberg, gl(2)) and their direct sums, put in
a random rational basis.  Random Leibniz algebras add nilpotent non-Lie
families of the LEIB2 type.  Rejection sampling over raw structure
constants almost never lands on a valid algebra, so none is attempted.
"""

import random
from fractions import Fraction

from . import _tensor as T
from .crossed import (CrossedExtension, CrossedModuleLYA, LeibnizCrossedModule,
                      ReductiveCrossedModule, crossed_from_leibniz)
from .lya import (LYAlgebra, LeibnizAlgebra, LieAlgebra, ReductiveDecomposition,
                  leibniz_to_lya, lie_as_leibniz, lie_to_lya, omni_lie, reductive_to_lya)
from .rep import Representation, adjoint_rep


def _skew(n, entries):
    b = T.zeros((n, n, n))
    for (i, j, k), v in entries.items():
        b[i, j, k] += Fraction(v)
        b[j, i, k] -= Fraction(v)
    return b


# named algebras

def abelian_lie(n):
    return LieAlgebra(n)


def a2_lie():
    """[e1, e2] = e1."""
    return LieAlgebra(2, _skew(2, {(0, 1, 0): 1}))


def so3_lie():
    """[L1, L2] = L3, [L2, L3] = L1, [L3, L1] = L2."""
    return LieAlgebra(3, _skew(3, {(0, 1, 2): 1, (1, 2, 0): 1, (2, 0, 1): 1}))


def heisenberg_lie():
    """[e1, e2] = e3."""
    return LieAlgebra(3, _skew(3, {(0, 1, 2): 1}))


def sl2_lie():
    """Basis H, E, F: [H,E] = 2E, [H,F] = -2F, [E,F] = H."""
    return LieAlgebra(3, _skew(3, {(0, 1, 1): 2, (0, 2, 2): -2, (1, 2, 0): 1}))


def gl2_lie():
    """Basis E11, E12, E21, E22 with the commutator."""
    n = 4
    b = T.zeros((n, n, n))
    for i in range(4):
        for j in range(4):
            (a, c), (e, f) = divmod(i, 2), divmod(j, 2)
            # E_ac E_ef = [c == e] E_af
            if c == e:
                b[i, j, 2 * a + f] += 1
            if f == a:
                b[i, j, 2 * e + c] -= 1
    return LieAlgebra(n, b)


def leib2():
    """e1 e1 = e2, all other products zero."""
    p = T.zeros((2, 2, 2))
    p[0, 0, 1] = Fraction(1)
    return LeibnizAlgebra(2, p)


def abelian2():
    return LYAlgebra(2)


def abelian3():
    return LYAlgebra(3)


def a2():
    return lie_to_lya(a2_lie())


def so3():
    return lie_to_lya(so3_lie())


def omni1():
    return omni_lie(1)


def so3_reductive():
    """so(3) = span(L3) + span(L1, L2)."""
    return ReductiveDecomposition(so3_lie(), [[0, 0, 1]], [[1, 0, 0], [0, 1, 0]])


def so3red():
    return reductive_to_lya(so3_reductive())


def fixture_algebras():
    """The named LY fixtures used across the test suites."""
    return {"abelian2": abelian2(), "a2": a2(), "omni1": omni1(), "so3": so3(),
            "so3red": so3red()}


def zero_rep(a, m):
    return Representation(a.dim, m)


# random helpers

def rand_fraction(rng, lo=-3, hi=3, den=2):
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def random_invertible(rng, n, lo=-2, hi=2):
    """Unit lower-triangular times unit upper-triangular with a random permutation."""
    lower = T.zeros((n, n))
    upper = T.zeros((n, n))
    for i in range(n):
        lower[i, i] = upper[i, i] = Fraction(rng.choice([1, -1, 2]))
        for j in range(i):
            lower[i, j] = Fraction(rng.randint(lo, hi))
            upper[j, i] = Fraction(rng.randint(lo, hi))
    perm = list(range(n))
    rng.shuffle(perm)
    p = T.zeros((n, n))
    for i, j in enumerate(perm):
        p[i, j] = T.ONE
    return T.einsum("ij,jk,kl->il", p, lower, upper)


def direct_sum_lie(*parts):
    n = sum(p.dim for p in parts)
    b = T.zeros((n, n, n))
    off = 0
    for p in parts:
        k = p.dim
        b[off:off + k, off:off + k, off:off + k] = p.bracket_tensor
        off += k
    return LieAlgebra(n, b)


def direct_sum_leibniz(*parts):
    n = sum(p.dim for p in parts)
    pr = T.zeros((n, n, n))
    off = 0
    for p in parts:
        k = p.dim
        pr[off:off + k, off:off + k, off:off + k] = p.product
        off += k
    return LeibnizAlgebra(n, pr)


_LIE_BLOCKS = {
    2: [lambda: abelian_lie(2), a2_lie],
    3: [lambda: abelian_lie(3), so3_lie, heisenberg_lie, sl2_lie,
        lambda: direct_sum_lie(a2_lie(), abelian_lie(1))],
    4: [gl2_lie, lambda: direct_sum_lie(a2_lie(), a2_lie()),
        lambda: direct_sum_lie(so3_lie(), abelian_lie(1)),
        lambda: direct_sum_lie(heisenberg_lie(), abelian_lie(1))],
}


def random_lie(rng, dim=None):
    dim = dim or rng.choice([2, 3, 4])
    g = rng.choice(_LIE_BLOCKS[dim])()
    return g.change_basis(random_invertible(rng, dim))


def leib3():
    """Nilpotent non-Lie Leibniz algebra with products in the central e3:
    e1 e1 = e3, e1 e2 = e3, e2 e1 = -e3/2."""
    p = T.zeros((3, 3, 3))
    p[0, 0, 2] = Fraction(1)
    p[0, 1, 2] = Fraction(1)
    p[1, 0, 2] = Fraction(-1, 2)
    return LeibnizAlgebra(3, p)


def random_leibniz(rng, dim=None):
    dim = dim or rng.choice([2, 3, 4])
    choices = {
        2: [leib2, lambda: lie_as_leibniz(a2_lie())],
        3: [leib3, lambda: direct_sum_leibniz(leib2(), LeibnizAlgebra(1)),
            lambda: lie_as_leibniz(so3_lie())],
        4: [lambda: direct_sum_leibniz(leib2(), lie_as_leibniz(a2_lie())),
            lambda: direct_sum_leibniz(leib3(), LeibnizAlgebra(1)),
            lambda: lie_as_leibniz(gl2_lie())],
    }[dim]
    return rng.choice(choices)().change_basis(random_invertible(rng, dim))


def _reductive_triples():
    """(g, h basis, m basis) with [h,h] in h and [h,m] in m."""
    gl2 = gl2_lie()
    return [
        (so3_lie(), [[0, 0, 1]], [[1, 0, 0], [0, 1, 0]]),
        (sl2_lie(), [[1, 0, 0]], [[0, 1, 0], [0, 0, 1]]),
        (gl2, [[1, 0, 0, 0], [0, 0, 0, 1]], [[0, 1, 0, 0], [0, 0, 1, 0]]),
        (direct_sum_lie(a2_lie(), abelian_lie(1)), [[1, 0, 0], [0, 1, 0]], [[0, 0, 1]]),
        (direct_sum_lie(so3_lie(), abelian_lie(1)), [[0, 0, 1, 0]],
         [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1]]),
        (abelian_lie(3), [[1, 1, 0]], [[0, 1, 0], [0, 0, 1]]),
    ]


def _move_subspace(pinv, basis):
    """Coordinates of old vectors in the basis given by the columns of p."""
    return [list(T.einsum("ij,j->i", pinv, T.as_array(v))) for v in basis]


def random_reductive(rng):
    """A ReductiveDecomposition in a random basis."""
    g, h, m = rng.choice(_reductive_triples())
    p = random_invertible(rng, g.dim)
    pinv = T.inverse(p)
    return ReductiveDecomposition(g.change_basis(p), _move_subspace(pinv, h),
                                  _move_subspace(pinv, m))


def random_ly(rng, dim=None):
    """Random LY algebra from one of the three constructions."""
    kind = rng.choice(["lie", "leibniz", "reductive"])
    if kind == "lie":
        return lie_to_lya(random_lie(rng, dim))
    if kind == "leibniz":
        return leibniz_to_lya(random_leibniz(rng, dim))
    for _ in range(50):
        dec = random_reductive(rng)
        if dim is None or dec.m.dim == dim:
            return reductive_to_lya(dec)
    return lie_to_lya(random_lie(rng, dim))


# crossed modules

def _transport_leibniz_module(lc, p):
    """Change the basis of V to the columns of p."""
    pinv = T.inverse(p)
    v = lc.v.change_basis(p)
    left = T.einsum("xuw,ua,bw->xab", lc.left, p, pinv)
    right = T.einsum("uxw,ua,bw->axb", lc.right, p, pinv)
    return LeibnizCrossedModule(lc.l, v, left, right, T.einsum("ku,ua->ka", lc.phi, p))


def identity_leibniz_crossed(l):
    """(L, L, id) with x > u = xu and u < x = ux."""
    n = l.dim
    eye = T.zeros((n, n))
    for k in range(n):
        eye[k, k] = T.ONE
    return LeibnizCrossedModule(l, l, l.product, l.product, eye)


def abelian_leibniz_crossed(l):
    """(L with zero product, L, 0) acting by multiplication."""
    n = l.dim
    return LeibnizCrossedModule(l, LeibnizAlgebra(n), l.product, l.product, T.zeros((n, n)))


def random_leibniz_crossed(rng, dim=None):
    l = random_leibniz(rng, dim)
    lc = rng.choice([identity_leibniz_crossed, abelian_leibniz_crossed])(l)
    return _transport_leibniz_module(lc, random_invertible(rng, l.dim))


def _ad_action(g):
    # x > u = [x, u]; act[x, u, w] = b[x, u, w]
    return g.bracket_tensor


def identity_reductive_crossed(dec):
    """(g, g, id) with the adjoint action and V1 = h, V2 = m."""
    g = dec.lie
    eye = T.zeros((g.dim, g.dim))
    for k in range(g.dim):
        eye[k, k] = T.ONE
    vdec = ReductiveDecomposition(g, dec.h, dec.m)
    return ReductiveCrossedModule(g, g, _ad_action(g), eye, dec, vdec)


def abelian_reductive_crossed(dec):
    """(g with zero bracket, g, 0) with the adjoint action."""
    g = dec.lie
    v = LieAlgebra(g.dim)
    return ReductiveCrossedModule(v, g, _ad_action(g), T.zeros((g.dim, g.dim)), dec,
                                  ReductiveDecomposition(v, dec.h, dec.m))


def random_reductive_crossed(rng):
    dec = random_reductive(rng)
    return rng.choice([identity_reductive_crossed, abelian_reductive_crossed])(dec)


def identity_crossed(a):
    """id: T -> T with the adjoint action."""
    eye = T.zeros((a.dim, a.dim))
    for k in range(a.dim):
        eye[k, k] = T.ONE
    return CrossedModuleLYA(a, a, adjoint_rep(a), eye)


def module_crossed(a, rep):
    """Zero boundary into T from the module of rep, viewed as an abelian LY algebra."""
    return CrossedModuleLYA(a, LYAlgebra(rep.module_dim), rep, T.zeros((a.dim, rep.module_dim)))


def random_crossed(rng, dim=None):
    """A valid crossed module of LY algebras from one of the known sources."""
    kind = rng.choice(["identity", "module", "leibniz", "reductive"])
    if kind == "identity":
        return identity_crossed(random_ly(rng, dim))
    if kind == "module":
        a = random_ly(rng, dim)
        return module_crossed(a, adjoint_rep(a))
    if kind == "leibniz":
        return crossed_from_leibniz(random_leibniz_crossed(rng, dim))
    from .crossed import crossed_from_reductive
    return crossed_from_reductive(random_reductive_crossed(rng))


# extensions

def split_extension(a):
    """0 -> M -> M -0-> T -> T -> 0 with M the adjoint module of a."""
    n = a.dim
    eye = T.zeros((n, n))
    for k in range(n):
        eye[k, k] = T.ONE
    c = module_crossed(a, adjoint_rep(a))
    return CrossedExtension(c, a, eye, eye, eye, T.zeros((n, n)))


def trivial_module_extension(a):
    """M = V = 0, S = T."""
    n = a.dim
    eye = T.zeros((n, n))
    for k in range(n):
        eye[k, k] = T.ONE
    c = CrossedModuleLYA(a, LYAlgebra(0), Representation(n, 0), T.zeros((n, 0)))
    return CrossedExtension(c, a, T.zeros((0, 0)), eye, eye, T.zeros((0, n)))


def gl2_extension():
    """0 -> sl2 -> span(I) + sl2 -> gl2 -> gl2/span(I) -> 0.

    gl2 is taken as a Leibniz algebra; V is abelian with gl2 acting on sl2
    by commutator and trivially on I; the boundary sends I to I and kills
    sl2.  Through the Leibniz construction this is a crossed module of LY
    algebras with kernel sl2 and cokernel of dim 3.  The section
    E11, E12, E21 is not a homomorphism, but the defects land in span(I),
    on which S acts trivially, so the extracted cocycle vanishes for these
    sections.  Moving q by a map into M gives a nonzero, cohomologous one.
    """
    L = lie_as_leibniz(gl2_lie())
    b = gl2_lie().bracket_tensor
    # V basis: I, H = E11 - E22, E12, E21 ; in gl2 coordinates
    vb = T.tensor([[1, 0, 0, 1], [1, 0, 0, -1], [0, 1, 0, 0], [0, 0, 1, 0]], (4, 4)).T
    vinv = T.inverse(vb)
    left = T.zeros((4, 4, 4))
    for x in range(4):
        for u in range(1, 4):
            left[x, u] = T.einsum("j,jk,ik->i", vb[:, u], b[x], vinv)
    right = -left.transpose(1, 0, 2)
    phi = T.zeros((4, 4))
    phi[:, 0] = vb[:, 0]
    c = crossed_from_leibniz(LeibnizCrossedModule(L, LeibnizAlgebra(4), left, right, phi))
    S = c.t
    # T = S / span(I) with basis the images of E11, E12, E21; E22 maps to -t0
    s = T.tensor([[1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 0, 0]], (4, 3))
    pi = T.tensor([[1, 0, 0, -1], [0, 1, 0, 0], [0, 0, 1, 0]], (3, 4))
    bT = T.einsum("ia,jb,ijk,ck->abc", s, s, S.binary, pi)
    tT = T.einsum("ia,jb,lc,ijlk,ek->abce", s, s, s, S.ternary, pi)
    t = LYAlgebra(3, bT, tT)
    i = T.zeros((4, 3))
    for k in range(3):
        i[k + 1, k] = T.ONE
    # q(I) = I in V, read off the E11 coordinate
    q = T.zeros((4, 4))
    q[0, 0] = T.ONE
    return CrossedExtension(c, t, i, pi, s, q)


def nilpotent_extension():
    """Non-split extension of abelian k^3 by the trivial module k.

    S = T + L2(T) is free 2-step nilpotent on x0, x1, x2 with [xi, xj] = wij.
    V = L2(T) + k is abelian, xi acts by xi . wjk = det(xi, xj, xk) m and
    everything else acts trivially; the boundary sends wjk to wjk and kills m.
    The extracted cocycle is -12 det on (l3) and zero elsewhere.  T is abelian
    and k trivial, yet the l3 block of Delta2 still carries the cyclic sum of
    omega, so this cocycle is the image of a pair with nu = 0 and its class
    is trivial.
    """
    pairs = [(0, 1), (0, 2), (1, 2)]
    b = T.zeros((6, 6, 6))
    for n, (i, j) in enumerate(pairs):
        b[i, j, 3 + n] = T.ONE
        b[j, i, 3 + n] = -T.ONE
    L = lie_as_leibniz(LieAlgebra(6, b))
    left = T.zeros((6, 4, 4))
    for i in range(3):
        for n, (j, k) in enumerate(pairs):
            if i not in (j, k):
                # sign of the permutation (i, j, k)
                left[i, n, 3] = T.Q(1 if (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] else -1)
    right = -left.transpose(1, 0, 2)
    phi = T.zeros((6, 4))
    for n in range(3):
        phi[3 + n, n] = T.ONE
    c = crossed_from_leibniz(LeibnizCrossedModule(L, LeibnizAlgebra(4), left, right, phi))
    s = T.zeros((6, 3))
    pi = T.zeros((3, 6))
    for k in range(3):
        s[k, k] = pi[k, k] = T.ONE
    t = LYAlgebra(3)
    i = T.zeros((4, 1))
    i[3, 0] = T.ONE
    q = T.zeros((4, 6))
    for n in range(3):
        q[n, 3 + n] = T.ONE
    return CrossedExtension(c, t, i, pi, s, q)


def random_sections(rng, e):
    """(s + d h, q + i g) for random h: T -> V and g: S -> M."""
    c = e.crossed
    h = T.tensor([[rand_fraction(rng) for _ in range(e.t.dim)] for _ in range(c.v.dim)],
                 (c.v.dim, e.t.dim))
    g = T.tensor([[rand_fraction(rng) for _ in range(c.t.dim)] for _ in range(e.m_dim)],
                 (e.m_dim, c.t.dim))
    return (e.s + T.einsum("ak,kb->ab", c.boundary, h),
            e.q + T.einsum("vm,ms->vs", e.i, g))


def random_rng(seed):
    return random.Random(seed)


# packaged fixtures

def a2_broken():
    """A2 with [e0, e0, e1] = e1 added.

    In dimension 2 every cyclic triple repeats an index, so LY3 can only fail
    once the ternary bracket stops being skew; this breaks LY2 and LY3.
    """
    a = a2()
    t = a.ternary.copy()
    t[0, 0, 1, 1] += 1
    return LYAlgebra(2, a.binary, t, validate=False)


def a2_skeletal():
    """Skeletal 2-term algebra on A2 + adjoint with a nonzero (3,4,4,5)-cocycle."""
    from .cohomology import h3445_dims
    from .cochain import CochainQuadruple
    from .twoterm import skeletal_from_data
    a = a2()
    r = adjoint_rep(a)
    z = h3445_dims(a, r).cocycle_basis.basis
    q = CochainQuadruple.from_vector(a.dim, r.module_dim, z[-1])
    return skeletal_from_data(a, r, q)


def nilpotent_alt_sections():
    """A fixed pair (s + d h, q + i g) for nilpotent_extension."""
    return random_sections(random_rng(17), nilpotent_extension())


def packaged_fixtures():
    """Objects stored under lietriple/fixtures, keyed by file stem."""
    from .documents import HomomorphismDocument, Sections
    from .rep import LYAction
    from .twoterm import TwoTermHomomorphism
    a = a2()
    sk = a2_skeletal()
    s, q = nilpotent_alt_sections()
    return {
        "abelian2": abelian2(),
        "abelian3": abelian3(),
        "abelian2_zero_rep": zero_rep(abelian2(), 1),
        "a2": a,
        "a2_broken": a2_broken(),
        "a2_lie": a2_lie(),
        "a2_adjoint": adjoint_rep(a),
        "a2_adjoint_action": LYAction(adjoint_rep(a), LYAlgebra(a.dim)),
        "a2_skeletal": sk,
        "a2_skeletal_identity": HomomorphismDocument(sk, sk, TwoTermHomomorphism.identity(sk)),
        "a2_identity_crossed": identity_crossed(a),
        "so3": so3(),
        "so3_lie": so3_lie(),
        "so3_reductive": so3_reductive(),
        "so3red": identity_reductive_crossed(so3_reductive()),
        "omni1": omni1(),
        "leib2": leib2(),
        "leib2_crossed": identity_leibniz_crossed(leib2()),
        "split_extension": split_extension(a),
        "nonsplit_extension": nilpotent_extension(),
        "nonsplit_alt_sections": Sections(s, q),
        "gl2_extension": gl2_extension(),
    }
