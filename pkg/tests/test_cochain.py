import numpy as np
import pytest

from lietriple.cochain import (MAX_CODOMAIN_ENV, Cochain, CochainPair, CochainQuadruple,
                               SizeLimitError, SkewSignature, canonical_args, delta2, delta3,
                               eval_cochain, pointwise_delta2, pointwise_delta3, pointwise_matrix,
                               pointwise_yamaguti1, symmetry_audit, yamaguti_delta,
                               yamaguti_signature)
from lietriple.exactla import DimensionError
from lietriple.families import (a2, abelian2, fixture_algebras, omni1, rand_fraction, random_ly,
                                random_rng, so3, zero_rep)
from lietriple.lya import InvalidInput, LYAlgebra
from lietriple.rep import Representation, adjoint_rep


def _random_cochain(rng, sig, d, m):
    return Cochain(sig, d, m, [rand_fraction(rng) for _ in range(sig.space_dim(d, m))])


def test_dimension_formula_against_enumeration():
    for d in range(1, 5):
        p = d * (d - 1) // 2
        for k in range(0, 4):
            for n, want in ((2 * k, p ** k), (2 * k + 1, p ** k * d)):
                if n == 0:
                    continue
                sig = yamaguti_signature(n)
                assert sig.space_dim(d, 2) == want * 2
                args = canonical_args(sig, d)
                assert len(args) == want
                assert len({tuple(a) for a in args}) == want
                assert all(a[i] < a[j] for a in args for i, j in sig.skew_pairs)


def test_signature_validation():
    with pytest.raises(ValueError):
        SkewSignature(3, ((0, 1), (1, 2)))
    with pytest.raises(ValueError):
        SkewSignature(2, ((0, 2),))
    assert SkewSignature(4, ((2, 3),)).free_slots == (0, 1)


def test_eval_examples():
    sig = SkewSignature(2, ((0, 1),))
    nu = Cochain(sig, 2, 1, [5])  # nu(e0, e1) = 5
    assert eval_cochain(nu, [[0, 1], [1, 0]]) == [-5]
    assert eval_cochain(nu, [[2, 0], [0, 3]]) == [30]
    assert eval_cochain(nu, [[1, 1], [1, 1]]) == [0]
    rng = random_rng(2)
    c = _random_cochain(rng, yamaguti_signature(4), 3, 2)
    x, y = [1, 2, 3], [0, -1, 4]
    assert eval_cochain(c, [x, y, x, x]) == [0, 0]
    with pytest.raises(DimensionError):
        eval_cochain(nu, [[1, 0]])


def test_tensor_and_sparse_round_trip():
    rng = random_rng(4)
    for sig in (yamaguti_signature(3), yamaguti_signature(4), SkewSignature(4, ((0, 1),))):
        c = _random_cochain(rng, sig, 3, 2)
        assert Cochain.from_tensor(sig, c.to_tensor()) == c
        assert Cochain.from_sparse(sig, 3, 2, dict(c.sparse())) == c
    with pytest.raises(ValueError):
        Cochain.from_sparse(yamaguti_signature(2), 2, 1, {(1, 0, 0): 1})


def test_yamaguti_delta_abelian_zero():
    r = zero_rep(abelian2(), 1)
    assert yamaguti_delta(1, abelian2(), r).is_zero()
    assert delta2(abelian2(), r).is_zero()
    assert delta3(abelian2(), r).is_zero()


def test_linearity():
    a = a2()
    r = adjoint_rep(a)
    op = yamaguti_delta(1, a, r)
    rng = random_rng(8)
    x = [rand_fraction(rng) for _ in range(op.shape[1])]
    assert op.apply([2 * v for v in x]) == [2 * v for v in op.apply(x)]
    assert op.apply([0] * op.shape[1]) == [0] * op.shape[0]


def test_zero_inputs():
    a = a2()
    r = adjoint_rep(a)
    assert pointwise_delta2(a, r, CochainPair.zero(2, 2)).is_zero()
    assert all(c.is_zero() for c in pointwise_delta3(a, r, CochainQuadruple.zero(2, 2)))
    assert not any(delta3(a, r).apply([0] * CochainQuadruple.space_dim(2, 2)))


@pytest.mark.parametrize("name", ["a2", "omni1", "so3red"])
def test_matrix_matches_pointwise_per_basis_element(name):
    a = fixture_algebras()[name]
    r = adjoint_rep(a)
    d, m = a.dim, r.module_dim
    op = delta2(a, r)
    for k in range(CochainPair.space_dim(d, m)):
        pair = CochainPair.from_vector(d, m, [int(i == k) for i in range(op.shape[1])])
        assert op.apply(pair.vector()) == pointwise_delta2(a, r, pair).vector()
    op = delta3(a, r)
    for k in range(CochainQuadruple.space_dim(d, m)):
        quad = CochainQuadruple.from_vector(d, m, [int(i == k) for i in range(op.shape[1])])
        out = [v for c in pointwise_delta3(a, r, quad) for v in c.coeffs]
        assert op.apply(quad.vector()) == out


def test_yamaguti_matches_pointwise():
    a = a2()
    r = adjoint_rep(a)
    rng = random_rng(12)
    f = _random_cochain(rng, yamaguti_signature(2), 2, 2)
    g = _random_cochain(rng, yamaguti_signature(3), 2, 2)
    out = [v for c in pointwise_yamaguti1(a, r, f, g) for v in c.coeffs]
    assert yamaguti_delta(1, a, r).apply(list(f.coeffs) + list(g.coeffs)) == out
    assert pointwise_matrix("yamaguti1", a, r) == yamaguti_delta(1, a, r).matrix


def test_random_matrix_matches_pointwise():
    rng = random_rng(13)
    for _ in range(3):
        a = random_ly(rng, 3)
        r = adjoint_rep(a)
        quad = CochainQuadruple.from_vector(
            3, 3, [rand_fraction(rng) for _ in range(CochainQuadruple.space_dim(3, 3))])
        out = [v for c in pointwise_delta3(a, r, quad) for v in c.coeffs]
        assert delta3(a, r).apply(quad.vector()) == out


def test_yamaguti_delta_squares_to_zero_on_fixtures():
    for name, a in fixture_algebras().items():
        r = adjoint_rep(a)
        first, second = yamaguti_delta(1, a, r), yamaguti_delta(2, a, r)
        assert (second.matrix @ first.matrix).is_zero(), name
        assert second.compose_is_zero(first)


def test_integer_composition_agrees_with_exact_product():
    for a in (so3(), a2(), omni1()):
        r = adjoint_rep(a)
        d2, d3 = delta2(a, r), delta3(a, r)
        assert d3.compose_is_zero(d2) == (d3.matrix @ d2.matrix).is_zero() == True
    # a composite that is not zero
    a = a2()
    r = adjoint_rep(a)
    assert not delta2(a, r).compose_is_zero(_square_identity(delta2(a, r)))


def _square_identity(op):
    from lietriple.cochain import OperatorMatrix
    n = op.shape[1]
    idx = np.arange(n)
    return OperatorMatrix("id", op.domain, op.domain, op.source_dim, op.target_dim,
                          idx, idx, np.ones(n, dtype=np.int64))


def test_symmetry_audit():
    rng = random_rng(21)
    both = SkewSignature(4, ((0, 1), (2, 3)))
    for a, l4hat_23 in ((a2(), True), (omni1(), True), (so3(), False)):
        r = adjoint_rep(a)
        pair = CochainPair.from_vector(
            a.dim, a.dim, [rand_fraction(rng) for _ in range(CochainPair.space_dim(a.dim, a.dim))])
        q = pointwise_delta2(a, r, pair)
        assert symmetry_audit(q.l4tilde, both).holds
        audit = symmetry_audit(q.l4hat, both)
        assert (0, 1) in audit.satisfied
        assert audit.holds == l4hat_23
    zero = Cochain(SkewSignature(4, ((0, 1),)), 2, 1)
    assert symmetry_audit(zero, both).holds
    assert symmetry_audit(zero, SkewSignature(4, ((0, 2), (1, 3)))).holds


def test_invalid_rep_rejected():
    r = adjoint_rep(a2())
    bad = Representation(2, 2, r.rho, r.theta, r.D)
    for build in (delta2, delta3):
        with pytest.raises(InvalidInput):
            build(a2(), bad)
    with pytest.raises(InvalidInput):
        yamaguti_delta(1, a2(), bad)
    with pytest.raises(ValueError):
        yamaguti_delta(0, a2(), r)


def test_degenerate_dimensions():
    for d in (0, 1):
        a = LYAlgebra(d)
        r = zero_rep(a, 2)
        assert delta3(a, r).shape == (0, 0)
        assert delta2(a, r).shape == (0, 0)
        assert yamaguti_delta(1, a, r).shape == (0, 0)


def test_size_guard(monkeypatch):
    monkeypatch.setenv(MAX_CODOMAIN_ENV, "100")
    with pytest.raises(SizeLimitError):
        delta3(so3(), adjoint_rep(so3()))
    monkeypatch.delenv(MAX_CODOMAIN_ENV)
    assert delta3(a2(), adjoint_rep(a2())).shape == (18, 18)


def test_describe_row():
    a = a2()
    op = delta3(a, adjoint_rep(a))
    name, args, o = op.describe_row(0)
    assert name == "star_I"
    assert len(args) == 5
    assert [b[0] for b in op.block_offsets()] == ["star_I", "star_II", "delta_I", "delta_II"]
