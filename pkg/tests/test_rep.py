import pytest

from lietriple import _tensor as T
from lietriple.exactla import DimensionError
from lietriple.families import (a2, a2_broken, abelian2, omni1, random_invertible, random_ly,
                                random_rng, so3, zero_rep)
from lietriple.lya import InvalidInput, LYAlgebra, verify_ly
from lietriple.rep import (LYAction, Representation, adjoint_rep, check_action, d_skew_report,
                           semidirect, verify_rep)

from oracle import ly_failures, rep_failures

LABELS = ["R31", "R41", "R42", "R51", "R52", "R61", "R62"]


def test_zero_rep_on_abelian2():
    rep = verify_rep(abelian2(), zero_rep(abelian2(), 3))
    assert rep.labels() == LABELS
    assert rep.passed


def test_adjoint_fixtures():
    for a in (a2(), so3(), omni1()):
        r = adjoint_rep(a)
        assert verify_rep(a, r).passed
        assert rep_failures(a, r) == set()
        assert d_skew_report(r).passed


def test_adjoint_a2_matrices():
    r = adjoint_rep(a2())
    # rho(e0) e1 = [e0, e1] = e0
    assert list(r.rho[0, :, 1]) == [1, 0]
    assert list(r.rho[1, :, 0]) == [-1, 0]
    assert adjoint_rep(abelian2()) == zero_rep(abelian2(), 2)


def test_adjoint_omni1():
    r = adjoint_rep(omni1())
    # rho(f1) f2 = f2
    assert list(r.rho[0, :, 1]) == [0, 1]
    assert T.is_zero(r.D) and T.is_zero(r.theta)


def test_swapped_d_and_theta_fail_r31():
    r = adjoint_rep(a2())
    bad = Representation(2, 2, r.rho, r.theta, r.D)
    rep = verify_rep(a2(), bad)
    e = rep.entry("R31")
    assert not e.passed
    # pair (e0, e1), column e1
    assert e.witness == (0, 1, 1)
    assert set(rep.failed()) == rep_failures(a2(), bad)


def test_d_skew_report_catches_non_skew_d():
    D = T.zeros((2, 2, 1, 1))
    D[0, 0, 0, 0] = 1
    r = Representation(2, 1, None, D, None)
    assert not d_skew_report(r).passed
    # R31 at (e0, e0) sees D(e0, e0) directly
    assert "R31" in verify_rep(abelian2(), r).failed()


def test_r42_r61_only_failure():
    # fails exactly the two conditions that the 2-term identities do not reach
    th = T.zeros((2, 2, 2, 2))
    D = T.zeros((2, 2, 2, 2))
    th[0, 1, 0, 1] = 1
    D[1, 0, 0, 1] = 1
    D[0, 1, 0, 1] = -1
    r = Representation(2, 2, None, D, th)
    assert verify_rep(a2(), r).failed() == ["R42", "R61"]
    assert rep_failures(a2(), r) == {"R42", "R61"}


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        verify_rep(a2(), zero_rep(so3(), 1))
    with pytest.raises(DimensionError):
        LYAction(adjoint_rep(a2()), so3())


def test_adjoint_rejects_invalid_algebra():
    with pytest.raises(InvalidInput):
        adjoint_rep(a2_broken())


def test_random_adjoint_reps():
    rng = random_rng(5)
    for k in range(12):
        a = random_ly(rng, [2, 3, 4][k % 3])
        r = adjoint_rep(a)
        assert verify_rep(a, r).passed
        assert d_skew_report(r).passed
    for _ in range(3):
        a = random_ly(rng, 2)
        assert rep_failures(a, adjoint_rep(a)) == set()


def test_semidirect_zero_action():
    act = LYAction(zero_rep(abelian2(), 2), LYAlgebra(2))
    s = semidirect(abelian2(), act)
    assert s == LYAlgebra(4)
    assert verify_ly(s).passed
    assert check_action(abelian2(), act).passed


def test_semidirect_brackets():
    a = a2()
    s = semidirect(a, LYAction(adjoint_rep(a), LYAlgebra(2)))
    assert s.dim == 4
    # [e0, u1] = rho(e0) u1 = u0 and [u1, e0] = -u0
    assert list(s.bracket([1, 0, 0, 0], [0, 0, 0, 1])) == [0, 0, 1, 0]
    assert list(s.bracket([0, 0, 0, 1], [1, 0, 0, 0])) == [0, 0, -1, 0]
    # [x, y, w] = D(x, y) w and [u, y, z] = theta(y, z) u
    t = a.ternary
    assert list(s.triple([1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]))[2:] == list(t[0, 1, 0])
    assert list(s.triple([0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]))[2:] == list(t[0, 1, 0])
    assert verify_ly(s).passed


def test_adjoint_action_on_itself():
    a = a2()
    act = LYAction(adjoint_rep(a), a)
    rep = check_action(a, act)
    assert rep.passed
    assert ly_failures(semidirect(a, act, module_brackets=False)) == set()
    # keeping V's own brackets in the direct sum breaks the higher identities
    assert verify_ly(semidirect(a, act)).failed() == ["LY4", "LY5", "LY6"]
    assert ly_failures(semidirect(a, act)) == {"LY4", "LY5", "LY6"}


def test_action_with_wrong_module_brackets():
    a = a2()
    rep = check_action(a, LYAction(adjoint_rep(a), a2_broken()))
    assert not rep.passed
    e = rep.entry("V-LY3")
    assert not e.passed
    assert e.witness == (0, 0, 1)


def test_action_with_invalid_maps():
    r = adjoint_rep(a2())
    bad = Representation(2, 2, r.rho, r.theta, r.D)
    rep = check_action(a2(), LYAction(bad, LYAlgebra(2)))
    assert not rep.passed
    assert any(l.startswith("semidirect-") for l in rep.failed())


def test_change_basis():
    rng = random_rng(9)
    a = so3()
    r = adjoint_rep(a)
    p = random_invertible(rng, 3)
    q = random_invertible(rng, 3)
    assert verify_rep(a.change_basis(p), r.change_basis(p, q)).passed
    assert r.change_basis(p, p) == adjoint_rep(a.change_basis(p))
