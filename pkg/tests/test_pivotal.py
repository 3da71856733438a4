import pytest
from hypothesis import given, settings, assume, strategies as st

from hopfmonad.exactlin import LinMap, ident, flip, kron, try_invert, Singular
from hopfmonad.pivotal import (
    pivotal_from_matrix, check_pivotal_pair, Intertwiner, check_intertwiner, unit_intertwiner, tensor_intertwiners,
    small_integer_matrices, SingularMatrix, PivotalPair,
)

mat2 = st.lists(st.integers(-2, 2), min_size=4, max_size=4).map(lambda e: LinMap([e[:2], e[2:]]))


def det2(m):
    (a, b), (c, d) = m.rows
    return a * d - b * c


def test_scan_of_small_matrices():
    ok = sing = 0
    for g in small_integer_matrices():
        try:
            assert check_pivotal_pair(pivotal_from_matrix(g)).passed
            ok += 1
        except SingularMatrix:
            sing += 1
        assert (det2(g) != 0) == (not isinstance(try_invert(g), Singular))
    assert ok + sing == 625
    # oracle: count of nonzero determinants
    assert ok == sum(1 for g in small_integer_matrices() if det2(g) != 0) == 496


def test_singular_matrix_rejected_with_kernel():
    with pytest.raises(SingularMatrix, match="kernel vector"):
        pivotal_from_matrix(LinMap([[1, 2], [2, 4]]))


def test_corrupted_pair_fails_snake():
    pp = pivotal_from_matrix(LinMap([[1, 1], [0, 1]]))
    bad = PivotalPair(2, 2, pp.cvl, pp.evl, pp.cvr, pp.evr.scale(2))
    rep = check_pivotal_pair(bad)
    assert rep.failed("right snake on P") and not rep.failed("left snake on P")


@given(mat2, mat2)
@settings(max_examples=80, deadline=None)
def test_scalar_object_intertwiner_condition(g, m):
    assume(det2(g) != 0 and det2(m) != 0)
    pp = pivotal_from_matrix(g)
    # on X = k, sigma_bar = M^T and the prescribed inverse is g^-1 M^-T g
    expect = m.T @ g == g @ m.T
    assert check_intertwiner(Intertwiner(pp, 1, m)).passed == expect


@pytest.mark.parametrize("g", [LinMap([[1, 1], [0, 1]]), LinMap([[2, 0], [0, -1]]), LinMap([[0, 1], [1, 0]])])
def test_tensor_of_intertwiners(g):
    pp = pivotal_from_matrix(g)
    u = unit_intertwiner(pp)
    fl = Intertwiner(pp, 2, flip(2, 2))
    assert check_intertwiner(fl).passed
    for a, b in [(u, u), (u, fl), (fl, u), (fl, fl)]:
        t = tensor_intertwiners(a, b)
        assert t.x_dim == a.x_dim * b.x_dim
        assert check_intertwiner(t).passed


def test_singular_sigma_rejected():
    pp = pivotal_from_matrix(ident(2))
    with pytest.raises(ValueError):
        check_intertwiner(Intertwiner(pp, 1, LinMap([[1, 0], [0, 0]])))
