import pytest

from hopfmonad.exactlin import ident, try_invert, Singular
from hopfmonad.hopfcore import solve_antipode, check_antipode, with_antipode, dual_bialgebra
from hopfmonad.fusion import (
    fusion_bundle, fusion_at, recover_antipodes, hopf_classify, classify_report, binary_antipode_left,
    restrict_along_action, lifted_hom_xi,
)
from hopfmonad.repcat import regular_module, trivial_module, free_module
from hopfmonad.corpus import kZ2, kZ3, kM2, sweedler_h4, gf2_superline, bialgebra_corpus


@pytest.mark.parametrize("b", bialgebra_corpus(), ids=lambda b: b.name)
def test_h1_invertible_iff_antipode_exists(b):
    fb = fusion_bundle(b)
    oracle = solve_antipode(b)
    assert (fb.h1_inv is not None) == (oracle is not None)
    S, _ = recover_antipodes(b)
    if S is not None:
        assert check_antipode(with_antipode(b, S)).passed
        # antipodes are unique
        assert S == oracle


def test_recovered_h4_antipode_matches_construction():
    h = sweedler_h4()
    S, Sp = recover_antipodes(h)
    assert S == h.antipode
    assert S @ Sp == ident(4)


def test_monoid_verdict_and_witness():
    v = hopf_classify(kM2())
    assert not v.left_hopf and not v.right_hopf
    w = v.witnesses["H1 kernel"]
    assert not any(fusion_bundle(kM2()).h1.apply(w))


@pytest.mark.parametrize("x,y", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_probe_fusion_operators_invertible_for_hopf(x, y):
    hl, hr = fusion_at(kZ3(), x, y)
    assert not isinstance(try_invert(hl), Singular)
    assert not isinstance(try_invert(hr), Singular)


def test_probe_fusion_operators_singular_for_monoid():
    hl, _ = fusion_at(kM2(), 2, 1)
    assert isinstance(try_invert(hl), Singular)


def test_classify_report_on_superline():
    rep = classify_report(gf2_superline())
    assert rep.passed


@pytest.mark.parametrize("h,m,n", [
    (sweedler_h4(), "regular", 2),
    (kZ3(), "trivial", 1),
    (kZ2(), "free2", 1),
])
def test_binary_antipode_agrees_with_fusion_inverse(h, m, n):
    mod = {"regular": regular_module, "trivial": trivial_module, "free2": lambda b: free_module(b, 2)}[m](h)
    xi = lifted_hom_xi(h, mod, n)
    assert xi == binary_antipode_left(h, mod, n) @ restrict_along_action(h, mod, n)


def test_dual_of_monoid_algebra_is_not_hopf():
    assert not hopf_classify(dual_bialgebra(kM2())).left_hopf
