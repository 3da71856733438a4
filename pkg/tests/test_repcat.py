import pytest
from hypothesis import given, settings, strategies as st

from hopfmonad.exactlin import LinMap, ident, kron, flip, try_invert, Singular, GF
from hopfmonad.report import HypothesisError
from hopfmonad.repcat import (
    ModuleRep, regular_module, trivial_module, free_module, tensor_modules, module_morphisms, is_module_map,
    check_representation, regular_hopf_module, free_hopf_module, diagonal_hopf_module, fundamental_theorem_check,
    coinvariants, induced_ccc_braiding, induced_ccc_braiding_by_fusion, ccc_report, cotensor, free_comodule,
    regular_comodule, trivial_comodule, cotensor_unit_check, yd_braiding, tensor_yd, braiding_axioms,
)
from hopfmonad.constructions import RMatrix, quasitriangular_braiding
from hopfmonad.corpus import (
    kZ2, kZ3, kZ2xZ2, kM2, sweedler_h4, gf2_superline, superline_yd, hopf_corpus, z2_rmatrix, trivial_bialgebra,
)


def sign_module(h=None):
    h = h or kZ2()
    return ModuleRep(h, 1, LinMap([[1, -1]]), "sign")


def test_module_axioms_detect_corruption():
    h = kZ2()
    assert check_representation(sign_module(h)).passed
    assert not check_representation(ModuleRep(h, 1, LinMap([[1, 2]]), "bad")).passed


def test_tensor_of_sign_modules_is_trivial():
    h = kZ2()
    s = sign_module(h)
    ss = tensor_modules(h, s, s)
    assert ss.action == trivial_module(h).action


def test_hom_spaces_by_schur():
    h = kZ2()
    s, t = sign_module(h), trivial_module(h)
    assert len(module_morphisms(s, t)) == 0
    assert len(module_morphisms(s, s)) == 1
    assert len(module_morphisms(regular_module(h), regular_module(h))) == 2


@pytest.mark.parametrize("h", hopf_corpus(), ids=lambda h: h.name)
@pytest.mark.parametrize("kind", ["regular", "free1", "free2", "free3", "diagonal"])
def test_fundamental_theorem(h, kind):
    if kind == "regular":
        hm = regular_hopf_module(h)
    elif kind == "diagonal":
        hm = diagonal_hopf_module(h, regular_module(h))
    else:
        hm = free_hopf_module(h, int(kind[-1]))
    rep = fundamental_theorem_check(h, hm)
    assert rep.passed, str(rep)
    assert hm.dim == h.dim * rep.data["dim M^co"]


def test_fundamental_theorem_rejects_monoid_parent():
    with pytest.raises(HypothesisError):
        fundamental_theorem_check(kM2(), free_hopf_module(kM2(), 1))


def test_corrupted_hopf_module_fails():
    h = kZ2()
    hm = free_hopf_module(h, 1)
    from hopfmonad.repcat import HopfModuleRep, ComoduleRep
    bad = HopfModuleRep(hm.module, ComoduleRep(h, hm.dim, kron(h.unit, ident(hm.dim))))
    assert not check_representation(bad).passed


@pytest.mark.parametrize("h", [kZ2(), kZ3(), kZ2xZ2(), gf2_superline()], ids=lambda h: h.name)
@pytest.mark.parametrize("d", [1, 2, 3])
def test_ccc_braiding_is_flip_for_cocommutative(h, d):
    for n in (free_module(h, d), ModuleRep(h, d, kron(h.counit, ident(d, h.field)))):
        assert induced_ccc_braiding(h, n) == flip(h.dim, n.dim, h.field)


def test_ccc_braiding_not_flip_for_h4():
    h = sweedler_h4()
    n = regular_module(h)
    t = induced_ccc_braiding(h, n)
    assert t != flip(4, 4)
    assert t == induced_ccc_braiding_by_fusion(h, n)
    assert ccc_report(h, [regular_module(h), trivial_module(h)]).passed


@given(st.integers(1, 3), st.integers(1, 3))
@settings(max_examples=9, deadline=None)
def test_cotensor_of_free_comodules(x, y):
    c = kZ2()
    ct = cotensor(c, free_comodule(c, x), free_comodule(c, y))
    assert ct.dim == 2 * x * y


def test_cotensor_unit_law():
    c = kZ3()
    assert cotensor_unit_check(c, regular_comodule(c)).passed
    assert cotensor_unit_check(c, trivial_comodule(c, 2)).passed


def test_cotensor_needs_cocommutative():
    with pytest.raises(ValueError):
        cotensor(sweedler_h4(), regular_comodule(sweedler_h4()), regular_comodule(sweedler_h4()))


def test_superline_self_braiding_squares_to_identity():
    y = superline_yd()
    tau = yd_braiding(y.yd, y.yd.module)
    # theta (x) theta |-> -theta (x) theta
    assert tau.rows[3][3] == -1
    assert tau @ tau == ident(4)


def test_yd_braiding_hexagons():
    h = kZ2()
    x = superline_yd(h).yd
    s = sign_module(h)
    xx = tensor_yd(h, x, x)
    assert check_representation(xx).passed
    # tau_{X, Y (x) Z}
    yz = tensor_modules(h, x.module, s)
    lhs = yd_braiding(x, yz)
    rhs = kron(ident(2), yd_braiding(x, s)) @ kron(yd_braiding(x, x.module), ident(1))
    assert lhs == rhs
    # tau_{X (x) X, Z}
    lhs = yd_braiding(xx, s)
    rhs = kron(yd_braiding(x, s), ident(2)) @ kron(ident(2), yd_braiding(x, s))
    assert lhs == rhs


def test_quasitriangular_braiding_axioms():
    h = kZ2()
    r = RMatrix(h, z2_rmatrix())
    tau = lambda a, b: quasitriangular_braiding(r, a, b)
    mods = [regular_module(h), sign_module(h)]
    for a in mods:
        for b in mods:
            assert braiding_axioms(tau, a, b, mods[1], h).passed
