import pytest

from hopfmonad.exactlin import LinMap, ident, flip, kron
from hopfmonad.hopfcore import check_bialgebra, check_antipode, check_structure, is_commutative, is_cocommutative
from hopfmonad.constructions import (
    ModuleAlgebra, check_module_algebra, cross_product_algebra, check_braided_hopf, bosonisation, transport_report,
    radford_decompose, distributive_law_report, tensor_via_distributive_law, DistributiveLawError, RMatrix,
    check_rmatrix, check_augmentation, UnverifiedInput,
)
from hopfmonad.corpus import (
    kZ2, kZ3, kM2, sweedler_h4, superline_yd, trivial_yd_group_algebra, sign_algebra_action, z2_rmatrix,
)


def test_cross_product_of_sign_action():
    ma = sign_algebra_action()
    assert check_module_algebra(ma).passed
    a = cross_product_algebra(ma)
    assert a.dim == 4 and check_structure(a).passed
    # 1 (x) g and y (x) 1 anticommute
    g, y = (0, 1, 0, 0), (0, 0, 1, 0)
    gy = a.mult.apply(kron(LinMap([[c] for c in g]), LinMap([[c] for c in y])).column(0))
    yg = a.mult.apply(kron(LinMap([[c] for c in y]), LinMap([[c] for c in g])).column(0))
    assert tuple(gy) == tuple(-c for c in yg)


def test_cross_product_rejects_non_module_algebra():
    h = kZ2()
    # g fixes 1 but sends y to 2y: not an algebra action
    ma = ModuleAlgebra(h, sign_algebra_action().carrier, LinMap([[1, 0, 1, 0], [0, 1, 0, 2]]))
    assert not check_module_algebra(ma).passed
    with pytest.raises(UnverifiedInput):
        cross_product_algebra(ma)


def test_superline_is_braided_hopf_and_bosonises_to_h4():
    y = superline_yd()
    assert check_braided_hopf(y).passed
    h = sweedler_h4()
    assert h.dim == 4
    assert check_bialgebra(h).passed and check_antipode(h).passed


def test_trivial_yd_bosonisation_is_plain_tensor():
    h = kZ2()
    b = bosonisation(h, trivial_yd_group_algebra(h))
    t = tensor_via_distributive_law(kZ2(), kZ2(), flip(2, 2))
    assert b.mult == t.mult and b.comult == t.comult and b.antipode == t.antipode
    assert is_commutative(b) and is_cocommutative(b)


def test_radford_recovers_superline():
    h2, h1 = sweedler_h4(), kZ2()
    incl = LinMap.from_images(2, 4, lambda k: {k: 1})
    proj = LinMap.from_images(4, 2, lambda k: {k % 2: 1} if k < 2 else {})
    b, rep = radford_decompose(h2, h1, proj, incl)
    assert rep.passed, str(rep)
    assert b.dim == 2
    # B sits inside H4 as span{1, theta} and its structure maps are the superline's
    assert rep.data["inclusion of B"].rows == ((1, 0), (0, 0), (0, 1), (0, 0))
    assert transport_report(b, superline_yd(), ident(2)).passed


def test_radford_rejects_non_split_pair():
    h2, h1 = sweedler_h4(), kZ2()
    incl = LinMap.from_images(2, 4, lambda k: {k: 1})
    with pytest.raises(ValueError):
        radford_decompose(h2, h1, LinMap.zero(2, 4), incl)


@pytest.mark.parametrize("c,b", [(kZ2(), kZ3()), (kZ3(), kZ2()), (sweedler_h4(), kZ2())], ids=["23", "32", "H4-2"])
def test_flip_distributive_law(c, b):
    lam = flip(b.dim, c.dim)
    assert distributive_law_report(c, b, lam).passed
    t = tensor_via_distributive_law(c, b, lam)
    assert t.dim == c.dim * b.dim


def test_identity_is_not_a_distributive_law():
    c = b = kZ2()
    with pytest.raises(DistributiveLawError):
        tensor_via_distributive_law(c, b, LinMap([[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1]]))


def test_z2_rmatrix_is_quasitriangular():
    rep = check_rmatrix(RMatrix(kZ2(), z2_rmatrix()))
    assert rep.passed, str(rep)


def test_corrupted_rmatrix_fails_hexagon():
    # R = 1 (x) g
    rep = check_rmatrix(RMatrix(kZ2(), (0, 1, 0, 0)))
    assert rep.failed("(Delta (x) id)R = R13 R23")


def test_trivial_rmatrix_fails_on_h4():
    one = (1,) + (0,) * 15
    rep = check_rmatrix(RMatrix(sweedler_h4(), one))
    assert rep.failed("quasi-cocommutativity")


def test_augmentations():
    h = kZ2()
    rep = check_augmentation(h, h.counit)
    assert rep.passed and rep.data["left regular"] and rep.data["aug is the counit"]
    sign = check_augmentation(h, LinMap([[1, -1]]))
    assert sign.passed and sign.data["left regular"] and not sign.data["(aug (x) aug)Delta = aug"]
    m = kM2()
    rep = check_augmentation(m, m.counit)
    assert rep.passed


def test_non_multiplicative_augmentation_fails():
    assert not check_augmentation(kZ2(), LinMap([[1, 2]])).passed
