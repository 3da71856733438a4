import pytest

from hopfmonad.exactlin import LinMap, ident, kron, vec_map, GF
from hopfmonad.galois import (
    BialgebraInjection, check_injection, unit_injection, identity_injection, quotient_coalgebra, galois_beta,
    gamma_map, OreDatum, check_ore_datum, ore_lifted_action_check, PreconditionError,
)
from hopfmonad.repcat import regular_module
from hopfmonad.corpus import kZ2, kZ3, kZ2xZ2, kM2, gf2_superline, sweedler_h4, hopf_corpus


def z2_into_klein():
    h, b = kZ2xZ2(), kZ2()
    # g |-> (g, 1); basis of Z2xZ2 is (a, b) -> 2a + b
    f = LinMap.from_images(2, 4, lambda i: {2 * i: 1})
    return BialgebraInjection(b, h, f)


def z2_into_h4():
    return BialgebraInjection(kZ2(), sweedler_h4(), LinMap.from_images(2, 4, lambda i: {i: 1}))


@pytest.mark.parametrize("h", hopf_corpus(), ids=lambda h: h.name)
def test_unit_injection_galois_iff_hopf(h):
    _, rep = galois_beta(unit_injection(h))
    assert rep.passed
    assert rep.data["dim C (x) H"] == h.dim ** 2


def test_monoid_unit_injection_not_galois():
    _, rep = galois_beta(unit_injection(kM2()))
    assert rep.failed("beta bijective")


@pytest.mark.parametrize("inj", [identity_injection(kZ3()), z2_into_klein(), z2_into_h4()],
                         ids=["id", "Z2-klein", "Z2-H4"])
def test_hopf_subalgebra_injections_are_galois(inj):
    assert check_injection(inj).passed
    q = quotient_coalgebra(inj)
    assert q.c_dim * inj.b.dim == inj.h.dim
    _, rep = galois_beta(inj)
    assert rep.passed, str(rep)


def test_non_injective_map_is_rejected():
    h = kZ2()
    bad = BialgebraInjection(h, h, h.unit @ h.counit)
    assert not check_injection(bad).passed


@pytest.mark.parametrize("inj", [unit_injection(kZ2()), z2_into_klein(), unit_injection(sweedler_h4())],
                         ids=["k-Z2", "Z2-klein", "k-H4"])
def test_gamma_rebuilds_inverse_fusion(inj):
    _, rep = gamma_map(inj, 2)
    assert rep.passed, str(rep)


def test_gamma_singular_for_monoid():
    _, rep = gamma_map(unit_injection(kM2()), 1)
    assert rep.failed("Gamma bijective")


def superline_ore():
    b = gf2_superline()
    return OreDatum(b, LinMap([[0, 0], [0, 1]], GF(2)))


def test_ore_datum_axioms():
    assert check_ore_datum(superline_ore()).passed
    b = gf2_superline()
    # the identity is not a derivation
    assert not check_ore_datum(OreDatum(b, ident(2, GF(2)))).passed


def test_ore_lifted_action_with_x_equal_d():
    od = superline_ore()
    reg = regular_module(od.b)
    rep = ore_lifted_action_check(od, (reg, od.d), (reg, od.d))
    assert rep.passed, str(rep)
    # B (x) B is free of rank 2 over B
    assert rep.data["dim Hom_B(B (x) M, N)"] == 4


def test_ore_multiplication_by_p_violates_precondition():
    od = superline_ore()
    b = od.b
    reg = regular_module(b)
    X = b.mult @ kron(vec_map((0, 1), b.field), ident(2, b.field))
    with pytest.raises(PreconditionError):
        ore_lifted_action_check(od, (reg, X), (reg, X))
