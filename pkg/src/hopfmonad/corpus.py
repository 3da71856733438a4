"""The fixed example corpus: small group and monoid algebras, the GF(2)
superline, Sweedler's four-dimensional algebra and friends."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .exactlin import LinMap, QQ, GF, ident, kron, flip
from .hopfcore import (
    BialgebraSC, HopfSC, monoid_bialgebra, group_hopf, cyclic_table, from_tables, with_antipode,
    dual_bialgebra, AlgebraSC,
)
from .repcat import ModuleRep, ComoduleRep, YDRep


def trivial_bialgebra(field=QQ) -> HopfSC:
    one = ident(1, field)
    return HopfSC(one, one, one, one, "k", one, one)


def kZ2(field=QQ) -> HopfSC:
    return group_hopf(cyclic_table(2), field=field, name="kZ2")


def kZ3(field=QQ) -> HopfSC:
    return group_hopf(cyclic_table(3), field=field, name="kZ3")


def kZ2xZ2(field=QQ) -> HopfSC:
    # basis 1, a, b, ab encoded as bit pairs
    table = [[i ^ j for j in range(4)] for i in range(4)]
    return group_hopf(table, field=field, name="kZ2xZ2")


def kM2(field=QQ) -> BialgebraSC:
    """Monoid algebra of {1, e} with e^2 = e: a bialgebra without antipode."""
    return monoid_bialgebra([[0, 1], [1, 1]], field=field, name="kM2")


def gf2_superline() -> HopfSC:
    """GF(2)[p]/(p^2) with p primitive (S(p) = -p = p)."""
    F = GF(2)
    b = from_tables(2, lambda i, j: {i + j: 1} if i + j < 2 else {}, [1, 0],
                    lambda i: {(0, 0): 1} if i == 0 else {(1, 0): 1, (0, 1): 1}, [1, 0], F, "GF2[p]/p^2")
    return with_antipode(b, ident(2, F), ident(2, F))


def superline_yd(h: HopfSC | None = None):
    """k + k theta over k[Z/2]: g.theta = -theta, delta(theta) = g (x) theta,
    theta primitive in the braided sense, S(theta) = -theta."""
    from .constructions import BraidedHopfInYD
    h = h or kZ2()
    F = h.field
    # action on (h, a) -> h*2 + a
    act = LinMap([[1, 0, 1, 0], [0, 1, 0, -1]], F)
    coact = LinMap.from_images(2, 4, lambda i: {0: 1} if i == 0 else {3: 1}, F)
    yd = YDRep(ModuleRep(h, 2, act, "superline"), ComoduleRep(h, 2, coact, "superline"))
    mult = LinMap.from_images(4, 2, lambda j: {j: 1} if j < 2 else ({1: 1} if j == 2 else {}), F)
    unit = LinMap([[1], [0]], F)
    comult = LinMap.from_images(2, 4, lambda i: {0: 1} if i == 0 else {2: 1, 1: 1}, F)
    counit = LinMap([[1, 0]], F)
    S = LinMap([[1, 0], [0, -1]], F)
    return BraidedHopfInYD(yd, mult, unit, comult, counit, S, "superline")


def trivial_yd_group_algebra(h: HopfSC | None = None):
    """k[Z/2] with trivial action and coaction, as a braided Hopf algebra."""
    from .constructions import BraidedHopfInYD
    h = h or kZ2()
    F = h.field
    a = kZ2(F)
    act = kron(h.counit, ident(2, F))
    coact = kron(h.unit, ident(2, F))
    yd = YDRep(ModuleRep(h, 2, act), ComoduleRep(h, 2, coact))
    return BraidedHopfInYD(yd, a.mult, a.unit, a.comult, a.counit, a.antipode, "kZ2-trivial")


@lru_cache(maxsize=None)
def sweedler_h4() -> HopfSC:
    from .constructions import bosonisation
    h = kZ2()
    return bosonisation(h, superline_yd(h), "H4")


def sign_algebra_action(h: HopfSC | None = None):
    """A = Q[y]/(y^2 - 1) with g.y = -y, as a module algebra over k[Z/2]."""
    from .constructions import ModuleAlgebra
    h = h or kZ2()
    F = h.field
    a = kZ2(F)
    act = LinMap([[1, 0, 1, 0], [0, 1, 0, -1]], F)
    return ModuleAlgebra(h, AlgebraSC(a.mult, a.unit), act)


def hopf_corpus() -> list[HopfSC]:
    return [trivial_bialgebra(), kZ2(), kZ3(), kZ2xZ2(), gf2_superline(), sweedler_h4()]


def bialgebra_corpus() -> list[BialgebraSC]:
    """Golden corpus for the fusion/antipode criterion, with duals."""
    base = [kZ2(), kZ3(), kZ2xZ2(), kM2(), gf2_superline(), sweedler_h4()]
    return base + [dual_bialgebra(b) for b in base]


def z2_rmatrix():
    """R = 1/2 (1(x)1 + 1(x)g + g(x)1 - g(x)g) on k[Z/2]."""
    h = Fraction(1, 2)
    return (h, h, h, -h)
