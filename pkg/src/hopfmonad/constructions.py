"""Cross products, bosonisation and its inverse (Radford's decomposition),
tensor products through distributive laws, R-matrices, augmentations."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactlin import (
    LinMap, kron, ident, flip, compose, try_invert, Singular, image_basis, inclusion,
    solve_map, solve, permute_factors, vec_map, unravel,
)
from .hopfcore import (
    AlgebraSC, BialgebraSC, HopfSC, CoalgebraSC, check_structure, check_bialgebra, check_antipode,
    with_antipode, solve_antipode, is_algebra_map, check_bialgebra_map,
)
from .repcat import (
    ModuleRep, ComoduleRep, YDRep, regular_module, tensor_modules, tensor_comodules, yd_braiding,
    check_representation, is_module_map, braiding_axioms, trivial_module,
)
from .report import Report, InternalInconsistency


class UnverifiedInput(ValueError):
    pass


class DistributiveLawError(ValueError):
    def __init__(self, diagram: str, witness=None):
        super().__init__(f"distributive law violates {diagram} (witness {witness})")
        self.diagram = diagram
        self.witness = witness


# --- module algebras and cross products --------------------------------------

@dataclass(frozen=True)
class ModuleAlgebra:
    parent: BialgebraSC
    carrier: AlgebraSC
    action: LinMap   # H (x) A -> A


def check_module_algebra(ma: ModuleAlgebra) -> Report:
    rep = Report("module algebra")
    h, a = ma.parent, ma.carrier
    rep.merge(check_structure(a), "algebra: ")
    mod = ModuleRep(h, a.dim, ma.action)
    rep.merge(check_representation(mod), "module: ")
    if not rep.passed:
        return rep.finish()
    aa = tensor_modules(h, mod, mod)
    rep.record("h.(ab) = (h1.a)(h2.b)", is_module_map(a.mult, aa, mod))
    rep.equal("h.1 = eps(h)1", ma.action @ kron(ident(h.dim, h.field), a.unit), a.unit @ h.counit, (h.dim,))
    return rep.finish()


def cross_product_algebra(ma: ModuleAlgebra) -> AlgebraSC:
    """(a (x) h)(a' (x) h') = a (h1.a') (x) h2 h' on A (x) H."""
    if not check_module_algebra(ma).passed:
        raise UnverifiedInput("module algebra axioms fail")
    h, a = ma.parent, ma.carrier
    F = h.field
    A, H = ident(a.dim, F), ident(h.dim, F)
    m = compose(kron(a.mult, H),
                kron(A, ma.action, h.mult),
                kron(A, H, flip(h.dim, a.dim, F), H),
                kron(A, h.comult, A, H))
    return AlgebraSC(m, kron(a.unit, h.unit))


# --- braided Hopf algebras in Yetter-Drinfeld modules ------------------------

@dataclass(frozen=True)
class BraidedHopfInYD:
    yd: YDRep
    mult: LinMap
    unit: LinMap
    comult: LinMap
    counit: LinMap
    antipode: LinMap
    name: str = ""

    @property
    def dim(self):
        return self.yd.dim

    @property
    def parent(self):
        return self.yd.parent

    @property
    def field(self):
        return self.mult.field

    @property
    def algebra(self):
        return AlgebraSC(self.mult, self.unit)

    @property
    def coalgebra(self):
        return CoalgebraSC(self.comult, self.counit)


def check_braided_hopf(a: BraidedHopfInYD) -> Report:
    rep = Report("braided Hopf algebra")
    h, n, F = a.parent, a.dim, a.field
    I, H = ident(n, F), ident(h.dim, F)
    rep.merge(check_representation(a.yd), "YD: ")
    rep.merge(check_structure(a.algebra), "algebra: ")
    rep.merge(check_structure(a.coalgebra), "coalgebra: ")
    mod, com = a.yd.module, a.yd.comodule
    aa = tensor_modules(h, mod, mod)
    cc = tensor_comodules(h, com, com)
    triv = trivial_module(h)
    r, d = mod.action, com.coaction
    # structure maps are YD morphisms
    rep.record("mult is a module map", is_module_map(a.mult, aa, mod))
    rep.equal("mult is a comodule map", d @ a.mult, kron(H, a.mult) @ cc.coaction, (n, n))
    rep.equal("unit is a module map", r @ kron(H, a.unit), a.unit @ h.counit, (h.dim,))
    rep.equal("unit is a comodule map", d @ a.unit, kron(h.unit, a.unit), (0,))
    rep.equal("comult is a module map", a.comult @ r, aa.action @ kron(H, a.comult), (h.dim, n))
    rep.equal("comult is a comodule map", kron(H, a.comult) @ d, cc.coaction @ a.comult, (n,))
    rep.equal("counit is a module map", a.counit @ r, kron(h.counit, a.counit), (h.dim, n))
    rep.equal("counit is a comodule map", kron(H, a.counit) @ d, h.unit @ a.counit, (n,))
    tau = yd_braiding(a.yd, mod)
    mid = kron(I, tau, I)
    rep.equal("braided comult multiplicative", a.comult @ a.mult,
              kron(a.mult, a.mult) @ mid @ kron(a.comult, a.comult), (n, n))
    rep.equal("comult unital", a.comult @ a.unit, kron(a.unit, a.unit), (0,))
    rep.equal("counit multiplicative", a.counit @ a.mult, kron(a.counit, a.counit), (n, n))
    rep.equal("counit unital", a.counit @ a.unit, ident(1, F), (0,))
    t = a.unit @ a.counit
    rep.equal("m(S (x) id)D = ue", a.mult @ kron(a.antipode, I) @ a.comult, t, (n,))
    rep.equal("m(id (x) S)D = ue", a.mult @ kron(I, a.antipode) @ a.comult, t, (n,))
    return rep.finish()


def bosonisation(h: HopfSC, a: BraidedHopfInYD, name: str = "") -> HopfSC:
    """Hopf algebra on A (x) H with the cross product algebra and
    Delta(a (x) h) = a1 (x) a2_(-1) h1 (x) a2_(0) (x) h2."""
    if not check_braided_hopf(a).passed:
        raise UnverifiedInput("braided Hopf data fails its axioms")
    F = h.field
    A, H = ident(a.dim, F), ident(h.dim, F)
    alg = cross_product_algebra(ModuleAlgebra(h, a.algebra, a.yd.module.action))
    tau_ah = yd_braiding(a.yd, regular_module(h))   # A (x) H -> H (x) A
    d = kron(A, tau_ah, H) @ kron(a.comult, h.comult)
    e = kron(a.counit, h.counit)
    S = compose(kron(a.yd.module.action, H),
                kron(H, flip(h.dim, a.dim, F)),
                kron(h.comult, A),
                tau_ah,
                kron(a.antipode, h.antipode))
    out = HopfSC(alg.mult, alg.unit, d, e, name or f"{a.name}#{h.name}", S)
    rep = check_bialgebra(out)
    rep.merge(check_antipode(out))
    if not rep.passed:
        raise InternalInconsistency(f"bosonisation fails its axioms:\n{rep}")
    return out


def transport_report(a: BraidedHopfInYD, b: BraidedHopfInYD, P: LinMap) -> Report:
    """Compare every structure map of a and b through the linear iso P: A -> B."""
    rep = Report("structure maps after base change")
    F = a.field
    H = ident(a.parent.dim, F)
    rep.equal("mult", b.mult @ kron(P, P), P @ a.mult, (a.dim, a.dim))
    rep.equal("unit", b.unit, P @ a.unit, (0,))
    rep.equal("comult", b.comult @ P, kron(P, P) @ a.comult, (a.dim,))
    rep.equal("counit", b.counit @ P, a.counit, (a.dim,))
    rep.equal("antipode", b.antipode @ P, P @ a.antipode, (a.dim,))
    rep.equal("action", b.yd.module.action @ kron(H, P), P @ a.yd.module.action, (a.parent.dim, a.dim))
    rep.equal("coaction", b.yd.comodule.coaction @ P, kron(H, P) @ a.yd.comodule.coaction, (a.dim,))
    return rep.finish()


def radford_decompose(h2: HopfSC, h1: HopfSC, proj: LinMap, incl: LinMap):
    """Recover (B, YD structure) with H2 = B # H1 from a split Hopf projection.

    B is the image of Pi(x) = x1 incl(S1(proj(x2))).
    """
    rep = Report("Radford decomposition")
    F = h2.field
    rep.merge(check_bialgebra_map(proj, h2, h1, "proj"))
    rep.merge(check_bialgebra_map(incl, h1, h2, "incl"))
    if proj @ incl != ident(h1.dim, F):
        raise ValueError("proj o incl is not the identity")
    if not rep.passed:
        raise ValueError(f"proj/incl are not bialgebra maps:\n{rep}")
    H2, H1 = ident(h2.dim, F), ident(h1.dim, F)
    iota_pi = incl @ proj
    Pi = h2.mult @ kron(H2, incl @ h1.antipode @ proj) @ h2.comult
    basis = image_basis(Pi)
    j = inclusion(basis, h2.dim, F)
    nb = len(basis)

    def back(f):
        x = solve_map(j, f)
        if x is None:
            raise InternalInconsistency("structure map leaves the Radford subspace")
        return x

    mult = back(h2.mult @ kron(j, j))
    unit = back(h2.unit)
    comult = solve_map(kron(j, j), kron(Pi, H2) @ h2.comult @ j)
    if comult is None:
        raise InternalInconsistency("Radford coproduct leaves B (x) B")
    counit = h2.counit @ j
    antipode = back(h2.mult @ kron(iota_pi, h2.antipode) @ h2.comult @ j)
    # adjoint action h.b = incl(h1) b incl(S(h2))
    act = compose(h2.mult, kron(h2.mult, H2),
                  kron(incl, j, incl @ h1.antipode),
                  kron(H1, flip(h1.dim, nb, F)),
                  kron(h1.comult, ident(nb, F)))
    action = back(act)
    coaction = solve_map(kron(H1, j), kron(proj, H2) @ h2.comult @ j)
    if coaction is None:
        raise InternalInconsistency("Radford coaction leaves H1 (x) B")
    yd = YDRep(ModuleRep(h1, nb, action), ComoduleRep(h1, nb, coaction))
    b = BraidedHopfInYD(yd, mult, unit, comult, counit, antipode, "radford")
    rep.merge(check_braided_hopf(b), "B: ")
    rep.data["dim B"] = nb
    rep.record("dim H2 = dim B * dim H1", h2.dim == nb * h1.dim, detail=f"{h2.dim} vs {nb}*{h1.dim}")
    rep.data["inclusion of B"] = j
    if rep.passed:
        boson = bosonisation(h1, b)
        phi = h2.mult @ kron(j, incl)
        inv = try_invert(phi) if phi.cod == phi.dom else Singular(())
        rep.record("canonical map B (x) H1 -> H2 bijective", not isinstance(inv, Singular))
        rep.merge(check_bialgebra_map(phi, boson, h2, "canonical map"))
        rep.equal("canonical map intertwines antipodes", phi @ boson.antipode, h2.antipode @ phi,
                  (nb, h1.dim))
    return b, rep.finish()


# --- distributive laws -------------------------------------------------------

def distributive_law_report(c: BialgebraSC, b: BialgebraSC, lam: LinMap) -> Report:
    """lam: B (x) C -> C (x) B."""
    rep = Report("distributive law")
    F = c.field
    B, C = ident(b.dim, F), ident(c.dim, F)
    rep.equal("lam(b (x) 1) = 1 (x) b", lam @ kron(B, c.unit), kron(c.unit, B), (b.dim,))
    rep.equal("lam(1 (x) c) = c (x) 1", lam @ kron(b.unit, C), kron(C, b.unit), (c.dim,))
    rep.equal("B-multiplication pentagon", lam @ kron(b.mult, C),
              compose(kron(C, b.mult), kron(lam, B), kron(B, lam)), (b.dim, b.dim, c.dim))
    rep.equal("C-multiplication pentagon", lam @ kron(B, c.mult),
              compose(kron(c.mult, B), kron(C, lam), kron(lam, C)), (b.dim, c.dim, c.dim))
    d_bc = kron(B, flip(b.dim, c.dim, F), C) @ kron(b.comult, c.comult)
    d_cb = kron(C, flip(c.dim, b.dim, F), B) @ kron(c.comult, b.comult)
    rep.equal("lam comultiplicative", kron(lam, lam) @ d_bc, d_cb @ lam, (b.dim, c.dim))
    rep.equal("lam counital", kron(c.counit, b.counit) @ lam, kron(b.counit, c.counit), (b.dim, c.dim))
    return rep.finish()


def tensor_via_distributive_law(c: HopfSC, b: HopfSC, lam: LinMap, name: str = "") -> HopfSC:
    rep = distributive_law_report(c, b, lam)
    if not rep.passed:
        bad = rep.failures()[0]
        raise DistributiveLawError(bad.name, bad.witness)
    F = c.field
    B, C = ident(b.dim, F), ident(c.dim, F)
    m = kron(c.mult, b.mult) @ kron(C, lam, B)
    d = kron(C, flip(c.dim, b.dim, F), B) @ kron(c.comult, b.comult)
    bi = BialgebraSC(m, kron(c.unit, b.unit), d, kron(c.counit, b.counit), name or f"{c.name}(x){b.name}")
    if lam == flip(b.dim, c.dim, F):
        S = kron(c.antipode, b.antipode)
        how = "S_C (x) S_B"
    else:
        S = solve_antipode(bi)
        how = "antipode search by linear solve"
        if S is None:
            raise ValueError("no antipode for the distributive-law tensor product")
    out = with_antipode(bi, S)
    chk = check_bialgebra(out)
    chk.merge(check_antipode(out))
    if not chk.passed:
        raise InternalInconsistency(f"distributive tensor product fails ({how}):\n{chk}")
    return out


# --- R-matrices --------------------------------------------------------------

def tensor_elem_product(b: BialgebraSC, k: int, x: Sequence, y: Sequence) -> tuple:
    """Product in the algebra B^(x)k (factorwise multiplication)."""
    n, F = b.dim, b.field
    dims = (n,) * k
    out = [0] * n ** k
    mcols = b.mult.columns()
    for I, xv in enumerate(x):
        if not xv:
            continue
        ii = unravel(I, dims)
        for J, yv in enumerate(y):
            if not yv:
                continue
            jj = unravel(J, dims)
            # expand product of factors
            terms = {(): xv * yv}
            for t in range(k):
                col = mcols[ii[t] * n + jj[t]]
                nt = {}
                for idx, c in terms.items():
                    for r, v in enumerate(col):
                        if v:
                            nt[idx + (r,)] = nt.get(idx + (r,), 0) + c * v
                terms = nt
            for idx, c in terms.items():
                K = 0
                for r in idx:
                    K = K * n + r
                out[K] += c
    return tuple(F.norm(v) for v in out)


@dataclass(frozen=True)
class RMatrix:
    parent: BialgebraSC
    element: tuple   # coordinates in B (x) B
    inverse: tuple | None = None


def leg(b: BialgebraSC, R: Sequence, legs: tuple) -> tuple:
    """R placed in the given two legs of B^(x)3, e.g. (0, 2) for R_13."""
    n = b.dim
    one = b.unit.column(0)
    out = [0] * n ** 3
    rest = 3 - legs[0] - legs[1]
    for I, v in enumerate(R):
        if not v:
            continue
        i, j = divmod(I, n)
        for u, w in enumerate(one):
            if not w:
                continue
            idx = [0, 0, 0]
            idx[legs[0]], idx[legs[1]], idx[rest] = i, j, u
            out[(idx[0] * n + idx[1]) * n + idx[2]] += v * w
    return tuple(b.field.norm(x) for x in out)


def convolution_inverse(b: BialgebraSC, R: Sequence) -> tuple | None:
    """R^-1 with R R^-1 = 1 (x) 1 = R^-1 R in B (x) B, by linear solve."""
    n2 = b.dim ** 2
    F = b.field
    one = kron(b.unit, b.unit).column(0)
    cols = []
    for k in range(n2):
        e = [0] * n2
        e[k] = 1
        cols.append(tensor_elem_product(b, 2, R, e) + tensor_elem_product(b, 2, e, R))
    A = LinMap.from_columns(cols, 2 * n2, F)
    return solve(A, one + one)


def check_rmatrix(r: RMatrix) -> Report:
    rep = Report("R-matrix")
    b = r.parent
    n, F = b.dim, b.field
    R = tuple(F(x) for x in r.element)
    Bi = ident(n, F)
    sw = flip(n, n, F)
    bad = None
    for hb in range(n):
        d = b.comult.column(hb)
        lhs = tensor_elem_product(b, 2, sw.apply(d), R)
        rhs = tensor_elem_product(b, 2, R, d)
        if lhs != rhs:
            bad = (hb,)
            break
    rep.record("quasi-cocommutativity", bad is None, bad)
    R13, R23, R12 = leg(b, R, (0, 2)), leg(b, R, (1, 2)), leg(b, R, (0, 1))
    lhs = kron(b.comult, Bi).apply(R)
    rep.record("(Delta (x) id)R = R13 R23", lhs == tensor_elem_product(b, 3, R13, R23),
               _first_diff(lhs, tensor_elem_product(b, 3, R13, R23), (n, n, n)))
    lhs = kron(Bi, b.comult).apply(R)
    rep.record("(id (x) Delta)R = R13 R12", lhs == tensor_elem_product(b, 3, R13, R12),
               _first_diff(lhs, tensor_elem_product(b, 3, R13, R12), (n, n, n)))
    inv = r.inverse if r.inverse is not None else convolution_inverse(b, R)
    ok = inv is not None
    if ok and r.inverse is not None:
        one = kron(b.unit, b.unit).column(0)
        ok = tensor_elem_product(b, 2, R, inv) == one == tensor_elem_product(b, 2, inv, R)
    rep.record("convolution invertible", ok)
    rep.data["inverse"] = inv
    yl = tensor_elem_product(b, 3, tensor_elem_product(b, 3, R12, R13), R23)
    yr = tensor_elem_product(b, 3, tensor_elem_product(b, 3, R23, R13), R12)
    rep.record("Yang-Baxter R12 R13 R23 = R23 R13 R12", yl == yr, _first_diff(yl, yr, (n, n, n)))
    return rep.finish()


def _first_diff(x, y, dims):
    for k, (a, c) in enumerate(zip(x, y)):
        if a != c:
            return unravel(k, dims)
    return None


def quasitriangular_braiding(r: RMatrix, m: ModuleRep, n: ModuleRep) -> LinMap:
    """tau(x (x) y) = sum R_ij (e_j.y) (x) (e_i.x)."""
    b = r.parent
    F = b.field
    nb = b.dim
    tau = LinMap.zero(n.dim * m.dim, m.dim * n.dim, F)
    for k, c in enumerate(r.element):
        c = F(c)
        if not c:
            continue
        i, j = divmod(k, nb)
        ai = m.action @ kron(vec_map(_e(nb, i), F), ident(m.dim, F))
        aj = n.action @ kron(vec_map(_e(nb, j), F), ident(n.dim, F))
        tau = tau + (flip(m.dim, n.dim, F) @ kron(ai, aj)).scale(c)
    if not is_module_map(tau, tensor_modules(b, m, n), tensor_modules(b, n, m)):
        raise InternalInconsistency("R-matrix braiding is not a module map")
    return tau


def _e(n, i):
    return tuple(1 if k == i else 0 for k in range(n))


# --- augmentations -----------------------------------------------------------

def check_augmentation(b: BialgebraSC, aug: LinMap, probe_dims=(1, 2, 3)) -> Report:
    rep = Report("augmentation")
    F = b.field
    rep.merge(check_bialgebra(b), "bialgebra: ")
    k = AlgebraSC(ident(1, F), ident(1, F))
    if not is_algebra_map(aug, b.algebra, k, rep, "aug"):
        return rep.finish()
    B = ident(b.dim, F)
    rep.data["aug is the counit"] = aug == b.counit
    rep.data["(aug (x) aug)Delta = aug"] = kron(aug, aug) @ b.comult == aug
    left = kron(B, aug) @ b.comult     # x |-> x1 aug(x2)
    right = kron(aug, B) @ b.comult    # x |-> aug(x1) x2
    regular = True
    for d in probe_dims:
        X = ident(d, F)
        u = kron(left, X)
        v = flip(b.dim, d, F) @ kron(right, X)
        inv = try_invert(u)
        ok = not isinstance(inv, Singular)
        regular = regular and ok
        rep.data[f"u at dim {d}"] = u
        rep.data[f"v at dim {d}"] = v
        if not ok:
            rep.data["u kernel witness"] = inv.witness
    rep.data["left regular"] = regular
    return rep.finish()
