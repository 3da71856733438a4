"""Modules, comodules, Yetter-Drinfeld modules and Hopf modules over a
bialgebra given by structure constants, with their braidings.

A left module is an action r: B (x) M -> M; a left comodule a coaction
delta: M -> B (x) M.  Sweedler notation in comments: Delta(b) = b1 (x) b2,
delta(m) = m_(-1) (x) m_(0).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exactlin import (
    LinMap, kron, ident, flip, compose, kernel_basis, try_invert, Singular,
    inclusion, solve_map, permute_factors, DimensionMismatch,
)
from .hopfcore import (
    AlgebraSC, BialgebraSC, CoalgebraSC, HopfSC, solve_antipode, is_cocommutative,
    solve_for_map,
)
from .report import Report, HypothesisError, InternalInconsistency


@dataclass(frozen=True)
class ModuleRep:
    parent: BialgebraSC | AlgebraSC
    dim: int
    action: LinMap   # parent.dim * dim -> dim
    name: str = ""

    @property
    def field(self):
        return self.action.field


@dataclass(frozen=True)
class ComoduleRep:
    parent: BialgebraSC | CoalgebraSC
    dim: int
    coaction: LinMap   # dim -> parent.dim * dim
    name: str = ""

    @property
    def field(self):
        return self.coaction.field


@dataclass(frozen=True)
class YDRep:
    module: ModuleRep
    comodule: ComoduleRep

    @property
    def dim(self):
        return self.module.dim

    @property
    def parent(self):
        return self.module.parent


@dataclass(frozen=True)
class HopfModuleRep:
    module: ModuleRep
    comodule: ComoduleRep
    name: str = ""

    @property
    def dim(self):
        return self.module.dim

    @property
    def parent(self):
        return self.module.parent


# --- standard examples -------------------------------------------------------

def regular_module(b) -> ModuleRep:
    return ModuleRep(b, b.dim, b.mult, "regular")


def trivial_module(b) -> ModuleRep:
    """k with b.1 = eps(b)."""
    return ModuleRep(b, 1, b.counit, "trivial")


def free_module(b, d: int) -> ModuleRep:
    """B (x) V with action m (x) id."""
    F = b.field
    return ModuleRep(b, b.dim * d, kron(b.mult, ident(d, F)), f"free({d})")


def regular_comodule(c) -> ComoduleRep:
    return ComoduleRep(c, c.dim, c.comult, "regular")


def trivial_comodule(c, d: int = 1) -> ComoduleRep:
    F = c.field
    return ComoduleRep(c, d, kron(_unit_of(c), ident(d, F)), "trivial")


def free_comodule(c, d: int) -> ComoduleRep:
    return ComoduleRep(c, c.dim * d, kron(c.comult, ident(d, c.field)), f"free({d})")


def _unit_of(c):
    if hasattr(c, "unit"):
        return c.unit
    raise ValueError("trivial comodule needs a unit in the parent")


def regular_hopf_module(b: BialgebraSC) -> HopfModuleRep:
    return HopfModuleRep(regular_module(b), regular_comodule(b), "regular")


def free_hopf_module(b: BialgebraSC, d: int) -> HopfModuleRep:
    return HopfModuleRep(free_module(b, d), free_comodule(b, d), f"free({d})")


def diagonal_hopf_module(b: BialgebraSC, v: ModuleRep) -> HopfModuleRep:
    """B (x) V for a module V: h.(x (x) v) = h1 x (x) h2.v, coaction Delta (x) id.

    Isomorphic to a free Hopf module but not presented as one."""
    mod = tensor_modules(b, regular_module(b), v)
    return HopfModuleRep(mod, ComoduleRep(b, b.dim * v.dim, kron(b.comult, ident(v.dim, b.field))),
                         f"diagonal({v.name or v.dim})")


# --- checks -----------------------------------------------------------------

def _check_module(x: ModuleRep, rep: Report):
    p, n, F = x.parent, x.dim, x.field
    if x.action.shape != (n, p.dim * n):
        raise DimensionMismatch(f"action has shape {x.action.shape}, expected {(n, p.dim * n)}")
    I = ident(n, F)
    r = x.action
    rep.equal("module associativity", r @ kron(p.mult, I), r @ kron(ident(p.dim, F), r), (p.dim, p.dim, n))
    rep.equal("module unit", r @ kron(p.unit, I), I, (n,))


def _check_comodule(x: ComoduleRep, rep: Report):
    p, n, F = x.parent, x.dim, x.field
    if x.coaction.shape != (p.dim * n, n):
        raise DimensionMismatch(f"coaction has shape {x.coaction.shape}, expected {(p.dim * n, n)}")
    I = ident(n, F)
    d = x.coaction
    rep.equal("comodule coassociativity", kron(p.comult, I) @ d, kron(ident(p.dim, F), d) @ d, (n,))
    rep.equal("comodule counit", kron(p.counit, I) @ d, I, (n,))


def _same_parent(a, b):
    if a.parent != b.parent:
        raise ValueError("parent mismatch")


def yd_condition(x: YDRep, rep: Report):
    """h1 m_(-1) (x) h2.m_(0) = (h1.m)_(-1) h2 (x) (h1.m)_(0)."""
    h = x.parent
    n, F = x.dim, h.field
    H, I = ident(h.dim, F), ident(n, F)
    r, d = x.module.action, x.comodule.coaction
    lhs = compose(kron(h.mult, r), kron(H, flip(h.dim, h.dim, F), I), kron(h.comult, d))
    rhs = compose(kron(h.mult, I), kron(H, flip(n, h.dim, F)), kron(d @ r, H),
                  kron(H, flip(h.dim, n, F)), kron(h.comult, I))
    return rep.equal("Yetter-Drinfeld compatibility", lhs, rhs, (h.dim, n))


def hopf_module_condition(x: HopfModuleRep, rep: Report):
    """delta(h.m) = h1 m_(-1) (x) h2.m_(0)."""
    h = x.parent
    n, F = x.dim, h.field
    H, I = ident(h.dim, F), ident(n, F)
    r, d = x.module.action, x.comodule.coaction
    lhs = d @ r
    rhs = compose(kron(h.mult, r), kron(H, flip(h.dim, h.dim, F), I), kron(h.comult, d))
    return rep.equal("Hopf module compatibility", lhs, rhs, (h.dim, n))


def check_representation(x) -> Report:
    rep = Report(type(x).__name__)
    if isinstance(x, ModuleRep):
        _check_module(x, rep)
    elif isinstance(x, ComoduleRep):
        _check_comodule(x, rep)
    elif isinstance(x, (YDRep, HopfModuleRep)):
        _same_parent(x.module, x.comodule)
        if x.module.dim != x.comodule.dim:
            raise DimensionMismatch("module and comodule dims differ")
        _check_module(x.module, rep)
        _check_comodule(x.comodule, rep)
        if isinstance(x, YDRep):
            yd_condition(x, rep)
        else:
            hopf_module_condition(x, rep)
    else:
        raise TypeError(f"not a representation: {type(x).__name__}")
    return rep.finish()


# --- monoidal structure ------------------------------------------------------

def tensor_modules(b: BialgebraSC, m: ModuleRep, n: ModuleRep) -> ModuleRep:
    """Action (r (x) s)(id (x) flip (x) id)(Delta (x) id (x) id) on M (x) N."""
    if m.parent.dim != b.dim or n.parent.dim != b.dim:
        raise ValueError("parent mismatch")
    F = b.field
    act = compose(kron(m.action, n.action),
                  kron(ident(b.dim, F), flip(b.dim, m.dim, F), ident(n.dim, F)),
                  kron(b.comult, ident(m.dim * n.dim, F)))
    return ModuleRep(b, m.dim * n.dim, act, f"({m.name}(x){n.name})")


def tensor_comodules(b: BialgebraSC, m: ComoduleRep, n: ComoduleRep) -> ComoduleRep:
    """m (x) n |-> m_(-1) n_(-1) (x) m_(0) (x) n_(0)."""
    F = b.field
    co = compose(kron(b.mult, ident(m.dim * n.dim, F)),
                 kron(ident(b.dim, F), flip(m.dim, b.dim, F), ident(n.dim, F)),
                 kron(m.coaction, n.coaction))
    return ComoduleRep(b, m.dim * n.dim, co)


def module_morphisms(m: ModuleRep, n: ModuleRep) -> list[LinMap]:
    """Basis of Hom_B(M, N), from the kernel of the intertwiner equations."""
    p, F = m.parent, m.field
    dim = n.dim * m.dim
    eqs = []
    for k in range(dim):
        E = LinMap.from_images(m.dim, n.dim, lambda j, k=k: {k // m.dim: 1} if j == k % m.dim else {}, F)
        eqs.append((E @ m.action - n.action @ kron(ident(p.dim, F), E)).entries())
    A = LinMap.from_columns(eqs, n.dim * p.dim * m.dim, F) if eqs else None
    if A is None:
        return []
    return [LinMap([v[i * m.dim:(i + 1) * m.dim] for i in range(n.dim)], F, m.dim) for v in kernel_basis(A)]


def is_module_map(f: LinMap, m: ModuleRep, n: ModuleRep) -> bool:
    return f @ m.action == n.action @ kron(ident(m.parent.dim, m.field), f)


def yd_braiding(m: YDRep, n: ModuleRep) -> LinMap:
    """tau(m (x) n) = m_(-1).n (x) m_(0)."""
    h = m.parent
    if n.parent.dim != h.dim:
        raise ValueError("parent mismatch")
    F = h.field
    tau = compose(kron(n.action, ident(m.dim, F)),
                  kron(ident(h.dim, F), flip(m.dim, n.dim, F)),
                  kron(m.comodule.coaction, ident(n.dim, F)))
    src = tensor_modules(h, m.module, n)
    tgt = tensor_modules(h, n, m.module)
    if not is_module_map(tau, src, tgt):
        raise InternalInconsistency("YD braiding is not a module map")
    return tau


def braiding_axioms(tau, x, y, z, b: BialgebraSC) -> Report:
    """Both hexagon identities for a braiding given as tau(a, b) -> LinMap.

    tau_{X, Y(x)Z} = (id_Y (x) tau_{X,Z})(tau_{X,Y} (x) id_Z)
    tau_{X(x)Y, Z} = (tau_{X,Z} (x) id_Y)(id_X (x) tau_{Y,Z})
    """
    rep = Report("braiding axioms")
    F = b.field
    yz = tensor_modules(b, y, z)
    xy = tensor_modules(b, x, y)
    lhs = tau(x, yz)
    rhs = kron(ident(y.dim, F), tau(x, z)) @ kron(tau(x, y), ident(z.dim, F))
    rep.equal("tau_{X,Y(x)Z}", lhs, rhs, (x.dim, y.dim, z.dim))
    lhs = tau(xy, z)
    rhs = kron(tau(x, z), ident(y.dim, F)) @ kron(ident(x.dim, F), tau(y, z))
    rep.equal("tau_{X(x)Y,Z}", lhs, rhs, (x.dim, y.dim, z.dim))
    return rep.finish()


def tensor_yd(b: BialgebraSC, m: YDRep, n: YDRep) -> YDRep:
    return YDRep(tensor_modules(b, m.module, n.module), tensor_comodules(b, m.comodule, n.comodule))


# --- Hopf modules ------------------------------------------------------------

def coinvariants(hm: HopfModuleRep) -> list[tuple]:
    """Basis of {m : delta(m) = 1 (x) m}."""
    h = hm.parent
    F = h.field
    if hm.dim == 0:
        return []
    return kernel_basis(hm.comodule.coaction - kron(h.unit, ident(hm.dim, F)))


def has_antipode(h: BialgebraSC) -> bool:
    if isinstance(h, HopfSC) and h.antipode is not None:
        return True
    return solve_antipode(h) is not None


def fundamental_theorem_check(h: BialgebraSC, hm: HopfModuleRep) -> Report:
    """Canonical map H (x) M^co -> M, x (x) m |-> x.m, must be bijective."""
    if not has_antipode(h):
        raise HypothesisError("theorem hypotheses unmet: the parent bialgebra has no antipode")
    rep = Report("fundamental theorem")
    rep.merge(check_representation(hm), "Hopf module: ")
    F = h.field
    co = coinvariants(hm)
    j = inclusion(co, hm.dim, F)
    can = hm.module.action @ kron(ident(h.dim, F), j)
    rep.data["dim M"] = hm.dim
    rep.data["dim H"] = h.dim
    rep.data["dim M^co"] = len(co)
    rep.record("dim M = dim H * dim M^co", hm.dim == h.dim * len(co),
               detail=f"{hm.dim} vs {h.dim}*{len(co)}")
    if can.cod == can.dom:
        inv = try_invert(can)
        rep.record("canonical map bijective", not isinstance(inv, Singular),
                   inv.witness if isinstance(inv, Singular) else None)
    else:
        rep.record("canonical map bijective", False, detail=f"shape {can.shape}")
    rep.data["canonical map"] = can
    return rep.finish()


# --- induced cocommutative central coalgebra ---------------------------------

def induced_ccc_braiding(h: HopfSC, n: ModuleRep) -> LinMap:
    """tau_N(b (x) x) = b1 S(b3).x (x) b2 : H (x) N -> N (x) H."""
    S = h.antipode
    if S is None:
        raise ValueError("antipode required")
    F = h.field
    H, I = ident(h.dim, F), ident(n.dim, F)
    d3 = kron(h.comult, H) @ h.comult  # b1 b2 b3
    # b1 b2 b3 x -> b1 S(b3) x b2
    perm = permute_factors((h.dim, h.dim, h.dim, n.dim), (0, 2, 3, 1), F)
    return compose(kron(n.action, H), kron(h.mult, I, H), kron(H, S, I, H), perm, kron(d3, I))


def induced_ccc_braiding_by_fusion(h: BialgebraSC, n: ModuleRep) -> LinMap:
    """Same braiding as Hbar^r (Hbar^l)^-1 with Hbar^l(b x) = b1 (x) b2.x and
    Hbar^r(b x) = b1.x (x) b2; needs no antipode."""
    F = h.field
    H, I = ident(h.dim, F), ident(n.dim, F)
    hl = kron(H, n.action) @ kron(h.comult, I)
    hr = compose(kron(n.action, H), kron(H, flip(h.dim, n.dim, F)), kron(h.comult, I))
    inv = try_invert(hl)
    if isinstance(inv, Singular):
        raise ValueError("Hbar^l is singular")
    return hr @ inv


def ccc_report(h: HopfSC, modules: Sequence[ModuleRep], probe_dims=(1, 2)) -> Report:
    """Lax-braiding axioms for the induced braiding on the given modules."""
    rep = Report("induced CCC braiding")
    F = h.field
    H = ident(h.dim, F)
    reg = regular_module(h)
    for n in modules:
        t = induced_ccc_braiding(h, n)
        rep.equal(f"closed form = fusion form on {n.name or n.dim}", t, induced_ccc_braiding_by_fusion(h, n),
                  (h.dim, n.dim))
        src = tensor_modules(h, reg, n)
        tgt = tensor_modules(h, n, reg)
        rep.record(f"module map on {n.name or n.dim}", is_module_map(t, src, tgt))
        # coalgebra compatibility: (tau (x) id)(id (x) tau)(Delta (x) id) = (id (x) Delta) tau
        lhs = kron(t, H) @ kron(H, t) @ kron(h.comult, ident(n.dim, F))
        rhs = kron(ident(n.dim, F), h.comult) @ t
        rep.equal(f"tau respects Delta on {n.name or n.dim}", lhs, rhs, (h.dim, n.dim))
        rep.equal(f"tau respects eps on {n.name or n.dim}", kron(ident(n.dim, F), h.counit) @ t,
                  kron(h.counit, ident(n.dim, F)), (h.dim, n.dim))
    for a in modules:
        for b in modules:
            ab = tensor_modules(h, a, b)
            lhs = induced_ccc_braiding(h, ab)
            rhs = kron(ident(a.dim, F), induced_ccc_braiding(h, b)) @ kron(induced_ccc_braiding(h, a), ident(b.dim, F))
            rep.equal(f"tau_(M(x)N) = (id(x)tau_N)(tau_M(x)id) for {a.name},{b.name}", lhs, rhs,
                      (h.dim, a.dim, b.dim))
    triv = trivial_module(h)
    rep.equal("tau on the unit object is the identity", induced_ccc_braiding(h, triv), ident(h.dim, F), (h.dim,))
    rep.equal("cocommutativity tau_H Delta = Delta", induced_ccc_braiding(h, reg) @ h.comult, h.comult, (h.dim,))
    for d in probe_dims:
        fx = free_module(h, d)
        t = induced_ccc_braiding(h, fx)
        # tau_{B(x)X}(b1 (x) b2 (x) x) = b1 (x) x (x) b2
        lhs = t @ kron(h.comult, ident(d, F))
        rhs = kron(H, flip(h.dim, d, F)) @ kron(h.comult, ident(d, F))
        rep.equal(f"F2 compatibility on free module of rank {d}", lhs, rhs, (h.dim, d))
    return rep.finish()


# --- cotensor products -------------------------------------------------------

@dataclass(frozen=True)
class Cotensor:
    dim: int
    basis: list
    coaction: LinMap
    inclusion: LinMap


def cotensor(c, m: ComoduleRep, n: ComoduleRep) -> Cotensor:
    """Equalizer of (flip delta_M) (x) id and id (x) delta_N in M (x) C (x) N."""
    if not is_cocommutative(c):
        raise ValueError("cotensor needs a cocommutative coalgebra")
    F = c.field
    C, Im, In = ident(c.dim, F), ident(m.dim, F), ident(n.dim, F)
    a = kron(flip(c.dim, m.dim, F) @ m.coaction, In)
    b = kron(Im, n.coaction)
    basis = kernel_basis(a - b)
    j = inclusion(basis, m.dim * n.dim, F)
    # induced coaction t with (id (x) j) t = (delta_M (x) id) j
    t = solve_map(kron(C, j), kron(m.coaction, In) @ j)
    if t is None:
        raise InternalInconsistency("cotensor coaction does not factor through the equalizer")
    return Cotensor(len(basis), basis, t, j)


def cotensor_unit_check(c, m: ComoduleRep) -> Report:
    """M is isomorphic to M box C via m |-> m_(0) (x) m_(-1)."""
    rep = Report("cotensor unit law")
    ct = cotensor(c, m, regular_comodule(c))
    rep.record("dims equal", ct.dim == m.dim, detail=f"{ct.dim} vs {m.dim}")
    can = flip(c.dim, m.dim, c.field) @ m.coaction
    x = solve_map(ct.inclusion, can)
    rep.record("canonical map lands in the equalizer", x is not None)
    if x is not None and x.cod == x.dom:
        rep.record("canonical map bijective", not isinstance(try_invert(x), Singular))
    return rep.finish()
