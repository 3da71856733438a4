"""Bialgebra injections f: B -> H, the quotient coalgebra C = H/I, the
Galois maps beta and Gamma on relative tensor products, and Ore-extension
certificates for derivations d: B -> B."""

from __future__ import annotations

from dataclasses import dataclass

from .exactlin import (
    LinMap, Quotient, kron, ident, flip, compose, try_invert, Singular, induced_map,
    kernel_basis, same_span, vec_map, inclusion,
)
from .hopfcore import BialgebraSC, check_bialgebra, check_bialgebra_map
from .repcat import ModuleRep, module_morphisms, tensor_modules, regular_module, is_module_map
from .report import Report, InternalInconsistency


@dataclass(frozen=True)
class BialgebraInjection:
    b: BialgebraSC
    h: BialgebraSC
    f: LinMap

    @property
    def field(self):
        return self.h.field


def check_injection(inj: BialgebraInjection) -> Report:
    rep = Report("bialgebra injection")
    rep.merge(check_bialgebra_map(inj.f, inj.b, inj.h, "f"))
    rep.record("f injective", not kernel_basis(inj.f))
    return rep.finish()


def unit_injection(h: BialgebraSC) -> BialgebraInjection:
    from .corpus import trivial_bialgebra
    return BialgebraInjection(trivial_bialgebra(h.field), h, h.unit)


def identity_injection(h: BialgebraSC) -> BialgebraInjection:
    return BialgebraInjection(h, h, ident(h.dim, h.field))


@dataclass(frozen=True)
class QuotientCoalgebra:
    c_dim: int
    pi: LinMap
    comult: LinMap
    counit: LinMap
    delta: LinMap
    quotient: Quotient
    coinvariants: list


def _left_ideal_relations(inj: BialgebraInjection) -> list[tuple]:
    """x (f(b) - eps(b) 1) for basis x of H and b of B."""
    h, b, f = inj.h, inj.b, inj.f
    rels = []
    one = h.unit.column(0)
    for bi in range(b.dim):
        e = b.counit.rows[0][bi]
        v = tuple(h.field.norm(x - e * o) for x, o in zip(f.column(bi), one))
        for xi in range(h.dim):
            rels.append(h.mult @ kron(vec_map(_e(h.dim, xi), h.field), vec_map(v, h.field)))
    return [r.column(0) for r in rels]


def _e(n, i):
    return tuple(1 if k == i else 0 for k in range(n))


def quotient_coalgebra(inj: BialgebraInjection) -> QuotientCoalgebra:
    h = inj.h
    F, n = h.field, h.dim
    rels = _left_ideal_relations(inj)
    Q = Quotient(n, rels, F)
    Ivecs = Q.relation_vectors()
    # coideal: Delta(I) in I (x) H + H (x) I
    big = Quotient(n * n, [kron(vec_map(i, F), vec_map(_e(n, k), F)).column(0) for i in Ivecs for k in range(n)]
                   + [kron(vec_map(_e(n, k), F), vec_map(i, F)).column(0) for i in Ivecs for k in range(n)], F)
    if Ivecs and not big.kills(h.comult @ inclusion(Ivecs, n, F)):
        raise InternalInconsistency("I is not a coideal")
    if Ivecs and not (h.counit @ inclusion(Ivecs, n, F)).is_zero():
        raise InternalInconsistency("counit does not vanish on I")
    pi = Q.projection
    comult = kron(pi, pi) @ h.comult @ Q.section
    counit = h.counit @ Q.section
    delta = kron(pi, ident(n, F)) @ h.comult
    co = kernel_basis(delta - kron(pi @ h.unit, ident(n, F)))
    if not same_span(co, inj.f.columns(), n, F):
        raise InternalInconsistency("coinvariants differ from f(B)")
    return QuotientCoalgebra(Q.dim, pi, comult, counit, delta, Q, co)


def relative_tensor(inj: BialgebraInjection, shape: str = "HH") -> Quotient:
    """H (x)_B H, or H (x)_B (B (x) H) with the diagonal B-action on B (x) H."""
    h, b, f = inj.h, inj.b, inj.f
    F, n, nb = h.field, h.dim, b.dim
    H = ident(n, F)
    rels = []
    if shape == "HH":
        # x f(b) (x) y - x (x) f(b) y
        right = h.mult @ kron(H, f)          # H (x) B -> H
        left = h.mult @ kron(f, H)           # B (x) H -> H
        A = kron(right, H)                   # H B H -> H H
        Bm = kron(H, left)
        D = A - Bm
        rels = D.columns()
        return Quotient(n * n, rels, F)
    if shape == "H_BH":
        # x f(b) (x) (b' (x) y) - x (x) (b1 b' (x) f(b2) y)
        right = h.mult @ kron(H, f)
        A = kron(right, ident(nb * n, F))    # H B B H -> H B H
        Bi = ident(nb, F)
        act = compose(kron(b.mult, h.mult @ kron(f, H)), kron(Bi, flip(nb, nb, F), H),
                      kron(b.comult, Bi, H))             # B (B H) -> B H
        Bm = kron(H, act)
        return Quotient(n * nb * n, (A - Bm).columns(), F)
    raise ValueError(f"unknown shape {shape!r}")


def galois_beta(inj: BialgebraInjection):
    """beta: H (x)_B H -> C (x) H, x (x) y |-> pi(x1) (x) x2 y."""
    qc = quotient_coalgebra(inj)
    h = inj.h
    F, n = h.field, h.dim
    src = relative_tensor(inj, "HH")
    tgt = Quotient(qc.c_dim * n, [], F)
    amb = kron(qc.pi, h.mult) @ kron(h.comult, ident(n, F))
    beta = induced_map(amb, src, tgt)
    if beta is None:
        raise InternalInconsistency("beta is not well defined on H (x)_B H")
    rep = Report("Galois map beta")
    rep.data["dim H (x)_B H"] = src.dim
    rep.data["dim C (x) H"] = tgt.dim
    rep.record("beta well defined", True)
    if beta.cod == beta.dom:
        inv = try_invert(beta)
        rep.record("beta bijective", not isinstance(inv, Singular), getattr(inv, "witness", None))
    else:
        rep.record("beta bijective", False, detail=f"shape {beta.shape}")
    return beta, rep.finish()


def _gamma_ambient(inj):
    h, f = inj.h, inj.f
    F, n = h.field, h.dim
    H = ident(n, F)
    return compose(kron(h.mult, h.mult), kron(H, flip(n, n, F), H), kron(h.comult, f, H))


def _trivial_b_module(b, d):
    return ModuleRep(b, d, kron(b.counit, ident(d, b.field)), f"trivial^{d}")


def probe_b_modules(b: BialgebraSC, max_dim: int = 2) -> list[ModuleRep]:
    mods = [_trivial_b_module(b, d) for d in range(1, max_dim + 1)]
    if b.dim <= max_dim and b.dim > 1:
        mods.append(regular_module(b))
    return mods


def _tensor_over_b_quotients(inj, m: ModuleRep, nmod: ModuleRep):
    """Presentations of H (x)_B (M (x) (H (x)_B N)) and (H (x)_B M) (x) (H (x)_B N)
    on the common ambient H M H N."""
    h, b, f = inj.h, inj.b, inj.f
    F, n, nb = h.field, h.dim, b.dim
    H, M, N = ident(n, F), ident(m.dim, F), ident(nmod.dim, F)
    hf = h.mult @ kron(H, f)                               # H B -> H
    # relation in a pair (H, X): h f(b) (x) x - h (x) b.x, as a map H B X -> H X
    def rel(act, xdim):
        return kron(hf, ident(xdim, F)) - kron(H, act)
    rN = rel(nmod.action, nmod.dim)                        # H B N -> H N
    rM = rel(m.action, m.dim)                              # H B M -> H M
    inner = kron(H, M, rN)                                 # H M H B N -> H M H N
    # outer: h f(b) (x) (m h' n) - h (x) (b1 m (x) f(b2) h' (x) n)
    act_on_MHN = compose(kron(m.action, h.mult @ kron(f, H), N),
                         kron(ident(nb, F), flip(nb, m.dim, F), H, N),
                         kron(b.comult, M, H, N))           # B M H N -> M H N
    outer = kron(hf, M, H, N) - kron(H, act_on_MHN)       # H B M H N -> H M H N
    first = kron(rM, H, N)                                 # H B M H N -> H M H N
    amb = n * m.dim * n * nmod.dim
    src = Quotient(amb, inner.columns() + outer.columns(), F)
    tgt = Quotient(amb, first.columns() + inner.columns(), F)
    return src, tgt


def gamma_map(inj: BialgebraInjection, probe_max_dim: int = 2):
    """Gamma: H (x)_B (B (x) H) -> H (x) H, x (x) (b (x) y) |-> x1 f(b) (x) x2 y."""
    h, b = inj.h, inj.b
    F, n, nb = h.field, h.dim, b.dim
    src = relative_tensor(inj, "H_BH")
    tgt = Quotient(n * n, [], F)
    gamma = induced_map(_gamma_ambient(inj), src, tgt)
    if gamma is None:
        raise InternalInconsistency("Gamma is not well defined on H (x)_B (B (x) H)")
    rep = Report("generalized Galois map Gamma")
    rep.record("Gamma well defined", True)
    rep.data["dim H (x)_B (B (x) H)"] = src.dim
    inv = try_invert(gamma) if gamma.cod == gamma.dom else Singular(())
    ok = not isinstance(inv, Singular)
    rep.record("Gamma bijective", ok, None if ok else inv.witness)
    if not ok:
        return gamma, rep.finish()
    # x_(+) (x) (x_(+-) (x) x_(-)) = Gamma^-1(x (x) 1), as ambient representatives in H B H
    one = h.unit.column(0)
    comps = []
    for x in range(n):
        v = kron(vec_map(_e(n, x), F), vec_map(one, F)).column(0)
        comps.append(src.section.apply(inv.apply(v)))
    for m in probe_b_modules(b, probe_max_dim):
        for nm in probe_b_modules(b, probe_max_dim):
            hl_src, hl_tgt = _tensor_over_b_quotients(inj, m, nm)
            ok_l = _check_hl_inverse(inj, m, nm, comps, hl_src, hl_tgt)
            rep.record(f"(H^l)^-1 from Gamma^-1 inverts H^l on ({m.name},{nm.name})", ok_l)
    return gamma, rep.finish()


def _check_hl_inverse(inj, m, nm, comps, src, tgt) -> bool:
    h, b, f = inj.h, inj.b, inj.f
    F, n, nb = h.field, h.dim, b.dim
    M, N = ident(m.dim, F), ident(nm.dim, F)
    H = ident(n, F)
    # H^l on representatives: h m h' n |-> h1 m h2 h' n
    hl_amb = compose(kron(H, M, h.mult, N), kron(H, flip(n, m.dim, F), H, N), kron(h.comult, M, H, N))
    hl = induced_map(hl_amb, src, tgt)
    if hl is None:
        return False
    amb = n * m.dim * n * nm.dim
    mcols = m.action.columns()
    hcols = h.mult.columns()

    def image(j):
        hh, mm, hp, nn = _unravel4(j, (n, m.dim, n, nm.dim))
        out = {}
        for k, c in enumerate(comps[hh]):
            if not c:
                continue
            x, bb, y = _unravel3(k, (n, nb, n))
            bm = mcols[bb * m.dim + mm]
            yh = hcols[y * n + hp]
            for i, u in enumerate(bm):
                if not u:
                    continue
                for t, w in enumerate(yh):
                    if w:
                        idx = ((x * m.dim + i) * n + t) * nm.dim + nn
                        out[idx] = out.get(idx, 0) + c * u * w
        return out

    inv_amb = LinMap.from_images(amb, amb, image, F)
    inv = induced_map(inv_amb, tgt, src)
    if inv is None:
        return False
    return hl @ inv == ident(tgt.dim, F) and inv @ hl == ident(src.dim, F)


def _unravel3(k, dims):
    a, rest = divmod(k, dims[1] * dims[2])
    b, c = divmod(rest, dims[2])
    return a, b, c


def _unravel4(k, dims):
    a, rest = divmod(k, dims[1] * dims[2] * dims[3])
    return (a,) + _unravel3(rest, dims[1:])


# --- Ore extensions ----------------------------------------------------------

class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class OreDatum:
    b: BialgebraSC
    d: LinMap


def check_ore_datum(od: OreDatum) -> Report:
    rep = Report("Ore datum")
    b, d = od.b, od.d
    F, n = b.field, b.dim
    I = ident(n, F)
    rep.equal("derivation d(xy) = d(x)y + x d(y)", d @ b.mult, b.mult @ kron(d, I) + b.mult @ kron(I, d), (n, n))
    rep.equal("coderivation Delta d = (d(x)id + id(x)d) Delta", b.comult @ d, (kron(d, I) + kron(I, d)) @ b.comult, (n,))
    rep.equal("eps d = 0", b.counit @ d, LinMap.zero(1, n, F), (n,))
    return rep.finish()


def _rho(mod: ModuleRep, v) -> LinMap:
    F = mod.field
    return mod.action @ kron(vec_map(v, F), ident(mod.dim, F))


def commutator_ok(od: OreDatum, mod: ModuleRep, X: LinMap):
    """[X, rho(b)] = rho(d(b)) for every basis b; returns the first failing b."""
    n = od.b.dim
    for bi in range(n):
        e = _e(n, bi)
        r = _rho(mod, e)
        if X @ r - r @ X != _rho(mod, od.d.column(bi)):
            return bi
    return None


def ore_lifted_action_check(od: OreDatum, m: tuple, n: tuple) -> Report:
    """Certificates for the x-action on Hom_B(B (x) M, N)."""
    (M, XM), (N, XN) = m, n
    for name, mod, X in (("M", M, XM), ("N", N, XN)):
        bad = commutator_ok(od, mod, X)
        if bad is not None:
            raise PreconditionError(f"[X_{name}, b] != d(b) on {name} at basis element {bad}")
    b, d = od.b, od.d
    F, nb = b.field, b.dim
    B = ident(nb, F)
    rep = Report("Ore lifted action")
    src = tensor_modules(b, regular_module(b), M)       # B (x) M
    homs = module_morphisms(src, N)
    rep.data["dim Hom_B(B (x) M, N)"] = len(homs)

    def b_act(bi, f):
        Rb = b.mult @ kron(B, vec_map(_e(nb, bi), F))
        return f @ kron(Rb, ident(M.dim, F))

    def x_act(f, XN_, XM_):
        return XN_ @ f - f @ kron(d, ident(M.dim, F)) - f @ kron(B, XM_)

    rep.record("x.f lands in Hom_B", all(is_module_map(x_act(f, XN, XM), src, N) for f in homs))
    bad = None
    for k, f in enumerate(homs):
        for bi in range(nb):
            lhs = x_act(b_act(bi, f), XN, XM) - b_act(bi, x_act(f, XN, XM))
            rhs = sum((b_act(j, f).scale(c) for j, c in enumerate(d.column(bi)) if c),
                      LinMap.zero(f.cod, f.dom, F))
            if lhs != rhs:
                bad = bad or (k, bi)
    rep.record("[x, b] = d(b) on Hom", bad is None, bad)
    # unit: N -> Hom_B(B (x) M, N (x) M), n |-> (b (x) m |-> b.n (x) m)
    NM = tensor_modules(b, N, M)
    XNM = kron(XN, ident(M.dim, F)) + kron(ident(N.dim, F), XM)
    rep.record("N (x) M satisfies the commutator precondition", commutator_ok(od, NM, XNM) is None)
    srcNM = src

    def cvl(v):
        # b (x) m |-> b.v (x) m
        bv = N.action @ kron(B, vec_map(v, F))       # B -> N
        return kron(bv, ident(M.dim, F))

    ok_in, ok_x, ok_b = True, True, True
    for ni in range(N.dim):
        e = _e(N.dim, ni)
        c = cvl(e)
        ok_in = ok_in and is_module_map(c, srcNM, NM)
        ok_x = ok_x and x_act(c, XNM, XM) == cvl(XN.column(ni))
        for bi in range(nb):
            ok_b = ok_b and b_act(bi, c) == cvl(_rho(N, _e(nb, bi)).column(ni))
    rep.record("cvl lands in Hom_B", ok_in)
    rep.record("cvl is x-equivariant", ok_x)
    rep.record("cvl is B-equivariant", ok_b)
    # counit: Hom (x) M -> N, f (x) m |-> f(1 (x) m)
    one = b.unit.column(0)

    def evl(f, mv):
        return f.apply(kron(vec_map(one, F), vec_map(mv, F)).column(0))

    ok_x, ok_b = True, True
    for f in homs:
        xf = x_act(f, XN, XM)
        for mi in range(M.dim):
            em = _e(M.dim, mi)
            lhs = _add(evl(xf, em), evl(f, XM.column(mi)), F)
            ok_x = ok_x and lhs == XN.apply(evl(f, em))
            for bi in range(nb):
                # b.(f (x) m) = b1.f (x) b2.m
                tot = (0,) * N.dim
                for k, cval in enumerate(b.comult.column(bi)):
                    if cval:
                        b1, b2 = divmod(k, nb)
                        part = evl(b_act(b1, f), _rho(M, _e(nb, b2)).column(mi))
                        tot = _add(tot, tuple(cval * x for x in part), F)
                ok_b = ok_b and tot == _rho(N, _e(nb, bi)).apply(evl(f, em))
    rep.record("evl is x-equivariant", ok_x)
    rep.record("evl is B-equivariant", ok_b)
    return rep.finish()


def _add(u, v, F):
    return tuple(F.norm(a + b) for a, b in zip(u, v))
