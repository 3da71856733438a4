"""Fusion operators of the bimonad B (x) - on vector spaces.

For x_dim = y_dim = 1 the object-level operators reduce to

    H1(b (x) c) = b1 (x) b2 c,      H2(b (x) c) = b1 c (x) b2,

and B is Hopf exactly when H1 is invertible; the antipode is then
S = (eps (x) id) H1^-1 (id (x) 1).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exactlin import LinMap, kron, ident, flip, try_invert, Singular, permute_factors, compose
from .hopfcore import BialgebraSC, HopfSC, with_antipode, check_antipode, check_bialgebra
from .report import Report, InternalInconsistency

PROBE_DIMS = (1, 2, 3)


@dataclass(frozen=True)
class FusionBundle:
    h1: LinMap
    h2: LinMap
    h1_inv: LinMap | None
    h2_inv: LinMap | None
    h1_witness: tuple | None = None
    h2_witness: tuple | None = None


def _inv(f):
    r = try_invert(f)
    return (None, r.witness) if isinstance(r, Singular) else (r, None)


def fusion_bundle(b: BialgebraSC) -> FusionBundle:
    n, F = b.dim, b.field
    I = ident(n, F)
    h1 = kron(I, b.mult) @ kron(b.comult, I)
    h2 = kron(b.mult, I) @ kron(I, flip(n, n, F)) @ kron(b.comult, I)
    i1, w1 = _inv(h1)
    i2, w2 = _inv(h2)
    return FusionBundle(h1, h2, i1, i2, w1, w2)


def fusion_at(b: BialgebraSC, x_dim: int, y_dim: int) -> tuple[LinMap, LinMap]:
    """(H^l_{X,Y}, H^r_{X,Y}) for X = k^x_dim, Y = k^y_dim.

    H^l: B X B Y -> B X B Y,  b x c y |-> b1 x b2c y
    H^r: B B X Y -> B X B Y,  b c x y |-> b1c x b2 y
    """
    n, F = b.dim, b.field
    I, X, Y = ident(n, F), ident(x_dim, F), ident(y_dim, F)
    hl = compose(kron(I, X, b.mult, Y),
                 kron(I, flip(n, x_dim, F), I, Y),
                 kron(b.comult, X, I, Y))
    hr = compose(kron(b.mult, X, I, Y),
                 kron(I, flip(n, n * x_dim, F), Y),
                 kron(b.comult, I, X, Y))
    return hl, hr


def fusion_inverse_formulas(b: BialgebraSC, S: LinMap | None, Sp: LinMap | None, x_dim: int, y_dim: int):
    """Closed-form inverses built from the antipode / opantipode.

    (H^l)^-1: b x c y |-> b1 x S(b2)c y
    (H^r)^-1: b x c y |-> c2 (x) S'(c1)b (x) x (x) y
    """
    n, F = b.dim, b.field
    I, X, Y = ident(n, F), ident(x_dim, F), ident(y_dim, F)
    hl_inv = hr_inv = None
    if S is not None:
        hl_inv = compose(kron(I, X, b.mult, Y), kron(I, X, S, I, Y),
                         kron(I, flip(n, x_dim, F), I, Y), kron(b.comult, X, I, Y))
    if Sp is not None:
        dims = (n, x_dim, n, n, y_dim)
        # b x c1 c2 y  ->  c2 c1 b x y
        perm = permute_factors(dims, (3, 2, 0, 1, 4), F)
        hr_inv = compose(kron(I, b.mult, X, Y), kron(I, Sp, I, X, Y), perm, kron(I, X, b.comult, Y))
    return hl_inv, hr_inv


def recover_antipodes(b: BialgebraSC):
    """(S, S') from the fusion inverses; either may be None."""
    fb = fusion_bundle(b)
    n, F = b.dim, b.field
    I = ident(n, F)
    S = Sp = None
    if fb.h1_inv is not None:
        S = kron(b.counit, I) @ fb.h1_inv @ kron(I, b.unit)
        if not check_antipode(with_antipode(b, S), "antipode").passed:
            raise InternalInconsistency("H1 invertible but the recovered S fails the antipode axioms")
    if fb.h2_inv is not None:
        Sp = kron(b.counit, I) @ fb.h2_inv @ kron(b.unit, I)
        if not check_antipode(with_antipode(b, S, Sp), "opantipode").passed:
            raise InternalInconsistency("H2 invertible but the recovered S' fails the opantipode axioms")
    return S, Sp


@dataclass
class HopfVerdict:
    left_hopf: bool
    right_hopf: bool
    pre_hopf_left: bool
    pre_hopf_right: bool
    criteria: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)

    @property
    def hopf(self):
        return self.left_hopf and self.right_hopf


def hopf_classify(b: BialgebraSC, probe_dims=PROBE_DIMS) -> HopfVerdict:
    fb = fusion_bundle(b)
    S, Sp = recover_antipodes(b)
    v = HopfVerdict(False, False, fb.h1_inv is not None, fb.h2_inv is not None)
    if fb.h1_witness is not None:
        v.witnesses["H1 kernel"] = fb.h1_witness
        v.criteria["left"] = "H1 singular"
    if fb.h2_witness is not None:
        v.witnesses["H2 kernel"] = fb.h2_witness
        v.criteria["right"] = "H2 singular"
    ok_l = S is not None
    ok_r = Sp is not None
    for x in probe_dims:
        for y in probe_dims:
            if not (ok_l or ok_r):
                break
            hl, hr = fusion_at(b, x, y)
            hl_inv, hr_inv = fusion_inverse_formulas(b, S, Sp, x, y)
            idn = ident(hl.dom, b.field)
            if ok_l and not (hl @ hl_inv == idn and hl_inv @ hl == idn):
                raise InternalInconsistency(f"closed-form (H^l)^-1 fails at probe dims ({x},{y})")
            if ok_r and not (hr @ hr_inv == idn and hr_inv @ hr == idn):
                raise InternalInconsistency(f"closed-form (H^r)^-1 fails at probe dims ({x},{y})")
    if ok_l:
        v.left_hopf = True
        v.criteria["left"] = f"H1 invertible; S-built inverse of H^l verified on probe dims {tuple(probe_dims)}"
    if ok_r:
        v.right_hopf = True
        v.criteria["right"] = f"H2 invertible; S'-built inverse of H^r verified on probe dims {tuple(probe_dims)}"
    return v


def classify_report(b: BialgebraSC, probe_dims=PROBE_DIMS) -> Report:
    rep = Report("fusion")
    rep.merge(check_bialgebra(b), "bialgebra: ")
    if not rep.passed:
        return rep.finish()
    v = hopf_classify(b, probe_dims)
    rep.record("H1 invertible (left Hopf)", v.left_hopf, v.witnesses.get("H1 kernel"), v.criteria.get("left", ""))
    rep.record("H2 invertible (right Hopf)", v.right_hopf, v.witnesses.get("H2 kernel"), v.criteria.get("right", ""))
    return rep.finish()


# --- binary antipode ---------------------------------------------------------

def _hom_index(cod_i, dom_i, dom):
    return cod_i * dom + dom_i


def binary_antipode_left(h: HopfSC, m, n_dim: int) -> LinMap:
    """B (x) Hom(B (x) M, N) -> Hom(M, B (x) N),  h (x) g |-> (m |-> h1 (x) g(S(h2) (x) m))."""
    if h.antipode is None:
        raise ValueError("binary_antipode_left needs an antipode")
    n, F, md = h.dim, h.field, m.dim
    S = h.antipode
    hom_in = n_dim * n * md
    dom = n * hom_in
    cod = (n * n_dim) * md

    def image(j):
        hb, g = divmod(j, hom_in)
        nn, col = divmod(g, n * md)
        bb, mm = divmod(col, md)
        out = {}
        for k in range(n * n):
            c = h.comult.rows[k][hb]
            if not c:
                continue
            h1, h2 = divmod(k, n)
            s = S.rows[bb][h2]
            if s:
                idx = _hom_index(h1 * n_dim + nn, mm, md)
                out[idx] = out.get(idx, 0) + c * s
        return out

    return LinMap.from_images(dom, cod, image, F)


def restrict_along_action(h: BialgebraSC, m, n_dim: int) -> LinMap:
    """id_B (x) (f |-> f o r): B (x) Hom(M, N) -> B (x) Hom(B (x) M, N)."""
    F = h.field
    pre = kron(ident(n_dim, F), m.action.T)
    return kron(ident(h.dim, F), pre)


def lifted_hom_xi(h: BialgebraSC, m, n_dim: int) -> LinMap:
    """xi: B (x) Hom(M, N) -> Hom(M, B (x) N) from the inverse of the fusion
    map b (x) f (x) m |-> b1 (x) f (x) b2.m (no antipode is used)."""
    n, F, md = h.dim, h.field, m.dim
    hom = n_dim * md
    I = ident(n, F)
    # Hbar on B (x) X (x) M with X = Hom(M, N)
    hbar = compose(kron(I, ident(hom, F), m.action),
                   kron(I, flip(n, hom, F), ident(md, F)),
                   kron(h.comult, ident(hom * md, F)))
    inv = try_invert(hbar)
    if isinstance(inv, Singular):
        raise ValueError("fusion map is singular; xi is not defined")
    cod = (n * n_dim) * md
    rows = [[0] * (n * hom) for _ in range(cod)]
    for j in range(n * hom):
        for mm in range(md):
            col = inv.column(j * md + mm)
            for k, v in enumerate(col):
                if not v:
                    continue
                bb, rest = divmod(k, hom * md)
                f, m2 = divmod(rest, md)
                nn, mdom = divmod(f, md)
                if mdom == m2:
                    # evaluation f(m2) picks out f[nn][m2]
                    rows[_hom_index(bb * n_dim + nn, mm, md)][j] += v
    return LinMap(rows, F)
