"""Algebras, coalgebras, bialgebras and Hopf algebras by structure constants.

The ambient braiding is always the flip of vector spaces.  Index
conventions are those documented in ``exactlin``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .exactlin import (
    LinMap, Field, QQ, kron, ident, flip, compose, solve, DimensionMismatch,
)
from .report import Report


@dataclass(frozen=True)
class AlgebraSC:
    mult: LinMap   # dim^2 -> dim
    unit: LinMap   # 1 -> dim

    @property
    def dim(self):
        return self.unit.cod

    @property
    def field(self):
        return self.mult.field


@dataclass(frozen=True)
class CoalgebraSC:
    comult: LinMap   # dim -> dim^2
    counit: LinMap   # dim -> 1

    @property
    def dim(self):
        return self.counit.dom

    @property
    def field(self):
        return self.comult.field


@dataclass(frozen=True)
class BialgebraSC:
    mult: LinMap
    unit: LinMap
    comult: LinMap
    counit: LinMap
    name: str = ""

    @property
    def dim(self) -> int:
        return self.unit.cod

    @property
    def field(self) -> Field:
        return self.mult.field

    @property
    def algebra(self) -> AlgebraSC:
        return AlgebraSC(self.mult, self.unit)

    @property
    def coalgebra(self) -> CoalgebraSC:
        return CoalgebraSC(self.comult, self.counit)

    def id(self) -> LinMap:
        return ident(self.dim, self.field)

    def flip(self) -> LinMap:
        return flip(self.dim, self.dim, self.field)


@dataclass(frozen=True)
class HopfSC(BialgebraSC):
    antipode: LinMap | None = None
    opantipode: LinMap | None = None

    @property
    def bialgebra(self) -> BialgebraSC:
        return BialgebraSC(self.mult, self.unit, self.comult, self.counit, self.name)


def with_antipode(b: BialgebraSC, antipode: LinMap, opantipode: LinMap | None = None, name=None) -> HopfSC:
    return HopfSC(b.mult, b.unit, b.comult, b.counit, name if name is not None else b.name,
                  antipode, opantipode)


# --- builders ----------------------------------------------------------------

def from_tables(dim: int, mul: Callable[[int, int], dict], unit: Sequence, co: Callable[[int], dict],
                counit: Sequence, field: Field = QQ, name: str = "") -> BialgebraSC:
    """Bialgebra from basis-level rules: mul(i, j) -> {k: c}, co(i) -> {(k, l): c}."""
    m = LinMap.from_images(dim * dim, dim, lambda j: mul(*divmod(j, dim)), field)
    d = LinMap.from_images(dim, dim * dim, lambda i: {k * dim + l: c for (k, l), c in co(i).items()}, field)
    u = LinMap([[x] for x in unit], field)
    e = LinMap([list(counit)], field)
    return BialgebraSC(m, u, d, e, name)


def monoid_bialgebra(table: Sequence[Sequence[int]], identity: int = 0, field: Field = QQ, name: str = "") -> BialgebraSC:
    """k[M] with group-like basis: m(x, y) = xy, Delta(x) = x (x) x, eps(x) = 1."""
    n = len(table)
    return from_tables(n, lambda i, j: {table[i][j]: 1}, [1 if k == identity else 0 for k in range(n)],
                       lambda i: {(i, i): 1}, [1] * n, field, name)


def cyclic_table(n: int):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def group_hopf(table: Sequence[Sequence[int]], identity: int = 0, field: Field = QQ, name: str = "") -> HopfSC:
    b = monoid_bialgebra(table, identity, field, name)
    n = len(table)
    inv = [next(j for j in range(n) if table[i][j] == identity) for i in range(n)]
    S = LinMap.from_images(n, n, lambda i: {inv[i]: 1}, field)
    return with_antipode(b, S, S)


# --- checks -----------------------------------------------------------------

def _check_dims(x):
    if isinstance(x, AlgebraSC):
        n = x.unit.cod
        if x.unit.dom != 1 or x.mult.shape != (n, n * n):
            raise DimensionMismatch(f"algebra: mult {x.mult.shape}, unit {x.unit.shape}")
    else:
        n = x.counit.dom
        if x.counit.cod != 1 or x.comult.shape != (n * n, n):
            raise DimensionMismatch(f"coalgebra: comult {x.comult.shape}, counit {x.counit.shape}")


def check_structure(x: AlgebraSC | CoalgebraSC, report: Report | None = None) -> Report:
    rep = report or Report("structure")
    _check_dims(x)
    n = x.dim
    I = ident(n, x.field)
    if isinstance(x, AlgebraSC):
        m, u = x.mult, x.unit
        rep.equal("associativity", m @ kron(m, I), m @ kron(I, m), (n, n, n))
        rep.equal("left unit", m @ kron(u, I), I, (n,))
        rep.equal("right unit", m @ kron(I, u), I, (n,))
    else:
        d, e = x.comult, x.counit
        rep.equal("coassociativity", kron(d, I) @ d, kron(I, d) @ d, (n,))
        rep.equal("left counit", kron(e, I) @ d, I, (n,))
        rep.equal("right counit", kron(I, e) @ d, I, (n,))
    return rep.finish()


def check_bialgebra(b: BialgebraSC) -> Report:
    rep = Report("bialgebra")
    rep.merge(check_structure(b.algebra), "algebra: ")
    rep.merge(check_structure(b.coalgebra), "coalgebra: ")
    n, F = b.dim, b.field
    I = ident(n, F)
    m, u, d, e = b.mult, b.unit, b.comult, b.counit
    mid = kron(I, flip(n, n, F), I)
    rep.equal("comult multiplicative", d @ m, kron(m, m) @ mid @ kron(d, d), (n, n))
    rep.equal("comult unital", d @ u, kron(u, u), (0,))
    rep.equal("counit multiplicative", e @ m, kron(e, e), (n, n))
    rep.equal("counit unital", e @ u, ident(1, F), (0,))
    return rep.finish()


def check_antipode(h: HopfSC, mode: str = "antipode") -> Report:
    rep = Report(f"{mode}")
    S = h.antipode if mode == "antipode" else h.opantipode
    if S is None:
        raise ValueError(f"missing {mode}")
    n = h.dim
    I = ident(n, h.field)
    d = h.comult if mode == "antipode" else h.flip() @ h.comult
    target = h.unit @ h.counit
    rep.equal("m(S (x) id)D = ue", h.mult @ kron(S, I) @ d, target, (n,))
    rep.equal("m(id (x) S)D = ue", h.mult @ kron(I, S) @ d, target, (n,))
    return rep.finish()


def solve_for_map(cod: int, dom: int, op: Callable[[LinMap], LinMap], rhs: LinMap, field: Field = QQ) -> LinMap | None:
    """Solve op(X) = rhs for a cod x dom map X, op linear."""
    cols = []
    for k in range(cod * dom):
        E = LinMap.from_images(dom, cod, lambda j, k=k: {k // dom: 1} if j == k % dom else {}, field)
        cols.append(op(E).entries())
    A = LinMap.from_columns(cols, rhs.cod * rhs.dom, field)
    x = solve(A, rhs.entries())
    if x is None:
        return None
    return LinMap([x[i * dom:(i + 1) * dom] for i in range(cod)], field, dom)


def solve_antipode(b: BialgebraSC, mode: str = "antipode") -> LinMap | None:
    """Independent oracle: both antipode equations are linear in S."""
    n, F = b.dim, b.field
    I = ident(n, F)
    d = b.comult if mode == "antipode" else flip(n, n, F) @ b.comult

    def op(S):
        left = (b.mult @ kron(S, I) @ d).entries()
        right = (b.mult @ kron(I, S) @ d).entries()
        return LinMap([left + right], F)

    t = (b.unit @ b.counit).entries()
    return solve_for_map(n, n, op, LinMap([t + t], F), F)


def dual_bialgebra(b: BialgebraSC) -> BialgebraSC:
    out = BialgebraSC(b.comult.T, b.counit.T, b.mult.T, b.unit.T, f"dual({b.name})")
    if isinstance(b, HopfSC):
        return with_antipode(out, b.antipode.T if b.antipode is not None else None,
                             b.opantipode.T if b.opantipode is not None else None, out.name)
    return out


def tensor_bialgebra(c: BialgebraSC, b: BialgebraSC, name: str = "") -> BialgebraSC:
    """c (x) b with componentwise structure (the flip distributive law)."""
    F = c.field
    sw = kron(ident(c.dim, F), flip(b.dim, c.dim, F), ident(b.dim, F))
    m = kron(c.mult, b.mult) @ sw
    d = kron(ident(c.dim, F), flip(c.dim, b.dim, F), ident(b.dim, F)) @ kron(c.comult, b.comult)
    return BialgebraSC(m, kron(c.unit, b.unit), d, kron(c.counit, b.counit), name)


def is_algebra_map(f: LinMap, a: AlgebraSC, b: AlgebraSC, rep: Report, label: str) -> bool:
    ok = rep.equal(f"{label} multiplicative", f @ a.mult, b.mult @ kron(f, f), (a.dim, a.dim))
    return rep.equal(f"{label} unital", f @ a.unit, b.unit, (0,)) and ok


def is_coalgebra_map(f: LinMap, a: CoalgebraSC, b: CoalgebraSC, rep: Report, label: str) -> bool:
    ok = rep.equal(f"{label} comultiplicative", kron(f, f) @ a.comult, b.comult @ f, (a.dim,))
    return rep.equal(f"{label} counital", b.counit @ f, a.counit, (a.dim,)) and ok


def check_bialgebra_map(f: LinMap, a: BialgebraSC, b: BialgebraSC, label: str = "f") -> Report:
    rep = Report(f"bialgebra map {label}")
    is_algebra_map(f, a.algebra, b.algebra, rep, label)
    is_coalgebra_map(f, a.coalgebra, b.coalgebra, rep, label)
    return rep.finish()


def is_cocommutative(c: CoalgebraSC | BialgebraSC) -> bool:
    return flip(c.dim, c.dim, c.field) @ c.comult == c.comult


def is_commutative(a: AlgebraSC | BialgebraSC) -> bool:
    return a.mult @ flip(a.dim, a.dim, a.field) == a.mult


def element_product(b: AlgebraSC | BialgebraSC, x: Sequence, y: Sequence) -> tuple:
    return b.mult.apply(kron(LinMap([[v] for v in x], b.field), LinMap([[v] for v in y], b.field)).column(0))
