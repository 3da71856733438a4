"""Pivotal pairs in finite-dimensional vector spaces and objects intertwined
with them.

Only the finite data is built and checked here: the pair (P, Q) with both
dualities, and intertwinings sigma: X (x) P -> P (x) X whose induced
sigma_bar: Q (x) X -> X (x) Q is invertible with the prescribed inverse.
The Hopf monad assembled from such data is infinite dimensional and is not
constructed.

Convention: (cvl, evl) is the standard duality, cvl = sum e_i (x) e_i and
evl(e_i (x) e_j) = delta_ij; (cvr, evr) is twisted, cvr has coefficient
matrix g^-1 and evr has matrix g.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .exactlin import LinMap, QQ, kron, ident, compose, try_invert, Singular
from .report import Report, InternalInconsistency


@dataclass(frozen=True)
class PivotalPair:
    p_dim: int
    q_dim: int
    cvl: LinMap   # 1 -> P Q
    evl: LinMap   # Q P -> 1
    cvr: LinMap   # 1 -> Q P
    evr: LinMap   # P Q -> 1

    @property
    def field(self):
        return self.cvl.field


def _pairing_maps(mat, field):
    n, k = len(mat), len(mat[0])
    cv = LinMap([[mat[i][j]] for i in range(n) for j in range(k)], field)
    ev = LinMap([[mat[i][j] for i in range(n) for j in range(k)]], field)
    return cv, ev


class SingularMatrix(ValueError):
    pass


def pivotal_from_matrix(g: LinMap) -> PivotalPair:
    n = g.cod
    if g.dom != n:
        raise ValueError("g must be square")
    gi = try_invert(g)
    if isinstance(gi, Singular):
        raise SingularMatrix(f"g is singular (kernel vector {tuple(str(x) for x in gi.witness)})")
    F = g.field
    eye = ident(n, F).rows
    cvl, evl = _pairing_maps(eye, F)
    cvr, _ = _pairing_maps(gi.rows, F)
    _, evr = _pairing_maps(g.rows, F)
    pp = PivotalPair(n, n, cvl, evl, cvr, evr)
    if not check_pivotal_pair(pp).passed:
        raise InternalInconsistency("pivotal_from_matrix produced a pair failing the snake identities")
    return pp


def check_pivotal_pair(pp: PivotalPair) -> Report:
    rep = Report("pivotal pair")
    F, p, q = pp.field, pp.p_dim, pp.q_dim
    P, Q = ident(p, F), ident(q, F)
    rep.equal("left snake on P", kron(P, pp.evl) @ kron(pp.cvl, P), P, (p,))
    rep.equal("left snake on Q", kron(pp.evl, Q) @ kron(Q, pp.cvl), Q, (q,))
    rep.equal("right snake on P", kron(pp.evr, P) @ kron(P, pp.cvr), P, (p,))
    rep.equal("right snake on Q", kron(Q, pp.evr) @ kron(pp.cvr, Q), Q, (q,))
    return rep.finish()


@dataclass(frozen=True)
class Intertwiner:
    pair: PivotalPair
    x_dim: int
    sigma: LinMap   # X P -> P X

    @cached_property
    def sigma_inv(self):
        r = try_invert(self.sigma)
        return None if isinstance(r, Singular) else r

    @cached_property
    def sigma_bar(self) -> LinMap:
        """(ev (x) id (x) id)(id (x) sigma (x) id)(id (x) id (x) coev): Q X -> X Q"""
        pp, F = self.pair, self.pair.field
        Q, X = ident(pp.q_dim, F), ident(self.x_dim, F)
        return compose(kron(pp.evl, X, Q), kron(Q, self.sigma, Q), kron(Q, X, pp.cvl))

    @cached_property
    def sigma_bar_inv(self) -> LinMap | None:
        """(id (x) id (x) ev')(id (x) sigma^-1 (x) id)(coev' (x) id (x) id): X Q -> Q X"""
        if self.sigma_inv is None:
            return None
        pp, F = self.pair, self.pair.field
        Q, X = ident(pp.q_dim, F), ident(self.x_dim, F)
        return compose(kron(Q, X, pp.evr), kron(Q, self.sigma_inv, Q), kron(pp.cvr, X, Q))


def check_intertwiner(it: Intertwiner) -> Report:
    rep = Report("intertwiner")
    if it.sigma_inv is None:
        raise ValueError("sigma is not invertible")
    F = it.pair.field
    d = it.x_dim * it.pair.q_dim
    rep.equal("sigma_bar sigma_bar^-1 = id", it.sigma_bar @ it.sigma_bar_inv, ident(d, F), (it.x_dim, it.pair.q_dim))
    rep.equal("sigma_bar^-1 sigma_bar = id", it.sigma_bar_inv @ it.sigma_bar, ident(d, F), (it.pair.q_dim, it.x_dim))
    return rep.finish()


def unit_intertwiner(pp: PivotalPair) -> Intertwiner:
    return Intertwiner(pp, 1, ident(pp.p_dim, pp.field))


def tensor_intertwiners(a: Intertwiner, b: Intertwiner) -> Intertwiner:
    """(X (x) Y, (sigma (x) Y)(X (x) tau))."""
    if a.pair != b.pair:
        raise ValueError("intertwiners over different pivotal pairs")
    for it in (a, b):
        if not check_intertwiner(it).passed:
            raise ValueError("tensor_intertwiners needs verified intertwiners")
    F = a.pair.field
    X, Y = ident(a.x_dim, F), ident(b.x_dim, F)
    sig = kron(a.sigma, Y) @ kron(X, b.sigma)
    out = Intertwiner(a.pair, a.x_dim * b.x_dim, sig)
    if not check_intertwiner(out).passed:
        raise InternalInconsistency("tensor of intertwiners fails the inverse condition")
    return out


def small_integer_matrices(n=2, lo=-2, hi=2, field=QQ):
    from itertools import product
    for entries in product(range(lo, hi + 1), repeat=n * n):
        yield LinMap([list(entries[i * n:(i + 1) * n]) for i in range(n)], field)
