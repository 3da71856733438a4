"""Idempotent monads on the poset (N0, <=) with + as tensor, and the unary
fragment of the finitary-theory fusion check.

A closure operator on N0 is determined by its image S; T(n) is the least
element of S that is >= n. T is a bimonad when S is a submonoid and a Hopf
monad exactly when S is generated by one element.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from math import gcd
from functools import reduce

from .report import InternalInconsistency


class NotAMonad(ValueError):
    pass


@dataclass(frozen=True)
class EventuallyPeriodicSet:
    """S with explicit members below `start`; for n >= start membership depends
    only on n mod period."""
    prefix: frozenset
    start: int
    period: int
    residues: frozenset

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if n < self.start:
            return n in self.prefix
        return n % self.period in self.residues

    @property
    def infinite(self):
        return bool(self.residues)

    def members_below(self, k):
        return [n for n in range(k) if n in self]


def finite_set(elems) -> EventuallyPeriodicSet:
    elems = frozenset(elems)
    return EventuallyPeriodicSet(elems, max(elems, default=-1) + 1, 1, frozenset())


def cofinite_set(missing, start=None) -> EventuallyPeriodicSet:
    """N0 minus a finite set of gaps."""
    missing = set(missing)
    start = max(missing, default=-1) + 1 if start is None else start
    return EventuallyPeriodicSet(frozenset(n for n in range(start) if n not in missing), start, 1, frozenset({0}))


@dataclass(frozen=True)
class NumericalSubmonoid:
    generators: tuple
    frobenius_bound: int = field(init=False)

    def __post_init__(self):
        gens = tuple(sorted(set(self.generators)))
        if any(g <= 0 for g in gens):
            raise ValueError("generators must be positive")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "frobenius_bound", _frobenius_start(gens))

    def as_set(self) -> EventuallyPeriodicSet:
        if not self.generators:
            return finite_set({0})
        g = reduce(gcd, self.generators)
        start = self.frobenius_bound
        reach = _reachable(self.generators, start)
        return EventuallyPeriodicSet(frozenset(n for n in range(start) if reach[n]), start, g, frozenset({0}))

    def __contains__(self, n):
        return n in self.as_set()


def _reachable(gens, limit):
    reach = [False] * max(limit, 1)
    reach[0] = True
    for n in range(1, limit):
        reach[n] = any(n >= g and reach[n - g] for g in gens)
    return reach


def _frobenius_start(gens) -> int:
    """Least N such that every multiple of gcd(gens) that is >= N lies in <gens>."""
    if not gens:
        return 1
    g = reduce(gcd, gens)
    # a run of min(gens) consecutive members (in steps of g) means all later ones are members
    run, n, last_gap = 0, 0, -g
    m = min(gens)
    limit = m * max(gens) + m + 1
    reach = _reachable(gens, limit)
    while n < limit:
        if reach[n]:
            run += 1
            if run >= m // g:
                break
        else:
            run, last_gap = 0, n
        n += g
    return last_gap + g


@dataclass(frozen=True)
class ClosureOp:
    s: EventuallyPeriodicSet

    def __call__(self, n: int) -> int:
        if not self.s.infinite and n > max(self.s.prefix, default=-1):
            raise NotAMonad(f"no element of S is >= {n}")
        m = n
        while m not in self.s:
            m += 1
        return m


@dataclass
class NatVerdict:
    monad: bool
    bimonad: bool
    hopf: bool
    generators: tuple = ()
    witness: tuple | None = None
    closure_witness: tuple | None = None
    reason: str = ""

    def summary(self):
        if not self.monad:
            return "not a monad"
        if not self.bimonad:
            return "monad, not bimonad"
        return "bimonad, Hopf" if self.hopf else "bimonad, not Hopf"


def _as_set(s):
    return s.as_set() if isinstance(s, NumericalSubmonoid) else s


def additive_closure_witness(s: EventuallyPeriodicSet):
    """A pair (a, b) of members with a + b outside S, or None. Checking a, b
    below start + period suffices because membership is periodic past start."""
    top = s.start + s.period
    mem = s.members_below(top)
    for a in mem:
        for b in mem:
            if a + b not in s:
                return (a, b)
    return None


def minimal_generators(s: EventuallyPeriodicSet) -> tuple:
    """Members that are not sums of two nonzero members (for a submonoid)."""
    s1 = next(n for n in range(1, s.start + s.period + 1) if n in s)
    top = 2 * (s.start + s.period + s1)
    mem = [n for n in s.members_below(top) if n > 0]
    mset = set(mem)
    gens = []
    for n in mem:
        if not any(a in mset and n - a in mset for a in range(1, n)):
            gens.append(n)
    return tuple(gens)


def fusion_identity_witness(t: ClosureOp, bound: int):
    """First (n, m) with T(T(n) + m) != T(n) + T(m), n, m <= bound."""
    for n in range(bound + 1):
        tn = t(n)
        for m in range(bound + 1):
            if t(tn + m) != tn + t(m):
                return (n, m)
    return None


def classify_nat_monad(s, bound: int = 100) -> NatVerdict:
    s = _as_set(s)
    if not s.infinite:
        return NatVerdict(False, False, False, reason="finite set: T is not defined everywhere")
    t = ClosureOp(s)
    cw = additive_closure_witness(s)
    bimonad = 0 in s and cw is None
    gens = minimal_generators(s) if bimonad else ()
    hopf = bimonad and len(gens) == 1
    w = fusion_identity_witness(t, bound)
    if hopf != (w is None):
        raise InternalInconsistency(
            f"singly-generated test says hopf={hopf} but the fusion identity up to {bound} gives witness {w}")
    if hopf:
        g = gens[0]
        if any(t(n) != -(-n // g) * g for n in range(bound + 1)):
            raise InternalInconsistency("T(n) differs from the rounded-up multiple of the generator")
    reason = ("0 not in S" if 0 not in s else
              f"{cw[0]} + {cw[1]} not in S" if cw else
              f"generated by {gens}")
    return NatVerdict(True, bimonad, hopf, gens, w, cw, reason)


# --- unary fragment of finitary theories -------------------------------------

@dataclass(frozen=True)
class FiniteMonoid:
    table: tuple
    identity: int = 0
    name: str = ""

    @property
    def order(self):
        return len(self.table)

    def mul(self, a, b):
        return self.table[a][b]


def check_monoid(m: FiniteMonoid):
    n = m.order
    rng = range(n)
    for a in rng:
        if len(m.table[a]) != n or any(not 0 <= x < n for x in m.table[a]):
            raise ValueError(f"row {a} of the multiplication table is malformed")
    for a in rng:
        if m.mul(m.identity, a) != a or m.mul(a, m.identity) != a:
            raise ValueError(f"identity law fails at {a}")
    for a, b, c in product(rng, rng, rng):
        if m.mul(m.mul(a, b), c) != m.mul(a, m.mul(b, c)):
            raise ValueError(f"associativity fails at {(a, b, c)}")


def is_group(m: FiniteMonoid) -> bool:
    return all(any(m.mul(a, b) == m.identity for b in range(m.order)) for a in range(m.order))


def _canon_table(table, perm_of):
    n = len(table)
    inv = {p: i for i, p in enumerate(perm_of)}
    return tuple(tuple(inv[table[perm_of[i]][perm_of[j]]] for j in range(n)) for i in range(n))


def enumerate_monoids(order: int) -> list[FiniteMonoid]:
    """All monoids on {0..order-1} with identity 0, up to isomorphism."""
    if order < 1:
        return []
    others = list(range(1, order))
    seen, out = set(), []
    free = [(a, b) for a in others for b in others]
    for vals in product(range(order), repeat=len(free)):
        t = [[0] * order for _ in range(order)]
        for i in range(order):
            t[0][i] = t[i][0] = i
        for (a, b), v in zip(free, vals):
            t[a][b] = v
        m = FiniteMonoid(tuple(map(tuple, t)))
        try:
            check_monoid(m)
        except ValueError:
            continue
        key = min(_canon_table(m.table, (0,) + p) for p in permutations(others))
        if key not in seen:
            seen.add(key)
            out.append(FiniteMonoid(key, 0, f"M{order}.{len(out)}"))
    return out


def enumerate_msets(m: FiniteMonoid, size: int) -> list[tuple]:
    """Left actions of m on {0..size-1} as tuples act[u][a], up to isomorphism."""
    n = m.order
    maps = list(product(range(size), repeat=size))
    ident = tuple(range(size))
    seen, out = set(), []
    rest = [u for u in range(n) if u != m.identity]
    for choice in product(maps, repeat=len(rest)):
        act = [None] * n
        act[m.identity] = ident
        for u, f in zip(rest, choice):
            act[u] = f
        ok = all(act[u][act[v][a]] == act[m.mul(u, v)][a]
                 for u in range(n) for v in range(n) for a in range(size))
        if not ok:
            continue
        act = tuple(act)
        key = min(tuple(tuple(p.index(f[p[a]]) for a in range(size)) for f in act)
                  for p in permutations(range(size)))
        if key not in seen:
            seen.add(key)
            out.append(key)
    return out


def regular_mset(m: FiniteMonoid) -> tuple:
    return tuple(tuple(m.mul(u, a) for a in range(m.order)) for u in range(m.order))


def probe_msets(m: FiniteMonoid, max_set: int) -> list[tuple]:
    probes = [a for k in range(1, max_set + 1) for a in enumerate_msets(m, k)]
    reg = regular_mset(m)
    if len(reg[0]) > max_set:
        probes.append(reg)
    return probes


@dataclass
class TheoryVerdict:
    hopf: bool
    probes: int
    witness: tuple | None = None

    def __str__(self):
        return "hopf" if self.hopf else f"not hopf (witness {self.witness})"


def psi_collision(m: FiniteMonoid, act: tuple):
    """Psi_A(u, a) = (u, u.a) on m x A; returns a colliding pair or None."""
    for u in range(m.order):
        img = {}
        for a in range(len(act[u])):
            b = act[u][a]
            if b in img:
                return ((u, img[b]), (u, a))
            img[b] = a
    return None


def theory_fusion_check(m: FiniteMonoid, max_set: int = 3) -> TheoryVerdict:
    check_monoid(m)
    if max_set < 1:
        raise ValueError("max_set must be at least 1")
    probes = probe_msets(m, max_set)
    for act in probes:
        c = psi_collision(m, act)
        if c is not None:
            v = TheoryVerdict(False, len(probes), (act, c))
            break
    else:
        v = TheoryVerdict(True, len(probes))
    if v.hopf != is_group(m):
        raise InternalInconsistency(f"fusion verdict {v.hopf} disagrees with the group test on {m.table}")
    return v


@dataclass
class PseudoConstantScan:
    elements: list
    per_probe: list

    def __bool__(self):
        return bool(self.elements)


def pseudo_constant_scan(m: FiniteMonoid, max_set: int = 3) -> PseudoConstantScan:
    check_monoid(m)
    probes = probe_msets(m, max_set)
    per = []
    for act in probes:
        per.append((act, [u for u in range(m.order) if len(set(act[u])) <= 1]))
    agg = [u for u in range(m.order) if all(u in consts for _, consts in per)]
    if agg and theory_fusion_check(m, max_set).hopf:
        raise InternalInconsistency("pseudo-constants found on a Hopf theory")
    return PseudoConstantScan(agg, per)
