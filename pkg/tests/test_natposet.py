import pytest
from hypothesis import given, settings, strategies as st

from hopfmonad.natposet import (
    NumericalSubmonoid, EventuallyPeriodicSet, ClosureOp, classify_nat_monad, finite_set, cofinite_set, NotAMonad,
    FiniteMonoid, enumerate_monoids, enumerate_msets, theory_fusion_check, pseudo_constant_scan, is_group,
    regular_mset, minimal_generators,
)


def brute_members(gens, top):
    mem = {0}
    for n in range(1, top):
        if any(n >= g and (n - g) in mem for g in gens):
            mem.add(n)
    return mem


@given(st.lists(st.integers(1, 9), min_size=1, max_size=3))
@settings(max_examples=60, deadline=None)
def test_submonoid_membership_matches_brute_force(gens):
    s = NumericalSubmonoid(tuple(gens))
    top = 120
    mem = brute_members(gens, top)
    assert {n for n in range(top) if n in s} == mem


@given(st.lists(st.integers(1, 9), min_size=1, max_size=3))
@settings(max_examples=60, deadline=None)
def test_hopf_iff_fusion_identity_holds(gens):
    s = NumericalSubmonoid(tuple(gens))
    v = classify_nat_monad(s, bound=40)
    assert v.monad and v.bimonad
    t = ClosureOp(s.as_set())
    fusion = all(t(t(n) + m) == t(n) + t(m) for n in range(30) for m in range(30))
    assert v.hopf == fusion
    assert v.hopf == (len(minimal_generators(s.as_set())) == 1)


def test_two_three_is_bimonad_not_hopf():
    v = classify_nat_monad(NumericalSubmonoid((2, 3)))
    assert v.summary() == "bimonad, not Hopf"
    assert v.generators == (2, 3)
    # T(T(1) + 1) = T(3) = 3 but T(1) + T(1) = 4
    assert v.witness == (1, 1)


@pytest.mark.parametrize("g", [1, 2, 5])
def test_single_generator_rounds_up(g):
    v = classify_nat_monad(NumericalSubmonoid((g,)))
    assert v.hopf
    t = ClosureOp(NumericalSubmonoid((g,)).as_set())
    assert [t(n) for n in range(7)] == [-(-n // g) * g for n in range(7)]


def test_non_submonoid_sets():
    assert classify_nat_monad(finite_set({0, 1, 2})).summary() == "not a monad"
    with pytest.raises(NotAMonad):
        ClosureOp(finite_set({0, 1}))(5)
    # {0, 2, 3, 4, ...} minus 5
    v = classify_nat_monad(cofinite_set({1, 5}))
    assert v.monad and not v.bimonad
    assert v.closure_witness is not None
    a, b = v.closure_witness
    assert a + b not in cofinite_set({1, 5})
    odd = EventuallyPeriodicSet(frozenset({1}), 2, 2, frozenset({1}))
    assert not classify_nat_monad(odd).bimonad


def test_monoid_counts_up_to_isomorphism():
    assert [len(enumerate_monoids(n)) for n in (1, 2, 3)] == [1, 2, 7]


def test_mset_counts():
    z2 = FiniteMonoid(((0, 1), (1, 0)))
    # Z/2-sets of size 2 up to iso: trivial, and the swap
    assert len(enumerate_msets(z2, 2)) == 2
    # size 3: trivial, swap + fixed point
    assert len(enumerate_msets(z2, 3)) == 2


@pytest.mark.parametrize("order", [1, 2, 3])
def test_theory_fusion_matches_group_test(order):
    for m in enumerate_monoids(order):
        v = theory_fusion_check(m, max_set=2)
        assert v.hopf == is_group(m)
        if not v.hopf:
            act, ((u, a), (u2, b)) = v.witness
            assert u == u2 and a != b and act[u][a] == act[u][b]


def test_regular_mset_is_always_probed():
    m = FiniteMonoid(((0, 1, 2), (1, 1, 1), (2, 2, 2)))
    assert theory_fusion_check(m, max_set=1).probes == 2
    assert regular_mset(m) == m.table


@pytest.mark.parametrize("order", [1, 2, 3])
def test_pseudo_constants_empty(order):
    for m in enumerate_monoids(order):
        assert not pseudo_constant_scan(m, max_set=2)


def test_malformed_monoid_rejected():
    with pytest.raises(ValueError):
        theory_fusion_check(FiniteMonoid(((0, 1), (0, 0))))
