import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from semiflower import (
    Automaton,
    BpiCountMismatch,
    KappaProfile,
    NotDeterministic,
    TopologicalOrder,
    bpo_product_bound,
    build_bpr,
    build_sfa,
    correction_term,
    edge_identity,
    is_valid_order,
    kappa_profile,
    lemma_edge_rank,
    rank,
    rank_from_kappa,
    rank_via_bpo,
    sequence_inequality,
    single_bpi_rank,
    validate_semi_flower,
)
from semiflower.gallery import four_bpi_sfa
from semiflower.oracles import brute_cycle_rank, brute_minimal_generators, random_automaton

from conftest import gens

FOUR_BPI_PROFILE = KappaProfile.from_counts((1, 1, 2, 3), {(1, 0): 1, (2, 0): 1, (2, 1): 2, (3, 0): 1})


def loops(*letters):
    return validate_semi_flower(Automaton("ab", 1, {0}, {0}, {(0, x, 0) for x in letters}))


def test_rank_from_four_bpi_profile():
    r = rank_from_kappa(FOUR_BPI_PROFILE)
    assert r.rank_value == 11
    assert r.breakdown == (1, 1, 6, 3)


def test_rank_single_bpi_profile():
    p = KappaProfile.from_counts((5,), [[5]])
    assert rank_from_kappa(p).rank_value == 5


def test_rank_small_cases():
    r = rank(build_sfa(gens("a", "ba")))
    assert (r.rank_value, r.exact) == (2, True)
    assert rank(loops()).rank_value == 0
    assert rank(build_sfa(gens("aba"))).rank_value == 1
    r = rank(build_sfa(gens("aa", "ab", "b")))
    assert (r.rank_value, r.exact) == (3, True)
    assert rank(build_sfa(gens("a", "ab"))).exact is False


def test_rank_of_four_bpi_sfa():
    r = rank(four_bpi_sfa())
    assert r.rank_value == 11 and r.exact and r.m == 4


def test_edge_identity_examples():
    e = edge_identity(build_sfa(gens("a", "ba")))
    assert (e.lhs, e.rhs, e.holds) == (1, 1, True)
    e = edge_identity(loops("a", "b"))
    assert (e.lhs, e.rhs, e.holds) == (1, 1, True)
    with pytest.raises(NotDeterministic):
        edge_identity(build_sfa(gens("a", "ab")))


def test_edge_identity_needs_a_transition():
    # the bare root has outdegree 0, which the identity's sum over i >= 2 does not see
    e = edge_identity(loops())
    assert (e.lhs, e.rhs, e.holds) == (-1, 0, False)


@pytest.mark.parametrize("s, kappa1", [
    (build_sfa(gens("a", "ba")), 2),
    (build_sfa(gens("aa", "ab")), 2),
    (loops("a", "b"), 2),
])
def test_single_bpi_rank(s, kappa1):
    r = single_bpi_rank(s)
    assert r.profile.kappa == (kappa1,)
    assert kappa1 == s.n_transitions - s.n_states + 1 == r.rank_value


def test_single_bpi_rank_mismatch():
    with pytest.raises(BpiCountMismatch):
        single_bpi_rank(four_bpi_sfa())


def test_correction_term_examples():
    assert correction_term(FOUR_BPI_PROFILE) == 2
    assert correction_term(KappaProfile.from_counts((4,), [[4]])) == 0
    flat = KappaProfile.from_counts((1, 1, 1), {(1, 0): 1, (2, 0): 1})
    assert correction_term(flat) == 0


def test_lemma_edge_rank_examples():
    c = lemma_edge_rank(build_sfa(gens("a", "ba")))
    assert (c.lhs, c.rhs, c.equality) == (2, 2, True)
    c = lemma_edge_rank(build_sfa(gens("a", "ab")))
    assert c.holds and (c.lhs, c.rhs) == (2, 2)
    c = lemma_edge_rank(four_bpi_sfa())
    assert (c.lhs, c.rhs, c.equality) == (9, 9, True)


def test_rank_via_bpo_examples():
    assert rank_via_bpo(build_sfa(gens("a", "ba"))) == 2
    assert rank_via_bpo(build_sfa(gens("aa", "ab", "b"))) == 3
    assert rank_via_bpo(four_bpi_sfa()) == 11
    with pytest.raises(NotDeterministic):
        rank_via_bpo(build_sfa(gens("a", "ab")))


def test_deterministic_identities(det_sfas, prefix_sfas):
    for s in list(det_sfas) + list(prefix_sfas):
        assert edge_identity(s).holds
        if s.bpis:
            assert lemma_edge_rank(s).equality
            assert rank_via_bpo(s) == rank(s).rank_value


def test_lemma_holds_for_nondeterministic(nondet_sfas):
    for s in nondet_sfas:
        if s.bpis:
            assert lemma_edge_rank(s).holds


def test_deterministic_exactness(det_sfas):
    for s in det_sfas:
        r = rank(s)
        brute = brute_cycle_rank(s)
        assert r.exact
        assert r.rank_value == brute["cycle_count"] == brute["label_count"]


def test_nondeterministic_bound_covers_minimal_generators():
    rng = random.Random(17)
    from semiflower.oracles import random_generator_set
    checked = 0
    while checked < 150:
        x = random_generator_set(rng, "ab", 4, 4, prefix_only=False)
        s = build_sfa(x)
        if s.deterministic:
            continue
        assert len(brute_minimal_generators(x)) <= rank(s).rank_value
        checked += 1


def test_rank_independent_of_order(det_sfas, nondet_sfas):
    for s in list(det_sfas[:80]) + list(nondet_sfas[:80]):
        b = build_bpr(s)
        if not s.bpis or len(b.bpis) > 6:
            continue
        expected = rank(s).rank_value
        root = b.root_is_bpi
        for order in itertools.permutations(b.bpis):
            if is_valid_order(b, order):
                p = kappa_profile(b, TopologicalOrder(order, root))
                assert rank_from_kappa(p).rank_value == expected


def test_sequence_inequality_example():
    c = sequence_inequality((0, 2), (0, 3))
    assert (c.lhs, c.rhs, c.holds) == (6, 6, True)
    c = sequence_inequality((0, 0, 0), (0, 0, 0))
    assert (c.lhs, c.rhs, c.holds) == (0, 0, True)
    with pytest.raises(ValueError):
        sequence_inequality((1,), (1, 2))


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(
    st.lists(st.integers(0, 9), min_size=n, max_size=n),
    st.lists(st.integers(0, 9), min_size=n, max_size=n))))
def test_sequence_inequality_property(cd):
    assert sequence_inequality(*cd).holds


def test_bpo_product_bound_example():
    h = build_sfa(gens("a", "ba")).automaton
    k = build_sfa(gens("ab", "b")).automaton
    c = bpo_product_bound(h, k, 2)
    assert (c.lhs, c.rhs, c.holds) == (1, 1, True)
    with pytest.raises(ValueError):
        bpo_product_bound(h, k, 3)
    with pytest.raises(NotDeterministic):
        bpo_product_bound(h, build_sfa(gens("a", "ab")).automaton, 1)


def test_bpo_product_bound_random():
    rng = random.Random(23)
    for _ in range(300):
        a1 = random_automaton(rng, "abc", deterministic=True)
        a2 = random_automaton(rng, "abc", deterministic=True)
        for t in (1, 2, 3):
            assert bpo_product_bound(a1, a2, t).holds
