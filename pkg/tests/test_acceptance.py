"""The ten acceptance criteria, each timed against its runtime limit.

Every test records a PASS or FAIL line that is printed in the pytest
terminal summary under "acceptance criteria".
"""

import itertools
import random
import time
from contextlib import contextmanager

from semiflower import (
    Classification,
    KappaProfile,
    analyze,
    bpo_product_bound,
    build_bpr,
    build_sfa,
    edge_identity,
    first_bpi_facts,
    is_valid_order,
    kappa_profile,
    lemma_edge_rank,
    rank,
    rank_from_kappa,
    rank_via_bpo,
    sequence_inequality,
    topological_order,
    validate_semi_flower,
)
from semiflower.gallery import P1, P2, P3, P4, four_bpi_bpr
from semiflower.oracles import (
    InstanceSpec,
    brute_cycle_rank,
    count_simple_cycles,
    count_simple_paths,
    generate_instances,
    random_sfa_automaton,
)

from conftest import ACCEPTANCE_LINES, gens, random_prefix_corpus, random_sfas


@contextmanager
def criterion(number, title, limit=None):
    start = time.perf_counter()
    failure = None
    try:
        yield
    except BaseException as exc:
        failure = exc
    elapsed = time.perf_counter() - start
    if failure is None and limit is not None and elapsed >= limit:
        failure = AssertionError(f"took {elapsed:.2f}s, limit {limit}s")
    status = "PASS" if failure is None else "FAIL"
    limit_text = f" (limit {limit:g}s)" if limit else ""
    line = f"[{status}] criterion {number:>2}: {title}: {elapsed:.2f}s{limit_text}"
    if failure is not None:
        line += f": {type(failure).__name__}: {failure}"
    ACCEPTANCE_LINES[number] = line
    print(line)
    if failure is not None:
        raise failure


_cache = {}


def corpus():
    """Criterion 3's corpus; built on first use so its cost lands inside a timed block."""
    if "corpus" not in _cache:
        xs = random_prefix_corpus(n=500)
        _cache["corpus"] = xs, [build_sfa(x) for x in xs]
    return _cache["corpus"]


def exhaustive_sweep():
    if "sweep" not in _cache:
        spec = InstanceSpec(alphabet_size=2, max_words=3, max_length=3, mode="exhaustive")
        _cache["sweep"] = [analyze(xh, xk) for xh, xk in generate_instances(spec)]
    return _cache["sweep"]


def test_c01_rank_of_worked_profile():
    with criterion(1, "rank 11 from the four-bpi kappa counts", 1.0):
        p = KappaProfile.from_counts((1, 1, 2, 3), {(1, 0): 1, (2, 0): 1, (2, 1): 2, (3, 0): 1})
        assert p.kappa_bar == (1, 1, 3, 1)
        assert rank_from_kappa(p).rank_value == 11
        b = four_bpi_bpr()
        q = kappa_profile(b, topological_order(b))
        assert (q.kappa, q.kappa_bar) == ((1, 1, 2, 3), (1, 1, 3, 1))
        assert rank_from_kappa(q).rank_value == 11


def test_c02_topological_orders():
    with criterion(2, "order p2 p4 p3 p1 and exactly three valid orders", 1.0):
        b = four_bpi_bpr()
        assert topological_order(b).nodes == (P2, P4, P3, P1)
        expected = {(P2, P1, P4, P3), (P2, P4, P1, P3), (P2, P4, P3, P1)}
        valid = {o for o in itertools.permutations((P1, P2, P3, P4)) if is_valid_order(b, o)}
        assert valid == expected


def test_c03_round_trip_rank():
    with criterion(3, "rank(build_sfa(X)) = |X| = brute cycle count on 500 prefix sets", 30.0):
        xs, sfas = corpus()
        assert len(xs) >= 500
        bad = [x for x, s in zip(xs, sfas)
               if not (rank(s).rank_value == len(x) == brute_cycle_rank(s)["cycle_count"])]
        assert not bad, bad[:3]


def test_c04_deterministic_identities():
    with criterion(4, "edge identity, lemma equality, rank via outdegrees"):
        _, sfas = corpus()
        failures = 0
        for s in sfas:
            assert s.deterministic
            failures += not edge_identity(s).holds
        # the lemma and the outdegree formula are stated for m >= 1
        branching = [s for s in sfas if s.bpis]
        assert len(branching) >= 200
        # prefix-built SFAs only branch at the root, so add multi-bpi ones as well
        extra = random_sfas(n=300, seed=404)
        assert all(s.deterministic for s in extra)
        assert sum(len(s.bpis) >= 3 for s in extra) >= 100
        for s in branching + extra:
            failures += not edge_identity(s).holds
            failures += not lemma_edge_rank(s).equality
            failures += rank_via_bpo(s) != rank(s).rank_value
        assert failures == 0


def test_c05_inequality_sweeps():
    with criterion(5, "1000 sequence pairs and 300 automaton pairs"):
        rng = random.Random(2024)
        for _ in range(1000):
            n = rng.randint(1, 6)
            c = [rng.randint(0, 9) for _ in range(n)]
            d = [rng.randint(0, 9) for _ in range(n)]
            assert sequence_inequality(c, d).holds, (c, d)
        for _ in range(300):
            a1 = validate_semi_flower(random_sfa_automaton(rng, "abc")).automaton
            a2 = validate_semi_flower(random_sfa_automaton(rng, "abc")).automaton
            for t in range(1, len(a1.alphabet) + 1):
                assert bpo_product_bound(a1, a2, t).holds


def test_c06_generalised_bound():
    with criterion(6, "reduced intersection rank within the bound, exhaustive sweep", 300.0):
        reports = exhaustive_sweep()
        applicable = [r for r in reports if r.classification.applicable]
        assert applicable
        bad = [r for r in applicable if r.reduced_intersection > r.ghn_bound]
        assert not bad, bad[:3]


def test_c07_sufficient_condition():
    with criterion(7, "sufficient condition implies the inequality"):
        reports = exhaustive_sweep()
        flagged = [r for r in reports if r.sufficient_condition]
        assert flagged
        assert all(r.hnp_holds for r in flagged)
        # the correction terms vanish: no arcs among later bpis, one arc from each to the first
        for r in flagged:
            kk = r.profile.kappa_matrix
            assert r.correction_term == 0
            assert all(kk[i][0] == 1 and not any(kk[i][1:i]) for i in range(1, r.profile.m))


def test_c08_case1():
    with criterion(8, "bpi-free factor gives rank at most 1"):
        reports = exhaustive_sweep()
        case1 = [r for r in reports if r.classification is Classification.CASE1_NO_BPI]
        assert case1
        assert all(r.rank_intersection <= 1 and r.m == 0 for r in case1)
        no_bpi = [r for r in reports if r.rank_h <= 1 or r.rank_k <= 1]
        assert all(r.classification is Classification.CASE1_NO_BPI for r in no_bpi)


def test_c09_worked_fixtures():
    with criterion(9, "three worked intersection fixtures"):
        r = analyze(gens("a", "ba"), gens("ab", "b"))
        assert r.rank_intersection == 0
        r = analyze(gens("ab", "ba"), gens("a", "b"))
        assert r.rank_intersection == 2 and r.hnp_holds is True
        r = analyze(gens("aa", "ab"), gens("a"))
        assert r.classification is Classification.CASE1_NO_BPI and r.rank_intersection == 1


def test_c10_bpr_preservation():
    with criterion(10, "cycle and path counts preserved by the condensation"):
        _, sfas = corpus()
        for s in sfas:
            b = build_bpr(s)
            a = s.automaton
            arcs = [(x.source, x.target) for x in b.arcs]
            sfa_arcs = [(p, q) for p, _, q in a.transitions]
            assert count_simple_cycles(arcs, b.nodes) == count_simple_cycles(sfa_arcs, a.states)
            for p, q in itertools.product(b.nodes, repeat=2):
                assert count_simple_paths(arcs, p, q) == count_simple_paths(sfa_arcs, p, q)
            order = topological_order(b)
            if order.nodes:
                assert first_bpi_facts(s, b, order).ok
