import itertools

import pytest

from semiflower import build_sfa, is_prefix_set
from semiflower.oracles import (
    InstanceSpec,
    brute_minimal_generators,
    count_simple_cycles,
    count_simple_paths,
    exhaustive_sets,
    generate_instances,
    in_star,
)

from conftest import gens


@pytest.mark.parametrize("words, max_len, expected", [
    (("a", "ba"), None, {"a", "ba"}),
    (("a", "ab"), 3, {"a", "ab"}),
    (("aa", "aaa"), 6, {"aa", "aaa"}),
    (("a", "aa"), None, {"a"}),
])
def test_brute_minimal_generators(words, max_len, expected):
    assert brute_minimal_generators(gens(*words), max_len) == expected


def test_in_star():
    assert in_star("", [])
    assert in_star("aba", ["a", "ba"])
    assert not in_star("ab", ["a", "ba"])


def test_path_and_cycle_counts():
    arcs = [(0, 1), (0, 1), (1, 0), (1, 2), (2, 0)]
    assert count_simple_paths(arcs, 0, 0) == 1
    assert count_simple_paths(arcs, 0, 2) == 2
    assert count_simple_cycles(arcs, [0, 1, 2]) == 4


def test_exhaustive_first_pair_is_smallest():
    spec = InstanceSpec(mode="exhaustive")
    xh, xk = next(generate_instances(spec))
    assert xh.words == xk.words == {"a"}


def test_exhaustive_sets_are_prefix_and_distinct():
    sets = exhaustive_sets(InstanceSpec(mode="exhaustive"))
    keys = [x.words for x in sets]
    assert len(set(keys)) == len(keys)
    assert all(is_prefix_set(x) for x in sets)
    # every prefix set of <= 3 nonempty words of length <= 3 over {a, b}
    pool = ["".join(w) for n in (1, 2, 3) for w in itertools.product("ab", repeat=n)]
    expected = sum(
        1 for k in (1, 2, 3) for combo in itertools.combinations(pool, k)
        if is_prefix_set(gens(*combo))
    )
    assert len(sets) == expected


def test_random_stream_is_reproducible():
    spec = InstanceSpec(alphabet_size=3, max_words=4, max_length=4, seed=7, count=50)
    first = [(a.words, b.words) for a, b in generate_instances(spec)]
    second = [(a.words, b.words) for a, b in generate_instances(spec)]
    assert first == second and len(first) == 50
    other = [(a.words, b.words) for a, b in generate_instances(InstanceSpec(
        alphabet_size=3, max_words=4, max_length=4, seed=8, count=50))]
    assert other != first


def test_random_stream_respects_bounds():
    spec = InstanceSpec(alphabet_size=3, max_words=6, max_length=5, seed=1, count=500)
    for xh, xk in generate_instances(spec):
        assert xh.alphabet == xk.alphabet
        for x in (xh, xk):
            assert 1 <= len(x) <= 6
            assert all(1 <= len(w) <= 5 for w in x.words)
            assert is_prefix_set(x) and build_sfa(x).deterministic


def test_spec_validation():
    with pytest.raises(ValueError):
        InstanceSpec(mode="bogus")
    with pytest.raises(ValueError):
        InstanceSpec(alphabet_size=0)
