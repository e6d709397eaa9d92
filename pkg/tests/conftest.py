import random

import pytest

from semiflower import GeneratorSet, build_sfa
from semiflower.oracles import InstanceSpec, exhaustive_sets, random_generator_set


def gens(*words, alphabet="ab"):
    return GeneratorSet(alphabet, frozenset(words))


def random_prefix_corpus(n=500, seed=20240601):
    """Random prefix sets: alphabet <= 3, <= 6 words, length <= 5."""
    rng = random.Random(seed)
    corpus = []
    while len(corpus) < n:
        alphabet = "abc"[: rng.randint(1, 3)]
        corpus.append(random_generator_set(rng, alphabet, 6, 5, prefix_only=True))
    return corpus


@pytest.fixture(scope="session")
def prefix_corpus():
    return random_prefix_corpus()


@pytest.fixture(scope="session")
def prefix_sfas(prefix_corpus):
    return [build_sfa(x) for x in prefix_corpus]


@pytest.fixture(scope="session")
def small_prefix_sets():
    return exhaustive_sets(InstanceSpec(alphabet_size=2, max_words=3, max_length=3, mode="exhaustive"))


def random_product_sfas(n=300, seed=99, deterministic=True):
    """Trimmed products of random generator pairs that are SFAs with at least one bpi."""
    from semiflower import SemiflowerError, product, trim, validate_semi_flower
    from semiflower.oracles import generate_instances

    spec = InstanceSpec(alphabet_size=2, max_words=5, max_length=3, seed=seed,
                        prefix_only=deterministic)
    found = []
    for xh, xk in generate_instances(spec):
        p = trim(product(build_sfa(xh).automaton, build_sfa(xk).automaton))
        try:
            s = validate_semi_flower(p)
        except SemiflowerError:
            continue
        if s.bpis:
            found.append(s)
        if len(found) == n:
            return found


@pytest.fixture(scope="session")
def product_sfas():
    return random_product_sfas()


def random_sfas(n=300, seed=5, deterministic=True, alphabet="abc"):
    from semiflower import validate_semi_flower
    from semiflower.oracles import random_sfa_automaton

    rng = random.Random(seed)
    return [validate_semi_flower(random_sfa_automaton(rng, alphabet, deterministic=deterministic))
            for _ in range(n)]


@pytest.fixture(scope="session")
def det_sfas():
    """Deterministic SFAs with several bpis, random DAG construction."""
    return random_sfas()


@pytest.fixture(scope="session")
def nondet_sfas():
    return random_sfas(seed=6, deterministic=False, alphabet="ab")


# one summary line per acceptance criterion, filled in by tests/test_acceptance.py
ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
