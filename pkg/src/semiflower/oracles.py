"""Brute-force reference computations and reproducible instance streams.

Nothing here reuses the traversal code of the main modules: cycles and
paths are found by plain depth-first search over arc lists and submonoid
membership is decided by word factorisation. The oracles are meant for
small inputs only.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .automaton import Automaton
from .errors import BudgetExceeded
from .sfa import DEFAULT_CAP, GeneratorSet, Sfa

LETTERS = "abcdefghijklmnopqrstuvwxyz"


def _arc_lists(arcs: Iterable[tuple]) -> dict:
    out = {}
    for arc in arcs:
        out.setdefault(arc[0], []).append(arc)
    return out


def brute_cycle_rank(s: Sfa, cap: int = DEFAULT_CAP) -> dict:
    """Every simple cycle through the root found by unrestricted DFS.

    Returns ``{"cycle_count", "label_count", "labels"}``.
    """
    a, root = s.automaton, s.q0
    out = _arc_lists(a.transitions)
    labels, count = set(), 0
    stack = [(root, "", frozenset([root]))]
    while stack:
        v, word, on_path = stack.pop()
        for _, letter, q in out.get(v, ()):
            if q == root:
                count += 1
                labels.add(word + letter)
                if count > cap:
                    raise BudgetExceeded(cap)
            elif q not in on_path:
                stack.append((q, word + letter, on_path | {q}))
    return {"cycle_count": count, "label_count": len(labels), "labels": frozenset(labels)}


def count_simple_paths(arcs: Iterable[tuple], source, target) -> int:
    """Simple paths ``source -> target`` in a multigraph given as ``(p, ..., q)`` tuples.

    Parallel arcs give distinct paths; ``source == target`` counts the
    null path only.
    """
    if source == target:
        return 1
    out = _arc_lists(arcs)
    total = 0
    stack = [(source, frozenset([source]))]
    while stack:
        v, on_path = stack.pop()
        for arc in out.get(v, ()):
            q = arc[-1]
            if q == target:
                total += 1
            elif q not in on_path:
                stack.append((q, on_path | {q}))
    return total


def count_simple_cycles(arcs: Iterable[tuple], nodes: Iterable) -> int:
    """All simple cycles of a multigraph, each counted once (from its least node)."""
    arcs = list(arcs)
    out = _arc_lists(arcs)
    total = 0
    for start in sorted(set(nodes)):
        stack = [(start, frozenset([start]))]
        while stack:
            v, on_path = stack.pop()
            for arc in out.get(v, ()):
                q = arc[-1]
                if q == start:
                    total += 1
                elif q > start and q not in on_path:
                    stack.append((q, on_path | {q}))
    return total


def in_star(word: str, generators: Iterable[str]) -> bool:
    """Whether ``word`` factors over ``generators`` (the empty word always does)."""
    gens = set(generators)
    ok = [True] + [False] * len(word)
    for end in range(1, len(word) + 1):
        ok[end] = any(ok[end - len(g)] and word[end - len(g):end] == g for g in gens if len(g) <= end)
    return ok[len(word)]


def all_words(alphabet: str, max_len: int) -> Iterator[str]:
    for n in range(max_len + 1):
        for letters in itertools.product(alphabet, repeat=n):
            yield "".join(letters)


def brute_minimal_generators(x: GeneratorSet, max_len: Optional[int] = None) -> frozenset:
    """Minimal generators of ``X*`` among words of length at most ``max_len``.

    Builds ``M = X* & A^{<= max_len}`` length by length and drops every word
    that splits into two nonempty members of ``M``. The default length is
    twice the longest generator; for non-prefix ``X`` the answer is only
    guaranteed up to that length.
    """
    if max_len is None:
        max_len = 2 * max((len(w) for w in x.words), default=0)
    by_length = [set() for _ in range(max_len + 1)]
    by_length[0].add("")
    for n in range(1, max_len + 1):
        for g in x.words:
            if len(g) <= n:
                by_length[n].update(u + g for u in by_length[n - len(g)])
    members = set().union(*by_length)
    minimal = set()
    for w in members:
        if w and not any(w[:i] in members and w[i:] in members for i in range(1, len(w))):
            minimal.add(w)
    return frozenset(minimal)


@dataclass(frozen=True)
class InstanceSpec:
    alphabet_size: int = 2
    max_words: int = 3
    max_length: int = 3
    seed: int = 0
    mode: str = "random"  # or "exhaustive"
    prefix_only: bool = True
    count: Optional[int] = None  # random mode: number of pairs, None for endless

    def __post_init__(self):
        if self.mode not in ("random", "exhaustive"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if not (1 <= self.alphabet_size <= len(LETTERS)):
            raise ValueError("alphabet_size out of range")
        if self.max_words < 1 or self.max_length < 1:
            raise ValueError("max_words and max_length must be positive")

    @property
    def alphabet(self) -> str:
        return LETTERS[: self.alphabet_size]


def _is_prefix_free(words) -> bool:
    words = sorted(words)
    return not any(v.startswith(u) for u, v in zip(words, words[1:]))


def _set_key(words: tuple) -> tuple:
    return (len(set("".join(words))), sum(map(len, words)), words)


def exhaustive_sets(spec: InstanceSpec) -> list:
    """All generator sets within the bounds, smallest first."""
    pool = [w for w in all_words(spec.alphabet, spec.max_length) if w]
    found = []
    for k in range(1, spec.max_words + 1):
        for combo in itertools.combinations(pool, k):
            if spec.prefix_only and not _is_prefix_free(combo):
                continue
            found.append(tuple(sorted(combo)))
    found.sort(key=_set_key)
    return [GeneratorSet(spec.alphabet, frozenset(ws)) for ws in found]


def random_generator_set(rng: random.Random, alphabet: str, max_words: int, max_length: int,
                         prefix_only: bool = True) -> GeneratorSet:
    while True:
        words = set()
        for _ in range(rng.randint(1, max_words)):
            n = rng.randint(1, max_length)
            words.add("".join(rng.choice(alphabet) for _ in range(n)))
        if not prefix_only or _is_prefix_free(words):
            return GeneratorSet(alphabet, frozenset(words))


def generate_instances(spec: InstanceSpec) -> Iterator[tuple]:
    """Pairs ``(H generators, K generators)`` in a reproducible order."""
    if spec.mode == "exhaustive":
        sets = exhaustive_sets(spec)
        keys = [_set_key(tuple(sorted(x.words))) for x in sets]
        pairs = sorted(
            itertools.product(range(len(sets)), repeat=2),
            key=lambda ij: (max(keys[ij[0]][0], keys[ij[1]][0]), keys[ij[0]][1] + keys[ij[1]][1], ij),
        )
        for i, j in pairs:
            yield sets[i], sets[j]
        return
    rng = random.Random(spec.seed)
    produced = 0
    while spec.count is None or produced < spec.count:
        alphabet = spec.alphabet[: rng.randint(1, spec.alphabet_size)]
        yield (
            random_generator_set(rng, alphabet, spec.max_words, spec.max_length, spec.prefix_only),
            random_generator_set(rng, alphabet, spec.max_words, spec.max_length, spec.prefix_only),
        )
        produced += 1


def random_automaton(rng: random.Random, alphabet: str = "ab", max_states: int = 5,
                     density: float = 0.3, deterministic: bool = False) -> Automaton:
    """Small random automaton, optionally with a partial transition function."""
    n = rng.randint(1, max_states)
    transitions = set()
    for p in range(n):
        for a in alphabet:
            if deterministic:
                if rng.random() < 0.6:
                    transitions.add((p, a, rng.randrange(n)))
            else:
                for q in range(n):
                    if rng.random() < density:
                        transitions.add((p, a, q))
    if deterministic:
        initial = {rng.randrange(n)}
    else:
        initial = {q for q in range(n) if rng.random() < 0.4} or {0}
    final = {q for q in range(n) if rng.random() < 0.4}
    return Automaton(alphabet, n, initial, final, transitions)


def random_sfa_automaton(rng: random.Random, alphabet: str = "ab", max_states: int = 8,
                         extra_arcs: int = 6, deterministic: bool = True) -> Automaton:
    """Random trim automaton whose non-root arcs only climb in a hidden rank order.

    The root is state 0; every cycle has to pass through it, so the result
    always validates as a semi-flower automaton.
    """
    n = rng.randint(2, max_states)
    used = {v: set() for v in range(n)}
    arcs = set()

    def add(u, w):
        free = [x for x in alphabet if x not in used[u]] if deterministic else list(alphabet)
        if not free:
            return False
        x = rng.choice(free)
        if (u, x, w) in arcs:
            return False
        arcs.add((u, x, w))
        used[u].add(x)
        return True

    for v in range(1, n):
        sources = list(range(v))
        rng.shuffle(sources)
        if not any(add(u, v) for u in sources):
            raise RuntimeError("alphabet too small to keep every state reachable")
    for v in range(n - 1, 0, -1):
        if not any(u == v for u, _, _ in arcs):
            targets = [0] + list(range(v + 1, n))
            rng.shuffle(targets)
            if not any(add(v, w) for w in targets):
                raise RuntimeError("alphabet too small to keep every state coaccessible")
    for _ in range(extra_arcs):
        u = rng.randrange(n)
        choices = [0] + list(range(u + 1, n)) if u else list(range(n))
        add(u, rng.choice(choices))
    perm = [0] + rng.sample(range(1, n), n - 1)
    return Automaton(alphabet, n, {0}, {0}, {(perm[u], x, perm[w]) for u, x, w in arcs})
