"""Finite automata over a letter alphabet, with the product and trim constructions.

An :class:`Automaton` is the quadruple ``(Q, I, T, F)``: states are the dense
ids ``0 .. n_states - 1``, ``initial`` and ``final`` are sets of ids and
``transitions`` is a set of ``(source, letter, target)`` triples. Words are
plain ``str`` values, letters are one-character strings, and the empty
word is ``""``.

Degrees count transition triples, so two parallel arcs with different
letters contribute two to the indegree of their target.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

from .errors import AlphabetMismatch, InvalidAutomaton

Transition = tuple[int, str, int]


def check_alphabet(alphabet: str) -> str:
    if not isinstance(alphabet, str):
        raise InvalidAutomaton(f"alphabet must be a string of letters, got {alphabet!r}")
    if len(set(alphabet)) != len(alphabet):
        raise InvalidAutomaton(f"duplicate letters in alphabet {alphabet!r}")
    for ch in alphabet:
        if not ch.isprintable() or ch.isspace() or ch == "#":
            raise InvalidAutomaton(f"letter {ch!r} is not a printable non-space character")
    return alphabet


@dataclass(frozen=True)
class Automaton:
    alphabet: str
    n_states: int
    initial: frozenset
    final: frozenset
    transitions: frozenset
    # factor coordinates of product states; ignored by equality
    pairs: Optional[tuple] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        check_alphabet(self.alphabet)
        object.__setattr__(self, "initial", frozenset(self.initial))
        object.__setattr__(self, "final", frozenset(self.final))
        object.__setattr__(self, "transitions", frozenset(tuple(t) for t in self.transitions))
        if self.n_states < 0:
            raise InvalidAutomaton("negative state count")
        for q in self.initial | self.final:
            if not 0 <= q < self.n_states:
                raise InvalidAutomaton(f"state {q} out of range 0..{self.n_states - 1}")
        letters = set(self.alphabet)
        for p, a, q in self.transitions:
            if not (0 <= p < self.n_states and 0 <= q < self.n_states):
                raise InvalidAutomaton(f"transition ({p}, {a!r}, {q}) uses an unknown state")
            if a not in letters:
                raise InvalidAutomaton(f"transition ({p}, {a!r}, {q}) uses a letter outside {self.alphabet!r}")
        if self.pairs is not None and len(self.pairs) != self.n_states:
            raise InvalidAutomaton("pair map length differs from the state count")

    @property
    def states(self) -> range:
        return range(self.n_states)

    @cached_property
    def sorted_transitions(self) -> tuple:
        return tuple(sorted(self.transitions))

    @cached_property
    def out_arcs(self) -> tuple:
        """``out_arcs[p]`` is the sorted tuple of ``(letter, target)`` leaving ``p``."""
        arcs = [[] for _ in self.states]
        for p, a, q in self.sorted_transitions:
            arcs[p].append((a, q))
        return tuple(tuple(lst) for lst in arcs)

    @cached_property
    def in_arcs(self) -> tuple:
        """``in_arcs[q]`` is the sorted tuple of ``(source, letter)`` entering ``q``."""
        arcs = [[] for _ in self.states]
        for p, a, q in self.sorted_transitions:
            arcs[q].append((p, a))
        return tuple(tuple(lst) for lst in arcs)

    def indegree(self, q: int) -> int:
        return len(self.in_arcs[q])

    def outdegree(self, q: int) -> int:
        return len(self.out_arcs[q])

    def successors(self, p: int, letter: str) -> list:
        return [q for a, q in self.out_arcs[p] if a == letter]

    @cached_property
    def accessible(self) -> frozenset:
        return _reach(self.initial, lambda p: (q for _, q in self.out_arcs[p]))

    @cached_property
    def coaccessible(self) -> frozenset:
        return _reach(self.final, lambda q: (p for p, _ in self.in_arcs[q]))

    def is_trim(self) -> bool:
        return len(self.accessible & self.coaccessible) == self.n_states


def _reach(start: Iterable[int], step) -> frozenset:
    seen = set(start)
    todo = deque(seen)
    while todo:
        for q in step(todo.popleft()):
            if q not in seen:
                seen.add(q)
                todo.append(q)
    return frozenset(seen)


def product(a1: Automaton, a2: Automaton) -> Automaton:
    """Synchronised product accepting ``L(a1) & L(a2)``.

    State ``(p, p')`` gets id ``p * a2.n_states + p'``; ``result.pairs``
    recovers the coordinates.
    """
    if a1.alphabet != a2.alphabet:
        raise AlphabetMismatch(f"alphabets differ: {a1.alphabet!r} vs {a2.alphabet!r}")
    n2 = a2.n_states

    def enc(p, q):
        return p * n2 + q

    transitions = set()
    for p, a, q in a1.transitions:
        for p2, b, q2 in a2.transitions:
            if a == b:
                transitions.add((enc(p, p2), a, enc(q, q2)))
    return Automaton(
        a1.alphabet,
        a1.n_states * n2,
        {enc(p, q) for p in a1.initial for q in a2.initial},
        {enc(p, q) for p in a1.final for q in a2.final},
        transitions,
        pairs=tuple((p, q) for p in a1.states for q in a2.states),
    )


def trim(a: Automaton) -> Automaton:
    """Restrict to states that are both accessible and coaccessible.

    Surviving states keep their relative order and are renumbered densely.
    """
    keep = sorted(a.accessible & a.coaccessible)
    new_id = {q: i for i, q in enumerate(keep)}
    return Automaton(
        a.alphabet,
        len(keep),
        {new_id[q] for q in a.initial if q in new_id},
        {new_id[q] for q in a.final if q in new_id},
        {(new_id[p], x, new_id[q]) for p, x, q in a.transitions if p in new_id and q in new_id},
        pairs=None if a.pairs is None else tuple(a.pairs[q] for q in keep),
    )


def is_deterministic(a: Automaton) -> bool:
    if len(a.initial) != 1:
        return False
    for arcs in a.out_arcs:
        letters = [x for x, _ in arcs]
        if len(letters) != len(set(letters)):
            return False
    return True


def accepts(a: Automaton, word: str) -> bool:
    current = set(a.initial)
    for letter in word:
        if not current:
            return False
        current = {q for p in current for q in a.successors(p, letter)}
    return bool(current & a.final)


def bpi_set(a: Automaton) -> frozenset:
    """States with at least two incoming transitions."""
    return frozenset(q for q in a.states if a.indegree(q) >= 2)


@dataclass(frozen=True)
class BpoHistogram:
    """``counts[i]`` is the number of states with outdegree exactly ``i``."""

    counts: tuple

    def __getitem__(self, i: int) -> int:
        return self.counts[i] if 0 <= i < len(self.counts) else 0

    @property
    def n_states(self) -> int:
        return sum(self.counts)

    @property
    def n_transitions(self) -> int:
        return sum(i * c for i, c in enumerate(self.counts))


def bpo_histogram(a: Automaton) -> BpoHistogram:
    """Outdegree histogram indexed ``0 .. len(alphabet)``.

    Nondeterministic automata may exceed the alphabet size; the vector is
    then extended to the largest outdegree present.
    """
    size = len(a.alphabet)
    if a.n_states:
        size = max(size, max(a.outdegree(q) for q in a.states))
    counts = [0] * (size + 1)
    for q in a.states:
        counts[a.outdegree(q)] += 1
    return BpoHistogram(tuple(counts))
