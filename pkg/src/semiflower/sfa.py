"""Semi-flower automata: validation, construction from generators, cycle inventory."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .automaton import Automaton, check_alphabet, is_deterministic
from .errors import (
    BudgetExceeded,
    CycleAvoidsRoot,
    InvalidAutomaton,
    NotDeterministic,
    NotMonoidal,
    NotTrim,
    UnknownLetter,
)

DEFAULT_CAP = 1_000_000


@dataclass(frozen=True)
class GeneratorSet:
    """A finite set of nonempty words over ``alphabet``."""

    alphabet: str
    words: frozenset

    def __post_init__(self):
        check_alphabet(self.alphabet)
        words = frozenset(self.words)
        letters = set(self.alphabet)
        for w in words:
            if w == "":
                raise InvalidAutomaton("the empty word cannot be a generator")
            for ch in w:
                if ch not in letters:
                    raise UnknownLetter(ch)
        object.__setattr__(self, "words", words)

    @classmethod
    def of(cls, alphabet: str, words: Iterable[str]) -> "GeneratorSet":
        return cls(alphabet, frozenset(words))

    @property
    def sorted_words(self) -> tuple:
        return tuple(sorted(self.words, key=lambda w: (len(w), w)))

    def __len__(self):
        return len(self.words)


def is_prefix_set(x: GeneratorSet) -> bool:
    # in lexicographic order a proper prefix sorts immediately before some extension
    words = sorted(x.words)
    return not any(v.startswith(u) for u, v in zip(words, words[1:]))


@dataclass(frozen=True)
class Sfa:
    """A validated semi-flower automaton. Build through :func:`validate_semi_flower`."""

    automaton: Automaton
    q0: int
    deterministic: bool

    @property
    def alphabet(self) -> str:
        return self.automaton.alphabet

    @property
    def n_states(self) -> int:
        return self.automaton.n_states

    @property
    def n_transitions(self) -> int:
        return len(self.automaton.transitions)

    @cached_property
    def bpis(self) -> frozenset:
        a = self.automaton
        return frozenset(q for q in a.states if a.indegree(q) >= 2)


def validate_semi_flower(a: Automaton) -> Sfa:
    if not a.is_trim():
        bad = sorted(set(a.states) - (a.accessible & a.coaccessible))
        raise NotTrim(f"states {bad} are not both accessible and coaccessible")
    if len(a.initial) != 1 or a.initial != a.final:
        raise NotMonoidal(
            f"need a single initial state equal to a single final state, "
            f"got initial={sorted(a.initial)} final={sorted(a.final)}"
        )
    (q0,) = a.initial
    witness = _cycle_avoiding(a, q0)
    if witness is not None:
        raise CycleAvoidsRoot(witness)
    return Sfa(a, q0, is_deterministic(a))


def _cycle_avoiding(a: Automaton, root: int):
    """Return a cycle of ``a`` that misses ``root``, or None."""
    WHITE, GREY, BLACK = 0, 1, 2
    color = [WHITE] * a.n_states
    color[root] = BLACK
    for start in a.states:
        if color[start] != WHITE:
            continue
        color[start] = GREY
        path = [start]
        stack = [iter(a.out_arcs[start])]
        while stack:
            for _, q in stack[-1]:
                if color[q] == GREY:
                    return path[path.index(q):] + [q]
                if color[q] == WHITE:
                    color[q] = GREY
                    path.append(q)
                    stack.append(iter(a.out_arcs[q]))
                    break
            else:
                color[path.pop()] = BLACK
                stack.pop()
    return None


def build_sfa(x: GeneratorSet) -> Sfa:
    """SFA accepting ``X*``.

    Prefix sets get the trie of ``X`` with every word end folded onto the
    root, which is deterministic. Other sets get the flower automaton: one
    private loop through the root per generator.
    """
    words = x.sorted_words
    transitions = set()
    if is_prefix_set(x):
        children = [{}]
        for w in words:
            node = 0
            for ch in w[:-1]:
                nxt = children[node].get(ch)
                if nxt is None:
                    nxt = len(children)
                    children.append({})
                    children[node][ch] = nxt
                    transitions.add((node, ch, nxt))
                node = nxt
            transitions.add((node, w[-1], 0))
        n_states = len(children)
    else:
        n_states = 1
        for w in words:
            node = 0
            for ch in w[:-1]:
                transitions.add((node, ch, n_states))
                node = n_states
                n_states += 1
            transitions.add((node, w[-1], 0))
    return validate_semi_flower(Automaton(x.alphabet, n_states, {0}, {0}, transitions))


@dataclass(frozen=True)
class Cycle:
    states: tuple  # q0, s1, ..., q0
    label: str


@dataclass(frozen=True)
class CycleInventory:
    cycles: tuple
    labels: frozenset

    def __len__(self):
        return len(self.cycles)


def count_root_cycles(s: Sfa) -> int:
    """Number of simple cycles through q0, computed without listing them."""
    a, q0 = s.automaton, s.q0
    ways = _paths_home(a, q0)
    return sum(1 if q == q0 else ways[q] for _, q in a.out_arcs[q0])


def _paths_home(a: Automaton, q0: int) -> dict:
    # ways[v]: paths v -> q0 whose states before q0 avoid q0 (distinct: off-root graph is a DAG)
    ways = {}
    for v in _postorder(a, q0):
        ways[v] = sum(1 if q == q0 else ways[q] for _, q in a.out_arcs[v])
    return ways


def _postorder(a: Automaton, q0: int) -> list:
    order, seen = [], {q0}
    for start in a.states:
        if start in seen:
            continue
        seen.add(start)
        stack = [(start, iter(a.out_arcs[start]))]
        while stack:
            v, it = stack[-1]
            for _, q in it:
                if q not in seen:
                    seen.add(q)
                    stack.append((q, iter(a.out_arcs[q])))
                    break
            else:
                order.append(v)
                stack.pop()
    return order


def simple_cycles(s: Sfa, cap: int = DEFAULT_CAP) -> CycleInventory:
    """All simple cycles through q0, sorted by label then state sequence.

    Raises BudgetExceeded when there are more than ``cap`` of them; the
    count is known before any cycle is listed.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    if count_root_cycles(s) > cap:
        raise BudgetExceeded(cap)
    a, q0 = s.automaton, s.q0
    found = []

    def walk(v, states, letters):
        for ch, q in a.out_arcs[v]:
            if q == q0:
                found.append(Cycle(tuple(states) + (q0,), "".join(letters) + ch))
            else:
                states.append(q)
                letters.append(ch)
                walk(q, states, letters)
                states.pop()
                letters.pop()

    walk(q0, [q0], [])
    found.sort(key=lambda c: (c.label, c.states))
    return CycleInventory(tuple(found), frozenset(c.label for c in found))


def minimal_generators(s: Sfa, cap: int = DEFAULT_CAP) -> frozenset:
    """The minimal generating set of ``L(s)`` for a deterministic SFA."""
    if not s.deterministic:
        raise NotDeterministic("minimal generators are only read off deterministic SFA; use the rank bound")
    return simple_cycles(s, cap).labels
