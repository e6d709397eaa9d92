"""Ready-made automata used by the demos and the test suite."""

from __future__ import annotations

from .automaton import Automaton
from .bpr import Bpr
from .sfa import GeneratorSet, Sfa, validate_semi_flower

# Four-bpi SFA. Root 0; bpis P2=1, P4=2, P3=3, P1=4 so that ascending ids
# reproduce the order P2, P4, P3, P1.
P2, P4, P3, P1 = 1, 2, 3, 4
FOUR_BPI_ARCS = {
    0: {"aa": P2, "aba": P3, "abb": P3, "babab": P4, "bb": P1, "baa": P1, "babb": P1},
    P1: {"a": P2},
    P2: {"ba": 0},
    P3: {"ab": P4, "ba": P4, "bb": P2},
    P4: {"b": P2},
}


def sfa_from_condensed(arcs: dict, alphabet: str = "ab", n_kept: int = 5) -> Sfa:
    """Expand labelled condensed arcs into a deterministic SFA.

    ``arcs[node]`` maps each outgoing label to its target node. Labels
    leaving one node must form a prefix set; they are laid out as a trie
    whose leaves are the targets.
    """
    transitions = set()
    n_states = n_kept
    for source, out in arcs.items():
        children = {}
        for word, target in sorted(out.items()):
            node = source
            for ch in word[:-1]:
                if (node, ch) not in children:
                    children[node, ch] = n_states
                    transitions.add((node, ch, n_states))
                    n_states += 1
                node = children[node, ch]
            transitions.add((node, word[-1], target))
    return validate_semi_flower(Automaton(alphabet, n_states, {0}, {0}, transitions))


def four_bpi_sfa() -> Sfa:
    """Deterministic SFA with four bpis whose submonoid has rank 11."""
    return sfa_from_condensed(FOUR_BPI_ARCS)


def four_bpi_bpr() -> Bpr:
    """Its condensation, written down directly with labels."""
    arcs = [(p, word, q) for p, out in FOUR_BPI_ARCS.items() for word, q in out.items()]
    return Bpr(0, (0, P1, P2, P3, P4), tuple(arcs))


def generators(alphabet: str, *words: str) -> GeneratorSet:
    return GeneratorSet(alphabet, frozenset(words))
