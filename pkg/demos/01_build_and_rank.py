"""From a generating set to its automaton and back again.

A prefix set X gives a deterministic semi-flower automaton whose simple
cycles through the root spell exactly the words of X. The rank formula
recovers |X| from branch-point counts alone.
"""

from semiflower import (
    GeneratorSet, build_sfa, edge_identity, minimal_generators, rank, rank_via_bpo, simple_cycles,
)
from semiflower.io import format_automaton

x = GeneratorSet("ab", frozenset({"aa", "ab", "b"}))
s = build_sfa(x)
print("generators:", sorted(x.words))
print(format_automaton(s.automaton, comment="SFA built from the generators"))

for c in simple_cycles(s).cycles:
    print(f"cycle {c.states} reads {c.label!r}")

r = rank(s)
print(f"rank {r.rank_value} (exact: {r.exact}), minimal generators {sorted(minimal_generators(s))}")
print("rank from outdegree histogram:", rank_via_bpo(s))
e = edge_identity(s)
print(f"|F| - |Q| = {e.lhs}, branching excess = {e.rhs}")

# a set that is not a prefix code gets a flower automaton, so the rank is only an upper bound
flower = build_sfa(GeneratorSet("ab", frozenset({"a", "ab"})))
r = rank(flower)
print(f"\n{{a, ab}}: deterministic={flower.deterministic}, rank bound {r.rank_value}, exact={r.exact}")
