"""Condensing an SFA onto its branch points.

The four-bpi automaton below has eleven cycles through the root. After
condensation only the root and four branch points remain; the kappa
counts along one topological order give the rank without enumerating a
single cycle.
"""

import itertools

from semiflower import (
    build_bpr, correction_term, is_valid_order, kappa_profile, rank_from_kappa, simple_cycles,
    topological_order,
)
from semiflower.gallery import P1, P2, P3, P4, four_bpi_sfa
from semiflower.io import format_bpr, format_profile

names = {P1: "p1", P2: "p2", P3: "p3", P4: "p4"}
s = four_bpi_sfa()
print(f"SFA: {s.n_states} states, {s.n_transitions} transitions")
print("bpis:", ", ".join(f"{names[v]}={v}" for v in sorted(s.bpis)))

b = build_bpr(s)
print(format_bpr(b))

order = topological_order(b)
print("order:", " ".join(names[v] for v in order.nodes))
valid = [o for o in itertools.permutations(order.nodes) if is_valid_order(b, o)]
print("all valid orders:", ["".join(names[v] for v in o) for o in valid])

p = kappa_profile(b, order)
print(format_profile(p))
r = rank_from_kappa(p)
print(f"rank {r.rank_value} = sum of {r.breakdown}; cycles enumerated directly: {len(simple_cycles(s))}")
print("correction term S =", correction_term(p))
