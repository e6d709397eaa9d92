"""Branch-point condensation of a semi-flower automaton and its kappa counts.

The condensation keeps the root ``q0`` and every bpi (state of indegree at
least two). Each arc stands for one path of the automaton that runs between
two kept nodes and whose inner states are all discarded ones; the arc is
labelled by the word the path reads. Parallel arcs are kept, so this is a
multigraph.

Once the bpis are listed in a topological order ``q1, ..., qm`` (arcs that
do not leave the root only ever point to earlier nodes) the numbers

* ``kappa[i]``         arcs from the root to ``q_i``,
* ``kappa_matrix[i][j]`` arcs from ``q_i`` to ``q_j``,
* ``kappa_bar[i]``     simple paths from ``q_i`` back to the root,

drive the rank and intersection formulas in :mod:`semiflower.rank`.
Indices in this module are 0-based: ``kappa[0]`` belongs to ``q1``.
"""

from __future__ import annotations

import heapq
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

from .errors import BudgetExceeded, CycleDetected, InvalidOrder
from .sfa import DEFAULT_CAP, Sfa, _paths_home, _postorder, count_root_cycles


@dataclass(frozen=True)
class BprArc:
    source: int
    label: str
    target: int
    states: tuple = field(default=(), compare=False)  # automaton states along the path


@dataclass(frozen=True)
class Bpr:
    """Condensed multigraph on ``{q0} | bpis``; node ids are automaton state ids."""

    q0: int
    nodes: tuple
    arcs: tuple

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(sorted(set(self.nodes) | {self.q0})))
        arcs = tuple(a if isinstance(a, BprArc) else BprArc(*a) for a in self.arcs)
        known = set(self.nodes)
        for arc in arcs:
            if arc.source not in known or arc.target not in known:
                raise ValueError(f"arc {arc.source}->{arc.target} leaves the node set {self.nodes}")
        object.__setattr__(self, "arcs", tuple(sorted(arcs, key=lambda x: (x.source, x.target, x.label))))

    @classmethod
    def from_multiplicities(cls, q0: int, counts: dict, nodes: Iterable[int] = ()) -> "Bpr":
        """Unlabelled multigraph from ``{(source, target): count}``."""
        arcs = [BprArc(p, f"{p}>{q}#{k}", q) for (p, q), n in counts.items() for k in range(n)]
        return cls(q0, tuple(set(nodes) | {p for p, _ in counts} | {q for _, q in counts}), tuple(arcs))

    @cached_property
    def multiplicity(self) -> Counter:
        return Counter((arc.source, arc.target) for arc in self.arcs)

    @cached_property
    def out_arcs(self) -> dict:
        out = {v: [] for v in self.nodes}
        for arc in self.arcs:
            out[arc.source].append(arc)
        return out

    def indegree(self, v: int) -> int:
        return sum(n for (_, q), n in self.multiplicity.items() if q == v)

    @property
    def root_is_bpi(self) -> bool:
        return self.indegree(self.q0) >= 2

    @property
    def bpis(self) -> tuple:
        """Nodes that are bpis, root included only when it is one."""
        return tuple(v for v in self.nodes if v != self.q0 or self.root_is_bpi)


def build_bpr(s: Sfa, cap: int = DEFAULT_CAP) -> Bpr:
    if cap < 1:
        raise ValueError("cap must be positive")
    a, q0 = s.automaton, s.q0
    kept = s.bpis | {q0}
    arcs = []
    for start in sorted(kept):
        # inner states have indegree <= 1 and the off-root graph is acyclic,
        # so every walk through discarded states is a simple path
        stack = [(start, (start,), "")]
        while stack:
            v, states, label = stack.pop()
            for ch, q in a.out_arcs[v]:
                if q in kept:
                    arcs.append(BprArc(start, label + ch, q, states + (q,)))
                    if len(arcs) > cap:
                        raise BudgetExceeded(cap, "condensed arcs")
                else:
                    stack.append((q, states + (q,), label + ch))
    return Bpr(q0, tuple(kept), tuple(arcs))


@dataclass(frozen=True)
class TopologicalOrder:
    """Bpis listed so that every arc not leaving the root points backwards."""

    nodes: tuple
    root_is_bpi: bool

    def __len__(self):
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)


def _back_arcs(b: Bpr):
    """Arcs of the graph obtained by deleting arcs that leave the root."""
    return [(p, q) for (p, q) in b.multiplicity if p != b.q0]


def topological_order(b: Bpr) -> TopologicalOrder:
    """Linear extension of "reachable from" on the bpis, root first.

    Among nodes whose successors are all placed, the lowest state id goes
    next.
    """
    waiting = {v: set() for v in b.nodes}
    preds = {v: set() for v in b.nodes}
    for p, q in _back_arcs(b):
        waiting[p].add(q)
        preds[q].add(p)
    ready = [v for v in b.nodes if not waiting[v]]
    heapq.heapify(ready)
    placed = []
    while ready:
        v = heapq.heappop(ready)
        placed.append(v)
        for p in preds[v]:
            waiting[p].discard(v)
            if not waiting[p]:
                heapq.heappush(ready, p)
    if len(placed) != len(b.nodes):
        stuck = sorted(set(b.nodes) - set(placed))
        raise CycleDetected(f"cycle avoiding the root among nodes {stuck}")
    # the root keeps no outgoing arcs, so it is the only node ready at the start
    root_is_bpi = b.root_is_bpi
    return TopologicalOrder(tuple(v for v in placed if v != b.q0 or root_is_bpi), root_is_bpi)


def is_valid_order(b: Bpr, nodes: Iterable[int]) -> bool:
    nodes = tuple(nodes)
    if sorted(nodes) != sorted(b.bpis):
        return False
    if b.root_is_bpi and nodes[0] != b.q0:
        return False
    position = {v: i for i, v in enumerate(nodes)}
    for p, q in _back_arcs(b):
        if q == b.q0 and not b.root_is_bpi:
            continue
        if position[q] >= position[p]:
            return False
    return True


@dataclass(frozen=True)
class KappaProfile:
    kappa: tuple
    kappa_matrix: tuple
    kappa_bar: tuple
    nodes: Optional[tuple] = None  # the ordered bpis this profile was read from

    @property
    def m(self) -> int:
        return len(self.kappa)

    @classmethod
    def from_counts(cls, kappa, kappa_matrix, nodes=None) -> "KappaProfile":
        """Fill in ``kappa_bar`` by the back-substitution recursion.

        ``kappa_matrix`` may be a full ``m x m`` nested sequence or a dict
        ``{(i, j): count}`` with 0-based keys.
        """
        kappa = tuple(int(k) for k in kappa)
        m = len(kappa)
        if isinstance(kappa_matrix, dict):
            rows = [[0] * m for _ in range(m)]
            for (i, j), n in kappa_matrix.items():
                rows[i][j] = int(n)
        else:
            rows = [[int(x) for x in row] for row in kappa_matrix]
            if len(rows) != m or any(len(r) != m for r in rows):
                raise ValueError("kappa_matrix must be m x m")
        kappa_bar = []
        for i in range(m):
            if i == 0:
                kappa_bar.append(1)
            else:
                kappa_bar.append(sum(rows[i][j] * kappa_bar[j] for j in range(i)))
        return cls(kappa, tuple(tuple(r) for r in rows), tuple(kappa_bar), nodes)


def kappa_profile(b: Bpr, order: TopologicalOrder) -> KappaProfile:
    if not is_valid_order(b, order.nodes):
        raise InvalidOrder(f"{list(order.nodes)} is not a topological order of the bpis")
    mult, q0 = b.multiplicity, b.q0
    nodes = order.nodes
    kappa = [mult[(q0, v)] for v in nodes]
    matrix = [[mult[(u, v)] for v in nodes] for u in nodes]
    if order.root_is_bpi:
        matrix[0] = list(kappa)
    return KappaProfile.from_counts(kappa, matrix, nodes)


@dataclass(frozen=True)
class FirstBpiReport:
    q1: int
    paths_to_root: int
    cycles_missing_q1: int
    first_candidates: tuple
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations


def first_bpi_facts(s: Sfa, b: Bpr, order: TopologicalOrder) -> FirstBpiReport:
    """Check the three facts about the first bpi of a topological order.

    The first bpi has exactly one simple path to the root, lies on every
    simple cycle, and comes first in every valid order.
    """
    if not order.nodes:
        raise ValueError("the automaton has no bpi")
    a, q0 = s.automaton, s.q0
    q1 = order.nodes[0]
    violations = []

    paths = 1 if q1 == q0 else _paths_home(a, q0)[q1]
    if paths != 1:
        violations.append(f"{paths} simple paths from {q1} to the root, expected 1")

    if q1 == q0:
        missing = 0
    else:
        total = count_root_cycles(s)
        through = _paths_home(a, q0)[q1] * _paths_from_root(a, q0, q1)
        missing = total - through
    if missing:
        violations.append(f"{missing} simple cycles avoid {q1}")

    if b.root_is_bpi:
        candidates = (q0,)
    else:
        outs = {v: set() for v in b.nodes}
        for p, q in _back_arcs(b):
            outs[p].add(q)
        candidates = tuple(v for v in b.bpis if outs[v] <= {q0})
    if candidates != (q1,):
        violations.append(f"nodes {list(candidates)} can all start a topological order")
    return FirstBpiReport(q1, paths, missing, candidates, tuple(violations))


def _paths_from_root(a, q0: int, target: int) -> int:
    """Paths q0 -> target whose inner states avoid q0."""
    # reverse postorder on the off-root DAG is a topological order
    ways = {v: 0 for v in a.states}
    for _, q in a.out_arcs[q0]:
        if q != q0:
            ways[q] += 1
    for v in reversed(_postorder(a, q0)):
        if v == target:
            continue
        for _, q in a.out_arcs[v]:
            if q != q0:
                ways[q] += ways[v]
    return ways[target]
