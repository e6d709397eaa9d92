"""Intersection of two finitely generated submonoids and the Hanna Neumann inequality.

:func:`analyze` builds an SFA for each generating set, trims their product
and, when that trimmed product is itself semi-flower, computes the exact
rank of the intersection together with the bound
``S + rk~(H) * rk~(K)`` where ``S`` is :func:`semiflower.rank.correction_term`
of the product and ``rk~(N) = max(0, rk(N) - 1)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Optional

from .automaton import Automaton, product, trim
from .bpr import Bpr, KappaProfile, TopologicalOrder, build_bpr, kappa_profile, topological_order
from .errors import AlphabetMismatch, BudgetExceeded, SemiflowerError, UndefinedRank
from .rank import correction_term, rank, rank_from_kappa, reduced
from .sfa import DEFAULT_CAP, GeneratorSet, Sfa, build_sfa, validate_semi_flower


class Classification(str, enum.Enum):
    CASE1_NO_BPI = "Case1-NoBpi"
    CASE2_ONE_BPI = "Case2-OneBpi"
    CASE2_TWO_BPI = "Case2-TwoBpi"
    GENERAL = "General-mBpi"
    NOT_SFA = "Inapplicable-NotSFA"
    NONDETERMINISTIC = "Inapplicable-Nondeterministic"

    def __str__(self):
        return self.value

    @property
    def applicable(self) -> bool:
        return not self.value.startswith("Inapplicable")


@dataclass(frozen=True)
class HnpReport:
    generators_h: GeneratorSet
    generators_k: GeneratorSet
    classification: Classification
    rank_h: int
    rank_k: int
    product: Automaton  # trimmed product, state pairs in ``product.pairs``
    m: Optional[int] = None  # bpis of the trimmed product, when it is an SFA
    rank_intersection: Optional[int] = None
    exact: bool = True
    correction_term: Optional[int] = None
    ghn_bound: Optional[int] = None
    sufficient_condition: Optional[bool] = None
    hnp_holds: Optional[bool] = None
    profile: Optional[KappaProfile] = None
    detail: str = ""

    @property
    def reduced_h(self) -> int:
        return reduced(self.rank_h)

    @property
    def reduced_k(self) -> int:
        return reduced(self.rank_k)

    @property
    def reduced_intersection(self) -> Optional[int]:
        if self.rank_intersection is None:
            return None
        return reduced(self.rank_intersection)


def ghn_bound(p: KappaProfile, rank_h: int, rank_k: int) -> int:
    """Upper bound on the reduced rank of the intersection."""
    return correction_term(p) + reduced(rank_h) * reduced(rank_k)


def _reachable_off_root(b: Bpr, start: int) -> set:
    """Nodes reachable from ``start`` without passing through the root."""
    seen, todo = set(), [start]
    while todo:
        for arc in b.out_arcs[todo.pop()]:
            if arc.target not in seen:
                seen.add(arc.target)
                if arc.target != b.q0:
                    todo.append(arc.target)
    return seen


def _count_paths_to(b: Bpr, target: int) -> dict:
    """Paths from every node to ``target`` that do not pass through the root."""
    memo = {target: 1}

    def count(v):
        if v not in memo:
            memo[v] = 0 if v == b.q0 else sum(count(arc.target) for arc in b.out_arcs[v])
        return memo[v]

    return {v: count(v) for v in b.nodes}


def sufficient_condition(b: Bpr, order: TopologicalOrder) -> bool:
    """True when the non-first bpis are pairwise unconnected and each reaches the first one in exactly one way."""
    nodes = order.nodes
    if len(nodes) <= 1:
        return True
    later = set(nodes[1:])
    for v in nodes[1:]:
        if _reachable_off_root(b, v) & (later - {v}):
            return False
    ways = _count_paths_to(b, nodes[0])
    return all(ways[v] == 1 for v in nodes[1:])


def case_classify(product_trim: Automaton, ah: Sfa, ak: Sfa) -> Classification:
    try:
        prod = validate_semi_flower(product_trim)
    except SemiflowerError:
        return Classification.NOT_SFA
    if not ah.bpis or not ak.bpis:
        return Classification.CASE1_NO_BPI
    m = len(prod.bpis)
    if m <= 1:
        return Classification.CASE2_ONE_BPI
    if m == 2:
        return Classification.CASE2_TWO_BPI
    return Classification.GENERAL


def analyze(xh: GeneratorSet, xk: GeneratorSet, cap: int = DEFAULT_CAP) -> HnpReport:
    """Run the whole intersection pipeline for ``H = xh*`` and ``K = xk*``.

    Inputs that are not prefix sets still get an SFA (a flower), but only
    upper bounds come back: exact ranks and the inequality verdict need
    deterministic automata.

    On BudgetExceeded the exception carries the report built so far in
    its ``partial`` attribute.
    """
    if xh.alphabet != xk.alphabet:
        raise AlphabetMismatch(f"alphabets differ: {xh.alphabet!r} vs {xk.alphabet!r}")
    ah, ak = build_sfa(xh), build_sfa(xk)
    prod = trim(product(ah.automaton, ak.automaton))
    deterministic = ah.deterministic and ak.deterministic
    report = HnpReport(xh, xk, Classification.NOT_SFA, 0, 0, prod, exact=deterministic)
    try:
        rh, rk = rank(ah, cap), rank(ak, cap)
        report = replace(report, rank_h=rh.rank_value, rank_k=rk.rank_value)
        classification = case_classify(prod, ah, ak)
        if classification is Classification.NOT_SFA:
            return replace(report, detail="trimmed product has a cycle avoiding the root")
        if not deterministic:
            classification = Classification.NONDETERMINISTIC
        report = replace(report, classification=classification)
        return _finish(report, validate_semi_flower(prod), cap)
    except BudgetExceeded as exc:
        exc.partial = report
        raise


def _finish(report: HnpReport, s: Sfa, cap: int) -> HnpReport:
    if not s.bpis:
        r = rank(s, cap)
        s_term, profile, sufficient = 0, KappaProfile((), (), ()), True
    else:
        b = build_bpr(s, cap)
        order = topological_order(b)
        profile = kappa_profile(b, order)
        r = rank_from_kappa(profile, exact=s.deterministic)
        s_term = correction_term(profile)
        sufficient = sufficient_condition(b, order)
    bound = ghn_bound(profile, report.rank_h, report.rank_k)
    report = replace(
        report,
        m=len(s.bpis),
        rank_intersection=r.rank_value,
        correction_term=s_term,
        ghn_bound=bound,
        profile=profile,
    )
    if report.classification is Classification.NONDETERMINISTIC:
        return replace(report, detail="nondeterministic factors: ranks are upper bounds only")
    return replace(report, sufficient_condition=sufficient, hnp_holds=verify_hnp_direct(report))


def verify_hnp_direct(report: HnpReport) -> bool:
    if report.rank_intersection is None or not report.classification.applicable:
        raise UndefinedRank(f"no intersection rank for a {report.classification} instance")
    return reduced(report.rank_intersection) <= report.reduced_h * report.reduced_k
