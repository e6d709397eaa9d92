"""Rank of the submonoid accepted by an SFA and the counting identities around it.

With bpis ``q1 .. qm`` in topological order the number of simple cycles
through the root is ``sum_i kappa[i] * kappa_bar[i]``. That number bounds
the rank from above and equals it when the SFA is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .automaton import Automaton, bpo_histogram, is_deterministic, product
from .bpr import KappaProfile, build_bpr, kappa_profile, topological_order
from .errors import AlphabetMismatch, BpiCountMismatch, NotDeterministic, SemiflowerError
from .sfa import DEFAULT_CAP, Sfa


def reduced(rank: int) -> int:
    return max(0, rank - 1)


@dataclass(frozen=True)
class RankReport:
    rank_value: int
    exact: bool  # False: rank_value is only an upper bound
    breakdown: tuple  # kappa[i] * kappa_bar[i] per bpi, in topological order
    cycle_count: int
    m: int = 0
    generator_count: Optional[int] = None
    profile: Optional[KappaProfile] = None

    @property
    def reduced_rank(self) -> int:
        return reduced(self.rank_value)


def rank_from_kappa(p: KappaProfile, exact: bool = False) -> RankReport:
    breakdown = tuple(k * kb for k, kb in zip(p.kappa, p.kappa_bar))
    total = sum(breakdown)
    return RankReport(total, exact, breakdown, total, m=p.m, profile=p)


def profile_of(s: Sfa, cap: int = DEFAULT_CAP) -> KappaProfile:
    b = build_bpr(s, cap)
    return kappa_profile(b, topological_order(b))


def rank(s: Sfa, cap: int = DEFAULT_CAP) -> RankReport:
    """Rank of ``L(s)``; exact for deterministic ``s``, an upper bound otherwise."""
    if not s.bpis:
        # with no bpi the automaton is either the bare root or one simple cycle
        value = 1 if s.n_transitions else 0
        return RankReport(value, s.deterministic, (), value, m=0)
    return rank_from_kappa(profile_of(s, cap), exact=s.deterministic)


@dataclass(frozen=True)
class IdentityCheck:
    lhs: int
    rhs: int
    holds: bool
    equality: bool = False


def _require_deterministic(s: Sfa):
    if not s.deterministic:
        raise NotDeterministic("this identity is stated for deterministic SFA only")


def edge_identity(s: Sfa) -> IdentityCheck:
    """``|F| - |Q|`` against ``sum_{i>=2} |BPO_i| (i - 1)``."""
    _require_deterministic(s)
    hist = bpo_histogram(s.automaton)
    lhs = s.n_transitions - s.n_states
    rhs = sum(hist[i] * (i - 1) for i in range(2, len(hist.counts)))
    return IdentityCheck(lhs, rhs, lhs == rhs, lhs == rhs)


def single_bpi_rank(s: Sfa, cap: int = DEFAULT_CAP) -> RankReport:
    if len(s.bpis) != 1:
        raise BpiCountMismatch(f"expected exactly one bpi, found {len(s.bpis)}")
    report = rank(s, cap)
    kappa1 = report.profile.kappa[0]
    if kappa1 != s.n_transitions - s.n_states + 1:
        raise SemiflowerError(
            f"kappa_1 = {kappa1} but |F| - |Q| + 1 = {s.n_transitions - s.n_states + 1}"
        )
    return report


def correction_term(p: KappaProfile) -> int:
    """The excess ``S`` by which intersections may overshoot the product of reduced ranks.

    Sum over ``i >= 2`` of ``(kappa_i - 1)(kappa_i1 - 1)`` plus
    ``kappa_ij (kappa_i * kappa_bar_j - 1)`` for ``2 <= j < i``
    (1-based indices).
    """
    k, kk, kb = p.kappa, p.kappa_matrix, p.kappa_bar
    total = 0
    for i in range(1, p.m):
        total += (k[i] - 1) * (kk[i][0] - 1)
        for j in range(1, i):
            total += kk[i][j] * (k[i] * kb[j] - 1)
    return total


def lemma_edge_rank(s: Sfa, cap: int = DEFAULT_CAP) -> IdentityCheck:
    """``|F| - |Q| + 1 >= rank - S``, with equality for deterministic SFA."""
    if not s.bpis:
        raise BpiCountMismatch("needs at least one bpi")
    report = rank(s, cap)
    lhs = s.n_transitions - s.n_states + 1
    rhs = report.rank_value - correction_term(report.profile)
    return IdentityCheck(lhs, rhs, lhs >= rhs, lhs == rhs)


def rank_via_bpo(s: Sfa, cap: int = DEFAULT_CAP) -> int:
    _require_deterministic(s)
    if not s.bpis:
        raise BpiCountMismatch("needs at least one bpi")
    hist = bpo_histogram(s.automaton)
    branching = sum(hist[t] * (t - 1) for t in range(2, len(hist.counts)))
    return correction_term(profile_of(s, cap)) + branching + 1


def sequence_inequality(c: Sequence[int], d: Sequence[int]) -> IdentityCheck:
    """Compare weighted tail products against the product of weighted sums.

    ``c`` and ``d`` hold ``c_1 .. c_n``: element ``k`` of the sequence is
    ``c_{k+1}``.
    """
    if len(c) != len(d):
        raise ValueError(f"sequence lengths differ: {len(c)} vs {len(d)}")
    n = len(c)
    if n < 1:
        raise ValueError("sequences must be nonempty")
    c = [0] + list(c)
    d = [0] + list(d)
    lhs = sum((t - 1) * sum(c[t:]) * sum(d[t:]) for t in range(2, n + 1))
    rhs = sum((i - 1) * c[i] for i in range(2, n + 1)) * sum((j - 1) * d[j] for j in range(2, n + 1))
    return IdentityCheck(lhs, rhs, lhs <= rhs, lhs == rhs)


def bpo_product_bound(a1: Automaton, a2: Automaton, t: int) -> IdentityCheck:
    """States of outdegree ``t`` in ``a1 x a2`` against pairs of factor states with outdegree ``>= t``."""
    if a1.alphabet != a2.alphabet:
        raise AlphabetMismatch(f"alphabets differ: {a1.alphabet!r} vs {a2.alphabet!r}")
    if not (is_deterministic(a1) and is_deterministic(a2)):
        raise NotDeterministic("both factors must be deterministic")
    n = len(a1.alphabet)
    if not 1 <= t <= n:
        raise ValueError(f"t must lie in 1..{n}, got {t}")
    c, d = bpo_histogram(a1), bpo_histogram(a2)
    lhs = bpo_histogram(product(a1, a2))[t]
    rhs = sum(c[r] for r in range(t, n + 1)) * sum(d[s] for s in range(t, n + 1))
    return IdentityCheck(lhs, rhs, lhs <= rhs, lhs == rhs)
