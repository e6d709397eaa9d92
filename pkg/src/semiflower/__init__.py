"""Semi-flower automata for finitely generated submonoids of a free monoid.

Rank computation through the branch-point condensation, product/trim
analysis of intersections and the Hanna Neumann bound.
"""

from .automaton import (
    Automaton,
    BpoHistogram,
    accepts,
    bpi_set,
    bpo_histogram,
    is_deterministic,
    product,
    trim,
)
from .bpr import (
    Bpr,
    BprArc,
    KappaProfile,
    TopologicalOrder,
    build_bpr,
    first_bpi_facts,
    is_valid_order,
    kappa_profile,
    topological_order,
)
from .errors import *  # noqa: F401,F403
from .hnp import (
    Classification,
    HnpReport,
    analyze,
    case_classify,
    ghn_bound,
    sufficient_condition,
    verify_hnp_direct,
)
from .rank import (
    RankReport,
    bpo_product_bound,
    correction_term,
    edge_identity,
    lemma_edge_rank,
    rank,
    rank_from_kappa,
    rank_via_bpo,
    reduced,
    sequence_inequality,
    single_bpi_rank,
)
from .sfa import (
    DEFAULT_CAP,
    CycleInventory,
    GeneratorSet,
    Sfa,
    build_sfa,
    is_prefix_set,
    minimal_generators,
    simple_cycles,
    validate_semi_flower,
)

__version__ = "0.1.0"
