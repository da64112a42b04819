"""k-circular matroids of multigraphs.

``M_k(G)`` is built by exhaustive enumeration, every graph-side
characterisation is checked against brute-force matroid oracles, and
uniqueness of ``G`` given ``M_k(G)`` is certified or refuted by search.
"""
from .errors import EnumerationLimitError, HypothesisError, KCircularError
from .graph import (
    Multigraph,
    core,
    cycle_rank,
    degree_profile,
    delete,
    delta,
    induced_by_edges,
    is_3_connected,
    is_cacti,
    is_cactus,
    kernel,
    membership,
    nontree_tree_split,
    star,
    tree_forest,
    wheel_check,
)
from .matroid import Matroid
from .kcirc import (
    KContext,
    circuits_k,
    cocircuit_type,
    in_class,
    is_base_by_structure,
    is_connected_k,
    is_nonsep_set,
    is_nontrivial,
    k_matroid,
    predicted_fundamental_cocircuit,
    rank_formulas,
)
from .stars import (
    Status,
    StarReport,
    classify,
    dangling_witnesses,
    find_witness_base,
    nonsep_stars,
    star_is_cocircuit,
)
from .uniqueness import (
    Certificate,
    SearchBounds,
    Verdict,
    certify_unique,
    decide_unique,
    search_equal_matroid,
    strong_isomorphism,
)

__version__ = "0.1.0"
