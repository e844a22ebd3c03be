"""Closed- and open-neighborhood balanced red/blue graph colorings.

Decide colorability exactly, enumerate witnesses, apply theorem-backed
constructive colorings, recognize balanced trees, and audit the counting
identities every valid coloring must satisfy.
"""

from .coloring import (
    BalanceReport,
    Coloring,
    ForcedConstraints,
    IdentityViolationError,
    InvalidColoringError,
    SizeMismatchError,
    UnbalancedColoringError,
    check_identities,
    first_unbalanced,
    leaf_force,
    report,
    residuals,
    verify,
    verify_cnb,
    verify_nb,
)
from .constructions import (
    CharacterizationVerdict,
    NotColorableError,
    characterize_circulant,
    characterize_cubic_circulant,
    characterize_family,
    characterize_gp,
    characterize_quintic_circulant,
    circulant_constructions,
    circulant_reduce,
    color_box_k2,
    color_cartesian,
    color_circulant,
    color_complement_bridge,
    color_gp,
    color_hypercube,
    color_join,
    color_lexicographic,
    color_strong,
    embed_in_cnbc,
    embed_in_nbc,
    prism_colorings,
)
from .graph6 import (
    Graph6Error,
    decode,
    encode,
    format_edge_list,
    iter_graph6,
    parse_edge_list,
)
from .graphs import (
    CirculantSpec,
    FamilyParameterError,
    Graph,
    GraphMetrics,
    PetersenSpec,
    all_labeled_graphs,
    build_family,
    cartesian,
    circulant,
    complement,
    complete,
    complete_bipartite,
    cycle,
    direct,
    disjoint_union,
    empty_graph,
    gen_petersen,
    hypercube,
    is_tree,
    join,
    lexicographic,
    metrics,
    path,
    prism,
    product,
    star,
    strong,
    wheel,
)
from .solver import (
    Budget,
    EnumerationOutcome,
    SolveOutcome,
    SolveStats,
    census,
    enumerate_colorings,
    prefilter_reason,
    solve,
)
from .trees import (
    AdditionStep,
    ColorPatternError,
    MalformedScriptError,
    NotATreeError,
    TreeBuildScript,
    decompose_cnbc_tree,
    decompose_cnbc_tree_greedy,
    four_vertex_addition,
    labeled_trees,
    prufer_decode,
    random_labeled_tree,
    replay,
    three_vertex_addition,
)

__version__ = "0.1.0"
