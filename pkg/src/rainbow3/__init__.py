"""3-rainbow edge colorings of graphs via strengthened connected dominating
sets, with independent exhaustive verification machinery."""

from .bounds import BoundsReport, bounds_report
from .coloring import (
    CertificateError,
    ColoringInternalError,
    ColoringReport,
    EdgeColoring,
    InnerLimits,
    SafetyCertificate,
    Stage1State,
    inner_coloring,
    order_dangerous,
    read_coloring,
    spanning_tree_coloring,
    stage1_periodic,
    stage2_repair_step,
    stage2_rule_keys,
    three_dom_coloring,
    three_way_coloring,
    write_coloring,
)
from .domination import (
    CONNECTED,
    DominatingSet,
    DominationError,
    DominationKind,
    LimitError,
    PLAIN,
    cds_heuristic,
    check_domination,
    feet,
    interval_dominating_path,
    interval_graph,
    k_dominating,
    k_way,
    min_connected_dominating_set,
    min_connected_k_dominating_set,
    read_intervals,
    three_way_dominating_set,
)
from .generators import (
    FamilyGraph,
    chain_example,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    french_windmill,
    gstar,
    path_graph,
    random_min_degree,
    standard_family,
    star_graph,
    threshold_example,
    threshold_from_weights,
)
from .graphs import (
    BfsTree,
    Graph,
    GraphError,
    all_pairs_distances,
    bfs_tree,
    build_graph,
    components_minus,
    diameter,
    edge_key,
    induced_subgraph,
    is_connected,
    read_edge_list,
    sdiam3,
    sdiam3_with_triple,
    steiner_distance3,
    write_edge_list,
)
from .verify import (
    CLASS_TABLE,
    VerifyLimitError,
    VerifyReport,
    all_class_triples,
    class_membership,
    exact_rx3,
    exact_rx3_coloring,
    exists_rainbow_s_tree,
    is_3_rainbow,
    pickable,
    pickable_bruteforce,
    verify_certificate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
