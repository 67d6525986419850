"""Tree-partition construction toolkit: decomposition models and verifiers,
separator machinery, exact desk-scale oracles, the five-step partitioning
pipeline, instance generators, and subdivision bridges."""

from .decomp import (
    TreeCutDecomposition,
    TreeDecomposition,
    TreePartition,
    Violation,
    verify_domino,
    verify_td,
    verify_tp,
    verify_tcd,
)
from .exact import (
    CapacityError,
    brute_disjoint_paths,
    brute_mu,
    exact_domino_tw,
    exact_tpw,
    tpw_by_enumeration,
)
from .graph import (
    BlockForest,
    Graph,
    SubdivisionMap,
    biconnected_components,
    connected_components,
    quotient,
    subdivide,
)
from .bridge import tcd_to_subdivision_tp, tp_lift_subdivision
from .families import (
    explicit_k3m_partition,
    gen_complete_bipartite,
    gen_fan,
    gen_grid,
    gen_multiple_tree,
    gen_wall,
    random_graph,
    random_tree,
)
from .gadgets import (
    DominoRegistry,
    TcmisGadget,
    TcmisInstance,
    TcmisPartition,
    gen_cluster_gadget,
    gen_domino_reduction,
    gen_tcmis_gadget,
    tcmis_witness_to_partition,
    tp_witness_to_domino,
)
from .pipeline import (
    BlockDegree,
    LargeComponent,
    PipelineOutcome,
    PipelineParams,
    TraceRecord,
    TreewidthLB,
    degree_threshold,
    run,
)
from .separators import BReduction, b_reduction, build_gb, candidate_pairs, mu
from .treewidth import (
    balance_td,
    exact_td,
    heuristic_td,
    occupancy_tables,
    treewidth_lower_bound,
)
from .partitioner import (
    CONSTANTS,
    PartitionConstants,
    balanced_separator_bag,
    combine_blocks,
    expand,
    partition_isolated,
    partition_rooted,
)

__all__ = [
    "BlockDegree",
    "CONSTANTS",
    "DominoRegistry",
    "LargeComponent",
    "PipelineOutcome",
    "PipelineParams",
    "TcmisGadget",
    "TcmisInstance",
    "TcmisPartition",
    "TraceRecord",
    "TreewidthLB",
    "PartitionConstants",
    "balanced_separator_bag",
    "combine_blocks",
    "degree_threshold",
    "expand",
    "explicit_k3m_partition",
    "gen_cluster_gadget",
    "gen_complete_bipartite",
    "gen_domino_reduction",
    "gen_fan",
    "gen_grid",
    "gen_multiple_tree",
    "gen_tcmis_gadget",
    "gen_wall",
    "partition_isolated",
    "partition_rooted",
    "random_graph",
    "random_tree",
    "run",
    "tcd_to_subdivision_tp",
    "tcmis_witness_to_partition",
    "tp_lift_subdivision",
    "tp_witness_to_domino",
    "BReduction",
    "BlockForest",
    "CapacityError",
    "Graph",
    "SubdivisionMap",
    "TreeCutDecomposition",
    "TreeDecomposition",
    "TreePartition",
    "Violation",
    "b_reduction",
    "balance_td",
    "biconnected_components",
    "brute_disjoint_paths",
    "brute_mu",
    "build_gb",
    "candidate_pairs",
    "connected_components",
    "exact_domino_tw",
    "exact_td",
    "exact_tpw",
    "heuristic_td",
    "mu",
    "occupancy_tables",
    "quotient",
    "subdivide",
    "tpw_by_enumeration",
    "treewidth_lower_bound",
    "verify_domino",
    "verify_td",
    "verify_tcd",
    "verify_tp",
]
