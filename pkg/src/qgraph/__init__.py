"""Quantum-query graph algorithms over an emulated search oracle.

Matching and flow solvers whose edge access goes through metered black-box
probes, with an exact ledger of the queries a Grover-style search primitive
would charge, plus classical oracles, generators, and a benchmark harness
for verifying the advertised cost exponents.
"""

from .graphs import (
    HOLE,
    BlackBoxGraph,
    ContractViolationError,
    GraphError,
    IntegerFlow,
    IntegerNetwork,
    InternalInvariantError,
    Matching,
    Model,
    ModelMismatchError,
    NonBipartiteError,
    ProbeBoundsError,
)
from .grover import (
    COUNTING,
    GROVER_BATCH,
    GROVER_EMPTY_CHECK,
    Amplification,
    OracleConfig,
    QueryLedger,
    ceil_cbrt,
    ceil_log2,
    ceil_sqrt,
    ceil_sqrt_ratio,
    grover_find_all,
    grover_find_one,
    make_run_ledger,
    quantum_count,
)
from .layers import LayerAssignment, assign_layers
from .bipartite import (
    AugmentingDigraphView,
    MatchingRunReport,
    bipartition,
    find_disjoint_augmenting_paths,
    max_bipartite_matching,
)
from .blossom import (
    BlossomState,
    GeneralRunReport,
    PhaseCounters,
    UnionTree,
    collapse_blossom,
    find_augmenting_path_from,
    max_general_matching,
    trace_path,
)
from .flow import (
    FlowRunReport,
    PhaseStats,
    ResidualView,
    blocking_flow,
    max_flow_integer,
    residual_flow_bound,
    switching_threshold,
)
from .baselines import (
    SizeGuardError,
    SymmetricDifference,
    brute_force_max_matching,
    classical_bfs_layers,
    classical_hopcroft_karp,
    decompose_symmetric_difference,
    edmonds_karp,
    ford_fulkerson_dfs,
)
from .generators import (
    InfeasibleConnectivityError,
    bipartite_half_graph,
    complete_bipartite,
    cycle_graph,
    gen_gnm_digraph,
    gen_majority_hard_instance,
    gen_random_bipartite,
    gen_random_graph,
    gen_random_network,
    path_graph,
    petersen_graph,
)
from .io import (
    GraphParseError,
    read_graph_file,
    read_network_file,
    write_graph_file,
    write_network_file,
)
from .bench import (
    CSV_COLUMNS,
    DensityRule,
    FitResult,
    RunRecord,
    SweepSpec,
    SweepResult,
    SweepVerificationError,
    fit_loglog,
    parse_density,
    parse_gen_spec,
    parse_sweep_keyfile,
    predicted_slope,
    render_csv,
    run_once,
    run_sweep,
    write_csv,
)

__version__ = "0.1.0"

__all__ = [
    "HOLE",
    "BlackBoxGraph",
    "ContractViolationError",
    "GraphError",
    "IntegerFlow",
    "IntegerNetwork",
    "InternalInvariantError",
    "Matching",
    "Model",
    "ModelMismatchError",
    "NonBipartiteError",
    "ProbeBoundsError",
    "Amplification",
    "COUNTING",
    "GROVER_BATCH",
    "GROVER_EMPTY_CHECK",
    "OracleConfig",
    "QueryLedger",
    "ceil_cbrt",
    "ceil_log2",
    "ceil_sqrt",
    "ceil_sqrt_ratio",
    "grover_find_all",
    "grover_find_one",
    "make_run_ledger",
    "quantum_count",
    "LayerAssignment",
    "assign_layers",
    "AugmentingDigraphView",
    "MatchingRunReport",
    "bipartition",
    "find_disjoint_augmenting_paths",
    "max_bipartite_matching",
    "BlossomState",
    "GeneralRunReport",
    "PhaseCounters",
    "UnionTree",
    "collapse_blossom",
    "find_augmenting_path_from",
    "max_general_matching",
    "trace_path",
    "FlowRunReport",
    "PhaseStats",
    "ResidualView",
    "blocking_flow",
    "max_flow_integer",
    "residual_flow_bound",
    "switching_threshold",
    "InfeasibleConnectivityError",
    "bipartite_half_graph",
    "SizeGuardError",
    "SymmetricDifference",
    "brute_force_max_matching",
    "classical_bfs_layers",
    "classical_hopcroft_karp",
    "decompose_symmetric_difference",
    "edmonds_karp",
    "ford_fulkerson_dfs",
    "complete_bipartite",
    "cycle_graph",
    "gen_gnm_digraph",
    "gen_majority_hard_instance",
    "gen_random_bipartite",
    "gen_random_graph",
    "gen_random_network",
    "path_graph",
    "petersen_graph",
    "GraphParseError",
    "read_graph_file",
    "read_network_file",
    "write_graph_file",
    "write_network_file",
    "CSV_COLUMNS",
    "DensityRule",
    "FitResult",
    "RunRecord",
    "SweepSpec",
    "SweepResult",
    "SweepVerificationError",
    "fit_loglog",
    "parse_density",
    "parse_gen_spec",
    "parse_sweep_keyfile",
    "predicted_slope",
    "render_csv",
    "run_once",
    "run_sweep",
    "write_csv",
]
