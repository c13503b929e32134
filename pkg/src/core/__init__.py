"""Core algorithms for α-domination analysis."""

from .graph import (
    Graph,
    GraphError,
    build_graph
)

from .graph_io import (
    GraphParseError,
    parse_edge_list,
    parse_dimacs,
    parse_graph_text,
    to_edge_list,
    to_dimacs,
    read_graph_file,
    write_graph_file
)

from .generators import (
    gen_empty,
    gen_path,
    gen_cycle,
    gen_complete,
    gen_petersen,
    gen_circulant,
    gen_gnp,
    gen_random_regular
)

from .domination import (
    Alpha,
    Mode,
    ModeKind,
    ModeUndefinedError,
    InvalidVertexError,
    VerifyReport,
    verify,
    alpha_degrees,
    delta_hat,
    small_alpha_threshold,
    is_small_alpha
)

from .bounds import (
    BoundInputs,
    BoundValue,
    BoundReport,
    bound_report,
    thm2_bound,
    thm3_bound,
    cor1_bound,
    cor2_bound,
    caro_roditty,
    classical_bound
)

from .construct import (
    ConstructionError,
    ConstructionParams,
    PRule,
    TrialOutcome,
    construct_alpha,
    construct_alpha_rate,
    best_of_trials,
    derandomize_alpha,
    expected_alpha_size
)

from .exact import (
    ExactResult,
    SizeLimitError,
    exact_number
)

__all__ = [
    # Graphs
    'Graph',
    'GraphError',
    'build_graph',
    'GraphParseError',
    'parse_edge_list',
    'parse_dimacs',
    'parse_graph_text',
    'to_edge_list',
    'to_dimacs',
    'read_graph_file',
    'write_graph_file',
    # Generators
    'gen_empty',
    'gen_path',
    'gen_cycle',
    'gen_complete',
    'gen_petersen',
    'gen_circulant',
    'gen_gnp',
    'gen_random_regular',
    # Domination
    'Alpha',
    'Mode',
    'ModeKind',
    'ModeUndefinedError',
    'InvalidVertexError',
    'VerifyReport',
    'verify',
    'alpha_degrees',
    'delta_hat',
    'small_alpha_threshold',
    'is_small_alpha',
    # Bounds
    'BoundInputs',
    'BoundValue',
    'BoundReport',
    'bound_report',
    'thm2_bound',
    'thm3_bound',
    'cor1_bound',
    'cor2_bound',
    'caro_roditty',
    'classical_bound',
    # Constructions
    'ConstructionError',
    'ConstructionParams',
    'PRule',
    'TrialOutcome',
    'construct_alpha',
    'construct_alpha_rate',
    'best_of_trials',
    'derandomize_alpha',
    'expected_alpha_size',
    # Exact solver
    'ExactResult',
    'SizeLimitError',
    'exact_number'
]
