"""d-Cut: exact solvers, class-specific algorithms and hardness gadgets."""
__version__ = "0.1.0"

from .colouring import (
    BLUE,
    RED,
    DCutCertificate,
    PartialColouring,
    colour_process,
    colouring_from_cut,
    cut_from_colouring,
    extend_budgeted,
    validate_colouring,
)
from .config import pruning_disabled
from .domination import find_dominating_clique_or_c5, min_dominating_set
from .exceptions import (
    DCutError,
    DominatingStructureNotFound,
    GraphFormatError,
    InvariantViolation,
    OracleGuardExceeded,
    OracleTimeout,
    PreconditionError,
    Unsupported,
)
from .graph import Graph, connected_components, diameter, distances, induced_subgraph, line_graph, radius
from .io import emit_graph6, parse_graph6
from .oracle import edge_oracle_solve, oracle_solve, validate_edge_colouring
from .patterns import find_induced, is_free
from .solvers import (
    SolveOutcome,
    solve,
    solve_auto,
    solve_diameter2,
    solve_h_plus_p1,
    solve_p3p4_free,
    solve_p5_free,
    solve_with_dominating_set,
)
