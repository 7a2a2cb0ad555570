"""Graph burning, cooling and liminal burning: exact engines and bounds."""

from .bounds import (
    BernoulliTable,
    BoundResult,
    ClassicalBounds,
    Cube3Bound,
    Polynomial,
    bernoulli,
    classical_bounds,
    cube3_bound,
    g_bar,
    kings_bound,
    kings_root_closed_form,
    largest_root,
    non_square_check,
    q_poly,
)
from .engine import (
    BurnState,
    ReplayResult,
    SourceSequence,
    cooling_sequence_strong,
    covering_value,
    play_sequence,
    propagate,
    replay,
    spread,
)
from .errors import (
    BudgetExceededError,
    GraphError,
    InvalidMoveError,
    InvalidSequenceError,
)
from .graphs import (
    DEFAULT_VERTEX_BUDGET,
    Graph,
    bits,
    coord_to_vertex,
    eccentricity_stats,
    from_edges,
    mask_of,
    parse_graph_spec,
    path,
    strong_path,
    vertex_to_coord,
)
from .solvers import (
    LiminalSolver,
    SolveResult,
    SweepResult,
    burning_number,
    cooling_number,
    liminal_sweep,
    liminal_value,
)
from .tiling import (
    GenFunTable,
    KStarBound,
    Pack2DResult,
    f_value,
    genfun,
    k_star_lower_bound,
    pack_1d,
    pack_small_2d,
)

__version__ = "0.1.0"
