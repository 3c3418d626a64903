"""Complete colorings of grid graphs: constructions, bounds, search and verification."""

from .assembly import (
    Construction,
    PasteLayout,
    Rect,
    construct_gn,
    copy_paste,
    embed_at,
    snake_embed_path,
    theorem2_coloring,
    theorem2_target,
    transpose,
)
from .blocks import modified_roichman_coloring, roichman_coloring, two_ribbon_coloring
from .bounds import BoundReport, degree_bound, edge_bound, grid_gamma_upper
from .grid import (
    EMPTY,
    GridGraph,
    PairSet,
    PartialColoring,
    VerificationReport,
    build_grid,
    realized_pairs,
    verify,
)
from .paths import (
    EulerianCircuit,
    PathColoring,
    achromatic_path_coloring,
    eulerian_circuit,
    extension_path_coloring,
    path_achromatic_number,
    reverse,
)
from .search import (
    SearchConfig,
    SearchOutcome,
    compute_gamma_exact,
    exhaustive_search,
    local_search,
)

__version__ = "0.1.0"
