"""Cutwidth, circular cutwidth, degeneracy and uniform sparsity of small graphs,
with exact checks of the quadratic cutwidth lower bounds built from them."""

__version__ = "0.1.0"

from .errors import CapacityError, GraphFormatError
from .graph import (
    Graph,
    all_labeled_graphs,
    all_labeled_trees,
    generate_complete,
    generate_cycle,
    generate_hypercube,
    generate_path,
    generate_petersen,
    generate_random_gnp,
    generate_random_kpartite,
    generate_random_tree,
    generate_star,
    generate_turan,
    generate_turan_modular,
    has_clique,
    induced_subgraph,
    is_triangle_free,
    parse_edge_list,
    parse_graph6,
    serialize_edge_list,
    serialize_graph6,
)
from .degeneracy import (CoreDecomposition, core_decomposition, degeneracy, degeneracy_core,
                         greedy_color, is_proper_coloring, k_core)
from .solvers import (
    CutwidthResult,
    LinearOrdering,
    cut_profile,
    exact_cutwidth_bruteforce,
    exact_cutwidth_dp,
    heuristic_cutwidth,
    turan_crossing_bound,
    turan_crossing_bound_max,
    turan_natural_ordering,
)
from .circular import (
    CircularLayout,
    circular_congestion,
    exact_circular_cutwidth,
    line_layout_embed,
)
from .bounds import (
    BoundReport,
    SparsityParams,
    bound_clique_free,
    bound_eq_main,
    bound_eq_main2,
    bound_general,
    bound_triangle_free,
    guard_eq_main,
    is_lambda_sparse,
    is_uniformly_sparse,
    max_uniform_lambda,
    turan_envelope,
    turan_sparsity_lambda,
    verify_theorem_on_graph,
)
