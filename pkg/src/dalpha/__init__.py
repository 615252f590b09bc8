"""dalpha: distance alpha-matrix spectra of connected graphs.

The distance alpha-matrix of a connected graph G is
alpha*T(G) + (1-alpha)*D(G) for alpha in [0, 1), where D is the distance
matrix and T the diagonal matrix of vertex transmissions. This package
computes its spectrum, evaluates the known bounds on the spectral radius
with their equality characterizations, applies the monotone graft
rewrites, and verifies the extremal theorems exhaustively over censuses
of trees, unicyclic and connected graphs.
"""

from dalpha._version import __version__
from dalpha.bounds import (
    BoundReport,
    EigenvalueIntervalReport,
    all_bound_reports,
    bound_degree_diameter_upper,
    bound_max_transmission_upper,
    bound_mean_transmission,
    bound_order_lower,
    bound_transmission_gap_upper,
    bound_transmission_rowsum,
    bound_two_degrees_lower,
    check_nonmaximal_eigenvalues,
    interpolated_mean,
    nonmaximal_eigenvalue_interval,
    rowsum_matrix_bounds,
    transmission_gap_floor,
    unicyclic_pair_sum_floor,
)
from dalpha.canon import (
    CanonicalForm,
    are_isomorphic,
    automorphisms,
    canonical_form,
    exists_automorphism_mapping,
    find_isomorphism,
)
from dalpha.census import (
    Census,
    all_connected,
    all_trees,
    all_unicyclic,
    clique_number,
    filter_census,
    load_census,
    oracle_tree_census,
    oracle_unicyclic_count,
    save_census,
)
from dalpha.errors import (
    AlphaDomainError,
    ConfigError,
    ConvergenceError,
    DalphaError,
    Graph6Error,
    GraphInputError,
    LimitError,
    NotConnectedError,
    TransformError,
)
from dalpha.graph6 import emit_graph6, parse_graph6, parse_graph6_lines
from dalpha.graphs import (
    DistanceProfile,
    Graph,
    broom,
    complete_graph,
    cycle_graph,
    distance_profile,
    double_star,
    is_connected,
    is_transmission_regular,
    kite,
    path_graph,
    star_graph,
    star_plus_edge,
)
from dalpha.kernels import BACKEND
from dalpha.spectral import (
    AlphaMatrix,
    SpectralResult,
    Tolerances,
    alpha_energy,
    alpha_matrix,
    eigenequation_residual,
    full_spectrum,
    mu_of,
    rayleigh,
    spectral_radius,
    validate_alpha,
)
from dalpha.transforms import (
    TransformOutcome,
    attach_pendant_path,
    contract_cut_edge_to_pendant,
    evaluate_branch_relocation,
    evaluate_cut_edge_contraction,
    evaluate_neighbor_transfer,
    is_cut_edge,
    is_pendant_edge,
    is_quasi_pendant,
    pendant_paths_at,
    relocate_branches,
    shift_pendant_path_pair,
    shift_two_site_pendant_paths,
    transfer_neighbor_sets,
)
from dalpha.verify import (
    DEFAULT_ALPHA_GRID,
    SuiteConfig,
    TheoremReport,
    bounds_census_sweep,
    check_clique_max,
    check_global_max,
    check_max_degree_max,
    check_odd_unicyclic_max,
    check_tree_min,
    check_tree_second_min,
    check_unicyclic_min,
    reports_to_csv,
    reports_to_json,
    run_suite,
    suite_passed,
    transform_property_sweep,
)

__all__ = [
    "__version__",
    "BACKEND",
    "AlphaDomainError",
    "AlphaMatrix",
    "BoundReport",
    "CanonicalForm",
    "Census",
    "ConfigError",
    "ConvergenceError",
    "DalphaError",
    "DistanceProfile",
    "EigenvalueIntervalReport",
    "Graph",
    "Graph6Error",
    "GraphInputError",
    "LimitError",
    "NotConnectedError",
    "SpectralResult",
    "SuiteConfig",
    "TheoremReport",
    "Tolerances",
    "TransformError",
    "TransformOutcome",
    "DEFAULT_ALPHA_GRID",
    "all_bound_reports",
    "all_connected",
    "all_trees",
    "all_unicyclic",
    "alpha_energy",
    "alpha_matrix",
    "are_isomorphic",
    "attach_pendant_path",
    "automorphisms",
    "bound_degree_diameter_upper",
    "bound_max_transmission_upper",
    "bound_mean_transmission",
    "bound_order_lower",
    "bound_transmission_gap_upper",
    "bound_transmission_rowsum",
    "bound_two_degrees_lower",
    "bounds_census_sweep",
    "broom",
    "canonical_form",
    "check_clique_max",
    "check_global_max",
    "check_max_degree_max",
    "check_nonmaximal_eigenvalues",
    "check_odd_unicyclic_max",
    "check_tree_min",
    "check_tree_second_min",
    "check_unicyclic_min",
    "clique_number",
    "complete_graph",
    "contract_cut_edge_to_pendant",
    "cycle_graph",
    "distance_profile",
    "double_star",
    "emit_graph6",
    "eigenequation_residual",
    "evaluate_branch_relocation",
    "evaluate_cut_edge_contraction",
    "evaluate_neighbor_transfer",
    "exists_automorphism_mapping",
    "filter_census",
    "find_isomorphism",
    "full_spectrum",
    "interpolated_mean",
    "is_connected",
    "is_cut_edge",
    "is_pendant_edge",
    "is_quasi_pendant",
    "is_transmission_regular",
    "kite",
    "load_census",
    "mu_of",
    "nonmaximal_eigenvalue_interval",
    "oracle_tree_census",
    "oracle_unicyclic_count",
    "parse_graph6",
    "parse_graph6_lines",
    "path_graph",
    "pendant_paths_at",
    "rayleigh",
    "relocate_branches",
    "reports_to_csv",
    "reports_to_json",
    "rowsum_matrix_bounds",
    "run_suite",
    "save_census",
    "shift_pendant_path_pair",
    "shift_two_site_pendant_paths",
    "spectral_radius",
    "star_graph",
    "star_plus_edge",
    "suite_passed",
    "transfer_neighbor_sets",
    "transform_property_sweep",
    "transmission_gap_floor",
    "unicyclic_pair_sum_floor",
    "validate_alpha",
]
