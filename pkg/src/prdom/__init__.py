"""Perfect Roman domination on trees and forests.

Exact solvers (linear tree DP plus exhaustive small-graph ground truth),
vertex-deletion stability, and the constructive family of stable trees with
recognition, certificates, and exhaustive cross-validation sweeps.
"""

__version__ = "0.1.0"

from .canonical import CanonicalForm, canonical_form, centroids
from .enumeration import (
    FREE_TREE_MAX_N,
    all_labeled_trees,
    enumerate_free_trees,
    random_labeled_tree,
    tree_from_prufer,
)
from .family import (
    FAMILY_MAX_N,
    Certificate,
    FamilyIndex,
    InvalidStepError,
    RecognitionResult,
    Step,
    check_stable_profile,
    enumerate_family,
    grow,
    parse_certificate,
    recognize,
    replay_certificate,
    serialize_certificate,
)
from .graph6 import GRAPH6_MAX_N, emit_graph6, parse_graph6
from .graphs import (
    Forest,
    Graph,
    ParseError,
    Tree,
    delete_vertices,
    diameter,
    emit_edge_list,
    leaves_of,
    longest_path,
    make_double_star,
    make_path,
    make_spider,
    make_star,
    parse_edge_list,
    remove_vertex,
)
from .solver import (
    BRUTE_FORCE_MAX_N,
    INFEASIBLE,
    Assignment,
    SizeLimitError,
    StateTable,
    brute_force,
    forced_zero_set,
    is_valid_prdf,
    optimal_assignment,
    prd_number,
    prd_number_forced,
)
from .stability import (
    OPTIMA_SCAN_MAX_N,
    BranchSite,
    OptimaReport,
    StabilityReport,
    attach_pendant_path,
    branch_sites,
    optima_report,
    stability_report,
)
from .sweeps import (
    attachment_delta_sweep,
    characterization_sweep,
    optima_structure_sweep,
)

__all__ = [
    "Assignment",
    "BranchSite",
    "BRUTE_FORCE_MAX_N",
    "CanonicalForm",
    "Certificate",
    "FAMILY_MAX_N",
    "FREE_TREE_MAX_N",
    "FamilyIndex",
    "Forest",
    "GRAPH6_MAX_N",
    "Graph",
    "INFEASIBLE",
    "InvalidStepError",
    "OPTIMA_SCAN_MAX_N",
    "OptimaReport",
    "ParseError",
    "RecognitionResult",
    "SizeLimitError",
    "StabilityReport",
    "StateTable",
    "Step",
    "Tree",
    "all_labeled_trees",
    "attach_pendant_path",
    "attachment_delta_sweep",
    "branch_sites",
    "brute_force",
    "canonical_form",
    "centroids",
    "characterization_sweep",
    "check_stable_profile",
    "delete_vertices",
    "diameter",
    "emit_edge_list",
    "emit_graph6",
    "enumerate_family",
    "enumerate_free_trees",
    "forced_zero_set",
    "grow",
    "is_valid_prdf",
    "leaves_of",
    "longest_path",
    "make_double_star",
    "make_path",
    "make_spider",
    "make_star",
    "optima_report",
    "optima_structure_sweep",
    "optimal_assignment",
    "parse_certificate",
    "parse_edge_list",
    "parse_graph6",
    "prd_number",
    "prd_number_forced",
    "random_labeled_tree",
    "recognize",
    "remove_vertex",
    "replay_certificate",
    "serialize_certificate",
    "stability_report",
    "tree_from_prufer",
]
