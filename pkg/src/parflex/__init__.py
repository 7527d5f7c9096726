"""Flexibility of planar parallelogram frameworks.

Angle-preserving classes, walk-independence, explicit flexes, NAC-colorings,
Cartesian product embeddings, cyclic symmetry and tessellation patches.
"""
from .apc import (
    APCPartition, BraceSuggestion, DisjointSet, InducedK2s, brace_candidates, compute_apc, compute_ribbons,
    detect_induced_k2s, is_edge_cut, is_p_framework, suggest_braces,
)
from .core import (
    EXACT, Framework, Graph, Placement, ToleranceConfig, ValidationReport, all_four_cycles, complete_graph,
    cycle_graph, degenerate_triangles, edge_key, enumerate_cycles, validate_parallelogram_placement,
)
from .errors import (
    ConsistencyError, DisconnectedGraphError, DocumentError, FrameworkError, GraphError, ParflexError,
    PartitionError, RigidError, SymmetryError, TilingError, WalkIndependenceError,
)
from .flex import (
    FlexParametrization, InfinitesimalFlex, RigidityVerdict, decompose, evaluate_flex, infinitesimal_flex,
    rigidity_matrix, rigidity_matrix_rank, rigidity_verdict, rot,
)
from .io import FrameworkDocument, parse_document, read_document, serialize_document, write_document
from .nac import (
    BLUE, RED, EdgeColoring, colorings_from_apc, induced_cycles, is_cartesian_nac, is_nac, verify_color_changes,
)
from .product import ProductEmbedding, QuotientGraph, embed, quotient_graphs
from .render import RenderSpec, Sweep, render_svg
from .symmetry import (
    CyclicAction, action_from_rotation, compute_cn_apc, evaluate_cn_flex, is_cn_symmetric_nac,
    validate_cn_symmetric,
)
from .tilings import Patch, TilingSpec, augment_hexagons, generate_patch
from .walk import WalkIndependenceReport, WalkViolation, check_walk_independence

__version__ = "0.1.0"
