"""Planar spanning subgraphs of unit disk graphs with bounded edge length."""

from ._kernels import BACKEND as KERNEL_BACKEND
from .geometry import (
    DIST_TOL,
    Orientation,
    Point,
    PointSet,
    Segment,
    angle_at,
    make_segment,
    orientation,
    point_set,
    properly_cross,
    validate_general_position,
)
from .udg import (
    EdgeKind,
    GeometricGraph,
    Property,
    VerificationReport,
    audit,
    biconnected_components,
    build_udg,
    min_radius_for,
)
from .spanning import (
    Color,
    ColoredForest,
    MinDegreeError,
    SnnEdge,
    euclidean_mst,
    nearest_neighbor_forest,
    snn_edges,
)
from .crossing import (
    CrossingKind,
    CrossingRecord,
    classify,
    planar_min_degree_two,
    tie_length_bound,
)
from .augmentation import (
    approximation_ratio,
    find_arduous,
    two_edge_connected_blocks,
    two_edge_connected_r2,
    two_edge_connected_sqrt5,
)
from .oracle import (
    OracleResult,
    OracleTimeout,
    exists_planar_subgraph,
    optimal_planar_radius,
)
from . import fixtures

__version__ = "0.1.0"
