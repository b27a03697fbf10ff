"""Minimal homothety expansion ratio for line transversals of convex polygons.

Each polygon is scaled about its vertex centroid by a common ratio ``c``; the
package finds the smallest ``c`` at which one line meets every scaled
polygon, the optimal lines, and a certificate that each optimal line touches
at least three scaled polygons lying on both of its sides.
"""
from .factor import Contact, VShapeProfile, correcting_factor, factor_profile, is_tangent, side_of
from .geometry import (
    Configuration,
    ConvexPolygon,
    Direction,
    DuplicateVertex,
    EmptyConfiguration,
    GeometryError,
    Line,
    NegativeRatio,
    NotConvex,
    Point,
    TooFewVertices,
    apply_homothety,
    scale_configuration,
    scale_polygon,
    signed_distance,
    support_value,
    validate_polygon,
)
from .solver import (
    Certificate,
    CertificateInvalid,
    DirectionalOptimum,
    Solution,
    SolverOptions,
    extract_certificate,
    feasible_offset_interval,
    min_c_for_direction,
    solve_minimal_expansion,
    transversal_exists,
)

__version__ = "0.1.0"
