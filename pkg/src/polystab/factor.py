"""Correcting factors of a polygon with respect to a line.

The correcting factor of ``P`` for line ``q`` is the ratio ``c >= 0`` at which
``q`` is tangent to the homothetic image of ``P`` about its centroid.  With
``d`` the signed distance of the centroid to ``q`` it is ``d / w(-n)`` for
``d > 0`` and ``-d / w(n)`` for ``d < 0``, where ``w`` is the support value:
the distance to the line over the strip half-width on the line's side.
At fixed direction this is a V-shaped, two-piece linear function of the
line offset, zero at the offset of the parallel line through the centroid.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .geometry import ConvexPolygon, Direction, Line, signed_distance, support_value


class Contact(str, enum.Enum):
    VERTEX = "vertex"
    EDGE = "edge"
    NONE = "none"


def correcting_factor(polygon: ConvexPolygon, line: Line) -> float:
    nx, ny = line.normal
    d = signed_distance(line, polygon.centroid)
    if d > 0.0:
        return d / support_value(polygon, (-nx, -ny))
    if d < 0.0:
        return -d / support_value(polygon, (nx, ny))
    return 0.0


@dataclass(frozen=True)
class VShapeProfile:
    """Correcting factor as a function of the line offset ``b`` at fixed direction.

    ``slope_pos = 1/w(n)`` applies for ``b > apex_offset`` (line shifted
    along ``n``), ``slope_neg = 1/w(-n)`` for ``b < apex_offset``.
    """

    direction: Direction
    apex_offset: float
    slope_pos: float
    slope_neg: float

    def __call__(self, b):
        d = self.apex_offset - np.asarray(b, dtype=np.float64)
        out = np.where(d > 0.0, d * self.slope_neg, -d * self.slope_pos) + 0.0
        return float(out) if out.ndim == 0 else out


def factor_profile(polygon: ConvexPolygon, direction: Direction) -> VShapeProfile:
    nx, ny = direction.normal
    s = polygon.centroid
    return VShapeProfile(
        direction=direction,
        apex_offset=nx * s[0] + ny * s[1],
        slope_pos=1.0 / support_value(polygon, (nx, ny)),
        slope_neg=1.0 / support_value(polygon, (-nx, -ny)),
    )


def side_of(polygon: ConvexPolygon, line: Line, tol: float = 0.0) -> int:
    """Side of the line holding the centroid: -1, 0 or +1 (0 within ``tol``)."""
    d = signed_distance(line, polygon.centroid)
    if abs(d) <= tol:
        return 0
    return 1 if d > 0 else -1


def default_tolerance(polygon: ConvexPolygon) -> float:
    return 1e-9 * polygon.scale()


def is_tangent(polygon: ConvexPolygon, line: Line, tol: float | None = None) -> tuple[bool, Contact]:
    """Whether ``line`` supports ``polygon`` and how it touches it.

    Tangent means some vertex is within ``tol`` of the line and every vertex
    lies on one closed side.  The contact is an edge when two adjacent
    vertices are within ``tol``.
    """
    if tol is None:
        tol = default_tolerance(polygon)
    nx, ny = line.normal
    v = np.asarray(polygon.vertices)
    d = v[:, 0] * nx + v[:, 1] * ny - line.offset
    near = np.abs(d) <= tol
    one_side = bool(np.all(d >= -tol) or np.all(d <= tol))
    if not (near.any() and one_side):
        return False, Contact.NONE
    if np.any(near & np.roll(near, 1)):
        return True, Contact.EDGE
    return True, Contact.VERTEX
