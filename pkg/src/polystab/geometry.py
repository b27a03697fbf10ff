"""Planar primitives: points, canonical lines, convex polygons and homotheties.

The homothety center of a polygon is always its *vertex centroid*, the
arithmetic mean of its vertices.  This is not the area centroid that most
geometry libraries return.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import numpy as np

DUPLICATE_TOL = 1e-12


class GeometryError(ValueError):
    """Base class for invalid geometric input."""


class DuplicateVertex(GeometryError):
    pass


class NotConvex(GeometryError):
    pass


class TooFewVertices(GeometryError):
    pass


class NegativeRatio(GeometryError):
    pass


class EmptyConfiguration(GeometryError):
    pass


class Point(NamedTuple):
    x: float
    y: float


def _normalize_angle(theta: float) -> float:
    theta = math.fmod(theta, math.pi)
    if theta < 0.0:
        theta += math.pi
    if theta >= math.pi:
        theta = 0.0
    return theta


@dataclass(frozen=True)
class Direction:
    """Normal angle of an unoriented line, kept in [0, pi)."""

    theta: float

    def __post_init__(self):
        if not math.isfinite(self.theta):
            raise ValueError(f"non-finite angle {self.theta!r}")
        object.__setattr__(self, "theta", _normalize_angle(float(self.theta)))

    @property
    def normal(self) -> tuple[float, float]:
        return (math.cos(self.theta), math.sin(self.theta))


@dataclass(frozen=True)
class Line:
    """The line ``{x : n(theta) . x = offset}`` with theta in [0, pi).

    Use :meth:`from_normal` to build a line from an arbitrary angle; it flips
    the offset sign when the angle has to be reduced by pi.
    """

    direction: Direction
    offset: float

    def __post_init__(self):
        if not math.isfinite(self.offset):
            raise ValueError(f"non-finite offset {self.offset!r}")

    @classmethod
    def from_normal(cls, theta: float, offset: float) -> Line:
        # n(theta + pi) = -n(theta), so the same point set needs -offset
        k = math.floor(theta / math.pi)
        theta = theta - k * math.pi
        if k % 2:
            offset = -offset
        if theta >= math.pi:
            theta, offset = 0.0, -offset
        return cls(Direction(theta), float(offset))

    @classmethod
    def from_points(cls, p: Sequence[float], q: Sequence[float]) -> Line:
        dx, dy = q[0] - p[0], q[1] - p[1]
        if math.hypot(dx, dy) <= DUPLICATE_TOL:
            raise DuplicateVertex("a line needs two distinct points")
        theta = math.atan2(dx, -dy)  # normal (-dy, dx) rotated into angle form
        nx, ny = math.cos(theta), math.sin(theta)
        return cls.from_normal(theta, nx * p[0] + ny * p[1])

    @classmethod
    def from_coefficients(cls, a: float, b: float, c: float) -> Line:
        """Line ``a*x + b*y = c``."""
        norm = math.hypot(a, b)
        if norm == 0.0:
            raise ValueError("degenerate line coefficients")
        return cls.from_normal(math.atan2(b, a), c / norm)

    @property
    def theta(self) -> float:
        return self.direction.theta

    @property
    def normal(self) -> tuple[float, float]:
        return self.direction.normal

    def coefficients(self) -> tuple[float, float, float]:
        """Implicit form ``(a, b, c)`` with ``a*x + b*y = c`` and a unit normal."""
        nx, ny = self.normal
        return (nx, ny, self.offset)


def signed_distance(line: Line, p: Sequence[float]) -> float:
    nx, ny = line.normal
    return nx * p[0] + ny * p[1] - line.offset


def _cross(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


class ConvexPolygon:
    """Strictly convex polygon, counterclockwise, with cached vertex centroid.

    Build instances with :func:`validate_polygon`.  The constructor trusts its
    arguments.
    """

    __slots__ = ("vertices", "centroid", "_rel")

    def __init__(self, vertices: Sequence[Point], centroid: Point | None = None):
        self.vertices: tuple[Point, ...] = tuple(Point(float(x), float(y)) for x, y in vertices)
        if centroid is None:
            n = len(self.vertices)
            centroid = Point(
                math.fsum(v.x for v in self.vertices) / n,
                math.fsum(v.y for v in self.vertices) / n,
            )
        self.centroid = Point(float(centroid[0]), float(centroid[1]))
        rel = np.array(self.vertices, dtype=np.float64) - np.array(self.centroid)
        rel.setflags(write=False)
        self._rel = rel

    @property
    def relative_vertices(self) -> np.ndarray:
        """Vertices minus centroid, shape ``(V, 2)``, read-only."""
        return self._rel

    @property
    def area(self) -> float:
        v = self.vertices
        return 0.5 * math.fsum(v[i - 1].x * v[i].y - v[i].x * v[i - 1].y for i in range(len(v)))

    def scale(self) -> float:
        return max(max(abs(v.x), abs(v.y)) for v in self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __eq__(self, other):
        if not isinstance(other, ConvexPolygon):
            return NotImplemented
        return self.vertices == other.vertices and self.centroid == other.centroid

    def __hash__(self):
        return hash((self.vertices, self.centroid))

    def __repr__(self):
        return f"ConvexPolygon({list(map(tuple, self.vertices))!r})"


def validate_polygon(raw_vertices: Iterable[Sequence[float]]) -> ConvexPolygon:
    """Canonicalize raw vertices into a counterclockwise strictly convex polygon.

    Clockwise input is reversed and collinear vertices are dropped.  Raises
    :class:`TooFewVertices`, :class:`DuplicateVertex` or :class:`NotConvex`.
    """
    pts = [Point(float(p[0]), float(p[1])) for p in raw_vertices]
    if len(pts) < 3:
        raise TooFewVertices(f"polygon has {len(pts)} vertices, need at least 3")
    for p in pts:
        if not (math.isfinite(p.x) and math.isfinite(p.y)):
            raise GeometryError(f"non-finite vertex {tuple(p)}")
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if math.hypot(pts[i].x - pts[j].x, pts[i].y - pts[j].y) <= DUPLICATE_TOL:
                raise DuplicateVertex(f"vertices {i} and {j} coincide: {tuple(pts[i])}")

    if all(_cross(pts[0], pts[1], p) == 0.0 for p in pts[2:]):
        raise TooFewVertices("all vertices are collinear")

    # drop collinear vertices until every turn is strict
    changed = True
    while changed and len(pts) >= 3:
        changed = False
        for i in range(len(pts)):
            a, b, c = pts[i - 1], pts[i], pts[(i + 1) % len(pts)]
            if _cross(a, b, c) == 0.0:
                if (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y) < 0.0:
                    raise NotConvex(f"boundary doubles back at vertex {tuple(b)}")
                del pts[i]
                changed = True
                break
    if len(pts) < 3:
        raise TooFewVertices("fewer than 3 vertices remain after removing collinear points")

    turns = [_cross(pts[i - 1], pts[i], pts[(i + 1) % len(pts)]) for i in range(len(pts))]
    if all(t < 0 for t in turns):
        pts.reverse()
    elif not all(t > 0 for t in turns):
        raise NotConvex("polygon has a reflex turn")
    # all turns of one sign can still wind more than once (a star)
    winding = 0.0
    for i in range(len(pts)):
        a, b, c = pts[i - 1], pts[i], pts[(i + 1) % len(pts)]
        winding += math.atan2(_cross(a, b, c), (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y))
    if abs(winding - 2 * math.pi) > 1e-6:
        raise NotConvex("polygon boundary winds more than once")
    return ConvexPolygon(pts)


def support_value(polygon: ConvexPolygon, n: Sequence[float]) -> float:
    """Half-width of the minimal strip on side ``n``: max over vertices of n.(v - centroid)."""
    rel = polygon.relative_vertices
    return float(np.max(rel[:, 0] * n[0] + rel[:, 1] * n[1]))


def apply_homothety(p: Sequence[float], center: Sequence[float], c: float) -> Point:
    """``center + c * (p - center)``."""
    if not c >= 0.0:
        raise NegativeRatio(f"homothety ratio must be nonnegative, got {c}")
    return Point(center[0] + c * (p[0] - center[0]), center[1] + c * (p[1] - center[1]))


def scale_polygon(polygon: ConvexPolygon, c: float) -> ConvexPolygon:
    """Image of ``polygon`` under the homothety about its own centroid."""
    if not c > 0.0:
        raise NegativeRatio(f"polygon scaling ratio must be positive, got {c}")
    s = polygon.centroid
    return ConvexPolygon([apply_homothety(v, s, c) for v in polygon.vertices], centroid=s)


@dataclass(frozen=True)
class Configuration:
    """Ordered polygon system.  Results refer to polygons by 1-based number."""

    polygons: tuple[ConvexPolygon, ...] = field()

    def __post_init__(self):
        object.__setattr__(self, "polygons", tuple(self.polygons))
        if not self.polygons:
            raise EmptyConfiguration("configuration has no polygons")

    def __len__(self):
        return len(self.polygons)

    def __iter__(self):
        return iter(self.polygons)

    def __getitem__(self, i):
        return self.polygons[i]

    @property
    def centroids(self) -> np.ndarray:
        return np.array([p.centroid for p in self.polygons], dtype=np.float64)

    def scale(self) -> float:
        """Largest absolute vertex coordinate, floored at 1e-300."""
        return max(max(p.scale() for p in self.polygons), 1e-300)


def scale_configuration(config: Configuration, c: float) -> Configuration:
    return Configuration(tuple(scale_polygon(p, c) for p in config.polygons))
