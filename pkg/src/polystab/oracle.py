"""Brute-force cross-checks and a seeded random instance generator.

The brute-force minimum never forms the pairwise ratios the solver uses: for
every direction it bisects on ``c`` and tests whether the projected offset
intervals of the scaled polygons share a point.  Cost is
O(angle_steps * n * V + angle_steps * n * log(1/c_tol)), fine for test
corpora and not meant for production solves.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import ConvexHull

from . import kernels
from .factor import correcting_factor, side_of, default_tolerance
from .geometry import Configuration, GeometryError, validate_polygon
from .solver import Solution


def _grid_minima(values: np.ndarray) -> np.ndarray:
    prev, nxt = np.roll(values, 1), np.roll(values, -1)
    return np.nonzero((values <= prev) & (values <= nxt))[0]


def brute_force_c_m(
    config: Configuration,
    angle_steps: int = 100_000,
    c_tol: float = 1e-9,
    refine_steps: int = 2000,
    refine_candidates: int = 4,
) -> float:
    """Minimal expansion ratio by direction sweep and bisection on ``c``.

    After the uniform sweep, the best few grid minima are resampled on a
    grid ``refine_steps`` times finer spanning one coarse step on each side.
    """
    if angle_steps < 2 or c_tol <= 0:
        raise ValueError("need angle_steps >= 2 and c_tol > 0")
    packed = kernels.Packed(config)
    step = math.pi / angle_steps
    thetas = np.arange(angle_steps) * step
    values = kernels.bisect_cmin(*packed.project(thetas), c_tol)
    best = float(values.min())
    if best == 0.0:
        return 0.0

    minima = _grid_minima(values)
    minima = minima[np.argsort(values[minima], kind="stable")][:refine_candidates]
    for k in minima:
        fine = thetas[k] + np.linspace(-step, step, 2 * refine_steps + 1)
        best = min(best, float(kernels.bisect_cmin(*packed.project(fine), c_tol).min()))
    return best


def minimality_violations(config: Configuration, c: float, angle_steps: int = 100_000) -> int:
    """Number of grid directions admitting a line that meets every polygon scaled by ``c``."""
    packed = kernels.Packed(config)
    thetas = np.arange(angle_steps) * (math.pi / angle_steps)
    center, up, down = packed.project(thetas)
    lo, hi = kernels.feasible_bounds(center, up, down, c)
    return int(np.count_nonzero(lo <= hi))


@dataclass(frozen=True)
class InstanceRecipe:
    seed: int
    n_polygons: int
    vertices_range: tuple[int, int] = (3, 12)
    centroid_box: tuple[float, float, float, float] = (0.0, 0.0, 1.0, 1.0)
    radius_range: tuple[float, float] = (0.02, 0.12)

    def __post_init__(self):
        lo, hi = self.vertices_range
        x0, y0, x1, y1 = self.centroid_box
        r0, r1 = self.radius_range
        if self.n_polygons < 1:
            raise ValueError("n_polygons must be at least 1")
        if not (3 <= lo <= hi):
            raise ValueError(f"bad vertices_range {self.vertices_range}")
        if not (x0 <= x1 and y0 <= y1):
            raise ValueError(f"bad centroid_box {self.centroid_box}")
        if not (0 < r0 <= r1):
            raise ValueError(f"bad radius_range {self.radius_range}")


def random_instance(recipe: InstanceRecipe) -> Configuration:
    """Deterministic random configuration described by ``recipe``.

    Each polygon is the convex hull of points on a circle of random radius,
    translated so that its vertex mean is the sampled centroid.
    """
    rng = np.random.default_rng(recipe.seed)
    x0, y0, x1, y1 = recipe.centroid_box
    polygons = []
    for _ in range(recipe.n_polygons):
        center = np.array([rng.uniform(x0, x1), rng.uniform(y0, y1)])
        while True:
            k = int(rng.integers(recipe.vertices_range[0], recipe.vertices_range[1] + 1))
            radius = rng.uniform(*recipe.radius_range)
            angles = rng.uniform(0.0, 2.0 * math.pi, size=k)
            pts = radius * np.column_stack([np.cos(angles), np.sin(angles)])
            try:
                hull = pts[ConvexHull(pts).vertices]
            except Exception:  # qhull rejects flat point sets
                continue
            hull = hull - hull.mean(axis=0) + center
            try:
                polygons.append(validate_polygon(hull.tolist()))
            except GeometryError:
                continue
            break
    return Configuration(tuple(polygons))


@dataclass
class VerificationReport:
    oracle_c_m: float
    relative_error: float
    checks: dict[str, bool] = field(default_factory=dict)
    details: dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def verify_solution(
    config: Configuration,
    sol: Solution,
    angle_steps: int = 100_000,
    c_tol: float = 1e-10,
    oracle_tol: float = 1e-5,
    tangency_tol: float = 1e-7,
    margin: float = 1e-4,
) -> VerificationReport:
    """Recheck a solution from scratch.

    Checks: ``oracle`` (brute-force ratio agrees to ``oracle_tol`` relative,
    plus the bisection tolerance ``c_tol``),
    ``tangency`` (every line touches at least three scaled polygons with
    centroids on both sides), ``transversal`` (every line meets every scaled
    polygon) and ``minimality`` (no direction admits a transversal at
    ``c_m * (1 - margin)``).  Degenerate solutions get only the oracle check.
    """
    oracle = brute_force_c_m(config, angle_steps, c_tol)
    diff = abs(sol.c_m - oracle)
    report = VerificationReport(oracle_c_m=oracle, relative_error=diff / max(oracle, c_tol))
    # the oracle itself is only good to c_tol in absolute terms
    report.checks["oracle"] = diff <= oracle_tol * oracle + c_tol
    if sol.degenerate:
        return report

    rel = max(1.0, sol.c_m)
    tangency_ok = bool(sol.lines)
    transversal_ok = bool(sol.lines)
    per_line = []
    for line in sol.lines:
        factors = np.array([correcting_factor(p, line) for p in config.polygons])
        resid = np.abs(factors - sol.c_m) / rel
        touching = np.nonzero(resid <= tangency_tol)[0]
        sides = {side_of(config.polygons[i], line, default_tolerance(config.polygons[i])) for i in touching}
        ok = len(touching) >= 3 and {-1, 1} <= sides
        tangency_ok &= ok
        transversal_ok &= bool(factors.max() <= sol.c_m + tangency_tol * rel)
        per_line.append(
            {
                "tangent": [int(i) + 1 for i in touching],
                "sides": sorted(sides),
                "max_residual": float(resid[touching].max()) if touching.size else None,
                "max_factor": float(factors.max()),
            }
        )
    report.checks["tangency"] = tangency_ok
    report.checks["transversal"] = transversal_ok
    shrunk = sol.c_m * (1.0 - margin)
    violations = minimality_violations(config, shrunk, angle_steps)
    report.checks["minimality"] = violations == 0
    report.details["lines"] = per_line
    report.details["minimality_violations"] = violations
    return report
