"""Minimal expansion ratio of a polygon system and its optimal transversals.

For a fixed normal direction ``n`` the image of polygon ``i`` scaled by ``c``
projects onto the offset interval ``[C_i - c*down_i, C_i + c*up_i]`` with
``C_i = n.S_i``, ``up_i = w_i(n)`` and ``down_i = w_i(-n)``.  A line with
normal ``n`` meets every scaled polygon iff all intervals share a point, so
the smallest such ``c`` is

    c*(n) = max(0, max over i != j of (C_j - C_i) / (up_i + down_j)).

The pair ``(i, j)`` reads "polygon i on the low side, polygon j on the high
side".  The minimal expansion ratio is the minimum of ``c*`` over the
direction angle in [0, pi); it is found on a uniform grid, every grid local
minimum is shrunk by golden-section search, and the result is polished by
solving for the crossing of the two pair ratios active on either side.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from . import kernels
from .factor import Contact, correcting_factor, default_tolerance, is_tangent, side_of
from .geometry import (
    Configuration,
    Direction,
    Line,
    scale_polygon,
    support_value,
)

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
INITIAL = "initial_configuration"
HAS_TRANSVERSAL = "has_transversal"


class CertificateInvalid(RuntimeError):
    """An optimal line failed the three-tangent-polygon check.

    This points at a solver bug or a tolerance set too tight, not bad input.
    """


@dataclass(frozen=True)
class SolverOptions:
    grid_size: int = 4096
    angle_tol: float = 1e-10
    value_tol: float = 1e-7
    collinear_tol: float | None = None  # None: 1e-9 * instance scale
    certificate_tol: float = 1e-7

    def __post_init__(self):
        if self.grid_size < 3:
            raise ValueError("grid_size must be at least 3")
        if not (self.angle_tol > 0 and self.value_tol >= 0 and self.certificate_tol >= 0):
            raise ValueError("tolerances must be nonnegative (angle_tol positive)")


@dataclass(frozen=True)
class DirectionalOptimum:
    direction: Direction
    c_star: float
    offset: float
    feasible_width: float
    active_pairs: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Certificate:
    tangent_indices: tuple[int, ...]
    contacts: tuple[Contact, ...]
    sides: tuple[int, ...]
    residuals: tuple[float, ...]

    @property
    def valid(self) -> bool:
        return len(self.tangent_indices) >= 3 and -1 in self.sides and 1 in self.sides


@dataclass(frozen=True)
class Diagnostics:
    grid_size: int = 0
    refinement_iterations: int = 0
    bracket_width: float = 0.0


@dataclass(frozen=True)
class Solution:
    c_m: float
    lines: tuple[Line, ...]
    certificates: tuple[Certificate, ...]
    degenerate: bool
    classification: str
    diagnostics: Diagnostics = field(default_factory=Diagnostics)
    # (theta_start, theta_end) of direction arcs on which every line is optimal;
    # theta_end < theta_start means the arc wraps through 0
    arcs: tuple[tuple[float, float], ...] = ()


def _pair_matrix(center, up, down):
    """Ratios R[i, j] = (C_j - C_i) / (up_i + down_j) for one direction, diagonal -inf."""
    r = (center[None, :] - center[:, None]) / (up[:, None] + down[None, :])
    np.fill_diagonal(r, -np.inf)
    return r


class _Evaluator:
    """Caches the packed configuration and evaluates c* along the angle."""

    def __init__(self, config: Configuration):
        self.packed = kernels.Packed(config)
        self.evaluations = 0

    def cstar(self, thetas) -> np.ndarray:
        center, up, down = self.packed.project(thetas)
        self.evaluations += center.shape[0]
        return kernels.pairwise_cstar(center, up, down)

    def cstar1(self, theta: float) -> float:
        return float(self.cstar(theta)[0])

    def pair_ratios(self, theta: float) -> np.ndarray:
        center, up, down = self.packed.project(theta)
        return _pair_matrix(center[0], up[0], down[0])

    def bounds(self, theta: float, c: float) -> tuple[float, float]:
        center, up, down = self.packed.project(theta)
        lo, hi = kernels.feasible_bounds(center, up, down, c)
        return float(lo[0]), float(hi[0])


def _directional(ev: _Evaluator, theta: float) -> DirectionalOptimum:
    ratios = ev.pair_ratios(theta)
    c_star = max(0.0, ev.cstar1(theta))
    lo, hi = ev.bounds(theta, c_star)
    pairs: tuple[tuple[int, int], ...] = ()
    if c_star > 0.0:
        ii, jj = np.nonzero(ratios >= c_star * (1.0 - 1e-9))
        pairs = tuple((int(i) + 1, int(j) + 1) for i, j in zip(ii, jj))
    line = Line.from_normal(theta, 0.5 * (lo + hi))
    return DirectionalOptimum(
        direction=line.direction,
        c_star=c_star,
        offset=line.offset,
        feasible_width=max(0.0, hi - lo),
        active_pairs=pairs,
    )


def min_c_for_direction(config: Configuration, direction: Direction) -> DirectionalOptimum:
    """Exact minimum over line offsets of the largest correcting factor at ``direction``."""
    return _directional(_Evaluator(config), direction.theta)


def feasible_offset_interval(config: Configuration, c: float, direction: Direction):
    """Offsets of lines with this normal meeting every polygon scaled by ``c``.

    Returns ``(lo, hi)`` or ``None`` when no such line exists.
    """
    if c < 0:
        raise ValueError("scaling ratio must be nonnegative")
    center, up, down = kernels.Packed(config).project(direction.theta)
    lo, hi = kernels.feasible_bounds(center, up, down, c)
    if lo[0] > hi[0]:
        return None
    return float(lo[0]), float(hi[0])


def _collinear_line(config: Configuration, tol: float) -> Line | None:
    """Least-squares line through the centroids if all lie within ``tol`` of it."""
    pts = config.centroids
    mean = pts.mean(axis=0)
    x = pts - mean
    _, _, vt = np.linalg.svd(x, full_matrices=True)
    normal = vt[-1]
    if len(pts) >= 3 and np.max(np.abs(x @ normal)) > tol:
        return None
    theta = math.atan2(normal[1], normal[0])
    return Line.from_normal(theta, float(normal @ mean))


def _golden(f, a: float, b: float, tol: float):
    """Golden-section search on [a, b]; returns (x, f(x), iterations, final width)."""
    x1 = b - INV_PHI * (b - a)
    x2 = a + INV_PHI * (b - a)
    f1, f2 = f(x1), f(x2)
    it = 0
    while b - a > tol and it < 200:
        it += 1
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - INV_PHI * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + INV_PHI * (b - a)
            f2 = f(x2)
    x, fx = (x1, f1) if f1 <= f2 else (x2, f2)
    return x, fx, it, b - a, a, b


def _crossing(ev: _Evaluator, a: float, b: float):
    """Angle in [a, b] where the pair ratio maximal at ``a`` meets the one maximal at ``b``."""
    ra, rb = ev.pair_ratios(a), ev.pair_ratios(b)
    pa = np.unravel_index(np.argmax(ra), ra.shape)
    pb = np.unravel_index(np.argmax(rb), rb.shape)
    if pa == pb:
        return None

    def gap(t):
        r = ev.pair_ratios(t)
        return r[pa] - r[pb]

    ga, gb = gap(a), gap(b)
    if not (ga >= 0.0 >= gb) or ga == gb:
        return None
    return brentq(gap, a, b, xtol=1e-300, rtol=4 * np.finfo(float).eps, maxiter=200)


def _polish(ev: _Evaluator, a: float, b: float, x: float, fx: float):
    """Move ``x`` to the pair crossing inside [a, b] if that is no worse."""
    root = _crossing(ev, a, b)
    if root is None:
        return x, fx
    froot = ev.cstar1(root)
    if froot <= fx:
        return root, froot
    return x, fx


def _arc_edge(ev: _Evaluator, outside: float, inside: float, cutoff: float, tol: float):
    """Angle between ``outside`` and ``inside`` where c* drops to the minimum.

    ``inside`` should be a point of the arc away from its ends, so that its
    active pair is the one holding the minimum.
    """
    a, b = sorted((outside, inside))
    root = _crossing(ev, a, b)
    if root is not None and ev.cstar1(root) <= cutoff:
        return root
    while abs(inside - outside) > tol:
        mid = 0.5 * (inside + outside)
        if ev.cstar1(mid) <= cutoff:
            inside = mid
        else:
            outside = mid
    return inside


def _flat_runs(flat: np.ndarray) -> list[tuple[int, int]]:
    """Circular runs of at least two consecutive True entries, as (first, last)."""
    m = len(flat)
    if flat.all():
        return []
    start = int(np.argmin(flat))
    runs, run = [], []
    for k in [(start + i) % m for i in range(1, m + 1)]:
        if flat[k]:
            run.append(k)
        else:
            if len(run) >= 2:
                runs.append((run[0], run[-1]))
            run = []
    return runs


def _angle_gap(a: float, b: float) -> float:
    d = abs(a - b) % math.pi
    return min(d, math.pi - d)


def solve_minimal_expansion(config: Configuration, opts: SolverOptions | None = None) -> Solution:
    """Minimal expansion ratio, every optimal transversal, and their certificates."""
    opts = opts or SolverOptions()
    scale = config.scale()
    collinear_tol = opts.collinear_tol if opts.collinear_tol is not None else 1e-9 * scale

    line = _collinear_line(config, collinear_tol)
    if line is not None:
        return Solution(
            c_m=0.0,
            lines=(line,),
            certificates=(),
            degenerate=True,
            classification=HAS_TRANSVERSAL,
        )

    ev = _Evaluator(config)
    m = opts.grid_size
    step = math.pi / m
    grid = np.arange(m) * step
    values = ev.cstar(grid)

    # c* has period pi, so the grid is circular
    prev, nxt = np.roll(values, 1), np.roll(values, -1)
    minima = np.nonzero((values <= prev) & (values <= nxt))[0]

    candidates = []
    iterations = 0
    for k in minima:
        t0 = grid[k] - step
        t1 = grid[k] + step
        x, fx, it, width, a, b = _golden(ev.cstar1, t0, t1, opts.angle_tol)
        iterations += it
        if values[k] < fx:
            x, fx = float(grid[k]), float(values[k])
        x, fx = _polish(ev, a, b, x, fx)
        candidates.append((fx, x % math.pi, width))

    candidates.sort()
    c_m = candidates[0][0]
    cutoff = c_m + opts.value_tol * max(1.0, c_m)

    # a whole arc of directions can be optimal; report its two ends, where a
    # third polygon becomes tangent, instead of every grid point on it
    arcs = []
    for k0, k1 in _flat_runs(values <= cutoff):
        run = grid[k0] + np.arange((k1 - k0) % m + 1) * step
        lo_t = _arc_edge(ev, run[0] - step, run[1], cutoff, opts.angle_tol)
        hi_t = _arc_edge(ev, run[-1] + step, run[-2], cutoff, opts.angle_tol)
        span = hi_t - lo_t
        candidates = [c for c in candidates if (c[1] - lo_t) % math.pi > span + opts.angle_tol
                      and (lo_t - c[1]) % math.pi > opts.angle_tol]
        ends = [lo_t, hi_t]
        # the active pair can change inside the arc; those crossings touch three polygons too
        for a, b in zip(run[1:-2], run[2:-1]):
            x = _crossing(ev, a, b)
            if x is not None and ev.cstar1(x) <= cutoff:
                ends.append(x)
        for t in ends:
            candidates.append((ev.cstar1(t), t % math.pi, 0.0))
        arcs.append((lo_t % math.pi, hi_t % math.pi))
    candidates.sort()
    chosen: list[tuple[float, float, float]] = []
    for fx, x, width in candidates:
        if fx > cutoff:
            break
        if any(_angle_gap(x, y) <= 10 * opts.angle_tol for _, y, _ in chosen):
            continue
        chosen.append((fx, x, width))

    lines = []
    certificates = []
    for fx, x, _ in chosen:
        opt = _directional(ev, x)
        line = Line(opt.direction, opt.offset)
        lines.append(line)
        certificates.append(extract_certificate(config, c_m, line, opts.certificate_tol, strict=False))
    order = sorted(range(len(lines)), key=lambda i: (lines[i].theta, lines[i].offset))

    return Solution(
        c_m=c_m,
        lines=tuple(lines[i] for i in order),
        certificates=tuple(certificates[i] for i in order),
        degenerate=False,
        classification=INITIAL if c_m > 1.0 + opts.value_tol else HAS_TRANSVERSAL,
        diagnostics=Diagnostics(
            grid_size=m,
            refinement_iterations=iterations,
            bracket_width=float(max(w for _, _, w in chosen)),
        ),
        arcs=tuple(sorted(arcs)),
    )


def extract_certificate(
    config: Configuration, c_m: float, line: Line, tol: float = 1e-7, strict: bool = True
) -> Certificate:
    """Polygons whose correcting factor for ``line`` equals ``c_m`` within ``tol`` (relative).

    With ``strict`` a certificate with fewer than three tangent polygons, or
    with all of them on one side, raises :class:`CertificateInvalid`.
    """
    rel = max(1.0, c_m)
    nx, ny = line.normal
    indices, contacts, sides, residuals = [], [], [], []
    for i, poly in enumerate(config.polygons, start=1):
        resid = abs(correcting_factor(poly, line) - c_m) / rel
        if resid > tol:
            continue
        contact = Contact.NONE
        if c_m > 0.0:
            scaled = scale_polygon(poly, c_m)
            width = max(support_value(poly, (nx, ny)), support_value(poly, (-nx, -ny)))
            geom_tol = max(default_tolerance(scaled), 2.0 * tol * rel * width)
            _, contact = is_tangent(scaled, line, geom_tol)
        indices.append(i)
        contacts.append(contact)
        sides.append(side_of(poly, line, default_tolerance(poly)))
        residuals.append(resid)
    cert = Certificate(tuple(indices), tuple(contacts), tuple(sides), tuple(residuals))
    if strict and not cert.valid:
        raise CertificateInvalid(
            f"line theta={line.theta!r} offset={line.offset!r}: tangent polygons "
            f"{cert.tangent_indices} with sides {cert.sides}"
        )
    return cert


def transversal_exists(config: Configuration, opts: SolverOptions | None = None) -> bool:
    opts = opts or SolverOptions()
    return solve_minimal_expansion(config, opts).c_m <= 1.0 + opts.value_tol
