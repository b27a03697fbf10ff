import math

import numpy as np
import pytest

from polystab import (
    CertificateInvalid,
    Configuration,
    Direction,
    Line,
    SolverOptions,
    correcting_factor,
    extract_certificate,
    feasible_offset_interval,
    min_c_for_direction,
    solve_minimal_expansion,
    transversal_exists,
)
from polystab.oracle import InstanceRecipe, random_instance

import brute
from conftest import random_polygon, square, squares

LINE_A = Line.from_coefficients(3, 2, 6)
LINE_B = Line.from_coefficients(3, -2, 6)


def test_reference_oracle_agrees_with_hand_values(three_squares):
    # the test-local bisection reproduces the hand-derived numbers frozen below
    two = brute.raw(squares((0, 0), (4, 0)))
    three = brute.raw(three_squares)
    assert brute.cmin_bisect(two, 0.0) == pytest.approx(2.0, rel=1e-10)
    assert brute.cmin_bisect(three, math.pi / 2) == pytest.approx(1.5, rel=1e-10)
    assert brute.cmin_bisect(three, LINE_A.theta) == pytest.approx(1.2, rel=1e-10)
    grid = np.linspace(0, math.pi, 3001, endpoint=False)
    assert min(brute.cmin_bisect(three, t, 1e-9) for t in grid) == pytest.approx(1.2, rel=1e-3)


def test_min_c_two_squares():
    opt = min_c_for_direction(squares((0, 0), (4, 0)), Direction(0.0))
    assert opt.c_star == 2.0
    assert opt.offset == 2.0
    assert opt.active_pairs == ((1, 2),)
    assert opt.feasible_width == 0.0


def test_min_c_two_squares_perpendicular():
    opt = min_c_for_direction(squares((0, 0), (4, 0)), Direction(math.pi / 2))
    assert opt.c_star == pytest.approx(0.0, abs=1e-15)
    assert opt.offset == pytest.approx(0.0, abs=1e-15)


def test_min_c_three_squares_vertical(three_squares):
    opt = min_c_for_direction(three_squares, Direction(math.pi / 2))
    assert opt.c_star == pytest.approx(1.5, rel=1e-15)
    assert opt.offset == pytest.approx(1.5, rel=1e-15)
    assert set(opt.active_pairs) == {(1, 3), (2, 3)}


def test_feasible_offset_interval_examples(three_squares):
    d = Direction(math.pi / 2)
    lo, hi = feasible_offset_interval(three_squares, 1.5, d)
    assert lo == pytest.approx(1.5) and hi == pytest.approx(1.5)
    assert feasible_offset_interval(three_squares, 2.0, d) == pytest.approx((1.0, 2.0))
    assert feasible_offset_interval(three_squares, 1.0, d) is None


def test_three_squares_solution(three_squares):
    sol = solve_minimal_expansion(three_squares)
    assert sol.c_m == pytest.approx(1.2, rel=1e-12)
    assert not sol.degenerate
    assert sol.classification == "initial_configuration"
    assert len(sol.lines) == 2
    for got, want in zip(sol.lines, (LINE_A, LINE_B)):
        assert got.theta == pytest.approx(want.theta, abs=1e-12)
        assert got.offset == pytest.approx(want.offset, abs=1e-12)
    first, second = sol.certificates
    assert first.tangent_indices == (1, 2, 3)
    assert first.sides == (-1, 1, 1)
    # same line as 3x - 2y = 6 with the canonical normal (-3, 2)/sqrt(13)
    assert second.sides == (1, -1, 1)
    assert max(first.residuals + second.residuals) <= 1e-9


def test_flat_arc_reports_ends_and_pair_change():
    # c* equals 1 for every normal angle in [pi/4, 3pi/4]
    cfg = squares((0, 0), (2, 2), (4, 0))
    sol = solve_minimal_expansion(cfg)
    assert sol.c_m == pytest.approx(1.0, rel=1e-12)
    assert [l.theta for l in sol.lines] == pytest.approx([math.pi / 4, math.pi / 2, 3 * math.pi / 4], abs=1e-12)
    assert sol.lines[1].offset == pytest.approx(1.0, abs=1e-12)
    assert all(c.valid and c.tangent_indices == (1, 2, 3) for c in sol.certificates)
    (lo, hi), = sol.arcs
    assert (lo, hi) == pytest.approx((math.pi / 4, 3 * math.pi / 4), abs=1e-12)
    for t in np.linspace(lo, hi, 7):
        assert min_c_for_direction(cfg, Direction(t)).c_star == pytest.approx(1.0, rel=1e-12)


def test_isolated_optima_have_no_arcs(three_squares):
    assert solve_minimal_expansion(three_squares).arcs == ()


def test_extract_certificate_examples(three_squares):
    cert = extract_certificate(three_squares, 1.2, LINE_A, 1e-9)
    assert cert.valid and cert.tangent_indices == (1, 2, 3)
    cert = extract_certificate(three_squares, 1.2, LINE_B, 1e-9)
    assert cert.valid and cert.sides == (1, -1, 1)
    with pytest.raises(CertificateInvalid):
        extract_certificate(three_squares, 1.2, Line.from_coefficients(0, 1, 1.5), 1e-9)


@pytest.mark.parametrize("centers", [[(0, 0), (4, 0)], [(1, 5), (-3, 2)], [(0, 0), (4, 0), (2, 0)]])
def test_degenerate(centers):
    cfg = squares(*centers)
    sol = solve_minimal_expansion(cfg)
    assert sol.degenerate and sol.c_m == 0.0 and sol.certificates == ()
    (line,) = sol.lines
    for p in cfg:
        assert abs(correcting_factor(p, line)) <= 1e-12


def test_single_polygon():
    cfg = Configuration((square(3, -2),))
    sol = solve_minimal_expansion(cfg)
    assert sol.degenerate and sol.c_m == 0.0
    assert transversal_exists(cfg)


def test_transversal_exists(three_squares):
    assert not transversal_exists(three_squares)
    near = squares((0, 0), (4, 0), (2, 0.1))
    assert transversal_exists(near)
    assert solve_minimal_expansion(near).c_m <= 0.05 + 1e-12


def test_inner_solve_matches_offset_scan(rng):
    for _ in range(60):
        n = int(rng.integers(3, 8))
        cfg = Configuration(tuple(random_polygon(rng, center=rng.uniform(-5, 5, 2)) for _ in range(n)))
        theta = rng.uniform(0, math.pi)
        opt = min_c_for_direction(cfg, Direction(theta))
        scan = brute.dense_offset_scan(brute.raw(cfg), theta)
        assert opt.c_star == pytest.approx(scan, rel=1e-6)
        factors = [correcting_factor(p, Line(opt.direction, opt.offset)) for p in cfg]
        assert max(factors) == pytest.approx(opt.c_star, rel=1e-10)


@pytest.mark.parametrize("seed", range(1, 13))
def test_certificates_on_random_instances(seed):
    cfg = random_instance(InstanceRecipe(seed, 3 + seed % 8))
    sol = solve_minimal_expansion(cfg)
    for line, cert in zip(sol.lines, sol.certificates):
        assert cert.valid
        assert max(cert.residuals) <= 1e-9
        assert extract_certificate(cfg, sol.c_m, line, 1e-7) == cert


def test_deterministic(rng):
    cfg = random_instance(InstanceRecipe(99, 8))
    assert solve_minimal_expansion(cfg) == solve_minimal_expansion(cfg)


def test_options_validation():
    with pytest.raises(ValueError):
        SolverOptions(grid_size=2)
    with pytest.raises(ValueError):
        SolverOptions(angle_tol=0.0)


def test_coarse_grid_still_finds_optimum(three_squares):
    sol = solve_minimal_expansion(three_squares, SolverOptions(grid_size=64))
    assert sol.c_m == pytest.approx(1.2, rel=1e-12)
    assert sol.diagnostics.grid_size == 64
    assert sol.diagnostics.bracket_width <= 1e-10
