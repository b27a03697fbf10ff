"""Command line entry point.

Exit codes: 0 success, 1 usage or I/O error, 2 parse/validation error,
3 verification failure.
"""
from __future__ import annotations

import argparse
import sys

import numpy as np

from . import io
from .factor import factor_profile, support_value
from .geometry import Direction
from .oracle import InstanceRecipe, brute_force_c_m, random_instance, verify_solution
from .solver import SolverOptions, solve_minimal_expansion
from .svg import render_svg

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_VERIFY = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _g(x: float) -> str:
    return "%.17g" % x


def _write(path, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_solve(args) -> int:
    config = io.parse_instance(args.instance)
    opts = SolverOptions(
        grid_size=args.grid,
        angle_tol=args.angle_tol,
        value_tol=args.value_tol,
        collinear_tol=args.collinear_tol,
        certificate_tol=args.certificate_tol,
    )
    sol = solve_minimal_expansion(config, opts)
    print(f"c_m = {_g(sol.c_m)}")
    print(f"classification = {sol.classification}")
    print(f"degenerate = {str(sol.degenerate).lower()}")
    for j, line in enumerate(sol.lines, start=1):
        a, b, c = line.coefficients()
        print(f"t{j}: theta = {_g(line.theta)}, offset = {_g(line.offset)}  ({_g(a)} x + {_g(b)} y = {_g(c)})")
    for j, cert in enumerate(sol.certificates, start=1):
        sides = " ".join("+" if s > 0 else "-" if s < 0 else "0" for s in cert.sides)
        print(f"t{j}: tangent {list(cert.tangent_indices)} sides [{sides}] valid = {str(cert.valid).lower()}")
    for lo, hi in sol.arcs:
        print(f"optimal arc: theta from {_g(lo)} to {_g(hi)}")
    if args.out:
        _write(args.out, io.write_result(sol, config))
    if args.svg:
        render_svg(config, sol, args.svg)
    return EXIT_OK


def _cmd_oracle(args) -> int:
    config = io.parse_instance(args.instance)
    print(f"c_m = {_g(brute_force_c_m(config, args.angle_steps, args.c_tol))}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    config = io.parse_instance(args.instance)
    sol, digest = io.parse_result(args.result)
    ok = True
    if digest != io.instance_digest(config):
        print("FAIL digest: result was computed for a different instance")
        ok = False
    report = verify_solution(config, sol, angle_steps=args.angle_steps, c_tol=args.c_tol)
    print(f"oracle c_m = {_g(report.oracle_c_m)}  relative error = {report.relative_error:.3e}")
    for name, passed in report.checks.items():
        print(f"{'PASS' if passed else 'FAIL'} {name}")
    ok = ok and report.passed
    return EXIT_OK if ok else EXIT_VERIFY


def _cmd_gen(args) -> int:
    recipe = InstanceRecipe(
        seed=args.seed,
        n_polygons=args.n,
        vertices_range=(args.min_vertices, args.max_vertices),
        centroid_box=tuple(args.box),
        radius_range=tuple(args.radius),
    )
    _write(args.out, io.write_instance(random_instance(recipe)))
    return EXIT_OK


def _cmd_profile(args) -> int:
    config = io.parse_instance(args.instance)
    if not 1 <= args.polygon <= len(config):
        raise _UsageError(f"--polygon must be between 1 and {len(config)}")
    poly = config.polygons[args.polygon - 1]
    direction = Direction(args.theta)
    prof = factor_profile(poly, direction)
    nx, ny = direction.normal
    span = args.span * max(support_value(poly, (nx, ny)), support_value(poly, (-nx, -ny)))
    offsets = prof.apex_offset + np.linspace(-span, span, 2 * args.samples + 1)
    print(f"# theta = {_g(direction.theta)} apex_offset = {_g(prof.apex_offset)} "
          f"slope_pos = {_g(prof.slope_pos)} slope_neg = {_g(prof.slope_neg)}")
    print("# offset factor")
    for b, c in zip(offsets, prof(offsets)):
        print(f"{_g(b)} {_g(c)}")
    return EXIT_OK


def _cmd_render(args) -> int:
    config = io.parse_instance(args.instance)
    sol = io.parse_result(args.result)[0] if args.result else None
    render_svg(config, sol, args.svg)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="polystab", description="Minimal homothety expansion ratio for line transversals.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", help="compute c_m, optimal lines and certificates")
    s.add_argument("instance")
    s.add_argument("--out", help="write the result file here")
    s.add_argument("--svg", help="also render an SVG drawing")
    d = SolverOptions()
    s.add_argument("--grid", type=int, default=d.grid_size)
    s.add_argument("--angle-tol", type=float, default=d.angle_tol)
    s.add_argument("--value-tol", type=float, default=d.value_tol)
    s.add_argument("--collinear-tol", type=float, default=None)
    s.add_argument("--certificate-tol", type=float, default=d.certificate_tol)
    s.set_defaults(func=_cmd_solve)

    o = sub.add_parser("oracle", help="brute-force estimate of c_m")
    o.add_argument("instance")
    o.add_argument("--angle-steps", type=int, default=100_000)
    o.add_argument("--c-tol", type=float, default=1e-10)
    o.set_defaults(func=_cmd_oracle)

    v = sub.add_parser("verify", help="recheck a result file against its instance")
    v.add_argument("instance")
    v.add_argument("result")
    v.add_argument("--angle-steps", type=int, default=100_000)
    v.add_argument("--c-tol", type=float, default=1e-10)
    v.set_defaults(func=_cmd_verify)

    g = sub.add_parser("gen", help="write a seeded random instance")
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--min-vertices", type=int, default=3)
    g.add_argument("--max-vertices", type=int, default=12)
    g.add_argument("--box", type=float, nargs=4, default=[0.0, 0.0, 1.0, 1.0], metavar=("X0", "Y0", "X1", "Y1"))
    g.add_argument("--radius", type=float, nargs=2, default=[0.02, 0.12], metavar=("RMIN", "RMAX"))
    g.add_argument("--out", default=None)
    g.set_defaults(func=_cmd_gen)

    f = sub.add_parser("profile", help="dump the V-shaped factor profile of one polygon")
    f.add_argument("instance")
    f.add_argument("--polygon", type=int, required=True, help="1-based polygon number")
    f.add_argument("--theta", type=float, required=True)
    f.add_argument("--samples", type=int, default=10, help="points per side of the apex")
    f.add_argument("--span", type=float, default=2.0, help="half-range in units of the strip half-width")
    f.set_defaults(func=_cmd_profile)

    r = sub.add_parser("render", help="draw an instance and optionally its solution")
    r.add_argument("instance")
    r.add_argument("result", nargs="?")
    r.add_argument("--svg", required=True)
    r.set_defaults(func=_cmd_render)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (io.ParseError, io.ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


run_cli = main

if __name__ == "__main__":
    sys.exit(main())
