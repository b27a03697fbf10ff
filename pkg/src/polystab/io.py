"""Instance and result files.

Both are JSON documents.  Floats are written with 17 significant digits so a
write/read cycle reproduces every double exactly.

Instance::

    {"version": 1, "polygons": [[[x, y], [x, y], ...], ...]}

Result::

    {"version": 1, "c_m": ..., "classification": "initial_configuration",
     "degenerate": false,
     "lines": [{"theta": ..., "offset": ..., "implicit": {"a": .., "b": .., "c": ..}}],
     "certificates": [{"tangent_indices": [...], "contacts": [...],
                       "sides": [...], "residuals": [...]}],
     "diagnostics": {"grid_size": .., "refinement_iterations": .., "bracket_width": ..},
     "arcs": [[theta_start, theta_end], ...],
     "instance_digest": "sha256:..."}

``(theta, offset)`` is authoritative; ``implicit`` is ``a*x + b*y = c`` with a
unit normal, for reading only.  Polygon numbers are 1-based in file order.
``arcs`` lists direction ranges on which every line is optimal (usually
empty); the lines at their ends and at pair changes inside are in ``lines``.
"""
from __future__ import annotations

import hashlib
import json
import math
from pathlib import Path

from .factor import Contact
from .geometry import Configuration, Direction, GeometryError, Line, validate_polygon
from .solver import Certificate, Diagnostics, Solution

FORMAT_VERSION = 1


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)


class ValidationError(ValueError):
    def __init__(self, message: str, polygon: int):
        self.polygon = polygon
        super().__init__(f"polygon {polygon}: {message}")


def _fmt_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite number {x!r}")
    s = "%.17g" % x
    if not any(ch in s for ch in ".en"):
        s += ".0"
    return s


def dumps(obj, indent: int = 0) -> str:
    """Deterministic JSON with 17-digit floats; short lists of scalars stay on one line."""
    pad = "  " * indent
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f'{pad}  {json.dumps(str(k))}: {dumps(v, indent + 1)}' for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if all(not isinstance(v, (list, tuple, dict)) for v in obj):
            return "[" + ", ".join(dumps(v) for v in obj) + "]"
        items = [pad + "  " + dumps(v, indent + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _read_source(source) -> str:
    if isinstance(source, Path):
        return source.read_text(encoding="utf-8")
    if isinstance(source, str) and not source.lstrip().startswith(("{", "[")):
        return Path(source).read_text(encoding="utf-8")
    return source


def _loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None


def _number(v, where: str) -> float:
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ParseError(f"{where}: expected a number, got {json.dumps(v)}")
    return float(v)


# -- instances ---------------------------------------------------------------

def instance_to_dict(config: Configuration) -> dict:
    return {
        "version": FORMAT_VERSION,
        "polygons": [[[v.x, v.y] for v in p.vertices] for p in config.polygons],
    }


def write_instance(config: Configuration) -> str:
    return dumps(instance_to_dict(config)) + "\n"


def save_instance(config: Configuration, path) -> None:
    Path(path).write_text(write_instance(config), encoding="utf-8")


def instance_digest(config: Configuration) -> str:
    return "sha256:" + hashlib.sha256(write_instance(config).encode("utf-8")).hexdigest()


def parse_instance(source) -> Configuration:
    """Read an instance from a path or from JSON text.

    Raises :class:`ParseError` for malformed documents and
    :class:`ValidationError` (carrying the 1-based polygon number) for
    polygons that are not strictly convex.
    """
    doc = _loads(_read_source(source))
    if not isinstance(doc, dict):
        raise ParseError("instance must be a JSON object")
    version = doc.get("version")
    if version != FORMAT_VERSION:
        raise ParseError(f"unsupported instance version {version!r}")
    polys = doc.get("polygons")
    if not isinstance(polys, list):
        raise ParseError("'polygons' must be a list")
    if not polys:
        raise ParseError("'polygons' is empty")
    out = []
    for i, raw in enumerate(polys, start=1):
        if not isinstance(raw, list):
            raise ParseError(f"polygons[{i}]: expected a list of vertices")
        verts = []
        for k, v in enumerate(raw, start=1):
            if not (isinstance(v, list) and len(v) == 2):
                raise ParseError(f"polygons[{i}][{k}]: expected an [x, y] pair")
            verts.append((_number(v[0], f"polygons[{i}][{k}]"), _number(v[1], f"polygons[{i}][{k}]")))
        try:
            out.append(validate_polygon(verts))
        except GeometryError as exc:
            raise ValidationError(f"{type(exc).__name__}: {exc}", i) from None
    return Configuration(tuple(out))


# -- results -----------------------------------------------------------------

def result_to_dict(sol: Solution, digest: str) -> dict:
    lines = []
    for line in sol.lines:
        a, b, c = line.coefficients()
        lines.append({"theta": line.theta, "offset": line.offset, "implicit": {"a": a, "b": b, "c": c}})
    certs = [
        {
            "tangent_indices": list(cert.tangent_indices),
            "contacts": [Contact(c).value for c in cert.contacts],
            "sides": list(cert.sides),
            "residuals": [float(r) for r in cert.residuals],
        }
        for cert in sol.certificates
    ]
    d = sol.diagnostics
    return {
        "version": FORMAT_VERSION,
        "c_m": float(sol.c_m),
        "classification": sol.classification,
        "degenerate": bool(sol.degenerate),
        "lines": lines,
        "certificates": certs,
        "diagnostics": {
            "grid_size": int(d.grid_size),
            "refinement_iterations": int(d.refinement_iterations),
            "bracket_width": float(d.bracket_width),
        },
        "arcs": [[float(a), float(b)] for a, b in sol.arcs],
        "instance_digest": digest,
    }


def write_result(sol: Solution, config: Configuration) -> str:
    return dumps(result_to_dict(sol, instance_digest(config))) + "\n"


def parse_result(source) -> tuple[Solution, str]:
    """Read a result file; returns the solution and the recorded instance digest."""
    doc = _loads(_read_source(source))
    try:
        if doc["version"] != FORMAT_VERSION:
            raise ParseError(f"unsupported result version {doc['version']!r}")
        lines = tuple(
            Line(Direction(_number(l["theta"], "theta")), _number(l["offset"], "offset"))
            for l in doc["lines"]
        )
        certs = tuple(
            Certificate(
                tangent_indices=tuple(int(i) for i in c["tangent_indices"]),
                contacts=tuple(Contact(x) for x in c["contacts"]),
                sides=tuple(int(s) for s in c["sides"]),
                residuals=tuple(_number(r, "residual") for r in c["residuals"]),
            )
            for c in doc["certificates"]
        )
        diag = doc["diagnostics"]
        sol = Solution(
            c_m=_number(doc["c_m"], "c_m"),
            lines=lines,
            certificates=certs,
            degenerate=bool(doc["degenerate"]),
            classification=str(doc["classification"]),
            diagnostics=Diagnostics(
                grid_size=int(diag["grid_size"]),
                refinement_iterations=int(diag["refinement_iterations"]),
                bracket_width=_number(diag["bracket_width"], "bracket_width"),
            ),
            arcs=tuple(
                (_number(a, "arc"), _number(b, "arc")) for a, b in doc.get("arcs", [])
            ),
        )
        return sol, str(doc["instance_digest"])
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"malformed result file: {exc!r}") from None
