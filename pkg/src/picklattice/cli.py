"""Command-line front end.

Exit status: 0 success, 1 invalid polygon or other domain error (including a
failed cross-check), 2 unparseable input, 3 coordinate overflow.

With ``--format json`` every command prints one object::

    {"command": str, "inputs": {...}, "results": {...},
     "checks": [{"name": str, "passed": bool, "detail": str}, ...],
     "ok": bool}
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import farey as farey_mod
from .errors import CoordinateOverflow, LatticeError, ParseError
from .io import read_polygon, write_polygon
from .lattice import cross, euclid_steps, extended_gcd, primitive_partner
from .measures import boundary_angle_sum, scale, scaling_study, visibility_measure
from .polygon import (
    Polygon,
    boundary_count,
    f_functional,
    format_area,
    interior_count,
    pick_twice_area,
    shoelace_twice_area,
)
from .svg import render_svg
from .triangulation import reassembly_order, stats, triangulate

EXIT_OK, EXIT_DOMAIN, EXIT_PARSE, EXIT_OVERFLOW = 0, 1, 2, 3
VISIBILITY_TOL = 1e-9
CHECK_SCALE_K = 5


@dataclass
class Report:
    command: str
    inputs: dict
    results: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)

    def check(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append({"name": name, "passed": bool(passed), "detail": detail})

    @property
    def ok(self) -> bool:
        return all(c["passed"] for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "checks": self.checks,
            "ok": self.ok,
        }


def _pairs(vs):
    return [[int(x), int(y)] for x, y in vs]


def _polygon_inputs(path, p: Polygon) -> dict:
    return {"file": str(path), "vertices": _pairs(p.vertices)}


def cmd_area(path, method: str = "both") -> Report:
    p = read_polygon(path)
    r = Report("area", {**_polygon_inputs(path, p), "method": method})
    values = {}
    if method in ("pick", "both"):
        values["pick"] = pick_twice_area(p)
    if method in ("shoelace", "both"):
        values["shoelace"] = shoelace_twice_area(p)
    for name, twice in values.items():
        r.results[name] = {"twice_area": twice, "area": format_area(twice)}
    if method == "both":
        r.check(
            "pick_equals_shoelace",
            values["pick"] == values["shoelace"],
            f"pick {values['pick']} vs shoelace {values['shoelace']}",
        )
    return r


def cmd_counts(path) -> Report:
    p = read_polygon(path)
    r = Report("counts", _polygon_inputs(path, p))
    r.results = {
        "boundary": boundary_count(p),
        "interior": interior_count(p),
        "twice_f": f_functional(p),
    }
    return r


def cmd_triangulate(path, svg_out=None) -> Report:
    p = read_polygon(path)
    r = Report("triangulate", {**_polygon_inputs(path, p), "svg": svg_out and str(svg_out)})
    tris = triangulate(p)
    r.results["triangles"] = [_pairs(t) for t in tris]
    try:
        s = stats(tris, p)
    except LatticeError as exc:
        r.check("triangulation_stats", False, str(exc))
    else:
        r.results["stats"] = {
            "n_triangles": s.n_triangles,
            "n_edges": s.n_edges,
            "n_vertices": s.n_vertices,
            "n_boundary": s.n_boundary,
            "n_interior": s.n_interior,
        }
        r.check(
            "triangulation_stats",
            True,
            f"N(Δ)={s.n_triangles}, E={s.n_edges}, V={s.n_vertices}",
        )
    if svg_out is not None:
        Path(svg_out).write_text(render_svg(p, tris), encoding="utf-8")
    return r


def cmd_bezout(a: int, b: int) -> Report:
    r = Report("bezout", {"a": a, "b": b})
    cert = extended_gcd(a, b)
    r.results = {
        "g": cert.g,
        "s": cert.s,
        "t": cert.t,
        "identity": str(cert),
        "steps": [f"{x}={q}·{y}+{rem}" for x, q, y, rem in euclid_steps(a, b)],
    }
    r.check("bezout_identity", cert.holds(), f"{cert.s}*{a} + {cert.t}*{b} = {cert.g}")
    return r


def cmd_partner(u1: int, u2: int) -> Report:
    r = Report("partner", {"u": [u1, u2]})
    w = primitive_partner((u1, u2))
    det = cross((u1, u2), w)
    r.results = {"partner": [w.x, w.y], "det": det}
    r.check("unit_determinant", det == 1, f"det = {det}")
    return r


def cmd_farey(n: int) -> Report:
    r = Report("farey", {"n": n})
    seq = farey_mod.farey_sequence(n)
    r.results = {
        "length": len(seq),
        "sequence": [farey_mod.format_fraction(f) for f in seq],
    }
    r.check("neighbor_identity", farey_mod.verify_neighbors(seq), "bc - ad = 1")
    return r


def _scaling_rows(report) -> list[dict]:
    return [
        {
            "k": row.k,
            "interior": row.interior,
            "predicted": row.predicted,
            "ratio": str(row.ratio),
            "deficit": str(row.deficit),
        }
        for row in report.rows
    ]


def cmd_scale(path, k_max: int, emit=None) -> Report:
    p = read_polygon(path)
    r = Report("scale", {**_polygon_inputs(path, p), "k_max": k_max})
    study = scaling_study(p, k_max)
    r.results = {
        "twice_area": study.twice_area,
        "boundary": study.n_boundary,
        "rows": _scaling_rows(study),
    }
    for row in study.rows:
        r.check(
            f"scaling_identity_k{row.k}",
            row.holds,
            f"counted {row.interior}, predicted {row.predicted}",
        )
    if emit is not None:
        write_polygon(emit, scale(p, k_max).vertices)
    return r


def cmd_check(path) -> Report:
    """Run every cross-validation on one polygon."""
    p = read_polygon(path)
    r = Report("check", _polygon_inputs(path, p))
    nb, ni = boundary_count(p), interior_count(p)
    pick, shoe = pick_twice_area(p), shoelace_twice_area(p)
    r.results = {"boundary": nb, "interior": ni, "twice_area": shoe, "area": format_area(shoe)}
    r.check("pick_equals_shoelace", pick == shoe, f"{pick} vs {shoe}")

    vis = visibility_measure(p)
    err = abs(vis.total - shoe / 2)
    r.check("visibility_total", err <= VISIBILITY_TOL, f"|sum alpha - A| = {err:.3e}")
    bsum = boundary_angle_sum(p)
    err = abs(bsum - (nb / 2 - 1))
    r.check("boundary_angle_sum", err <= VISIBILITY_TOL, f"|sum - (N^b/2 - 1)| = {err:.3e}")

    tris = triangulate(p)
    try:
        s = stats(tris, p)
        elementary = all(t.twice_area == 1 for t in tris)
        r.check(
            "triangulation_stats",
            elementary and s.n_triangles == nb + 2 * ni - 2,
            f"N(Δ)={s.n_triangles}, E={s.n_edges}",
        )
    except LatticeError as exc:
        r.check("triangulation_stats", False, str(exc))
    try:
        steps = reassembly_order(tris)
        r.check(
            "reassembly_pick",
            len(steps) == len(tris) and all(st.twice_f == st.twice_area for st in steps),
            f"{len(steps)} steps",
        )
    except LatticeError as exc:
        r.check("reassembly_pick", False, str(exc))

    try:
        study = scaling_study(p, CHECK_SCALE_K)
        r.check(
            "scaling_identity",
            study.all_hold,
            f"k = 1..{CHECK_SCALE_K}",
        )
    except CoordinateOverflow as exc:
        r.check("scaling_identity", False, str(exc))
    return r


# -- output ----------------------------------------------------------------


def _render_text(report: Report) -> str:
    res = report.results
    lines = []
    if report.command == "farey":
        lines.extend(res["sequence"])
        return "\n".join(lines) + "\n"
    if report.command == "area":
        for name in ("pick", "shoelace"):
            if name in res:
                v = res[name]
                lines.append(f"{name}: twice_area {v['twice_area']}, area {v['area']}")
    elif report.command == "triangulate":
        for t in res["triangles"]:
            lines.append(" ".join(f"({x},{y})" for x, y in t))
        if "stats" in res:
            lines.append(", ".join(f"{k}={v}" for k, v in res["stats"].items()))
    elif report.command == "scale":
        lines.append("k,interior,ratio,deficit")
        for row in res["rows"]:
            lines.append(f"{row['k']},{row['interior']},{row['ratio']},{row['deficit']}")
    else:
        for k, v in res.items():
            if isinstance(v, list):
                v = ", ".join(map(str, v))
            lines.append(f"{k}: {v}")
    for c in report.checks:
        mark = "PASS" if c["passed"] else "FAIL"
        lines.append(f"[{mark}] {c['name']}: {c['detail']}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(
        prog="picklattice",
        description="Exact lattice-polygon geometry: Pick's theorem and companions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("area", parents=[fmt], help="twice-area by Pick and/or shoelace")
    s.add_argument("file")
    s.add_argument("--method", choices=("pick", "shoelace", "both"), default="both")

    s = sub.add_parser("counts", parents=[fmt], help="boundary and interior point counts")
    s.add_argument("file")

    s = sub.add_parser("triangulate", parents=[fmt], help="elementary triangulation")
    s.add_argument("file")
    s.add_argument("--svg", metavar="PATH", help="write an SVG figure")

    s = sub.add_parser("bezout", parents=[fmt], help="extended Euclid certificate")
    s.add_argument("a", type=int)
    s.add_argument("b", type=int)

    s = sub.add_parser("partner", parents=[fmt], help="primitive-cell partner vector")
    s.add_argument("u1", type=int)
    s.add_argument("u2", type=int)

    s = sub.add_parser("farey", parents=[fmt], help="Farey sequence of order n")
    s.add_argument("n", type=int)

    s = sub.add_parser("scale", parents=[fmt], help="interior counts of scaled copies")
    s.add_argument("file")
    s.add_argument("k_max", type=int)
    s.add_argument("--emit", metavar="PATH", help="write the k_max-scaled polygon")

    s = sub.add_parser("check", parents=[fmt], help="full cross-validation battery")
    s.add_argument("file")
    return parser


def _dispatch(args) -> Report:
    c = args.command
    if c == "area":
        return cmd_area(args.file, args.method)
    if c == "counts":
        return cmd_counts(args.file)
    if c == "triangulate":
        return cmd_triangulate(args.file, args.svg)
    if c == "bezout":
        return cmd_bezout(args.a, args.b)
    if c == "partner":
        return cmd_partner(args.u1, args.u2)
    if c == "farey":
        return cmd_farey(args.n)
    if c == "scale":
        return cmd_scale(args.file, args.k_max, args.emit)
    if c == "check":
        return cmd_check(args.file)
    raise AssertionError(c)  # pragma: no cover


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = _dispatch(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CoordinateOverflow as exc:
        print(f"overflow: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except (LatticeError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.format == "json":
        sys.stdout.write(json.dumps(report.to_dict(), indent=2, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(_render_text(report))
    if not report.ok:
        failed = ", ".join(c["name"] for c in report.checks if not c["passed"])
        print(f"failed checks: {failed}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
