"""Command-line interface.

Subcommands: gen | triangulate | check | render | query. Exit status is 0
for success / all checks passing, 1 for geometry or property failures,
and 2 for usage or I/O problems. All output is a deterministic function
of the input bytes, flags and seed.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from . import __version__
from .checks import SUITES, run_checks
from .delaunay import (
    constrained_triangulate,
    is_locally_delaunay,
    triangulate,
)
from .errors import GeometryError, InputError, UnknownSelector, UnwritablePath
from .generate import DISTRIBUTIONS, generate_sites
from .geometry import Rect, Segment
from .io import (
    document_for_mesh,
    format_site_file,
    geometry_literal,
    parse_constraint_file,
    parse_frame,
    parse_site_file,
    render_document,
    SCHEMA,
)
from .proximity import near, strongly_near_triangles
from .render import WHAT_CHOICES, render_svg
from .voronoi import cells_strongly_near, voronoi_diagram


def _add_global_options(parser, suppress: bool) -> None:
    # The same options hang off the main parser and (with SUPPRESS defaults)
    # off every subparser, so they are accepted in either position.
    d = argparse.SUPPRESS if suppress else None
    parser.add_argument(
        "--frame",
        metavar="X0,Y0,X1,Y1",
        default=d,
        help="clip frame for Voronoi cells (default: inflated bounding box); "
        "use --frame=... when x0 is negative",
    )
    parser.add_argument(
        "--seed", type=int, default=d if suppress else 0, help="RNG seed (default 0)"
    )
    parser.add_argument(
        "--format",
        choices=("document", "json-like"),
        default=d if suppress else "document",
        help="result document rendering",
    )
    if suppress:
        parser.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS)
    else:
        parser.add_argument("--quiet", action="store_true", help="suppress status notes")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="proxitri",
        description="Exact Delaunay/Voronoi constructions, proximity queries and property checks.",
    )
    parser.add_argument("--version", action="version", version=f"proxitri {__version__}")
    _add_global_options(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a site file", parents=[common])
    p_gen.add_argument("count", type=int, help="number of sites (>= 3)")
    p_gen.add_argument("--distribution", choices=DISTRIBUTIONS, default="uniform")
    p_gen.add_argument("--out", required=True, help="output path ('-' for stdout)")

    p_tri = sub.add_parser("triangulate", parents=[common], help="triangulate a site file")
    p_tri.add_argument("input", help="site file")
    p_tri.add_argument("--constraints", help="constraint segment file")
    p_tri.add_argument("--out", help="output path (default stdout)")

    p_check = sub.add_parser("check", parents=[common], help="run property-check suites")
    p_check.add_argument("input", help="site file")
    p_check.add_argument("--suite", choices=SUITES, default="all")
    p_check.add_argument("--out", help="output path (default stdout)")

    p_render = sub.add_parser("render", parents=[common], help="render an SVG figure")
    p_render.add_argument("input", help="site file")
    p_render.add_argument("--what", choices=WHAT_CHOICES, required=True)
    p_render.add_argument("--out", required=True, help="SVG output path")

    p_query = sub.add_parser("query", parents=[common], help="evaluate a proximity relation")
    p_query.add_argument("input", help="site file")
    p_query.add_argument("relation", choices=("near", "far", "strong"))
    p_query.add_argument("a", help="selector: t:<id> | e:<i>-<j> | v:<site>")
    p_query.add_argument("b", help="selector: t:<id> | e:<i>-<j> | v:<site>")
    return parser


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_output(path: Optional[str], text: str, quiet: bool) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise UnwritablePath(f"cannot write {path}: {exc}") from exc
    if not quiet:
        print(f"wrote {path}", file=sys.stderr)


def _frame_from_args(args) -> Optional[Rect]:
    return parse_frame(args.frame) if args.frame else None


def cmd_gen(args) -> int:
    points = generate_sites(args.count, args.seed, args.distribution)
    comment = f"gen n={args.count} seed={args.seed} distribution={args.distribution}"
    _write_output(args.out, format_site_file(points, comment), args.quiet)
    return 0


def _load_mesh(args):
    sites = parse_site_file(_read_text(args.input), args.input)
    constraints_path = getattr(args, "constraints", None)
    if constraints_path:
        constraints = parse_constraint_file(_read_text(constraints_path), constraints_path)
        return constrained_triangulate(sites, constraints)
    return triangulate(sites)


def cmd_triangulate(args) -> int:
    mesh = _load_mesh(args)
    flags = {e: is_locally_delaunay(mesh, e) for e in mesh.edges()}
    model = document_for_mesh(mesh, flags)
    _write_output(args.out, render_document(model, args.format), args.quiet)
    return 0


def cmd_check(args) -> int:
    sites = parse_site_file(_read_text(args.input), args.input)
    results, stats = run_checks(args.suite, sites, _frame_from_args(args))
    model = {
        "schema": SCHEMA,
        "checks": [
            {"name": r.name, "status": r.status, "witness": r.witness} for r in results
        ],
    }
    if stats:
        model["stats"] = stats
    _write_output(args.out, render_document(model, args.format), args.quiet)
    return 1 if any(r.failed for r in results) else 0


def cmd_render(args) -> int:
    sites = parse_site_file(_read_text(args.input), args.input)
    if args.what in ("voronoi", "overlay"):
        diagram = voronoi_diagram(sites, _frame_from_args(args))
        svg = render_svg(args.what, diagram.mesh, diagram)
    else:
        svg = render_svg(args.what, triangulate(sites))
    _write_output(args.out, svg, args.quiet)
    return 0


def _resolve_selector(selector: str, mesh, diagram):
    kind, _, rest = selector.partition(":")
    try:
        if kind == "t":
            return ("t", mesh.triangle_polygon(int(rest)), int(rest))
        if kind == "e":
            i_s, _, j_s = rest.partition("-")
            i, j = int(i_s), int(j_s)
            if not mesh.has_edge(i, j):
                raise UnknownSelector(f"{selector}: no mesh edge {i}-{j}")
            return ("e", Segment(mesh.sites[i], mesh.sites[j]), (i, j))
        if kind == "v":
            site = int(rest)
            return ("v", diagram.cells[site].polygon, site)
    except (ValueError, IndexError, GeometryError) as exc:
        raise UnknownSelector(f"cannot resolve selector {selector!r}: {exc}") from exc
    raise UnknownSelector(f"unknown selector kind in {selector!r}")


def cmd_query(args) -> int:
    sites = parse_site_file(_read_text(args.input), args.input)
    diagram = voronoi_diagram(sites, _frame_from_args(args))
    mesh = diagram.mesh
    kind_a, geom_a, ref_a = _resolve_selector(args.a, mesh, diagram)
    kind_b, geom_b, ref_b = _resolve_selector(args.b, mesh, diagram)

    witness = None
    if args.relation == "strong":
        if kind_a == kind_b == "t":
            verdict = strongly_near_triangles(mesh, ref_a, ref_b)
        elif kind_a == kind_b == "v":
            verdict = cells_strongly_near(diagram, ref_a, ref_b)
        else:
            raise UnknownSelector(
                "strong proximity is defined for triangle or cell pairs only"
            )
        if verdict:
            shared = near(geom_a, geom_b)
            witness = shared.witness
    else:
        result = near(geom_a, geom_b)
        verdict = result.is_near if args.relation == "near" else not result.is_near
        witness = result.witness

    model = {
        "schema": SCHEMA,
        "queries": [
            {
                "relation": args.relation,
                "a": args.a,
                "b": args.b,
                "verdict": bool(verdict),
                "witness": geometry_literal(witness),
            }
        ],
    }
    _write_output(getattr(args, "out", None), render_document(model, args.format), args.quiet)
    return 0


COMMANDS = {
    "gen": cmd_gen,
    "triangulate": cmd_triangulate,
    "check": cmd_check,
    "render": cmd_render,
    "query": cmd_query,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not 0 <= args.seed < 2**64:
        parser.error("--seed must fit in an unsigned 64-bit integer")
    try:
        return COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GeometryError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
