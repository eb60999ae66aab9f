"""Command line entry point.

    bipdist construct elekes --m 2 --s 2 [--svg grid.svg]
    bipdist construct orthogonal --m 2 --n 3
    bipdist construct random --m 4 --n 6 --seed 7
    bipdist analyze --input points.json [--figures DIR] [--reguli spec.json]
    bipdist regulus fit --lines "x,y,z:dx,dy,dz;..."
    bipdist regulus circle --p 0,0 --q 10,0 --r 5 --ts 0,1,2,-1
    bipdist regulus line --p 0,0 --base 0,1 --dir 1,0 --ts 0,1,2,-1 --dirs "0,1;3,4"
    bipdist crossing --input points.json [--K 1] [--c 1/64] [--svg arcs.svg]
    bipdist render --input points.json --svg out.svg [--arcs]

Exit codes: 0 success, 1 invalid input, 2 mathematical degeneracy, 3 I/O.
Errors are written to stderr as a JSON object.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import crossing, report
from .constructions import elekes_grid, orthogonal_pair, random_pair
from .errors import InputError, InvalidParams, StorageError, WorkbenchError
from .serialize import (
    atomic_write,
    grid_to_json,
    load_points,
    parse_lines_arg,
    parse_rat,
    parse_vector,
    pointset_to_json,
    read_json,
    render,
)
from .stats import PointSetPair


def _emit(doc, args) -> None:
    text = render(doc, args.format)
    if args.output and args.output != "-":
        atomic_write(args.output, text)
    else:
        sys.stdout.write(text)


def _load_input(args):
    if not args.input or args.input == "-":
        try:
            doc = json.load(sys.stdin)
        except json.JSONDecodeError as exc:
            raise InputError(f"stdin is not valid JSON: {exc}") from exc
    else:
        doc = read_json(args.input)
    return load_points(doc)


def _positive_rat(text):
    value = parse_rat(text)
    if value <= 0:
        raise InvalidParams(f"constant must be positive, got {text}")
    return value


# -- subcommands ------------------------------------------------------------

def cmd_construct(args) -> None:
    if args.kind == "elekes":
        g = elekes_grid(args.m, args.s)
        doc = {"kind": "elekes", **grid_to_json(g), "census": report.grid_section(g)}
        data = g
    elif args.kind == "orthogonal":
        count = orthogonal_pair(args.m, args.n)
        doc = {"kind": "orthogonal", "m": args.m, "n": args.n,
               "P": [{"sqrt_x": i} for i in range(1, args.m + 1)],
               "Q": [{"sqrt_y": j} for j in range(1, args.n + 1)],
               "count": count}
        data = None
    else:
        P, Q = random_pair(args.m, args.n, args.seed, box=args.box, max_den=args.max_den)
        data = PointSetPair(P, Q)
        doc = {"kind": "random", "seed": args.seed, **pointset_to_json(data)}
    _emit(doc, args)
    if args.svg:
        if data is None:
            raise InvalidParams("orthogonal construction has no exact drawing; omit --svg")
        from .plotting import save_svg, scatter_figure
        save_svg(scatter_figure(data, title=args.kind), args.svg)


def cmd_analyze(args) -> None:
    data = _load_input(args)
    doc = {}
    if isinstance(data, PointSetPair):
        doc["distances"] = report.distance_section(data)
        if not args.skip_esgk:
            doc["esgk"] = report.esgk_section(data, include_lines=args.lines)
    else:
        doc["census"] = report.grid_section(data)
        doc["esgk"] = None  # irrational coordinates; the line reduction needs rational points
    if not args.skip_crossing:
        doc["szekely"] = report.szekely_section(data, args.K, args.c)
    if args.reguli:
        doc["reguli"] = report.regulus_from_spec(read_json(args.reguli))
    _emit(doc, args)
    if args.figures:
        _figures(data, doc, args.figures)


def _figures(data, doc, directory) -> None:
    from .plotting import arcs_figure, richpoint_figure, save_svg, scatter_figure

    try:
        os.makedirs(directory, exist_ok=True)
    except OSError as exc:
        raise StorageError(f"cannot create {directory}: {exc}") from exc
    save_svg(scatter_figure(data), os.path.join(directory, "points.svg"))
    save_svg(arcs_figure(data, crossing.build_multigraph(data)),
             os.path.join(directory, "arcs.svg"))
    esgk_doc = doc.get("esgk")
    if esgk_doc:
        m_r = {row["r"]: row["m_r"] for row in esgk_doc["rich_points"]}
        save_svg(richpoint_figure(m_r), os.path.join(directory, "richpoints.svg"))


def cmd_regulus(args) -> None:
    if args.kind == "fit":
        if args.lines:
            lines = parse_lines_arg(args.lines)
            doc = report.fit_report(lines)
        elif args.input:
            spec = read_json(args.input)
            doc = report.regulus_from_spec({"kind": "fit", **spec})
        else:
            raise InputError("regulus fit needs --lines or --input")
    elif args.kind == "circle":
        doc = report.circle_report(parse_vector(args.p, 2), parse_vector(args.q, 2),
                                   parse_rat(args.r), list(parse_vector(args.ts)))
    else:
        dirs = [parse_vector(d, 2) for d in args.dirs.split(";") if d.strip()]
        doc = report.line_report(parse_vector(args.p, 2), parse_vector(args.base, 2),
                                 parse_vector(args.dir, 2), list(parse_vector(args.ts)), dirs)
    _emit(doc, args)


def cmd_crossing(args) -> None:
    data = _load_input(args)
    _emit(report.szekely_section(data, args.K, args.c), args)
    if args.svg:
        from .plotting import arcs_figure, save_svg
        save_svg(arcs_figure(data, crossing.build_multigraph(data)), args.svg)


def cmd_render(args) -> None:
    from .plotting import arcs_figure, save_svg, scatter_figure

    data = _load_input(args)
    if args.arcs:
        fig = arcs_figure(data, crossing.build_multigraph(data))
    else:
        fig = scatter_figure(data)
    save_svg(fig, args.svg)


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", help="output path (default: stdout)")
    common.add_argument("--format", choices=("json", "csv"), default="json")

    parser = argparse.ArgumentParser(prog="bipdist", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser("construct", help="generate a point configuration")
    csub = construct.add_subparsers(dest="kind", required=True)
    p = csub.add_parser("elekes", parents=[common], help="circle grid with n = m s^2")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--svg")
    p = csub.add_parser("orthogonal", parents=[common], help="(sqrt i, 0) x (0, sqrt j) census")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--svg")
    p = csub.add_parser("random", parents=[common], help="seeded random rational points")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--box", type=int, default=100)
    p.add_argument("--max-den", type=int, default=4)
    p.add_argument("--svg")
    construct.set_defaults(func=cmd_construct)

    analyze = sub.add_parser("analyze", parents=[common], help="distance, ESGK and crossing report")
    analyze.add_argument("--input", "-i")
    analyze.add_argument("--K", type=int, default=1, help="multiplicity cap for G'")
    analyze.add_argument("--c", type=_positive_rat, default=report.DEFAULT_C)
    analyze.add_argument("--skip-esgk", action="store_true")
    analyze.add_argument("--skip-crossing", action="store_true")
    analyze.add_argument("--lines", action="store_true", help="include both line families")
    analyze.add_argument("--reguli", help="JSON regulus spec to evaluate alongside")
    analyze.add_argument("--figures", help="directory for SVG figures")
    analyze.set_defaults(func=cmd_analyze)

    regulus = sub.add_parser("regulus", help="quadric through skew lines")
    rsub = regulus.add_subparsers(dest="kind", required=True)
    p = rsub.add_parser("fit", parents=[common])
    p.add_argument("--lines", help='"x,y,z:dx,dy,dz;..." (three lines)')
    p.add_argument("--input", "-i", help='JSON {"lines": [...]}')
    p = rsub.add_parser("circle", parents=[common])
    p.add_argument("--p", required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--r", required=True)
    p.add_argument("--ts", required=True, help="comma-separated; use --ts=-1,0,1 for a leading minus")
    p = rsub.add_parser("line", parents=[common])
    p.add_argument("--p", required=True)
    p.add_argument("--base", required=True)
    p.add_argument("--dir", required=True)
    p.add_argument("--ts", required=True)
    p.add_argument("--dirs", required=True, help='directions through p, "dx,dy;dx,dy" (--dirs=-1,0;... for a leading minus)')
    regulus.set_defaults(func=cmd_regulus)

    cross = sub.add_parser("crossing", parents=[common], help="Szekely circle-arc report")
    cross.add_argument("--input", "-i")
    cross.add_argument("--K", type=int, default=1)
    cross.add_argument("--c", type=_positive_rat, default=report.DEFAULT_C)
    cross.add_argument("--svg")
    cross.set_defaults(func=cmd_crossing)

    rend = sub.add_parser("render", help="SVG figure of a point set")
    rend.add_argument("--input", "-i")
    rend.add_argument("--svg", required=True)
    rend.add_argument("--arcs", action="store_true", help="draw the arc multigraph")
    rend.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except WorkbenchError as exc:
        err = {"error": type(exc).__name__, "message": str(exc), "exit_code": exc.exit_code}
        sys.stderr.write(json.dumps(err) + "\n")
        return exc.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
