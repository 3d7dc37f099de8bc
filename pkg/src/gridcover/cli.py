"""Command line interface.

Subcommands: bounds, spiral, verify, solve, sweep, literature.  Exit codes:
0 success, 1 usage or processing error, 2 a verified path is invalid,
3 a solver result below the lower bound (a discrepancy finding).
"""

from __future__ import annotations

import argparse
import sys

from .errors import GridCoverError, NotApplicableError
from .grid import GridSpec, path_from_json, path_to_json
from .lower import lower_any_dim
from .report import (
    bounds_range,
    render_csv,
    render_json,
    render_text,
    sweep_rows,
    sweep_table,
)
from .solver import solve_restricted
from .spiral import pure_spiral, saving_spiral
from .svg import render_path_svg
from .upper import literature_bounds, upper_any_dim
from .verify import verify_path

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_DISCREPANCY = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage problems; 2 is reserved here for failed
    # verification, so usage errors are remapped to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _dims(text: str) -> tuple[int, ...]:
    try:
        dims = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad dims {text!r}: {exc}") from exc
    if not dims or any(n < 1 for n in dims):
        raise argparse.ArgumentTypeError(
            f"bad dims {text!r}: need positive integers"
        )
    return dims


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="gridcover",
        description="Bounds and spiral constructions for covering every "
        "point of a lattice grid with few straight segments.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("bounds", help="report the segment-count interval")
    p.add_argument("--dims", type=_dims, required=True, metavar="N1,N2,...")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("spiral", help="generate a spiral covering path")
    p.add_argument("--dims", type=_dims, required=True, metavar="N1,N2,...")
    p.add_argument("--mode", choices=("pure", "saving"), required=True)
    p.add_argument("--out", required=True, help="path JSON output file")
    p.add_argument("--svg", help="also render the path to this SVG file")
    p.add_argument("--fig", help="also render the path to this image file")
    p.add_argument("--scale", type=int, default=24, help="SVG units per cell")

    p = sub.add_parser("verify", help="check a path JSON document")
    p.add_argument("--path", required=True, help="path JSON input file")

    p = sub.add_parser("solve", help="exhaustive optimum on a tiny grid")
    p.add_argument("--dims", type=_dims, required=True, metavar="N1,N2,...")
    p.add_argument("--max-segments", type=int)

    p = sub.add_parser("sweep", help="CSV table of bounds over sorted tuples")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--min", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--out", required=True, help="CSV output file")
    p.add_argument("--fig", help="also plot the sweep to this image file")

    p = sub.add_parser("literature", help="published values for cubic grids")
    p.add_argument("--dims", type=_dims, required=True, metavar="N,N,...")

    return parser


def _cmd_bounds(args) -> int:
    br = bounds_range(GridSpec(args.dims))
    if args.format == "json":
        sys.stdout.write(render_json(br))
    elif args.format == "csv":
        sys.stdout.write(render_csv(br))
    else:
        sys.stdout.write(render_text(br))
    return EXIT_OK


def _cmd_spiral(args) -> int:
    spec = GridSpec(args.dims)
    path = pure_spiral(spec) if args.mode == "pure" else saving_spiral(spec)
    with open(args.out, "w") as handle:
        handle.write(path_to_json(path))
    print(
        f"wrote {path.segment_count}-segment {args.mode} path for "
        f"{'x'.join(map(str, args.dims))} to {args.out}"
    )
    if args.svg:
        with open(args.svg, "w") as handle:
            handle.write(render_path_svg(path, scale=args.scale))
        print(f"rendered SVG to {args.svg}")
    if args.fig:
        from .figures import save_path_figure

        save_path_figure(path, args.fig)
        print(f"rendered figure to {args.fig}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    with open(args.path) as handle:
        path = path_from_json(handle.read())
    report = verify_path(path)
    print(f"segments: {report.segment_count}")
    print(f"covered points: {report.covered_points}")
    print(f"euclidean length: {report.euclidean_length}")
    print(f"valid: {report.valid}")
    for violation in report.violations:
        print(f"violation: {violation}")
    return EXIT_OK if report.valid else EXIT_INVALID


def _cmd_solve(args) -> int:
    spec = GridSpec(args.dims)
    result = solve_restricted(spec, max_segments=args.max_segments)
    print(f"model: {result.model}")
    print(f"optimal segments: {result.optimal_count}")
    print(f"nodes explored: {result.nodes_explored}")
    upper = upper_any_dim(spec)
    print(f"upper bound: {upper.value}")
    try:
        lower = lower_any_dim(spec).value
        print(f"lower bound: {lower}")
    except NotApplicableError:
        lower = None
        print("lower bound: not available")
    print("witness:")
    sys.stdout.write(path_to_json(result.witness))
    if lower is not None and result.optimal_count < lower:
        print(
            f"DISCREPANCY: exhaustive optimum {result.optimal_count} is below "
            f"the lower bound {lower}"
        )
        return EXIT_DISCREPANCY
    return EXIT_OK


def _cmd_sweep(args) -> int:
    table = sweep_table(args.k, args.min, args.max)
    with open(args.out, "w") as handle:
        handle.write(table)
    row_count = table.count("\n") - 1
    print(f"wrote {row_count} rows to {args.out}")
    if args.fig:
        from .figures import save_sweep_figure

        save_sweep_figure(list(sweep_rows(args.k, args.min, args.max)), args.fig)
        print(f"rendered figure to {args.fig}")
    return EXIT_OK


def _cmd_literature(args) -> int:
    values = literature_bounds(GridSpec(args.dims))
    print(f"cubic upper bound: {values.cubic_upper}")
    if values.exact is not None:
        print(f"exact value: {values.exact}")
    print("model: unconstrained (may leave the box and revisit points)")
    return EXIT_OK


_COMMANDS = {
    "bounds": _cmd_bounds,
    "spiral": _cmd_spiral,
    "verify": _cmd_verify,
    "solve": _cmd_solve,
    "sweep": _cmd_sweep,
    "literature": _cmd_literature,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except GridCoverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
