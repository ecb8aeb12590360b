"""Command line front end.

Every subcommand reads one JSON document from a file argument or standard
input and writes JSON (or a picture) to standard output, so pipelines like
``dycktri build dyck --n 3 | dycktri verify`` compose.

Exit status: 0 on success, 1 when a verification fails (report on standard
error, witness JSON on standard output), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import sys

from . import io
from .cayley import cayley_cells, check_tiling, render_mixed_svg
from .constructors import CATALOGUE
from .core import verify_triangulation
from .ensembles import (check_axioms, dyck_ensemble, ensemble_from_triangulation,
                        extended_dyck_ensemble, triangulation_from_ensemble)
from .errors import DyckTriError, IncompatibleSkeletonError, SchemaError
from .extension import (check_skeleton_compatibility, extend_skeleton, flipped_extended_boundary,
                        mother_of_all_examples, restrict_to_skeleton)
from .regularity import (dyck_heights, extended_dyck_heights, find_heights,
                         random_regular_triangulation, verify_heights)
from .render import render_grid_ascii, render_grid_svg

OK, FAILED, USAGE = 0, 1, 2


class Failure(Exception):
    """A verification failed: ``report`` goes to stderr, ``payload`` to stdout."""

    def __init__(self, report: str, payload: str = None):
        super().__init__(report)
        self.report = report
        self.payload = payload


def _read(args, expect: str):
    path = getattr(args, "input", None)
    if path in (None, "-"):
        text, source = sys.stdin.read(), "<stdin>"
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as err:
            raise SchemaError(f"{path}: {err.strerror}") from None
        source = path
    return io.loads(text, expect, source)


def _need(args, *names):
    missing = [f"--{name}" for name in names if getattr(args, name) is None]
    if missing:
        raise SchemaError(f"{args.kind} needs {' '.join(missing)}")


# -- build -------------------------------------------------------------------

def cmd_build(args) -> str:
    kind = args.kind
    if kind == "random":
        _need(args, "m", "n")
        T, _ = random_regular_triangulation(args.m, args.n, args.seed)
        report = verify_triangulation(T)
        if not report:  # pragma: no cover - would be a library bug
            raise Failure(report.describe())
        return io.dumps(T)
    if kind == "staircase":
        _need(args, "m", "n")
        T = CATALOGUE[kind](args.m, args.n)
    elif kind in ("rational-dyck", "extended-rational-dyck"):
        _need(args, "r", "n")
        T = CATALOGUE[kind](args.r, args.n)
    else:
        _need(args, "n")
        T = CATALOGUE[kind](args.n)
    return io.dumps(T)


def cmd_verify(args) -> str:
    T = _read(args, "triangulation")
    report = verify_triangulation(T)
    if not report:
        payload = None
        if report.crossing is not None:
            s1, s2, circuit = report.crossing
            payload = io.dumps({
                "kind": "crossing",
                "first": io._edges(s1.edges),
                "second": io._edges(s2.edges),
                "circuit": {"plus": io._edges(circuit.plus), "minus": io._edges(circuit.minus)},
            })
        elif report.non_trees:
            payload = io.dumps({"kind": "not-a-tree", "simplex": io._edges(report.non_trees[0].edges)})
        else:
            payload = io.dumps({"kind": "count", "count": report.count, "expected": report.expected_count})
        raise Failure(report.describe(), payload)
    sys.stderr.write(report.describe() + "\n")
    return ""


# -- ensembles ---------------------------------------------------------------

def cmd_ensemble(args) -> str:
    action = args.action
    if action == "dyck":
        _need(args, "n")
        return io.dumps(dyck_ensemble(args.n))
    if action == "extended-dyck":
        _need(args, "n")
        return io.dumps(extended_dyck_ensemble(args.n))
    if action == "extract":
        return io.dumps(ensemble_from_triangulation(_read(args, "triangulation")))
    E = _read(args, "ensemble")
    if action == "check":
        report = check_axioms(E, args.axioms)
        if not report:
            raise Failure(report.describe())
        sys.stderr.write(report.describe() + "\n")
        return ""
    report = check_axioms(E)
    if not report:
        raise Failure(report.describe())
    return io.dumps(triangulation_from_ensemble(E, check=False))


# -- skeletons ---------------------------------------------------------------

def cmd_skeleton(args) -> str:
    action = args.action
    if action == "flipped-extended-boundary":
        _need(args, "n")
        return io.dumps(flipped_extended_boundary(args.n))
    if action == "mother":
        return io.dumps(mother_of_all_examples())
    if action == "restrict":
        _need(args, "k")
        return io.dumps(restrict_to_skeleton(_read(args, "triangulation"), args.k))
    S = _read(args, "skeleton")
    if action == "check":
        report = check_skeleton_compatibility(S)
        if not report:
            raise Failure(report.describe())
        sys.stderr.write(report.describe() + "\n")
        return ""
    try:
        result = extend_skeleton(S)
    except IncompatibleSkeletonError as err:
        raise Failure(str(err)) from None
    if not result:
        raise Failure(result.describe(), io.dumps(result))
    return io.dumps(result)


# -- heights -----------------------------------------------------------------

def cmd_heights(args) -> str:
    action = args.action
    if action == "dyck":
        _need(args, "n")
        return io.dumps(dyck_heights(args.n))
    if action == "extended":
        _need(args, "n")
        return io.dumps(extended_dyck_heights(args.n))
    T = _read(args, "triangulation")
    if action == "find":
        h = find_heights(T)
        if h is None:
            raise Failure("triangulation is not regular: the height LP is infeasible")
        return io.dumps(h)
    if args.heights is None:
        raise SchemaError("heights verify needs --heights FILE")
    with open(args.heights, encoding="utf-8") as fh:
        h = io.loads(fh.read(), "heights", args.heights)
    check = verify_heights(T, h)
    if not check:
        rows, cols = check.support
        raise Failure(check.describe(), io.dumps({
            "kind": "height-violation",
            "support": {"I": list(rows), "J": list(cols)},
            "matching": io._edges(check.matching),
            "competitor": io._edges(check.competitor),
        }))
    sys.stderr.write(check.describe() + "\n")
    return ""


# -- pictures ----------------------------------------------------------------

def cmd_render(args) -> str:
    T = _read(args, "triangulation")
    if args.format == "ascii":
        return render_grid_ascii(T)
    if args.format == "svg":
        return render_grid_svg(T)
    return render_mixed_svg(T)


def cmd_cayley(args) -> str:
    T = _read(args, "triangulation")
    data = io.cells_to_dict(T, cayley_cells(T))
    if args.check:
        report = check_tiling(T)
        if not report:
            raise Failure(f"cells do not tile: area {report.cell_area_sum} of {report.total_area}, "
                          f"overlapping pairs {report.overlaps}")
        sys.stderr.write(f"cells tile {len(T.rows)}*Delta_2 exactly (area {report.total_area})\n")
    return io.dumps(data)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dycktri",
                                     description="Triangulations of products of two simplices.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p):
        p.add_argument("input", nargs="?", default="-", help="JSON file (default: standard input)")
        return p

    p = sub.add_parser("build", help="construct a catalogue triangulation")
    p.add_argument("kind", choices=sorted(CATALOGUE) + ["random"])
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--seed", type=int, help="seed for 'random' (random regular triangulation)")
    p.set_defaults(func=cmd_build)

    with_input(sub.add_parser("verify", help="check a triangulation")).set_defaults(func=cmd_verify)

    p = with_input(sub.add_parser("ensemble", help="matching ensembles"))
    p.add_argument("action", choices=["extract", "check", "reconstruct", "dyck", "extended-dyck"])
    p.add_argument("--n", type=int)
    p.add_argument("--axioms", default="SA CA LA", help="subset of 'SA CA LA' for check")
    p.set_defaults(func=cmd_ensemble)

    p = with_input(sub.add_parser("skeleton", help="partial triangulations and extension"))
    p.add_argument("action", choices=["restrict", "check", "extend", "flipped-extended-boundary", "mother"])
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_skeleton)

    p = with_input(sub.add_parser("heights", help="height functions and regularity"))
    p.add_argument("action", choices=["dyck", "extended", "find", "verify"])
    p.add_argument("--n", type=int)
    p.add_argument("--heights", help="heights JSON file for verify")
    p.set_defaults(func=cmd_heights)

    p = with_input(sub.add_parser("render", help="draw a triangulation"))
    p.add_argument("--format", choices=["ascii", "svg", "mixed-svg"], default="ascii")
    p.set_defaults(func=cmd_render)

    p = with_input(sub.add_parser("cayley", help="fine mixed subdivision cells"))
    p.add_argument("--check", action="store_true", help="also check the tiling (n = 3)")
    p.set_defaults(func=cmd_cayley)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    # ``kind``/``action`` double as the label in usage messages
    if not hasattr(args, "kind"):
        args.kind = f"{args.command} {getattr(args, 'action', '')}".strip()
    try:
        out = args.func(args)
    except Failure as fail:
        sys.stderr.write(fail.report + "\n")
        if fail.payload:
            sys.stdout.write(fail.payload)
        return FAILED
    except (SchemaError, DyckTriError, OSError) as err:
        sys.stderr.write(f"dycktri: error: {err}\n")
        return USAGE
    if out:
        sys.stdout.write(out)
    return OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
