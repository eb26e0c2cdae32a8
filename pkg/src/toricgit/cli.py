"""Batch front end: problem files in, reports out.

Data goes to stdout (or the --json/--svg targets); diagnostics go to
stderr.  Exit status 0 on success, 2 for problem-file errors, 1 for
pipeline errors.
"""

import argparse
import json
import sys

from .errors import ProblemFileError, ToricGITError
from .quotient import DEFAULT_DEGREE_BOUND, build_report, make_action, sweep
from .render import polytope_svg
from .serialize import canonical_dumps


def parse_problem(path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ProblemFileError(f"cannot read {path}: {exc}", path=path)
    except json.JSONDecodeError as exc:
        raise ProblemFileError(
            f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}",
            path=path,
        )
    if not isinstance(raw, dict):
        raise ProblemFileError(f"{path}: problem file must be a JSON object", path=path)

    def need(key, kind, what):
        if key not in raw:
            raise ProblemFileError(f"{path}: missing field {key!r}", path=path)
        value = raw[key]
        if not isinstance(value, kind):
            raise ProblemFileError(f"{path}: field {key!r} must be {what}", path=path)
        return value

    variables = need("variables", list, "a list of names")
    if not variables or not all(isinstance(v, str) and v for v in variables):
        raise ProblemFileError(f"{path}: variables must be nonempty strings", path=path)
    rows = need("action_rows", list, "a list of integer rows")
    for i, row in enumerate(rows):
        if not isinstance(row, list) or not all(isinstance(x, int) for x in row):
            raise ProblemFileError(
                f"{path}: action_rows[{i}] must be a list of integers", path=path
            )
        if len(row) != len(variables):
            raise ProblemFileError(
                f"{path}: action_rows[{i}] has {len(row)} entries, expected "
                f"{len(variables)} (one per variable)",
                path=path,
            )
    alpha = need("alpha", list, "a list of integers")
    if not all(isinstance(x, int) for x in alpha) or len(alpha) != len(rows):
        raise ProblemFileError(
            f"{path}: alpha must list one integer per action row", path=path
        )
    mode = raw.get("mode", "polynomial")
    if mode not in ("polynomial", "lattice"):
        raise ProblemFileError(
            f"{path}: mode must be 'polynomial' or 'lattice', got {mode!r}", path=path
        )
    degree_bound = raw.get("degree_bound")
    if degree_bound is not None and (not isinstance(degree_bound, int) or degree_bound < 1):
        raise ProblemFileError(f"{path}: degree_bound must be a positive integer", path=path)
    box = raw.get("sweep_box")
    if box is not None:
        if (
            not isinstance(box, list)
            or len(box) != len(rows)
            or not all(
                isinstance(r, list)
                and len(r) == 2
                and all(isinstance(x, int) for x in r)
                and r[0] <= r[1]
                for r in box
            )
        ):
            raise ProblemFileError(
                f"{path}: sweep_box must list one [lo, hi] range per action row",
                path=path,
            )
    return {
        "variables": [str(v) for v in variables],
        "action_rows": rows,
        "alpha": alpha,
        "mode": mode,
        "degree_bound": degree_bound,
        "sweep_box": box,
    }


def _print_report(report, out):
    action = report.action
    print(f"action matrix rows: {[list(r) for r in action.matrix]}", file=out)
    print(f"variables: {', '.join(action.variables)}", file=out)
    print(f"linearization: {list(action.alpha)}   mode: {report.mode}", file=out)
    print(file=out)
    gens = report.generators
    print(
        f"invariant ring generators (degree bound {report.degree_bound}, "
        f"complete: {gens.complete}):",
        file=out,
    )
    for g, name in zip(gens.generators, report.generator_strings()):
        print(f"  {name}   degree {g.degree}   exponents {list(g.exponents)}", file=out)
    print(file=out)
    print("charts:", file=out)
    for name, chart in zip(report.generator_strings(), report.charts):
        print(f"  at {name}: {chart.pretty()}", file=out)
    print(file=out)
    if report.unstable is not None:
        print(f"unstable locus: {report.unstable.describe()}", file=out)
    if report.polytope is not None:
        print(f"moment polytope vertices: {report.polytope.as_jsonable()['vertices']}", file=out)
        for point, label in report.polytope_labels:
            print(f"  {list(point)} -> {label}", file=out)
    if report.fan is not None:
        print(f"fan rays: {[list(r) for r in report.fan.rays()]}", file=out)
    if report.identification is not None:
        print(f"identification: {report.identification.name}", file=out)
        print(
            f"  witness linear part {[list(r) for r in report.identification.witness.linear]}"
            f" translation {list(report.identification.witness.translation)}"
            f" scale {report.identification.witness.scale}",
            file=out,
        )
    ch = report.chamber
    line = f"linearization position: {ch.status}"
    if ch.chamber is not None:
        line += f", chamber cone generated by {[list(g) for g in ch.chamber.generators]}"
    if ch.walls_hit:
        line += f", walls hit: {[w.as_jsonable() for w in ch.walls_hit]}"
    print(line, file=out)
    for note in report.notes:
        print(f"note: {note}", file=out)


def cmd_invariants(problem, degree_bound, mode, out):
    action = make_action(problem["action_rows"], problem["variables"], problem["alpha"])
    report = build_report(action, mode, degree_bound)
    gens = report.generators
    print(
        f"{len(gens.generators)} generators up to degree {gens.verified_degree} "
        f"(complete: {gens.complete}, mode: {report.mode})",
        file=out,
    )
    for g, name in zip(gens.generators, report.generator_strings()):
        print(f"  {name}   degree {g.degree}   exponents {list(g.exponents)}", file=out)
    return 0


def cmd_quotient(problem, degree_bound, mode, out, json_path=None, svg_path=None):
    action = make_action(problem["action_rows"], problem["variables"], problem["alpha"])
    report = build_report(action, mode, degree_bound)
    _print_report(report, out)
    if json_path:
        with open(json_path, "w", encoding="utf-8") as fh:
            fh.write(canonical_dumps(report.as_jsonable()))
    if svg_path:
        if report.polytope is None or report.polytope.dim != 2:
            raise ToricGITError("no 2-D moment polytope to render")
        labels = {p: label for p, label in report.polytope_labels}
        with open(svg_path, "w", encoding="utf-8") as fh:
            fh.write(polytope_svg(report.polytope, labels))
    return 0


def cmd_sweep(problem, degree_bound, mode, out, json_path=None):
    if problem["sweep_box"] is None:
        raise ProblemFileError("sweep needs a sweep_box field in the problem file")
    result = sweep(
        problem["action_rows"],
        problem["variables"],
        [tuple(r) for r in problem["sweep_box"]],
        mode,
        degree_bound,
    )
    print(
        f"{len(result.groups)} groups, {len(result.errors)} errored linearizations",
        file=out,
    )
    for group in result.groups:
        ident = group.report.identification
        if group.unstable_components is None:
            unstable = "n/a"
        elif group.unstable_components == ((),):
            unstable = "whole space"
        elif not group.unstable_components:
            unstable = "empty"
        else:
            unstable = " union ".join(
                "{" + " = ".join(c) + " = 0}" for c in group.unstable_components
            )
        print(
            f"  rep {list(group.representative)}  members {len(group.alphas)}  "
            f"unstable dim {group.unstable_dimension}  [{unstable}]  "
            f"identification {ident.name if ident else '-'}  "
            f"position {group.report.chamber.status}",
            file=out,
        )
    for alpha, msg in result.errors:
        print(f"  error at {list(alpha)}: {msg}", file=out)
    if json_path:
        with open(json_path, "w", encoding="utf-8") as fh:
            fh.write(canonical_dumps(result.as_jsonable()))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toricgit",
        description="Exact GIT quotients of torus actions on affine space.",
    )
    parser.add_argument(
        "--degree-bound",
        type=int,
        default=None,
        help="override the degree bound (default: problem file, then 8)",
    )
    parser.add_argument(
        "--mode",
        choices=["polynomial", "lattice"],
        default=None,
        help="override the solution mode (default: problem file)",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p_inv = sub.add_parser("invariants", help="invariant-ring generators")
    p_inv.add_argument("file")
    p_quot = sub.add_parser("quotient", help="full quotient report")
    p_quot.add_argument("file")
    p_quot.add_argument("--json", dest="json_path", default=None)
    p_quot.add_argument("--svg", dest="svg_path", default=None)
    p_sweep = sub.add_parser("sweep", help="chamber table over a linearization box")
    p_sweep.add_argument("file")
    p_sweep.add_argument("--json", dest="json_path", default=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        problem = parse_problem(args.file)
        degree_bound = (
            args.degree_bound
            if args.degree_bound is not None
            else problem["degree_bound"] or DEFAULT_DEGREE_BOUND
        )
        mode = args.mode if args.mode is not None else problem["mode"]
        if args.command == "invariants":
            return cmd_invariants(problem, degree_bound, mode, sys.stdout)
        if args.command == "quotient":
            return cmd_quotient(
                problem, degree_bound, mode, sys.stdout, args.json_path, args.svg_path
            )
        return cmd_sweep(problem, degree_bound, mode, sys.stdout, args.json_path)
    except ProblemFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ToricGITError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
