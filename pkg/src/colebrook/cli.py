"""Command-line interface: solve, trace, sweep and table subcommands.

Output format defaults to a human-readable table on a terminal and CSV when
piped; --format overrides.  Exit codes are a stable contract: 0 converged,
1 failed to converge, 2 usage error, 3 domain error, 4 I/O error.
"""

import argparse
import csv
import io
import json
import math
import sys

from .benchmarks import EXAMPLE_PROBLEMS
from .core import ColebrookParams, DomainError, lambda_of_x
from .engine import DEFAULT_START, StoppingPolicy, run
from .methods import METHOD_IDS, get_method
from .sweep import TABLE_COLUMNS, summary_table, sweep

__all__ = ["main"]

SCHEMA_VERSION = "1"
DIV0_MARK = "#div0!"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_IO = 4


def _fmt(x: float) -> str:
    """Serialize a float with enough digits to round-trip (>= 12 significant)."""
    return repr(float(x))


def _policy_from_args(args) -> StoppingPolicy:
    # --tol is quantized to a decimal-places count; the default 0.5e-9
    # maps exactly to nine-decimal agreement
    tol = args.tol
    if not (0.0 < tol < 1.0):
        raise DomainError(f"tolerance must be in (0, 1), got {tol!r}")
    decimals = max(1, round(-math.log10(2.0 * tol)))
    return StoppingPolicy(decimal_agreement=decimals, max_iterations=args.max_iter)


def _problem_from_args(args) -> ColebrookParams:
    if args.paper_examples is not None:
        if args.paper_examples not in EXAMPLE_PROBLEMS:
            raise DomainError(
                f"--paper-examples index must be 1..5, got {args.paper_examples}"
            )
        return EXAMPLE_PROBLEMS[args.paper_examples]
    if args.re is None or args.eps is None:
        raise _UsageError("--re and --eps are required unless --paper-examples is given")
    return ColebrookParams(args.re, args.eps)


class _UsageError(Exception):
    pass


def _pick_format(args) -> str:
    if args.format:
        return args.format
    if args.out:
        return "csv"
    return "human" if sys.stdout.isatty() else "csv"


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_doc(command: str, inputs: dict, results) -> str:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
    }
    return json.dumps(doc, indent=2) + "\n"


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# solve
# ---------------------------------------------------------------------------


def _cmd_solve(args) -> int:
    p = _problem_from_args(args)
    policy = _policy_from_args(args)
    tr = run(args.method, p, x0=args.x0, policy=policy)
    x = tr.final
    lam = lambda_of_x(x)
    fmt = _pick_format(args)
    inputs = {
        "reynolds": _fmt(p.reynolds),
        "roughness": _fmt(p.roughness),
        "method": tr.method,
        "x0": _fmt(args.x0),
        "tol": _fmt(args.tol),
        "max_iter": args.max_iter,
    }
    if fmt == "json":
        text = _json_doc("solve", inputs, {
            "x": _fmt(x),
            "friction_factor": _fmt(lam),
            "iterations_to_solution": tr.iterations_to_solution,
            "termination": tr.termination,
            "residual": None if tr.residual_at_final is None
            else _fmt(tr.residual_at_final),
        })
    elif fmt == "csv":
        text = _csv_text(
            ["method_id", "reynolds", "roughness", "x", "friction_factor",
             "iterations", "termination", "residual"],
            [[tr.method, _fmt(p.reynolds), _fmt(p.roughness), _fmt(x),
              _fmt(lam), tr.iterations_to_solution, tr.termination,
              "" if tr.residual_at_final is None else _fmt(tr.residual_at_final)]],
        )
    else:
        lines = [
            f"method        {tr.method}",
            f"reynolds      {p.reynolds:g}",
            f"roughness     {p.roughness:g}",
            f"x             {x:.9f}",
            f"friction      {lam:.12g}",
            f"iterations    {tr.iterations_to_solution}",
            f"termination   {tr.termination}",
        ]
        if tr.residual_at_final is not None:
            lines.append(f"residual      {tr.residual_at_final:.3e}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK if tr.converged else EXIT_FAILED


# ---------------------------------------------------------------------------
# trace
# ---------------------------------------------------------------------------


def _cmd_trace(args) -> int:
    p = _problem_from_args(args)
    policy = _policy_from_args(args)
    tr = run(args.method, p, x0=args.x0, policy=policy)
    fmt = _pick_format(args)
    show_div0 = tr.termination == "converged_by_div0"
    if fmt == "json":
        inputs = {
            "reynolds": _fmt(p.reynolds),
            "roughness": _fmt(p.roughness),
            "method": tr.method,
            "x0": _fmt(args.x0),
        }
        text = _json_doc("trace", inputs, {
            "iterates": [_fmt(v) for v in tr.iterates],
            "division_by_zero": show_div0,
            "termination": tr.termination,
            "iterations_to_solution": tr.iterations_to_solution,
        })
    elif fmt == "csv":
        rows = [[i, f"{v:.9f}"] for i, v in enumerate(tr.iterates, start=1)]
        if show_div0:
            rows.append([len(tr.iterates) + 1, DIV0_MARK])
        text = _csv_text(["iteration", "x"], rows)
    else:
        lines = [f"{tr.method}  Re={p.reynolds:g}  eps={p.roughness:g}  "
                 f"x0={args.x0:.9f}"]
        for i, v in enumerate(tr.iterates, start=1):
            lines.append(f"x_{i} = {v:.9f}")
        if show_div0:
            lines.append(DIV0_MARK)
        lines.append(f"termination: {tr.termination} "
                     f"(iterations to solution: {tr.iterations_to_solution})")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK if tr.converged else EXIT_FAILED


# ---------------------------------------------------------------------------
# sweep / table
# ---------------------------------------------------------------------------


def _run_sweep(args):
    policy = _policy_from_args(args)
    return sweep(x0=args.x0, policy=policy)


def _table_rows(report) -> list[list]:
    return [[r[c] for c in TABLE_COLUMNS] for r in summary_table(report)]


def _cmd_table(args) -> int:
    report = _run_sweep(args)
    fmt = _pick_format(args)
    if fmt == "json":
        inputs = {"x0": _fmt(args.x0), "grid_points": report.grid.size}
        text = _json_doc("table", inputs, summary_table(report))
    elif fmt == "csv":
        text = _csv_text(TABLE_COLUMNS, _table_rows(report))
    else:
        text = _human_table(TABLE_COLUMNS, _table_rows(report))
    _emit(text, args.out)
    return EXIT_OK


def _cmd_sweep(args) -> int:
    report = _run_sweep(args)
    fmt = _pick_format(args)
    rows = summary_table(report)
    for r in rows:
        res = report.results[r["method_id"]]
        r["histogram"] = dict(sorted(res.histogram.items()))
        r["failures"] = len(res.failures)
        wp = res.worst_point
        r["worst_point"] = None if wp is None else {
            "reynolds": _fmt(wp.reynolds), "roughness": _fmt(wp.roughness)}
    if fmt == "json":
        inputs = {"x0": _fmt(args.x0), "grid_points": report.grid.size}
        text = _json_doc("sweep", inputs, rows)
    elif fmt == "csv":
        cols = TABLE_COLUMNS + ["failures", "histogram"]
        csv_rows = []
        for r in rows:
            hist = ";".join(f"{k}:{v}" for k, v in r["histogram"].items())
            csv_rows.append([r[c] for c in TABLE_COLUMNS] + [r["failures"], hist])
        text = _csv_text(cols, csv_rows)
    else:
        cols = TABLE_COLUMNS + ["failures"]
        text = _human_table(cols, [[r[c] for c in cols] for r in rows])
    _emit(text, args.out)
    return EXIT_OK


def _human_table(header: list[str], rows: list[list]) -> str:
    cells = [header] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip()
             for row in cells]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _add_common(sp, with_problem: bool):
    if with_problem:
        sp.add_argument("--re", type=float, help="Reynolds number")
        sp.add_argument("--eps", type=float, help="relative roughness")
        sp.add_argument("--method", default="newton-raphson",
                        choices=METHOD_IDS, metavar="METHOD",
                        help="iterative method id (default: newton-raphson)")
        sp.add_argument("--paper-examples", type=int, metavar="N",
                        help="use published example problem N (1-5) instead of --re/--eps")
    sp.add_argument("--x0", type=float, default=DEFAULT_START,
                    help=f"start point (default: {DEFAULT_START})")
    sp.add_argument("--tol", type=float, default=0.5e-9,
                    help="agreement tolerance (default: 0.5e-9)")
    sp.add_argument("--max-iter", type=int, default=100,
                    help="iteration cap (default: 100)")
    sp.add_argument("--format", choices=["human", "csv", "json"],
                    help="output format (default: human on tty, csv piped)")
    sp.add_argument("--out", help="write output to this path instead of stdout")


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="colebrook",
        description="Iterative solvers for the implicit Colebrook "
                    "flow-friction equation.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="solve one instance for the friction factor")
    _add_common(sp, with_problem=True)
    sp.set_defaults(fn=_cmd_solve)

    sp = sub.add_parser("trace", help="print the full iterate trace")
    _add_common(sp, with_problem=True)
    sp.set_defaults(fn=_cmd_trace)

    sp = sub.add_parser("sweep", help="run the 740-point domain sweep")
    _add_common(sp, with_problem=False)
    sp.set_defaults(fn=_cmd_sweep)

    sp = sub.add_parser("table", help="emit the worst-case comparison table")
    _add_common(sp, with_problem=False)
    sp.set_defaults(fn=_cmd_table)

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize anything else
        return int(exc.code) if exc.code else EXIT_OK
    try:
        return args.fn(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, KeyError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
