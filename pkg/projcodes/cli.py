"""
projcode command-line interface.

Usage:
    projcode.py construct -q 2 -n 9 -d 2 --metric injection
    projcode.py table -q 2 --d-values 2 3 --n-min 9 --n-max 10
    projcode.py bounds gv -n 3 -q 2 -d 2
    projcode.py verify out/code.txt
    projcode.py profiles -n 9 -d 2

Exit codes: 0 success or certified, 1 usage or parameter error,
2 certification failure.
"""

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path
from typing import Any, Optional

from pydantic import ValidationError
from rich.console import Console

from projcodes.bounds import (
    gaussian,
    gv_bound,
    gv_bound_subspace,
    log_q,
    projective_size,
    punctured_size_bound,
    sphere_size,
    sphere_size_subspace,
)
from projcodes.codebook import (
    as_code_metric,
    build_code,
    code_summary,
    dump_code,
    enumerate_code,
    is_truncated,
    load_code,
    selection_metric_for,
    table_row,
    verify_min_distance,
)
from projcodes.config import get_default, get_limit, load_settings, reset_settings
from projcodes.errors import CertificationError, ProjCodesError, format_error, format_error_message
from projcodes.help_display import display_help, display_report, display_summary
from projcodes.matq import matrix_to_text
from projcodes.profiles import dump_profiles, greedy_select
from projcodes.runlog import RunEventType, get_run_logger, log_run_event
from projcodes.validation import (
    BoundsRequest,
    RunConfig,
    TableRange,
    validate_bounds_request,
    validate_run_config,
    validate_table_range,
)


EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NOT_CERTIFIED = 2

TABLE_COLUMNS = [
    "q", "d_I", "d_S", "n",
    "log_C1", "log_C2", "log_C3", "log_C4",
    "M1", "M2", "M3", "M4",
    "bound_C1", "bound_C2", "bound_C3",
]

console = Console()
err_console = Console(stderr=True)


class UsageError(Exception):
    """Raised instead of argparse's own exit so that usage errors exit with 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ============================================================================
# Output helpers
# ============================================================================

def _write(text: str, output: Optional[str]):
    if output:
        path = Path(output)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    else:
        sys.stdout.write(text)


def _fmt_rate(value: float) -> str:
    return f"{value:.4f}"


def _default_dump_path(config: RunConfig) -> str:
    name = f"code_n{config.n}_q{config.q}_d{config.d}_{config.metric}.txt"
    return str(Path(get_default("output_dir")) / name)


def _summary_csv(summary: dict[str, Any]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "q", "d", "metric", "classes", "M", "rate", "bound_rate"])
    writer.writerow([
        summary["n"], summary["q"], summary["d"], summary["metric"], len(summary["classes"]),
        summary["M_digits"], _fmt_rate(summary["rate"]), _fmt_rate(summary["bound_rate"]),
    ])
    return buf.getvalue()


def _summary_text(summary: dict[str, Any]) -> str:
    buf = io.StringIO()
    display_summary(summary, Console(file=buf, width=100, color_system=None, force_terminal=False))
    return buf.getvalue()


# ============================================================================
# Commands
# ============================================================================

def cmd_construct(
    config: RunConfig,
    dump: Optional[str] = None,
    enumerate_to: Optional[str] = None,
    verify: bool = False
) -> int:
    """Build a code, write its summary and optionally its dump and codewords."""
    code = build_code(config.n, config.q, config.d, config.metric)
    summary = code_summary(code)
    exit_code = EXIT_OK

    if verify:
        mode = "exhaustive" if code.M <= config.cap_verify else "sampled"
        report = verify_min_distance(code, mode=mode, seed=config.seed, cap=config.cap_verify)
        summary["verification"] = report.to_dict()
        if not report.certified:
            exit_code = EXIT_NOT_CERTIFIED

    if config.format == "json":
        text = json.dumps(summary, indent=2) + "\n"
    elif config.format == "csv":
        text = _summary_csv(summary)
    else:
        text = _summary_text(summary)
    _write(text, config.output)

    if dump is not None:
        path = dump or _default_dump_path(config)
        _write(dump_code(code), path)
        log_run_event(RunEventType.DUMP_WRITTEN, command="construct", operation=path, parameters=code.parameters())

    if enumerate_to is not None:
        blocks = [matrix_to_text(V.generator) for V in enumerate_code(code, config.cap_enum)]
        _write("\n\n".join(blocks) + "\n", enumerate_to)
        if is_truncated(code, config.cap_enum):
            err_console.print(f"[yellow]codeword list truncated at {config.cap_enum} of {code.M}[/yellow]")

    if config.output:
        console.print(f"log_{config.q} M = {_fmt_rate(summary['rate'])}  (M = {summary['M_digits']})")
    return exit_code


def cmd_table(table: TableRange, output: Optional[str] = None) -> int:
    """Rate comparison rows as CSV (header only for an empty range)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(TABLE_COLUMNS + (["gv"] if table.with_gv else []))

    for d_i, n in table.rows():
        row = table_row(n, table.q, d_i)
        values = [
            row["q"], row["d_I"], row["d_S"], row["n"],
            _fmt_rate(row["C1"]), _fmt_rate(row["C2"]), _fmt_rate(row["C3"]), _fmt_rate(row["C4"]),
            row["M1"], row["M2"], row["M3"], row["M4"],
            _fmt_rate(row["C1_bound"]), _fmt_rate(row["C2_bound"]), _fmt_rate(row["C3_bound"]),
        ]
        if table.with_gv:
            values.append(_fmt_rate(gv_bound(n, table.q, d_i).log_q))
        writer.writerow(values)
        log_run_event(RunEventType.TABLE_ROW, command="table", operation=f"n={n} d_I={d_i}", details={
            "C1": round(row["C1"], 4), "C2": round(row["C2"], 4), "C3": round(row["C3"], 4),
        })

    _write(buf.getvalue(), output)
    return EXIT_OK


def _bounds_lines(req: BoundsRequest) -> list[str]:
    q = req.q
    if req.kind == "gauss":
        return [f"gaussian(n={req.n}, k={req.k}, q={q}) = {gaussian(req.n, req.k, q)}"]

    if req.kind == "projective":
        size = projective_size(req.n, q)
        return [f"projective_size(n={req.n}, q={q}) = {size}  (log_{q} = {log_q(size, q):.4f})"]

    if req.kind == "sphere":
        count = sphere_size if req.metric == "injection" else sphere_size_subspace
        ks = range(req.n + 1) if req.all_k else [req.k]
        return [
            f"sphere_size(n={req.n}, q={q}, k={k}, t={req.t}) = {count(req.n, q, k, req.t)}"
            + ("" if req.metric == "injection" else "  [subspace distance]")
            for k in ks
        ]

    if req.kind == "gv":
        lines = []
        bounds = [("injection", gv_bound(req.n, q, req.d))]
        if req.metric == "subspace":
            bounds.append(("subspace", gv_bound_subspace(req.n, q, req.d)))
        for label, gv in bounds:
            lines.append(
                f"gv_bound(n={req.n}, q={q}, d={req.d}) [{label}] = {gv.numerator}/{gv.denominator}"
                f" = {gv.value}  (log_{q} = {gv.log_q:.4f})"
            )
        return lines

    size = punctured_size_bound(req.M, req.n, req.k, q)
    return [f"punctured_size_bound(M={req.M}, n={req.n}, k={req.k}, q={q}) = {size}"]


def cmd_bounds(req: BoundsRequest) -> int:
    """Print exact bound values followed by log_q where useful."""
    lines = _bounds_lines(req)
    for line in lines:
        console.print(line, markup=False, highlight=False, soft_wrap=True)
    log_run_event(
        RunEventType.BOUNDS_COMPUTED,
        command="bounds",
        operation=req.kind,
        parameters=req.model_dump(exclude_none=True),
        details={"lines": lines}
    )
    return EXIT_OK


def cmd_verify(config: RunConfig, dump_path: str, trials: Optional[int] = None) -> int:
    """Re-check a dump; exhaustive when M is within the cap, sampled otherwise."""
    code = load_code(Path(dump_path).read_text())
    mode = "exhaustive" if code.M <= config.cap_verify else "sampled"
    report = verify_min_distance(code, mode=mode, seed=config.seed, trials=trials, cap=config.cap_verify)

    if config.format == "json":
        _write(json.dumps(report.to_dict(), indent=2) + "\n", config.output)
    else:
        display_report(report.to_dict(), console)

    if report.certified:
        return EXIT_OK
    error = CertificationError(
        f"Claimed d={code.d} not certified for {dump_path}",
        module="codebook",
        code="NOT_CERTIFIED",
        context={"violations": report.violations[:3]}
    )
    err_console.print(format_error_message(error.to_dict()), markup=False)
    get_run_logger().log_error("verify", error.to_dict())
    return EXIT_NOT_CERTIFIED


def cmd_profiles(config: RunConfig, weight: Optional[int] = None) -> int:
    """Greedy profile vectors, one per line."""
    metric = selection_metric_for(as_code_metric(config.metric))
    _write(dump_profiles(greedy_select(config.n, config.d, metric, weight=weight)), config.output)
    return EXIT_OK


# ============================================================================
# Argument parsing
# ============================================================================

def _code_options(parser: argparse.ArgumentParser, need_nd: bool = True):
    parser.add_argument("-q", type=int, default=2, help="Field order (prime power)")
    if need_nd:
        parser.add_argument("-n", type=int, required=True, help="Ambient dimension")
        parser.add_argument("-d", type=int, required=True, help="Target distance")
    parser.add_argument("--metric", choices=["injection", "subspace"], default=None)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--cap-enum", type=int, default=None)
    parser.add_argument("--cap-verify", type=int, default=None)
    parser.add_argument("-o", "--output", default=None, help="Output path (stdout by default)")
    parser.add_argument("--format", choices=["json", "csv", "text"], default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="projcode.py",
        description="Subspace codes for the injection metric",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        add_help=False,
    )
    parser.add_argument("--log-level", default="WARNING", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    parser.add_argument("--config", default=None, help="Alternate codes_config.yaml")

    subparsers = parser.add_subparsers(dest="command", parser_class=_Parser)

    construct = subparsers.add_parser("construct", help="Build a code")
    _code_options(construct)
    construct.add_argument("--dump", nargs="?", const="", default=None, help="Write the code dump")
    construct.add_argument("--enumerate", dest="enumerate_to", default=None, help="Write codewords (up to --cap-enum)")
    construct.add_argument("--verify", action="store_true", help="Verify after building")

    table = subparsers.add_parser("table", help="Rate comparison CSV")
    table.add_argument("-q", type=int, default=2)
    table.add_argument("--d-values", type=int, nargs="+", default=[2])
    table.add_argument("--n-min", type=int, required=True)
    table.add_argument("--n-max", type=int, required=True)
    table.add_argument("--with-gv", action="store_true")
    table.add_argument("-o", "--output", default=None)

    bounds = subparsers.add_parser("bounds", help="Exact bounds")
    bounds.add_argument("kind", choices=["gauss", "projective", "sphere", "gv", "punct"])
    bounds.add_argument("-n", type=int, required=True)
    bounds.add_argument("-q", type=int, default=2)
    bounds.add_argument("-k", type=int, default=None)
    bounds.add_argument("-t", type=int, default=None)
    bounds.add_argument("-d", type=int, default=None)
    bounds.add_argument("-M", type=int, default=None)
    bounds.add_argument("--metric", choices=["injection", "subspace"], default="injection")
    bounds.add_argument("--all-k", action="store_true")

    verify = subparsers.add_parser("verify", help="Certify a code dump")
    verify.add_argument("dump")
    _code_options(verify, need_nd=False)
    verify.add_argument("--trials", type=int, default=None)

    profiles = subparsers.add_parser("profiles", help="Greedy profile vectors")
    _code_options(profiles)
    profiles.add_argument("--weight", type=int, default=None)

    subparsers.add_parser("help", help="Show help")
    return parser


def _run_config(args: argparse.Namespace) -> RunConfig:
    values = {
        "q": args.q,
        "metric": args.metric or get_default("metric"),
        "seed": args.seed if args.seed is not None else get_default("seed"),
        "cap_enum": args.cap_enum or get_limit("cap_enum"),
        "cap_verify": args.cap_verify or get_limit("cap_verify"),
        "output": args.output,
        "format": args.format or get_default("format"),
    }
    if args.command != "verify":
        values.update(n=args.n, d=args.d)
    return validate_run_config(args.command, **values)


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "construct":
        return cmd_construct(_run_config(args), dump=args.dump, enumerate_to=args.enumerate_to, verify=args.verify)
    if args.command == "table":
        return cmd_table(
            validate_table_range(args.n_min, args.n_max, q=args.q, d_values=args.d_values, with_gv=args.with_gv),
            args.output,
        )
    if args.command == "bounds":
        return cmd_bounds(validate_bounds_request(
            args.kind, args.n, q=args.q, k=args.k, t=args.t, d=args.d, M=args.M,
            metric=args.metric, all_k=args.all_k,
        ))
    if args.command == "verify":
        return cmd_verify(_run_config(args), args.dump, trials=args.trials)
    if args.command == "profiles":
        return cmd_profiles(_run_config(args), weight=args.weight)
    display_help(console)
    return EXIT_OK


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        err_console.print(f"Error: {e}", markup=False)
        err_console.print("Run: projcode.py help", markup=False)
        return EXIT_USAGE

    logging.basicConfig(level=getattr(logging, args.log_level), format="%(levelname)s %(name)s: %(message)s")

    command = args.command or "help"
    try:
        if args.config:
            reset_settings(load_settings(args.config))
        return _dispatch(args)
    except ValidationError as e:
        messages = "; ".join(err["msg"] for err in e.errors())
        error = format_error("cli", "USAGE", messages)
        err_console.print(format_error_message(error), markup=False)
        get_run_logger().log_error(command, error)
        return EXIT_USAGE
    except ProjCodesError as e:
        error = e.to_dict()
        err_console.print(format_error_message(error), markup=False)
        get_run_logger().log_error(command, error)
        return EXIT_NOT_CERTIFIED if isinstance(e, CertificationError) else EXIT_USAGE
    except OSError as e:
        err_console.print(f"Error: {e}", markup=False)
        return EXIT_USAGE
