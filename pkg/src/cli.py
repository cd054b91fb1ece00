"""
Command line front end for the permutation pattern toolkit.

Tables print as CSV (`n,k,count`) and reports as JSON by default. Logging goes to stderr
so that stdout is identical across runs and worker counts.

Exit codes: 0 on success, 1 on an internal failure such as a count overflow, 2 on a usage
or input error, 3 when a `check` finds violations.
"""

import argparse
import csv
import io
import logging
import sys
from typing import Callable, Sequence

from pydantic import BaseModel

from src import asymptotics, bounds, checks, coloring, enumeration, partitions
from src.perms import Perm
from src.service.config import configure_logging, get_settings
from src.service.error_mapping import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, map_error
from src.service.exceptions import InvalidInputError, PermKitError
from src.service.models import (
    BijectionRequest,
    ColumnResponse,
    CountResponse,
    MahonianResponse,
    TriangleResponse,
)

logger = logging.getLogger(__name__)

PROG = "permkit"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _write_csv(header: Sequence[str], rows) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _json(model: BaseModel) -> str:
    return model.model_dump_json(by_alias=True, indent=2) + "\n"


def _emit(args, model: BaseModel, table: Callable[[], str] | None = None) -> str:
    fmt = args.format or ("csv" if table is not None else "json")
    if fmt == "csv":
        if table is None:
            raise InvalidInputError(f"'{args.command}' has no CSV output; use --format json")
        return table()
    return _json(model)


def _cmd_count(args) -> tuple[str, int]:
    tau = Perm.parse(args.pattern)
    count = enumeration.count_avoiders(tau, args.n, jobs=args.jobs)
    model = CountResponse(pattern=str(tau), n=args.n, count=count)
    return _emit(args, model, lambda: _write_csv(("n", "count"), [(args.n, count)])), EXIT_OK


def _cmd_triangle(args) -> tuple[str, int]:
    tau = Perm.parse(args.pattern)
    triangle = enumeration.inversion_triangle(tau, args.nmax, k_max=args.kmax, jobs=args.jobs)
    model = TriangleResponse(
        pattern=str(tau),
        n_max=triangle.n_max,
        k_max=triangle.k_max,
        rows=[list(row) for row in triangle.rows],
    )
    return _emit(args, model, lambda: _write_csv(("n", "k", "count"), triangle.entries())), EXIT_OK


def _cmd_column(args) -> tuple[str, int]:
    tau = Perm.parse(args.pattern)
    values = enumeration.column_values(tau, args.k, args.nmax, jobs=args.jobs)
    model = ColumnResponse(pattern=str(tau), k=args.k, values=values)
    rows = [(n, args.k, v) for n, v in enumerate(values, start=1)]
    return _emit(args, model, lambda: _write_csv(("n", "k", "count"), rows)), EXIT_OK


def _cmd_mahonian(args) -> tuple[str, int]:
    count = enumeration.mahonian_count(args.n, args.k)
    model = MahonianResponse(n=args.n, k=args.k, count=count)
    return _emit(args, model, lambda: _write_csv(("n", "k", "count"), [(args.n, args.k, count)])), EXIT_OK


def _cmd_color(args) -> tuple[str, int]:
    triple = coloring.PatternTriple(
        Perm.parse(args.sigma), Perm.parse(args.tau), Perm.parse(args.rho)
    )
    report = coloring.check_coloring_lemma(Perm.parse(args.perm), triple)
    return _emit(args, report), EXIT_OK


def _cmd_bound(args) -> tuple[str, int]:
    value = bounds.evaluate_formula(args.formula, args.values)
    if args.format == "text":
        return f"{value.text()}\n{value.derivation}\n", EXIT_OK
    return _emit(args, value.to_model()), EXIT_OK


def _cmd_biject(args) -> tuple[str, int]:
    request = BijectionRequest(
        perm=args.perm, partition=args.partition, lam=args.lam, mu=args.mu, n=args.n
    )
    return _emit(args, partitions.apply_bijection(args.bijection, request)), EXIT_OK


def _cmd_check(args) -> tuple[str, int]:
    report = checks.run_check(
        args.check, jobs=args.jobs, n_max=args.nmax,
        k_max=args.kmax,
        pattern=args.pattern,
        triple=args.triple,
    )
    return _emit(args, report), EXIT_OK if report.passed else EXIT_CHECK_FAILED


def _cmd_poly(args) -> tuple[str, int]:
    report = asymptotics.verify_profile(
        Perm.parse(args.pattern), args.k, args.nmax, window=args.window, jobs=args.jobs
    )
    return _emit(args, report), EXIT_OK


def _cmd_ratio(args) -> tuple[str, int]:
    report = asymptotics.ratio_report(Perm.parse(args.pattern), args.k, args.nmax, jobs=args.jobs)
    if args.format == "csv":
        rows = [(p.n, args.k, p.avoiders, p.total, p.ratio) for p in report.points]
        return _write_csv(("n", "k", "avoiders", "total", "ratio"), rows), EXIT_OK
    return _json(report), EXIT_OK


def _cmd_serve(args) -> tuple[str, int]:
    import uvicorn

    uvicorn.run("src.main:create_application", factory=True, host=args.host, port=args.port)
    return "", EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("csv", "json"), default=None,
        help="output format; csv for tables and json for reports by default",
    )
    common.add_argument(
        "--jobs", type=int, default=None,
        help="worker processes for enumeration (default: PERMKIT_JOBS or the number of cores)",
    )

    parser = argparse.ArgumentParser(
        prog=PROG, description=get_settings().app_description
    )
    parser.add_argument(
        "--log-level", type=str.upper, choices=LOG_LEVELS, default=None, help="override LOG_LEVEL"
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("count", parents=[common], help="number of avoiders of a pattern")
    p.add_argument("--pattern", required=True, help="forbidden pattern, e.g. 1324")
    p.add_argument("--n", type=int, required=True, help="permutation length")
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("triangle", parents=[common], help="avoiders by length and inversions")
    p.add_argument("--pattern", required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--kmax", type=int, default=None, help="keep inversion counts up to KMAX")
    p.set_defaults(handler=_cmd_triangle)

    p = sub.add_parser("column", parents=[common], help="s_{n,k}(pattern) for n = 1..NMAX")
    p.add_argument("--pattern", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.set_defaults(handler=_cmd_column)

    p = sub.add_parser("mahonian", parents=[common], help="permutations of length n with k inversions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(handler=_cmd_mahonian)

    p = sub.add_parser("color", parents=[common], help="red-blue coloring trace")
    p.add_argument("--perm", required=True)
    p.add_argument("--sigma", default="1", help="'-' for the empty pattern")
    p.add_argument("--tau", default="1", help="'-' for the empty pattern")
    p.add_argument("--rho", default="1", help="'-' for the empty pattern")
    p.set_defaults(handler=_cmd_color)

    p = sub.add_parser("bound", help="evaluate a bound formula")
    p.add_argument("formula", choices=sorted(bounds.FORMULAS))
    p.add_argument("values", nargs="*", help="formula arguments, e.g. layer sizes")
    p.add_argument(
        "--format", choices=("json", "text"), default=None,
        help="json report (default) or the value followed by its derivation",
    )
    p.set_defaults(handler=_cmd_bound, jobs=None)

    p = sub.add_parser("biject", parents=[common], help="apply a partition bijection")
    p.add_argument("bijection", choices=partitions.BIJECTIONS)
    p.add_argument("--perm")
    p.add_argument("--partition", help="e.g. 5+4+4+1+1, '0' for the empty partition")
    p.add_argument("--lam")
    p.add_argument("--mu")
    p.add_argument("--n", type=int)
    p.set_defaults(handler=_cmd_biject)

    p = sub.add_parser("check", parents=[common], help="run an exhaustive harness")
    p.add_argument("check", choices=sorted(checks.CHECKS))
    p.add_argument("--nmax", type=int)
    p.add_argument("--kmax", type=int)
    p.add_argument("--pattern")
    p.add_argument("--triple", help="sigma:tau:rho for the convolution check, e.g. 1:21:1")
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("poly", parents=[common], help="fit and verify a column profile")
    p.add_argument("--pattern", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--window", type=int, default=None)
    p.set_defaults(handler=_cmd_poly)

    p = sub.add_parser("ratio", parents=[common], help="share of permutations with k inversions avoiding a pattern")
    p.add_argument("--pattern", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.set_defaults(handler=_cmd_ratio)

    p = sub.add_parser("serve", help="serve the HTTP API")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(handler=_cmd_serve)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Parse argv, run one subcommand, write its output to stdout and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    configure_logging()
    if args.log_level:
        logging.getLogger().setLevel(args.log_level)

    try:
        output, code = args.handler(args)
    except PermKitError as err:
        print(f"error: {err}", file=sys.stderr)
        return map_error(err).exit_code
    sys.stdout.write(output)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
