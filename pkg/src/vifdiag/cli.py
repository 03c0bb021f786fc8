"""Command-line front end.

Three subcommands: ``diagnose`` runs the full collinearity decision test,
``fit`` prints the original and orthonormal estimates, ``datasets`` lists
the builtin tables. Exit codes: 0 success, 1 any error (usage, parse,
rank, degeneracy), 2 reserved for ``diagnose --strict-exit`` when the
verdict is troubling. The command works entirely offline.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence

from .collinearity import ALPHA_DEFAULT, theorem1_test
from .datasets import BUILTIN_NAMES, builtin, read_table
from .errors import VifdiagError
from .regression import ModelSpec, ols_fit, orthonormal_fit
from .report import FORMATS, render_datasets, render_diagnose, render_fit


class _UsageError(Exception):
    def __init__(self, parser: argparse.ArgumentParser, message: str):
        self.parser = parser
        super().__init__(message)


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on usage errors; 2 is reserved for the
    # strict-exit troubling verdict, so usage errors are rerouted to 1.
    def error(self, message):
        raise _UsageError(self, message)


def _add_model_args(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--data", metavar="PATH", help="CSV file with a header row")
    source.add_argument(
        "--builtin",
        metavar="NAME",
        help=f"builtin dataset ({', '.join(BUILTIN_NAMES)})",
    )
    parser.add_argument("--response", required=True, metavar="COL",
                        help="response column name")
    parser.add_argument(
        "--features",
        nargs="+",
        metavar="COL",
        help="feature columns, in order (default: all other data columns)",
    )
    parser.add_argument(
        "--no-intercept",
        action="store_true",
        help="do not prepend a constant column",
    )
    parser.add_argument(
        "--format",
        choices=FORMATS,
        default="text-table",
        help="output format (default: text-table)",
    )


def _build_parser() -> _Parser:
    parser = _Parser(prog="vifdiag", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    diag = sub.add_parser(
        "diagnose",
        help="decide whether collinearity troubles each coefficient",
    )
    _add_model_args(diag)
    diag.add_argument(
        "--alpha",
        type=float,
        default=ALPHA_DEFAULT,
        help=f"significance level in (0, 1) (default: {ALPHA_DEFAULT})",
    )
    diag.add_argument(
        "--strict-exit",
        action="store_true",
        help="exit 2 when the verdict is troubling (for pipelines)",
    )
    diag.set_defaults(handler=cmd_diagnose)

    fit = sub.add_parser(
        "fit",
        help="print original and orthonormal model estimates",
    )
    _add_model_args(fit)
    fit.set_defaults(handler=cmd_fit)

    ds = sub.add_parser("datasets", help="list builtin datasets")
    ds.add_argument(
        "--format",
        choices=("text-table", "json"),
        default="text-table",
        help="output format (default: text-table)",
    )
    ds.set_defaults(handler=cmd_datasets)
    return parser


def _resolve_spec(args) -> ModelSpec:
    if args.builtin is not None:
        table = builtin(args.builtin)
    else:
        table = read_table(args.data)
    return table.model_spec(
        response=args.response,
        features=args.features,
        add_intercept=not args.no_intercept,
    )


def _emit(body: bytes) -> None:
    sys.stdout.write(body.decode("utf-8"))
    sys.stdout.flush()


def cmd_diagnose(args) -> int:
    if not 0.0 < args.alpha < 1.0:
        raise VifdiagError(f"--alpha must lie strictly between 0 and 1, got {args.alpha}")
    spec = _resolve_spec(args)
    report = theorem1_test(spec, alpha=args.alpha)
    _emit(render_diagnose(report, args.format).body)
    if args.strict_exit and report.overall_troubling:
        return 2
    return 0


def cmd_fit(args) -> int:
    spec = _resolve_spec(args)
    fit = ols_fit(spec)
    ofit = orthonormal_fit(spec)
    _emit(render_fit(spec, fit, ofit, args.format).body)
    return 0


def cmd_datasets(args) -> int:
    listing = [builtin(name) for name in BUILTIN_NAMES]
    _emit(render_datasets(listing, args.format).body)
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        exc.parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except VifdiagError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
