"""Command-line front end.

Exit codes: 0 success, 2 usage or input errors, 3 semantic errors
(pairing, binding).
"""

from __future__ import annotations

import argparse
import sys
from importlib import resources
from pathlib import Path

from . import render
from .compare import EntityError, compare, evaluate_inventory, reevaluate
from .errors import (BindingError, InvalidInventoryError, InventoryParseError, ModelError,
                     OntoQualError, PairingError)
from .indicators import INDICATORS, get_indicator, sample
from .inventory import load_inventory, parse_inventory, validate
from .lsp import default_model, load_model

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_SEMANTIC = 3

BUNDLED = ("spo.json", "processco-v1.2.json", "processco-v1.3.json")


class CliError(Exception):
    def __init__(self, message, code=EXIT_USAGE):
        self.code = code
        super().__init__(message)


def read_inventory(path: str):
    """Load an inventory file; bundled fixture names resolve when no such file exists."""
    p = Path(path)
    try:
        if not p.exists() and p.name == path and path in BUNDLED:
            text = resources.files("ontoqual.data").joinpath(path).read_text(encoding="utf-8")
            return parse_inventory(text)
        return load_inventory(p)
    except FileNotFoundError:
        raise CliError(f"{path}: file not found") from None
    except IsADirectoryError:
        raise CliError(f"{path}: is a directory") from None
    except InventoryParseError as exc:
        raise CliError(f"{path}: {exc}") from None


def read_model(path):
    if path is None:
        return default_model()
    try:
        return load_model(path)
    except FileNotFoundError:
        raise CliError(f"{path}: file not found") from None
    except ModelError as exc:
        raise CliError(f"{path}: {exc}") from None


def _semantic_code(exc) -> int:
    cause = exc.cause if isinstance(exc, EntityError) else exc
    return EXIT_SEMANTIC if isinstance(cause, (PairingError, BindingError)) else EXIT_USAGE


def cmd_evaluate(args) -> str:
    model = read_model(args.model)
    inv = read_inventory(args.inventory)
    ev = evaluate_inventory(model, inv)
    if args.format == "csv":
        return render.evaluation_csv(ev)
    if args.format == "json":
        return render.evaluation_json(ev, model.model_id)
    return render.evaluation_text(ev, model.model_id)


def cmd_compare(args) -> str:
    if len(args.inventories) < 2:
        raise CliError("compare needs at least two inventory files")
    model = read_model(args.model)
    invs = [read_inventory(p) for p in args.inventories]
    try:
        report = compare(model, invs)
    except ValueError as exc:
        if isinstance(exc, OntoQualError):
            raise
        raise CliError(str(exc)) from None
    if args.format == "csv":
        return render.comparison_csv(report)
    if args.format == "json":
        return render.comparison_json(report)
    return render.comparison_text(report)


def cmd_diff(args) -> str:
    model = read_model(args.model)
    before, after = read_inventory(args.before), read_inventory(args.after)
    report = reevaluate(model, before, after)
    if args.format == "csv":
        return render.diff_csv(report)
    if args.format == "json":
        return render.diff_json(report, model.model_id)
    return render.diff_text(report, model.model_id)


def cmd_plot_data(args) -> str:
    try:
        ind = get_indicator(args.indicator)
    except KeyError:
        raise CliError(f"unknown indicator {args.indicator!r}; valid names: {', '.join(INDICATORS)}") from None
    return render.plot_data_csv(sample(ind.name), ind.spec.integer_domain)


def cmd_validate(args) -> str:
    inv = read_inventory(args.inventory)
    report = validate(inv)
    if args.format == "json":
        out = render._json({"entity_name": inv.entity_name, "valid": report.ok,
                            "violations": [{"code": v.code, "path": v.path, "message": v.message}
                                           for v in report]})
    elif args.format == "csv":
        out = render._csv([("code", "path", "message")] + [(v.code, v.path, v.message) for v in report])
    elif report.ok:
        out = f"{inv.label}: valid\n"
    else:
        out = f"{inv.label}: {len(report)} violation(s)\n" + "".join(f"  - {v}\n" for v in report)
    if not report.ok:
        raise CliError(out.rstrip("\n"), EXIT_USAGE)
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--model", help="requirements model JSON (default: bundled model)")
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--out", help="write the report to this file instead of stdout")

    parser = argparse.ArgumentParser(
        prog="ontoqual", description="Measure, evaluate and compare core-ontology quality.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("evaluate", parents=[common], help="evaluate one inventory")
    p.add_argument("inventory")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("compare", parents=[common], help="compare two or more inventories")
    p.add_argument("inventories", nargs="+")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("diff", parents=[common], help="re-evaluate an improved version")
    p.add_argument("before")
    p.add_argument("after")
    p.set_defaults(func=cmd_diff)

    p = sub.add_parser("plot-data", parents=[common], help="sample an elementary function as CSV")
    p.add_argument("indicator", help="one of: " + ", ".join(INDICATORS))
    p.set_defaults(func=cmd_plot_data)

    p = sub.add_parser("validate", parents=[common], help="check an inventory's invariants")
    p.add_argument("inventory")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        output = args.func(args)
    except CliError as exc:
        print(f"ontoqual {args.command}: error: {exc}", file=sys.stderr)
        return exc.code
    except InvalidInventoryError as exc:
        print(f"ontoqual {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OntoQualError as exc:
        print(f"ontoqual {args.command}: error: {exc}", file=sys.stderr)
        return _semantic_code(exc)
    if args.out:
        Path(args.out).write_text(output, encoding="utf-8")
    else:
        sys.stdout.write(output)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
