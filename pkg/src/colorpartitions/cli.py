"""Command-line front end.

Subcommands: ``table`` (member/ranks/encoding rows for one weight), ``coeffs``
(series coefficients), ``verify`` (grid verification; exit code 1 on a failed
identity), ``angles`` (diagonal-hook breakdown of one partition).  Exit codes:
0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import render, series, verify
from .coloring import IdentityParams
from .partitions import parse_partition

FORMATS = ("text", "csv", "json")


def _add_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        "-f",
        choices=FORMATS,
        default=None,
        help="output format (default text, or the config file's 'format')",
    )
    parser.add_argument(
        "--output", "-o", default=None, help="write to this file instead of stdout"
    )
    parser.add_argument(
        "--config",
        default=None,
        help="JSON file with defaults for format/output/threads; flags win",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colorpartitions",
        description="Rank-window partition families, their colored encodings, "
        "and q-series identity verification.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    table = commands.add_parser(
        "table", help="member / ranks / colored-encoding rows for one weight"
    )
    table.add_argument("modulus", type=int, metavar="M")
    table.add_argument("residue", type=int, metavar="r")
    table.add_argument("weight", type=int, metavar="n")
    _add_output_flags(table)

    coeffs = commands.add_parser(
        "coeffs", help="coefficients of the product, theta-quotient, or multisum form"
    )
    coeffs.add_argument("form", choices=("product", "bosonic", "fermionic"))
    coeffs.add_argument("modulus", type=int, metavar="M")
    coeffs.add_argument("residue", type=int, metavar="r")
    coeffs.add_argument("order", type=int, metavar="N")
    _add_output_flags(coeffs)

    verify_cmd = commands.add_parser(
        "verify", help="run identity checks over a parameter grid"
    )
    verify_cmd.add_argument(
        "scope", choices=("all", "counts", "bijection", "gordon", "finitized")
    )
    verify_cmd.add_argument("--M", type=int, default=None, help="single modulus")
    verify_cmd.add_argument("--r", type=int, default=None, help="single residue")
    verify_cmd.add_argument(
        "--k", type=int, default=None, help="half-modulus (gordon/finitized)"
    )
    verify_cmd.add_argument(
        "--n-max", type=int, default=None, help="weight bound for count checks"
    )
    verify_cmd.add_argument(
        "--N-max",
        dest="size_max",
        type=int,
        default=None,
        help="finitization size bound (default 12 odd / 10 even)",
    )
    verify_cmd.add_argument(
        "--parity", choices=("odd", "even"), default=None, help="finitized parity"
    )
    verify_cmd.add_argument(
        "--threads",
        type=int,
        default=None,
        help="worker threads (default: available cores; output is deterministic)",
    )
    _add_output_flags(verify_cmd)

    angles_cmd = commands.add_parser(
        "angles", help="diagonal-hook breakdown of one partition"
    )
    angles_cmd.add_argument(
        "partition", help="comma-separated parts, e.g. 7,5,5,5,4,4,2"
    )
    _add_output_flags(angles_cmd)

    return parser


def _apply_config(args: argparse.Namespace) -> None:
    if not getattr(args, "config", None):
        return
    with open(args.config, encoding="utf-8") as handle:
        overrides = json.load(handle)
    if not isinstance(overrides, dict):
        raise ValueError("config file must hold a JSON object")
    for key in ("format", "output", "threads"):
        if getattr(args, key, None) is None and key in overrides:
            setattr(args, key, overrides[key])


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _cmd_table(args: argparse.Namespace) -> int:
    params = IdentityParams(args.modulus, args.residue)
    if args.weight < 0:
        raise ValueError("weight must be nonnegative")
    rows = render.bijection_rows(params, args.weight)
    _emit(render.render_table(params, args.weight, rows, args.format), args.output)
    return 0


def _cmd_coeffs(args: argparse.Namespace) -> int:
    params = IdentityParams(args.modulus, args.residue)
    if args.order < 0:
        raise ValueError("order must be nonnegative")
    builder = {
        "product": series.restricted_product,
        "bosonic": series.bosonic_sum,
        "fermionic": series.fermionic_multisum,
    }[args.form]
    coefficients = builder(params, args.order).coefficients
    _emit(
        render.render_coefficients(
            args.form, params, args.order, coefficients, args.format
        ),
        args.output,
    )
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    threads = args.threads
    n_max = args.n_max
    if args.scope in ("counts", "bijection"):
        moduli = [args.M] if args.M is not None else verify.DEFAULT_MODULI
        residues = [args.r] if args.r is not None else None
        report = verify.verify_identity_grid(
            moduli,
            residues,
            n_max if n_max is not None else 30,
            threads,
            scope="product_counts" if args.scope == "counts" else "bijection",
        )
    elif args.scope == "gordon":
        if args.k is not None:
            residues = [args.r] if args.r is not None else range(1, args.k + 1)
            pairs = [(args.k, r) for r in residues]
        elif args.r is not None:
            pairs = [(k, args.r) for k, r in verify.DEFAULT_GORDON_PAIRS if r == args.r]
        else:
            pairs = verify.DEFAULT_GORDON_PAIRS
        report = verify.verify_gordon_grid(
            pairs, n_max if n_max is not None else 25, threads
        )
    elif args.scope == "finitized":
        halves = [args.k] if args.k is not None else verify.DEFAULT_FINITIZED_HALVES
        parities = (args.parity,) if args.parity else ("odd", "even")
        odd_size = args.size_max if args.size_max is not None else verify.DEFAULT_ODD_SIZE_MAX
        even_size = (
            args.size_max if args.size_max is not None else verify.DEFAULT_EVEN_SIZE_MAX
        )
        report = verify.verify_finitized_grid(
            halves,
            parities,
            odd_size,
            even_size,
            n_max,
            residues=[args.r] if args.r is not None else None,
            threads=threads,
        )
    else:
        report = verify.verify_all(
            n_max=n_max if n_max is not None else 30, threads=threads
        )
    _emit(render.render_report(report, args.format), args.output)
    return 0 if report.passed else 1


def _cmd_angles(args: argparse.Namespace) -> int:
    parts = parse_partition(args.partition)
    _emit(render.render_angles(parts, args.format), args.output)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_config(args)
        if args.format is None:
            args.format = "text"
        if args.format not in FORMATS:
            raise ValueError(f"unknown format {args.format!r}")
        handler = {
            "table": _cmd_table,
            "coeffs": _cmd_coeffs,
            "verify": _cmd_verify,
            "angles": _cmd_angles,
        }[args.command]
        return handler(args)
    except (ValueError, OSError) as error:
        print(f"error: {error}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
