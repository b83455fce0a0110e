"""Rendering for tables, coefficient lists, angle breakdowns, and reports.

Three formats throughout: aligned/plain text, CSV, and canonical JSON.  The
JSON form is byte-stable: re-serializing a parsed payload reproduces the
original output exactly, and coefficient values are decimal strings so
arbitrary-precision integers survive the round trip.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Sequence

from . import families
from .coloring import ColoredPartition, IdentityParams, color_map, format_colored
from .partitions import (
    Partition,
    angle_lengths,
    angles,
    conjugate,
    durfee_size,
    format_partition,
    successive_ranks,
)
from .verify import VerificationReport

__all__ = [
    "canonical_json",
    "decimal_strings",
    "TableRow",
    "bijection_rows",
    "render_table",
    "render_coefficients",
    "render_angles",
    "render_report",
]

TableRow = tuple[Partition, tuple[int, ...], ColoredPartition]


def canonical_json(payload) -> str:
    """Deterministic JSON rendering: sorted keys, two-space indent, newline."""
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def decimal_strings(values: Sequence[int]) -> list[str]:
    """Integers as decimal strings (JSON-safe at any magnitude)."""
    return [str(v) for v in values]


def format_ranks(ranks: Sequence[int]) -> str:
    return "[" + ",".join(str(r) for r in ranks) + "]"


def bijection_rows(params: IdentityParams, n: int) -> list[TableRow]:
    """Member/ranks/encoding triples in canonical (reverse-lexicographic) order."""
    rows = []
    for p in families.rank_window_members(params, n):
        rows.append((p, successive_ranks(p), color_map(p, params)))
    return rows


def render_table(
    params: IdentityParams, n: int, rows: list[TableRow], fmt: str
) -> str:
    if fmt == "text":
        return "".join(
            f"{format_partition(p)} {format_ranks(ranks)} {format_colored(colored)}\n"
            for p, ranks, colored in rows
        )
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["partition", "ranks", "colored"])
        for p, ranks, colored in rows:
            writer.writerow(
                [format_partition(p), format_ranks(ranks), format_colored(colored)]
            )
        return buffer.getvalue()
    if fmt == "json":
        payload = {
            "modulus": params.modulus,
            "residue": params.residue,
            "weight": n,
            "rows": [
                {
                    "partition": list(p),
                    "ranks": list(ranks),
                    "colored": [[size, color] for size, color in colored],
                }
                for p, ranks, colored in rows
            ],
        }
        return canonical_json(payload)
    raise ValueError(f"unknown format {fmt!r}")


def render_coefficients(
    form: str, params: IdentityParams, order: int, coefficients: Sequence[int], fmt: str
) -> str:
    if fmt == "text":
        return " ".join(str(c) for c in coefficients) + "\n"
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["degree", "coefficient"])
        for degree, value in enumerate(coefficients):
            writer.writerow([degree, value])
        return buffer.getvalue()
    if fmt == "json":
        payload = {
            "form": form,
            "modulus": params.modulus,
            "residue": params.residue,
            "order": order,
            "coefficients": decimal_strings(coefficients),
        }
        return canonical_json(payload)
    raise ValueError(f"unknown format {fmt!r}")


def render_angles(parts: Partition, fmt: str) -> str:
    decomposition = angles(parts)
    ranks = successive_ranks(parts)
    lengths = angle_lengths(decomposition)
    if fmt == "text":
        widths = tuple(x for x, _ in decomposition)
        heights = tuple(y for _, y in decomposition)
        lines = [
            f"partition: {format_partition(parts)}",
            f"conjugate: {format_partition(conjugate(parts))}",
            f"durfee:    {durfee_size(parts)}",
            f"ranks:     {format_ranks(ranks)}",
            f"widths:    {format_partition(widths)}",
            f"heights:   {format_partition(heights)}",
            f"lengths:   {format_partition(lengths)}",
        ]
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["index", "width", "height", "length", "rank"])
        for i, ((x, y), length, rank) in enumerate(
            zip(decomposition, lengths, ranks), start=1
        ):
            writer.writerow([i, x, y, length, rank])
        return buffer.getvalue()
    if fmt == "json":
        payload = {
            "partition": list(parts),
            "conjugate": list(conjugate(parts)),
            "durfee": durfee_size(parts),
            "ranks": list(ranks),
            "angles": [
                {"width": x, "height": y, "length": length}
                for (x, y), length in zip(decomposition, lengths)
            ],
        }
        return canonical_json(payload)
    raise ValueError(f"unknown format {fmt!r}")


def render_report(report: VerificationReport, fmt: str) -> str:
    if fmt == "text":
        header = ("scope", "params", "span", "checked", "status", "note")
        rows = [
            (
                record.scope,
                record.params,
                record.span,
                str(record.checked),
                "ok" if record.ok else "FAIL",
                record.note,
            )
            for record in report.records
        ]
        widths = [
            max(len(header[i]), *(len(row[i]) for row in rows)) if rows else len(header[i])
            for i in range(len(header))
        ]
        lines = [
            "  ".join(header[i].ljust(widths[i]) for i in range(len(header))).rstrip()
        ]
        for row in rows:
            lines.append(
                "  ".join(row[i].ljust(widths[i]) for i in range(len(header))).rstrip()
            )
        verdict = "PASS" if report.passed else "FAIL"
        lines.append("")
        lines.append(
            f"{verdict}: {len(report.records)} cells, "
            f"{report.total_checked} comparisons"
        )
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["scope", "params", "span", "checked", "ok", "note"])
        for record in report.records:
            writer.writerow(
                [
                    record.scope,
                    record.params,
                    record.span,
                    record.checked,
                    record.ok,
                    record.note,
                ]
            )
        return buffer.getvalue()
    if fmt == "json":
        payload = {
            "title": report.title,
            "passed": report.passed,
            "total_checked": report.total_checked,
            "records": [
                {
                    "scope": record.scope,
                    "params": record.params,
                    "span": record.span,
                    "checked": record.checked,
                    "ok": record.ok,
                    "note": record.note,
                }
                for record in report.records
            ],
        }
        return canonical_json(payload)
    raise ValueError(f"unknown format {fmt!r}")
