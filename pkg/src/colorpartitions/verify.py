"""Verification harness: runs the counting identities over parameter grids.

Each check covers one grid cell (a modulus/residue pair, or one finitized
family) and reports an aggregate record; the first counterexample, if any, is
spelled out in the record's note.  Reports render to aligned text and to
canonical JSON.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import families, series
from .coloring import ColoredPartition, IdentityParams, color_map, inverse_map

__all__ = [
    "CheckRecord",
    "VerificationReport",
    "check_product_counts",
    "check_bijection",
    "check_gordon",
    "check_finitized",
    "finitized_top_ok",
    "verify_identity_grid",
    "verify_gordon_grid",
    "verify_finitized_grid",
    "verify_all",
    "DEFAULT_MODULI",
    "DEFAULT_GORDON_PAIRS",
    "DEFAULT_FINITIZED_HALVES",
]

DEFAULT_MODULI = range(4, 10)
DEFAULT_GORDON_PAIRS = ((2, 1), (2, 2), (3, 1), (3, 2), (3, 3))
DEFAULT_FINITIZED_HALVES = (2, 3, 4)
DEFAULT_ODD_SIZE_MAX = 12
DEFAULT_EVEN_SIZE_MAX = 10


@dataclass(frozen=True)
class CheckRecord:
    """Outcome of one grid cell."""

    scope: str  # product_counts | bijection | gordon | finitized
    params: str  # e.g. "M=7 r=1"
    span: str  # e.g. "n<=30"
    checked: int  # number of individual comparisons that ran
    ok: bool
    note: str = ""


@dataclass(frozen=True)
class VerificationReport:
    title: str
    records: tuple[CheckRecord, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(record.ok for record in self.records)

    @property
    def first_failure(self) -> CheckRecord | None:
        for record in self.records:
            if not record.ok:
                return record
        return None

    @property
    def total_checked(self) -> int:
        return sum(record.checked for record in self.records)


def check_product_counts(params: IdentityParams, n_max: int) -> CheckRecord:
    """Rank-window member counts against the closed-form series coefficients.

    The closed form is the avoided-residue product when the residue is
    strictly below half the modulus; at 2r = M (where that product
    over-counts) it is the theta quotient instead, and the record notes the
    substitution.
    """
    if params.has_product_form:
        closed_form = series.restricted_product(params, n_max)
        form_name = "product"
        note = ""
    else:
        closed_form = series.bosonic_sum(params, n_max)
        form_name = "theta quotient"
        note = "2r = M: no product form, checked theta quotient"
    checked = 0
    ok = True
    for n in range(n_max + 1):
        members = families.rank_window_members(params, n)
        checked += 1
        if len(members) != closed_form[n]:
            ok = False
            note = f"n={n}: {len(members)} members vs {form_name} coefficient {closed_form[n]}"
            break
    return CheckRecord(
        "product_counts",
        f"M={params.modulus} r={params.residue}",
        f"n<={n_max}",
        checked,
        ok,
        note,
    )


def check_bijection(params: IdentityParams, n_max: int) -> CheckRecord:
    """Full encode/decode consistency plus the four-way count equality.

    Per weight: every rank-window member encodes to a condition-respecting
    colored partition of the same weight and decodes back to itself; the
    encoded set equals the directly generated colored family; and the member
    count equals the restricted-product, theta-quotient, and multisum
    coefficients alike (the product leg drops out at 2r = M, where no product
    form exists).
    """
    label = f"M={params.modulus} r={params.residue}"
    bosonic = series.bosonic_sum(params, n_max)
    fermionic = series.fermionic_multisum(params, n_max)
    series_legs = [("theta quotient", bosonic), ("multisum", fermionic)]
    if params.has_product_form:
        series_legs.insert(0, ("product", series.restricted_product(params, n_max)))
    checked = 0
    for n in range(n_max + 1):
        members = families.rank_window_members(params, n)
        encoded: list[ColoredPartition] = []
        for p in members:
            member = color_map(p, params)
            checked += 1
            if sum(size for size, _ in member) != n:
                return _fail("bijection", label, n_max, checked, f"n={n}: {p} changes weight")
            if inverse_map(member, params) != p:
                return _fail("bijection", label, n_max, checked, f"n={n}: {p} fails round trip")
            encoded.append(member)
        direct = families.colored_members(params, n)
        checked += 1
        if sorted(encoded) != sorted(direct):
            return _fail(
                "bijection",
                label,
                n_max,
                checked,
                f"n={n}: encoded family differs from direct generation "
                f"({len(encoded)} vs {len(direct)} members)",
            )
        count = len(members)
        for name, form in series_legs:
            value = form[n]
            checked += 1
            if count != value:
                return _fail(
                    "bijection", label, n_max, checked, f"n={n}: {count} members vs {name} {value}"
                )
    return CheckRecord("bijection", label, f"n<={n_max}", checked, True)


def check_gordon(half_modulus: int, residue: int, n_max: int) -> CheckRecord:
    """Gordon-condition member counts against the restricted product."""
    params = IdentityParams(2 * half_modulus + 1, residue)
    product = series.restricted_product(params, n_max)
    label = f"k={half_modulus} r={residue}"
    checked = 0
    for n in range(n_max + 1):
        members = families.gordon_members(half_modulus, residue, n)
        checked += 1
        if len(members) != product[n]:
            return _fail(
                "gordon",
                label,
                n_max,
                checked,
                f"n={n}: {len(members)} members vs product coefficient {product[n]}",
            )
    return CheckRecord("gordon", label, f"n<={n_max}", checked, True)


def finitized_top_ok(
    colored: ColoredPartition, params: IdentityParams, size: int
) -> bool:
    """Largest-part bound selecting the members a finitized identity counts.

    Size-parametrized form of the box law; an ill-formed box (negative side)
    admits nothing, not even the empty colored partition.
    """
    max_part, max_length = series.finitized_box(params, size)
    if max_part < 0 or max_length < 0:
        return False
    if not colored:
        return True
    top_size, top_color = colored[0]
    k = params.half_modulus
    if params.is_odd:
        if (size + k - params.residue) % 2 == 0:
            shift = 2 * top_color - k
        else:
            shift = 2 * top_color - k - 1
        return (size - 1) - top_size >= max(shift, -shift - 1)
    shift = 2 * top_color - k
    return (2 * size + k - params.residue - 1) - top_size >= max(shift, -shift - 1)


def check_finitized(
    params: IdentityParams, size_max: int, n_max: int | None = None
) -> CheckRecord:
    """Polynomial identity plus two enumeration routes, for sizes 0..size_max.

    For each size: the alternating-binomial side equals the multisum side
    coefficient-for-coefficient; the coefficients equal the box-bounded
    rank-window counts; and they equal the counts of colored members passing
    the top-part bound.  ``n_max`` truncates the enumeration comparisons.
    """
    parity = "odd" if params.is_odd else "even"
    label = f"{parity} k={params.half_modulus} r={params.residue}"
    checked = 0
    for size in range(size_max + 1):
        lhs = series.finitized_lhs(params, size)
        rhs = series.finitized_rhs(params, size)
        checked += 1
        if lhs != rhs:
            degree = series.first_difference(lhs.coefficients, rhs.coefficients)
            return _fail(
                "finitized",
                label,
                size_max,
                checked,
                f"size={size}: sides first differ at degree {degree}",
                span_prefix="N",
            )
        max_part, max_length = series.finitized_box(params, size)
        box = families.boxed_counts(params, max_part, max_length)
        top = max(lhs.degree, len(box) - 1)
        colored_top = 0
        if max_part >= 0 and max_length >= 0:
            colored_top = max_part + max_length - 1
        buckets = families.colored_members_up_to(
            params, _gap2_weight_bound(colored_top), max_size=colored_top
        )
        top = max(top, len(buckets) - 1)
        if n_max is not None:
            top = min(top, n_max)
        for n in range(top + 1):
            expected = lhs.coefficient(n)
            from_box = box[n] if n < len(box) else 0
            from_colored = sum(
                1
                for member in (buckets[n] if n < len(buckets) else [])
                if finitized_top_ok(member, params, size)
            )
            checked += 2
            if from_box != expected:
                return _fail(
                    "finitized",
                    label,
                    size_max,
                    checked,
                    f"size={size} n={n}: box count {from_box} vs coefficient {expected}",
                    span_prefix="N",
                )
            if from_colored != expected:
                return _fail(
                    "finitized",
                    label,
                    size_max,
                    checked,
                    f"size={size} n={n}: top-part count {from_colored} vs coefficient {expected}",
                    span_prefix="N",
                )
    return CheckRecord("finitized", label, f"N<={size_max}", checked, True)


def _gap2_weight_bound(max_size: int) -> int:
    # Heaviest gap-2 partition with largest part max_size: max_size + (max_size-2) + ...
    if max_size <= 0:
        return 0
    steps = (max_size + 1) // 2
    return steps * (max_size - steps + 1)


def _fail(
    scope: str, label: str, bound: int, checked: int, note: str, span_prefix: str = "n"
) -> CheckRecord:
    return CheckRecord(scope, label, f"{span_prefix}<={bound}", checked, False, note)


def _valid_residues(modulus: int):
    return range(1, modulus // 2 + 1)


def _run_ordered(tasks, threads: int | None):
    workers = threads if threads and threads > 0 else (os.cpu_count() or 1)
    if workers == 1 or len(tasks) <= 1:
        return [task() for task in tasks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(task) for task in tasks]
        return [future.result() for future in futures]


def verify_identity_grid(
    moduli=DEFAULT_MODULI,
    residues=None,
    n_max: int = 30,
    threads: int | None = None,
    scope: str = "both",
) -> VerificationReport:
    """Count and/or bijection checks over a modulus grid.

    scope: "product_counts", "bijection", or "both".
    """
    if scope not in ("product_counts", "bijection", "both"):
        raise ValueError(f"unknown scope {scope!r}")
    tasks = []
    for modulus in moduli:
        cell_residues = (
            [r for r in residues if 2 * r <= modulus]
            if residues is not None
            else _valid_residues(modulus)
        )
        for residue in cell_residues:
            params = IdentityParams(modulus, residue)
            if scope in ("product_counts", "both"):
                tasks.append(lambda p=params: check_product_counts(p, n_max))
            if scope in ("bijection", "both"):
                tasks.append(lambda p=params: check_bijection(p, n_max))
    return VerificationReport(f"{scope} grid", tuple(_run_ordered(tasks, threads)))


def verify_gordon_grid(
    pairs=DEFAULT_GORDON_PAIRS, n_max: int = 25, threads: int | None = None
) -> VerificationReport:
    tasks = [
        lambda k=k, r=r: check_gordon(k, r, n_max) for k, r in pairs
    ]
    return VerificationReport("gordon grid", tuple(_run_ordered(tasks, threads)))


def verify_finitized_grid(
    halves=DEFAULT_FINITIZED_HALVES,
    parities=("odd", "even"),
    odd_size_max: int = DEFAULT_ODD_SIZE_MAX,
    even_size_max: int = DEFAULT_EVEN_SIZE_MAX,
    n_max: int | None = None,
    residues=None,
    threads: int | None = None,
) -> VerificationReport:
    tasks = []
    for parity in parities:
        for half in halves:
            modulus = 2 * half + 1 if parity == "odd" else 2 * half
            size_max = odd_size_max if parity == "odd" else even_size_max
            cell_residues = (
                [r for r in residues if r <= half]
                if residues is not None
                else range(1, half + 1)
            )
            for residue in cell_residues:
                params = IdentityParams(modulus, residue)
                tasks.append(
                    lambda p=params, s=size_max: check_finitized(p, s, n_max)
                )
    return VerificationReport("finitized grid", tuple(_run_ordered(tasks, threads)))


def verify_all(
    n_max: int = 30,
    gordon_n_max: int = 25,
    odd_size_max: int = DEFAULT_ODD_SIZE_MAX,
    even_size_max: int = DEFAULT_EVEN_SIZE_MAX,
    threads: int | None = None,
) -> VerificationReport:
    """Every scope over its default grid, merged into one report."""
    records = []
    records.extend(verify_identity_grid(n_max=n_max, threads=threads).records)
    records.extend(verify_gordon_grid(n_max=gordon_n_max, threads=threads).records)
    records.extend(
        verify_finitized_grid(
            odd_size_max=odd_size_max, even_size_max=even_size_max, threads=threads
        ).records
    )
    return VerificationReport("all scopes", tuple(records))
