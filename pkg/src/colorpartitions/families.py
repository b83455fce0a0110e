"""Enumeration of the partition families the identities count.

Six families share one interface: rank-window members, their colored
encodings, box-bounded rank-window members, Gordon-condition partitions,
gap-2 partitions, and partitions into residue-restricted parts.  Enumerators
return materialized lists at fixed weight; per-weight fast counts go through
the engine-dispatched kernel instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .coloring import ColoredPartition, IdentityParams, check_conditions, color_map
from .partitions import Partition, partitions_of, successive_ranks

__all__ = [
    "FamilySpec",
    "enumerate_family",
    "ranked_partitions",
    "rank_window_members",
    "rank_window_counts",
    "colored_members",
    "colored_members_up_to",
    "colored_members_via_encoding",
    "boxed_members",
    "boxed_counts",
    "gordon_members",
    "gap2_members",
    "product_parts_members",
]


@lru_cache(maxsize=None)
def ranked_partitions(n: int) -> tuple[tuple[Partition, tuple[int, ...]], ...]:
    """All partitions of n paired with their successive ranks (cached).

    The cache lets a grid of modulus/residue cells share one enumeration pass.
    """
    return tuple((p, successive_ranks(p)) for p in partitions_of(n))


def rank_window_members(params: IdentityParams, n: int) -> list[Partition]:
    """Partitions of n with every successive rank inside the window."""
    lo, hi = params.min_rank, params.max_rank
    return [
        p
        for p, ranks in ranked_partitions(n)
        if all(lo <= rank <= hi for rank in ranks)
    ]


def rank_window_counts(params: IdentityParams, max_weight: int) -> list[int]:
    """Per-weight counts of rank-window partitions, via the counting kernel."""
    return kernels.count_rank_bounded_partitions(
        max_weight, max_weight, params.min_rank, params.max_rank, cap=max_weight
    )


def _colored_stream(params: IdentityParams, max_weight: int, max_size: int | None):
    # Descend over (size, color) parts; condition (ii) forces a gap of at
    # least 2, so feasibility prunes fast.  Yields (member, weight) pairs.
    k = params.half_modulus
    r = params.residue
    top_color = params.color_count
    even_modulus = not params.is_odd

    def size_ok(size: int, color: int) -> bool:
        if (size - r) % 2 == 0:
            if even_modulus and color == top_color:
                return False  # top color excluded on shared parity
            return size > abs(2 * color - r + 1)
        return size > abs(2 * color - r)

    def gap_ok(size_a: int, color_a: int, size_b: int, color_b: int) -> bool:
        spread = 2 * (color_a - color_b)
        if (size_a - size_b) % 2 == 0:
            required = 2 + abs(spread)
        elif (size_b - r) % 2 == 0:
            required = 2 + abs(spread - 1)
        else:
            required = 2 + abs(spread + 1)
        return size_a - size_b >= required

    stack: list[tuple[int, int]] = []

    def descend(size_bound: int, budget: int):
        prev = stack[-1] if stack else None
        for size in range(min(size_bound, budget), 0, -1):
            for color in range(1, top_color + 1):
                if not size_ok(size, color):
                    continue
                if prev is not None and not gap_ok(prev[0], prev[1], size, color):
                    continue
                stack.append((size, color))
                member = tuple(stack)
                yield member, max_weight - budget + size
                yield from descend(size - 2, budget - size)
                stack.pop()

    yield (), 0
    if top_color >= 1:
        start = max_weight if max_size is None else min(max_size, max_weight)
        yield from descend(start, max_weight)


def colored_members_up_to(
    params: IdentityParams, max_weight: int, max_size: int | None = None
) -> list[list[ColoredPartition]]:
    """Condition-respecting colored partitions bucketed by weight 0..max_weight.

    Generated directly from the membership conditions — independent of the
    rank-window encoding, which makes the two routes cross-checkable.
    """
    buckets: list[list[ColoredPartition]] = [[] for _ in range(max_weight + 1)]
    for member, w in _colored_stream(params, max_weight, max_size):
        buckets[w].append(member)
    return buckets


def colored_members(params: IdentityParams, n: int) -> list[ColoredPartition]:
    """Condition-respecting colored partitions of weight exactly n."""
    return colored_members_up_to(params, n)[n]


def boxed_members(
    params: IdentityParams, n: int, max_part: int, max_length: int
) -> list[Partition]:
    """Rank-window members of n fitting max_length rows by max_part columns."""
    if max_part < 0 or max_length < 0:
        return []
    lo, hi = params.min_rank, params.max_rank
    members = []
    for p in partitions_of(n, max_part=max_part):
        if len(p) > max_length:
            continue
        if all(lo <= rank <= hi for rank in successive_ranks(p)):
            members.append(p)
    return members


def boxed_counts(
    params: IdentityParams, max_part: int, max_length: int, cap: int | None = None
) -> list[int]:
    """Per-weight counts of box-bounded rank-window members, via the kernel.

    A box with a negative side admits nothing (not even the empty partition):
    the result is the single count [0].
    """
    if max_part < 0 or max_length < 0:
        return [0]
    return kernels.count_rank_bounded_partitions(
        max_part, max_length, params.min_rank, params.max_rank, cap=cap
    )


def gordon_members(half_modulus: int, residue: int, n: int) -> list[Partition]:
    """Partitions of n with bounded repetition depth and few ones.

    Conditions: parts k-1 apart differ by at least 2 (k the half-modulus, so
    no value repeats k or more times), and fewer than ``residue`` ones.
    """
    k = half_modulus
    members = []
    for p in partitions_of(n):
        if p and p[-1] == 1 and (len(p) - _first_one_index(p)) >= residue:
            continue
        if any(p[j] - p[j + k - 1] < 2 for j in range(len(p) - k + 1)):
            continue
        members.append(p)
    return members


def _first_one_index(p: Partition) -> int:
    # index of the first trailing 1 (parts are non-increasing)
    i = len(p)
    while i > 0 and p[i - 1] == 1:
        i -= 1
    return i


def gap2_members(n: int, min_part: int = 1) -> list[Partition]:
    """Partitions of n whose parts decrease by at least 2, parts >= min_part."""
    members = []
    for p in partitions_of(n):
        if p and p[-1] < min_part:
            continue
        if any(p[j] - p[j + 1] < 2 for j in range(len(p) - 1)):
            continue
        members.append(p)
    return members


def product_parts_members(params: IdentityParams, n: int) -> list[Partition]:
    """Partitions of n into parts avoiding residues 0 and +-r mod the modulus."""
    m = params.modulus
    excluded = {0, params.residue % m, (m - params.residue) % m}
    return [
        p for p in partitions_of(n) if all(part % m not in excluded for part in p)
    ]


@dataclass(frozen=True)
class FamilySpec:
    """Selector for one family at one weight.

    tag: rank_window | colored | boxed | gordon | gap2 | product_parts.
    ``max_part``/``max_length`` apply to boxed; ``min_part`` to gap2.
    """

    tag: str
    n: int
    params: IdentityParams | None = None
    max_part: int | None = None
    max_length: int | None = None
    min_part: int = 1


def enumerate_family(spec: FamilySpec):
    """Materialize the family a spec selects (list of members)."""
    tag = spec.tag
    if tag == "rank_window":
        return rank_window_members(_params_of(spec), spec.n)
    if tag == "colored":
        return colored_members(_params_of(spec), spec.n)
    if tag == "boxed":
        if spec.max_part is None or spec.max_length is None:
            raise ValueError("boxed family needs max_part and max_length")
        return boxed_members(_params_of(spec), spec.n, spec.max_part, spec.max_length)
    if tag == "gordon":
        params = _params_of(spec)
        if not params.is_odd:
            raise ValueError("the Gordon family needs an odd modulus")
        return gordon_members(params.half_modulus, params.residue, spec.n)
    if tag == "gap2":
        return gap2_members(spec.n, spec.min_part)
    if tag == "product_parts":
        return product_parts_members(_params_of(spec), spec.n)
    raise ValueError(f"unknown family tag {tag!r}")


def _params_of(spec: FamilySpec) -> IdentityParams:
    if spec.params is None:
        raise ValueError(f"family {spec.tag!r} needs identity parameters")
    return spec.params


def colored_members_via_encoding(
    params: IdentityParams, n: int
) -> list[ColoredPartition]:
    """Colored partitions of n obtained by encoding each rank-window member.

    Second route to the colored family; every result is re-checked against
    the membership conditions.
    """
    encoded = []
    for p in rank_window_members(params, n):
        member = color_map(p, params)
        check = check_conditions(member, params)
        if not check:
            raise AssertionError(
                f"encoding of {p} violates condition ({check.violation})"
            )
        encoded.append(member)
    return encoded
