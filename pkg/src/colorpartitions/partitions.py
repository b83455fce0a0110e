"""Integer partitions: conjugation, Durfee square, successive ranks, angles.

A partition is a plain ``tuple[int, ...]`` of positive parts in non-increasing
order.  The angle decomposition slices the Ferrers diagram along its main
diagonal into nested L-shaped hooks ("angles"); angle i has width
``part_i - (i-1)`` (its arm, Durfee cell included) and height
``conjugate_i - (i-1)`` (its leg, ditto), so its length is width + height - 1
and the angle lengths sum back to the weight.
"""

from __future__ import annotations

from typing import Iterable, Iterator

Partition = tuple[int, ...]
Angles = tuple[tuple[int, int], ...]

__all__ = [
    "Partition",
    "Angles",
    "as_partition",
    "weight",
    "conjugate",
    "durfee_size",
    "successive_ranks",
    "angles",
    "angle_lengths",
    "from_angles",
    "format_partition",
    "parse_partition",
    "partitions_of",
]


def as_partition(parts: Iterable[int]) -> Partition:
    """Normalize ``parts`` into a partition tuple.

    Parts are sorted into non-increasing order (a lossless normalization);
    non-integers and values < 1 are rejected with ValueError.
    """
    normalized = tuple(sorted(parts, reverse=True))
    for p in normalized:
        if not isinstance(p, int) or isinstance(p, bool) or p < 1:
            raise ValueError(f"parts must be positive integers, got {p!r}")
    return normalized


def weight(parts: Partition) -> int:
    """Sum of the parts."""
    return sum(parts)


def conjugate(parts: Partition) -> Partition:
    """Transpose of the Ferrers diagram, in O(#parts + largest part)."""
    if not parts:
        return ()
    largest = parts[0]
    # occurrences[j] = number of parts equal to j; suffix-summing gives the
    # column heights without an O(#parts * largest) double loop.
    occurrences = [0] * (largest + 1)
    for p in parts:
        occurrences[p] += 1
    columns = []
    taller = 0
    for j in range(largest, 0, -1):
        taller += occurrences[j]
        columns.append(taller)
    columns.reverse()
    return tuple(columns)


def durfee_size(parts: Partition) -> int:
    """Side of the largest square of cells anchored at the diagram's corner."""
    d = 0
    for i, p in enumerate(parts, start=1):
        if p >= i:
            d = i
        else:
            break
    return d


def _conjugate_prefix(parts: Partition, d: int) -> list[int]:
    # First d column heights only; a single backwards pointer walk keeps the
    # cost at O(#parts + d) for the rank/angle helpers.
    heights = []
    ptr = len(parts)
    for i in range(1, d + 1):
        while ptr > 0 and parts[ptr - 1] < i:
            ptr -= 1
        heights.append(ptr)
    return heights


def successive_ranks(parts: Partition) -> tuple[int, ...]:
    """Row minus column lengths along the Durfee diagonal.

    Rank i is ``parts[i] - conjugate(parts)[i]`` for i below the Durfee size;
    the empty partition has no ranks.
    """
    d = durfee_size(parts)
    heights = _conjugate_prefix(parts, d)
    return tuple(parts[i] - heights[i] for i in range(d))


def angles(parts: Partition) -> Angles:
    """Decompose into diagonal hooks, returned as (width, height) pairs.

    Both coordinate sequences are strictly decreasing and positive; the pair
    count equals the Durfee size.
    """
    d = durfee_size(parts)
    heights = _conjugate_prefix(parts, d)
    return tuple((parts[i] - i, heights[i] - i) for i in range(d))


def angle_lengths(decomposition: Angles) -> tuple[int, ...]:
    """Cell count of each angle: width + height - 1."""
    return tuple(x + y - 1 for x, y in decomposition)


def from_angles(decomposition: Angles) -> Partition:
    """Rebuild the partition whose angle decomposition is the given one.

    Inverse of :func:`angles`: requires strictly decreasing positive widths
    and strictly decreasing positive heights.
    """
    d = len(decomposition)
    widths = [x for x, _ in decomposition]
    heights = [y for _, y in decomposition]
    for seq, label in ((widths, "widths"), (heights, "heights")):
        for i, value in enumerate(seq):
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ValueError(f"angle {label} must be positive integers, got {value!r}")
            if i + 1 < len(seq) and seq[i + 1] >= value:
                raise ValueError(f"angle {label} must be strictly decreasing: {seq}")
    if d == 0:
        return ()
    rows = [widths[i] + i for i in range(d)]
    # Rows below the Durfee square are read off the column heights.
    column_heights = [heights[j] + j for j in range(d)]
    for i in range(d + 1, column_heights[0] + 1):
        rows.append(sum(1 for h in column_heights if h >= i))
    return tuple(rows)


def format_partition(parts: Partition) -> str:
    """Render like ``(7,5,5,5,4,4,2)``; the empty partition is ``()``."""
    return "(" + ",".join(str(p) for p in parts) + ")"


def parse_partition(text: str) -> Partition:
    """Parse comma-separated parts, with or without surrounding parentheses."""
    stripped = text.strip()
    if stripped.startswith("(") and stripped.endswith(")"):
        stripped = stripped[1:-1]
    if not stripped:
        return ()
    try:
        values = [int(piece) for piece in stripped.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse partition from {text!r}") from None
    parts = tuple(values)
    if any(p < 1 for p in parts):
        raise ValueError(f"parts must be positive: {text!r}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts must be non-increasing: {text!r}")
    return parts


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Yield all partitions of ``n`` in reverse-lexicographic order.

    ``max_part`` additionally caps the largest part.  Reverse-lexicographic
    means ``(4) > (3,1) > (2,2) > (2,1,1) > (1,1,1,1)``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    cap = n if max_part is None else min(max_part, n)
    stack: list[int] = []

    def descend(remaining: int, bound: int) -> Iterator[Partition]:
        if remaining == 0:
            yield tuple(stack)
            return
        for part in range(min(bound, remaining), 0, -1):
            stack.append(part)
            yield from descend(remaining - part, part)
            stack.pop()

    yield from descend(n, cap)
