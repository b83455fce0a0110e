"""Rank-window partition families and their colored-partition encodings.

For a modulus M and residue class r (0 < r <= M/2) the admissible rank window
is [2-r, M-r-2].  Partitions whose successive ranks all stay inside the window
are encoded as partitions whose parts are the angle lengths, each carrying one
of floor(M/2)-1 colors derived from its rank.  The encoding is reversible and
lands exactly on the colored partitions passing the difference conditions
checked here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import (
    Angles,
    Partition,
    angle_lengths,
    angles,
    from_angles,
    successive_ranks,
)

ColoredPartition = tuple[tuple[int, int], ...]

__all__ = [
    "ColoredPartition",
    "IdentityParams",
    "RankWindowError",
    "ConditionCheck",
    "validate_colored",
    "color_map",
    "rank_from_color",
    "inverse_map",
    "check_conditions",
    "check_box_condition",
    "alt_color_map",
    "format_colored",
]


class RankWindowError(ValueError):
    """A successive rank fell outside the admissible window.

    ``index`` is the 1-based position of the offending rank.
    """

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


@dataclass(frozen=True)
class IdentityParams:
    """Modulus/residue pair selecting one identity of the family."""

    modulus: int
    residue: int

    def __post_init__(self):
        if self.modulus < 3:
            raise ValueError(f"modulus must be >= 3, got {self.modulus}")
        if not 0 < self.residue * 2 <= self.modulus:
            raise ValueError(
                f"residue must satisfy 0 < r <= M/2, got r={self.residue} for M={self.modulus}"
            )

    @property
    def half_modulus(self) -> int:
        return self.modulus // 2

    @property
    def is_odd(self) -> bool:
        return self.modulus % 2 == 1

    @property
    def color_count(self) -> int:
        """Number of available colors: floor(M/2) - 1."""
        return self.half_modulus - 1

    @property
    def has_product_form(self) -> bool:
        """Whether the avoided-residue product is the closed form for the counts.

        Requires the residue strictly below half the modulus: at 2r = M the
        residues r and -r coincide mod M, the theta quotient keeps a leftover
        numerator factor (1 - q^(M/2))(1 - q^(3M/2))..., and the plain product
        over-counts (first at weight r).  The window/colored/theta/multisum
        equalities still hold there; only the product leg drops out.
        """
        return 2 * self.residue < self.modulus

    @property
    def min_rank(self) -> int:
        return 2 - self.residue

    @property
    def max_rank(self) -> int:
        return self.modulus - self.residue - 2

    def rank_in_window(self, rank: int) -> bool:
        return self.min_rank <= rank <= self.max_rank


def validate_colored(colored: ColoredPartition) -> None:
    """Structural check: positive sizes, non-increasing, ties sorted by color.

    Raises ValueError on violation.  Color values are not range-checked here
    (the alternative coloring legitimately emits 0).
    """
    for size, _color in colored:
        if size < 1:
            raise ValueError(f"colored part sizes must be positive, got {size}")
    for (size_a, color_a), (size_b, color_b) in zip(colored, colored[1:]):
        if size_a < size_b:
            raise ValueError(f"colored part sizes must be non-increasing: {colored}")
        if size_a == size_b and color_a > color_b:
            raise ValueError(
                f"equal-size parts must carry non-decreasing colors: {colored}"
            )


def _require_colors_in_range(colored: ColoredPartition, params: IdentityParams) -> None:
    for i, (_size, color) in enumerate(colored, start=1):
        if not 1 <= color <= params.color_count:
            raise ValueError(
                f"color {color} at part {i} outside 1..{params.color_count} "
                f"for modulus {params.modulus}"
            )


def _same_parity_as_residue(length: int, params: IdentityParams) -> bool:
    return (length - params.residue) % 2 == 0


def color_map(parts: Partition, params: IdentityParams) -> ColoredPartition:
    """Encode a rank-window member as a colored partition of the same weight.

    Part i is the i-th angle length; its color is (rank+r-1)/2 when the length
    shares the residue's parity and (rank+r)/2 otherwise (both exact — a rank
    and its angle length always have opposite parities).  Raises
    RankWindowError if some rank leaves the window.
    """
    ranks = successive_ranks(parts)
    for i, rank in enumerate(ranks, start=1):
        if not params.rank_in_window(rank):
            raise RankWindowError(
                f"rank {rank} at position {i} outside "
                f"[{params.min_rank}, {params.max_rank}]",
                index=i,
            )
    lengths = angle_lengths(angles(parts))
    encoded = []
    for length, rank in zip(lengths, ranks):
        if _same_parity_as_residue(length, params):
            numerator = rank + params.residue - 1
        else:
            numerator = rank + params.residue
        half, remainder = divmod(numerator, 2)
        assert remainder == 0, "length and rank parities violate the angle parity law"
        encoded.append((length, half))
    return tuple(encoded)


def rank_from_color(length: int, color: int, params: IdentityParams) -> int:
    """Rank encoded by a colored part: 2c-r+1 on shared parity, else 2c-r."""
    if _same_parity_as_residue(length, params):
        return 2 * color - params.residue + 1
    return 2 * color - params.residue


@dataclass(frozen=True)
class ConditionCheck:
    """Outcome of the membership conditions, with the first violation."""

    ok: bool
    violation: str | None = None  # "i" | "ii" | "iii"
    index: int | None = None  # 1-based part where the check failed

    def __bool__(self) -> bool:
        return self.ok


def check_conditions(colored: ColoredPartition, params: IdentityParams) -> ConditionCheck:
    """Test the three membership conditions, reporting the first failure.

    (i)   each part exceeds |rank| it encodes (sizes big enough for their color);
    (ii)  consecutive parts differ by at least 2 plus the color-dependent spread;
    (iii) for even modulus, the top color forbids sizes sharing the residue parity.

    Structural defects and out-of-range colors raise ValueError instead of
    returning a failed check.
    """
    validate_colored(colored)
    _require_colors_in_range(colored, params)
    r = params.residue
    for i, (size, color) in enumerate(colored, start=1):
        if _same_parity_as_residue(size, params):
            bound = abs(2 * color - r + 1)
        else:
            bound = abs(2 * color - r)
        if not size > bound:
            return ConditionCheck(False, "i", i)
    for i, ((size_a, color_a), (size_b, color_b)) in enumerate(
        zip(colored, colored[1:]), start=1
    ):
        spread = 2 * (color_a - color_b)
        if (size_a - size_b) % 2 == 0:
            required = 2 + abs(spread)
        elif _same_parity_as_residue(size_b, params):
            required = 2 + abs(spread - 1)
        else:
            required = 2 + abs(spread + 1)
        if not size_a - size_b >= required:
            return ConditionCheck(False, "ii", i)
    if not params.is_odd:
        top = params.color_count
        for i, (size, color) in enumerate(colored, start=1):
            if color == top and _same_parity_as_residue(size, params):
                return ConditionCheck(False, "iii", i)
    return ConditionCheck(True)


def inverse_map(colored: ColoredPartition, params: IdentityParams) -> Partition:
    """Decode a colored partition back to its rank-window member.

    Rejects (ValueError) input failing the membership conditions.
    """
    check = check_conditions(colored, params)
    if not check:
        raise ValueError(
            f"not decodable: condition ({check.violation}) fails at part {check.index}"
        )
    r = params.residue
    decomposition = []
    for size, color in colored:
        if _same_parity_as_residue(size, params):
            numerator = -r + 2 * color + size + 2
        else:
            numerator = -r + 2 * color + size + 1
        width, remainder = divmod(numerator, 2)
        assert remainder == 0
        decomposition.append((width, size - width + 1))
    return from_angles(tuple(decomposition))


def check_box_condition(
    colored: ColoredPartition, params: IdentityParams, max_width: int, max_height: int
) -> bool:
    """Whether the decoded member fits ``max_height`` rows x ``max_width`` columns.

    Only the largest part matters: with X = 2*c1 - r + (height - width), the
    first part must satisfy (width + height - 1) - size1 >= max(X, -X-1).
    The empty colored partition always fits.
    """
    if not colored:
        return True
    size, color = colored[0]
    shift = 2 * color - params.residue + (max_height - max_width)
    return (max_width + max_height - 1) - size >= max(shift, -shift - 1)


def alt_color_map(parts: Partition, params: IdentityParams) -> ColoredPartition:
    """Exploratory rank-folding coloring (kept verbatim, colors may be 0).

    Folds rank v to v-k+r above the window midpoint and to -v+k-r at or below
    it, where k is the half-modulus.  The fold loses the sign of v-(k-r), so
    distinct members can share an image — e.g. with modulus 7, residue 1 both
    (5,5) and (4,4,2) map to ((6,1),(4,1)); unlike :func:`color_map` this
    encoding is not invertible.
    """
    ranks = successive_ranks(parts)
    for i, rank in enumerate(ranks, start=1):
        if not params.rank_in_window(rank):
            raise RankWindowError(
                f"rank {rank} at position {i} outside "
                f"[{params.min_rank}, {params.max_rank}]",
                index=i,
            )
    lengths = angle_lengths(angles(parts))
    fold = params.half_modulus - params.residue
    encoded = []
    for length, rank in zip(lengths, ranks):
        color = rank - fold if rank > fold else fold - rank
        encoded.append((length, color))
    return tuple(encoded)


def format_colored(colored: ColoredPartition) -> str:
    """Render like ``(9_2,1_1)``; the empty colored partition is ``()``."""
    return "(" + ",".join(f"{size}_{color}" for size, color in colored) + ")"
