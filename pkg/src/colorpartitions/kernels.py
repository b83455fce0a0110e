"""Engine selection for the hot counting loop.

The compiled extension is preferred when it imported cleanly, the environment
variable COLORPARTITIONS_PURE is unset, and the top weight fits the compiled
kernel's int64 guard.  The pure-Python twin is always available and exact at
any size.
"""

from __future__ import annotations

import os

from . import _pure

try:
    from . import _speedups
except ImportError:  # extension not built — interpreted fallback only
    _speedups = None

__all__ = ["HAS_COMPILED", "active_engine", "count_rank_bounded_partitions"]

HAS_COMPILED = _speedups is not None

# Per-weight tallies are bounded by the unrestricted partition count of the
# heaviest weight, and p(401) no longer fits in 63 bits.
COMPILED_WEIGHT_LIMIT = 400

_FORCE_PURE_VAR = "COLORPARTITIONS_PURE"


def _forced_pure() -> bool:
    return bool(os.environ.get(_FORCE_PURE_VAR))


def active_engine() -> str:
    """Name of the engine the next dispatch would pick: compiled or pure."""
    if HAS_COMPILED and not _forced_pure():
        return "compiled"
    return "pure"


def count_rank_bounded_partitions(
    max_part: int,
    max_length: int,
    rank_lo: int,
    rank_hi: int,
    cap: int | None = None,
) -> list[int]:
    """Per-weight counts of rank-window partitions in a box (engine-dispatched)."""
    if max_part < 0 or max_length < 0:
        raise ValueError("box sides must be nonnegative")
    box = max_part * max_length
    top = box if cap is None else min(cap, box)
    if top < 0:
        raise ValueError("cap must be nonnegative")
    if HAS_COMPILED and not _forced_pure() and top <= COMPILED_WEIGHT_LIMIT:
        return _speedups.count_rank_bounded_partitions(
            max_part, max_length, rank_lo, rank_hi, top
        )
    return _pure.count_rank_bounded_partitions(
        max_part, max_length, rank_lo, rank_hi, top
    )
