"""Partitions, conjugation and single-box column moves on Young's lattice."""

from __future__ import annotations

from itertools import product
from typing import Iterable, Sequence

from .errors import InvalidIndex, ParseError


class _Zero:
    """The annihilated result of an operator, distinct from the empty partition."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO"

    def __str__(self):
        return "0"

    def __reduce__(self):
        return (_Zero, ())


ZERO = _Zero()


class Partition(tuple):
    """Weakly decreasing row lengths with trailing zeros trimmed."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for k, p in enumerate(parts):
            if p < 0:
                raise ValueError(f"negative part {p}")
            if k and parts[k - 1] < p:
                raise ValueError(f"parts not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_columns(cls, heights: Sequence[int]) -> "Partition":
        """Build the partition whose column heights are ``heights``."""
        return cls(_conjugate_tuple(heights))

    @property
    def size(self) -> int:
        return sum(self)

    def columns(self) -> tuple[int, ...]:
        return _conjugate_tuple(self)

    def __repr__(self):
        return f"Partition({tuple(self)})"

    def __str__(self):
        return format_partition(self)


def _conjugate_tuple(parts: Sequence[int]) -> tuple[int, ...]:
    if not parts or parts[0] <= 0:
        return ()
    heights = []
    for i in range(1, parts[0] + 1):
        heights.append(sum(1 for p in parts if p >= i))
    return tuple(heights)


def conjugate(p: Partition) -> Partition:
    return Partition(_conjugate_tuple(p))


def _check_column(i: int) -> None:
    if i < 1:
        raise InvalidIndex(f"column index must be >= 1, got {i}")


def add_box_column(p: Partition, i: int):
    """Add a box in column ``i`` (1-based); return ZERO if the result is not a partition."""
    _check_column(i)
    cols = p.columns()
    h = cols[i - 1] if i <= len(cols) else 0
    if i > 1:
        left = cols[i - 2] if i - 1 <= len(cols) else 0
        if left <= h:
            return ZERO
    # the new box sits at the end of row h+1, which must currently have length i-1
    rows = list(p) + [0]
    rows[h] += 1
    return Partition(rows)


def remove_box_column(p: Partition, i: int):
    _check_column(i)
    cols = p.columns()
    h = cols[i - 1] if i <= len(cols) else 0
    right = cols[i] if i < len(cols) else 0
    if h == 0 or h <= right:
        return ZERO
    rows = list(p)
    rows[h - 1] -= 1
    return Partition(rows)


def column_profile(p: Partition, length: int | None = None) -> tuple[int, ...]:
    """Consecutive column differences (lambda'_i - lambda'_{i+1}) for i = 1..length."""
    cols = p.columns()
    if length is None:
        length = len(cols)
    padded = list(cols) + [0] * (length + 1)
    return tuple(padded[k] - padded[k + 1] for k in range(length))


def partition_from_profile(diffs: Sequence[int]) -> Partition:
    heights = []
    total = 0
    for dlt in reversed(diffs):
        if dlt < 0:
            raise ValueError(f"negative column difference {dlt}")
        total += dlt
        heights.append(total)
    heights.reverse()
    return Partition.from_columns(heights)


def enumerate_profiles(n: int, c: int) -> list[Partition]:
    """One partition per difference profile in {0..c}^(n+1), all columns past n+1 empty.

    By the closed form of the operator action, a word whose letters are at most
    ``n - 1`` only looks at these differences, so this set is the finite test set
    of the semantic oracle.
    """
    if n < 1 or c < 0:
        raise ValueError("need n >= 1 and c >= 0")
    return [partition_from_profile(diffs) for diffs in product(range(c + 1), repeat=n + 1)]


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "0"):
        return Partition()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ParseError(f"malformed partition {text!r}") from None
    try:
        return Partition(parts)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_partition(p) -> str:
    if p is ZERO:
        return "0"
    return ",".join(str(k) for k in p)
