"""Brute-force semantic oracle.

Two words are compared by acting on every partition of a finite profile set.
The set is complete: the action of a word only looks at the column gaps up to
one past its largest letter, and a gap larger than the number of letters that
can narrow it never changes the outcome.  Nothing here consults the weight or
alpha vectors.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .partitions import Partition, enumerate_profiles
from .words import Letter, apply_letters_to_columns, max_index


@lru_cache(maxsize=64)
def _profile_columns(n: int, c: int) -> tuple[tuple[int, ...], ...]:
    return tuple(p.columns() for p in enumerate_profiles(n, c))


def gap_bound(*words: Sequence[Letter]) -> int:
    """Largest number of letters in any single word that narrow one column gap.

    Gap i (between columns i and i+1) only shrinks under ``u_{i+1}`` and ``d_i``,
    so no alpha_i exceeds this count.  It is a letter-count bound, never larger
    than the word length.
    """
    best = 0
    for x in words:
        counts: dict[int, int] = {}
        for a in x:
            gap = a.index - 1 if a.up else a.index
            if gap >= 1:
                counts[gap] = counts.get(gap, 0) + 1
        best = max(best, max(counts.values(), default=0))
    return best


def action_signature(x: Sequence[Letter], n: int, c: int) -> tuple:
    """Outcome of ``x`` on every partition of ``enumerate_profiles(n, c)``.

    ``None`` marks an annihilated partition, otherwise the column heights.
    """
    width = n + 3
    out = []
    for base in _profile_columns(n, c):
        cols = list(base) + [0] * (width - len(base))
        if apply_letters_to_columns(cols, x):
            out.append(tuple(cols))
        else:
            out.append(None)
    return tuple(out)


def oracle_bounds(x: Sequence[Letter], y: Sequence[Letter]) -> tuple[int, int]:
    n = max(max_index(x), max_index(y)) + 1
    c = max(len(x), len(y))
    return n, c


def semantically_equal(x: Sequence[Letter], y: Sequence[Letter], c: int | None = None) -> bool:
    """True iff ``x`` and ``y`` act identically on every partition of the profile set.

    By default the gaps range over 0..max(len(x), len(y)).  Passing ``c`` (for
    instance ``gap_bound(x, y)``) shrinks the set for long words; any ``c`` at
    least the gap bound keeps the test complete.
    """
    return find_counterexample(x, y, c) is None


def find_counterexample(x: Sequence[Letter], y: Sequence[Letter], c: int | None = None):
    """First partition on which ``x`` and ``y`` differ, or None."""
    n, default_c = oracle_bounds(x, y)
    if c is None:
        c = default_c
    width = n + 3
    for base in _profile_columns(n, c):
        cx = list(base) + [0] * (width - len(base))
        cy = list(cx)
        ok_x = apply_letters_to_columns(cx, x)
        ok_y = apply_letters_to_columns(cy, y)
        if ok_x != ok_y or (ok_x and cx != cy):
            return Partition.from_columns(base)
    return None
