"""Words over the barred/unbarred alphabet and their action on partitions.

A word ``x_1 ... x_l`` stands for the operator ``u_{x_1} ... u_{x_l}``; the
rightmost letter acts first.  In text form ``u<k>`` is the up-operator on column
``k`` and ``d<k>`` the down-operator, so ``"d1 d3 u2"`` applies ``u2`` first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple, Sequence

from .errors import ParseError
from .partitions import ZERO, Partition


class Kind(str, Enum):
    UP = "u"
    DOWN = "d"


class Letter(NamedTuple):
    kind: Kind
    index: int

    @property
    def up(self) -> bool:
        return self.kind is Kind.UP

    def transpose(self) -> "Letter":
        return Letter(Kind.DOWN if self.up else Kind.UP, self.index)

    def __str__(self):
        return f"{self.kind.value}{self.index}"


def U(i: int) -> Letter:
    return Letter(Kind.UP, i)


def D(i: int) -> Letter:
    return Letter(Kind.DOWN, i)


Word = tuple  # tuple[Letter, ...]

_TOKEN = re.compile(r"([ud])([1-9][0-9]*)")


def parse_word(text: str) -> Word:
    """Parse whitespace-separated ``u<k>``/``d<k>`` tokens; blank text is the empty word."""
    letters = []
    for pos, tok in enumerate(text.split()):
        m = _TOKEN.fullmatch(tok)
        if m is None:
            raise ParseError(f"malformed token {tok!r} at position {pos}", position=pos)
        kind = Kind.UP if m.group(1) == "u" else Kind.DOWN
        letters.append(Letter(kind, int(m.group(2))))
    return tuple(letters)


def format_word(x: Sequence[Letter]) -> str:
    return " ".join(str(a) for a in x)


def word(text_or_letters) -> Word:
    if isinstance(text_or_letters, str):
        return parse_word(text_or_letters)
    return tuple(text_or_letters)


def power(letter: Letter, k: int) -> Word:
    return (letter,) * k


def max_index(x: Iterable[Letter]) -> int:
    return max((a.index for a in x), default=0)


def transpose_word(x: Sequence[Letter]) -> Word:
    """The word of the transposed operator: reversed, with u and d swapped."""
    return tuple(a.transpose() for a in reversed(x))


# --- invariants -----------------------------------------------------------------


def _clean(vec: dict) -> dict:
    return {i: v for i, v in sorted(vec.items()) if v != 0}


def weight(x: Sequence[Letter]) -> dict[int, int]:
    w: dict[int, int] = {}
    for a in x:
        w[a.index] = w.get(a.index, 0) + (1 if a.up else -1)
    return _clean(w)


def alpha(x: Sequence[Letter]) -> dict[int, int]:
    """alpha_i(x) = max over suffixes s (empty included) of w_{i+1}(s) - w_i(s).

    Single right-to-left pass; a letter of index k only moves the differences
    for i = k - 1 and i = k.
    """
    w: dict[int, int] = {}
    best: dict[int, int] = {}
    for a in reversed(x):
        k = a.index
        w[k] = w.get(k, 0) + (1 if a.up else -1)
        for i in (k - 1, k):
            if i >= 1:
                diff = w.get(i + 1, 0) - w.get(i, 0)
                if diff > best.get(i, 0):
                    best[i] = diff
    return _clean(best)


@dataclass(frozen=True)
class Fingerprint:
    weight: tuple  # sorted (index, value) pairs, zeros dropped
    alpha: tuple

    @property
    def w(self) -> dict[int, int]:
        return dict(self.weight)

    @property
    def a(self) -> dict[int, int]:
        return dict(self.alpha)

    def __str__(self):
        return format_fingerprint(self)


def fingerprint(x: Sequence[Letter]) -> Fingerprint:
    return Fingerprint(tuple(weight(x).items()), tuple(alpha(x).items()))


def _fmt_vec(pairs) -> str:
    return "{" + ", ".join(f"{i}: {v}" for i, v in pairs) + "}"


def format_fingerprint(fp: Fingerprint) -> str:
    return f"w: {_fmt_vec(fp.weight)}; alpha: {_fmt_vec(fp.alpha)}"


def equivalent(x: Sequence[Letter], y: Sequence[Letter]) -> bool:
    """Decide whether two words act identically on Young's lattice."""
    return fingerprint(x) == fingerprint(y)


# --- action ---------------------------------------------------------------------


def apply_letters_to_columns(cols: list[int], x: Sequence[Letter]) -> bool:
    """Apply ``x`` (rightmost first) to a mutable list of column heights in place.

    ``cols`` must be long enough to hold every touched column plus one.
    Returns False as soon as a move is impossible.
    """
    for a in reversed(x):
        i = a.index - 1
        if a.up:
            if i > 0 and cols[i - 1] <= cols[i]:
                return False
            cols[i] += 1
        else:
            if cols[i] <= cols[i + 1]:
                return False
            cols[i] -= 1
    return True


def apply_word(p: Partition, x: Sequence[Letter]):
    """Letter-by-letter action; returns a Partition or ZERO."""
    cols = list(p.columns())
    cols += [0] * (max_index(x) + 2)
    if not apply_letters_to_columns(cols, x):
        return ZERO
    return Partition.from_columns(cols)


def apply_word_closed(p: Partition, x: Sequence[Letter]):
    """Closed-form action: shift the columns by the weight if every gap clears alpha."""
    n = max_index(x)
    cols = list(p.columns()) + [0] * (n + 2)
    for i, a_i in alpha(x).items():
        if cols[i - 1] - cols[i] < a_i:
            return ZERO
    for i, w_i in weight(x).items():
        cols[i - 1] += w_i
    return Partition.from_columns(cols)
