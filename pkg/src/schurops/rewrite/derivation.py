"""Derivation builder and the derived-relation macros.

Every macro returns a Trace made of base steps only.  Letters are written
``k`` for u_k and ``k'`` for d_k in the comments below.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from ..errors import ParameterError, StepMismatch
from ..words import D, U, Letter, Word, format_word
from .rules import BACKWARD, FORWARD, Rule, Step, Trace, apply_step, transpose_trace


class Derivation:
    """Mutable cursor that records base steps applied to a word."""

    def __init__(self, start: Sequence[Letter]):
        self.start = tuple(start)
        self.word = tuple(start)
        self.steps: list[Step] = []

    def __len__(self):
        return len(self.word)

    def apply(self, rule: Rule, pos: int, direction: str = FORWARD) -> None:
        s = Step(rule, pos, direction)
        self.word = apply_step(self.word, s)
        self.steps.append(s)

    def embed(self, trace: Trace, offset: int) -> None:
        """Replay ``trace`` on the subword starting at ``offset``."""
        seg = self.word[offset:offset + len(trace.start)]
        if seg != tuple(trace.start):
            raise StepMismatch(
                f"cannot embed trace from {format_word(trace.start)!r} at {offset}: "
                f"found {format_word(seg)!r}", offset)
        for s in trace.steps:
            shifted = s.shifted(offset)
            self.word = apply_step(self.word, shifted)
            self.steps.append(shifted)

    def swap(self, pos: int) -> None:
        """Exchange the letters at ``pos`` and ``pos + 1`` with a commutation rule."""
        a, b = self.word[pos], self.word[pos + 1]
        if a.up and b.up:
            self.apply(Rule("COMM_UU", (a.index, b.index)), pos)
        elif not a.up and not b.up:
            self.apply(Rule("COMM_DD", (a.index, b.index)), pos)
        elif not a.up:
            self.apply(Rule("COMM_DU", (a.index, b.index)), pos)
        else:
            self.apply(Rule("COMM_DU", (b.index, a.index)), pos, BACKWARD)

    def move(self, src: int, dst: int) -> None:
        """Carry one letter from ``src`` to ``dst`` through adjacent commutations."""
        while src > dst:
            self.swap(src - 1)
            src -= 1
        while src < dst:
            self.swap(src)
            src += 1

    def trace(self) -> Trace:
        return Trace(self.start, tuple(self.steps), self.word)


def _ups(*idx: int) -> Word:
    return tuple(U(i) for i in idx)


def _downs(*idx: int) -> Word:
    return tuple(D(i) for i in idx)


def _need(i: int, lo: int = 1) -> None:
    if i < lo:
        raise ParameterError(f"index must be >= {lo}, got {i}")


def special_identity(n: int) -> Trace:
    """n' n (n-1) ... 1  ->  (n-1) ... 1, by SLIDEs and one CANCEL_1."""
    _need(n)
    d = Derivation((D(n),) + _ups(*range(n, 0, -1)))
    for k in range(n - 1, 0, -1):
        # the pair (k+1)' (k+1) sits right after the k letters already produced
        d.apply(Rule("SLIDE", (k,)), n - 1 - k)
    d.apply(Rule("CANCEL_1"), n - 1)
    return d.trace()


@lru_cache(maxsize=None)
def macro_identity(n: int) -> Trace:
    """1' ... n' n ... 1  ->  empty word."""
    _need(n)
    d = Derivation(_downs(*range(1, n + 1)) + _ups(*range(n, 0, -1)))
    for k in range(n, 0, -1):
        d.embed(special_identity(k), k - 1)
    return d.trace()


@lru_cache(maxsize=None)
def macro_sandwich_up(n: int) -> Trace:
    """u_n  ->  u_n d_n u_n."""
    _need(n)
    d = Derivation((U(n),))
    d.embed(macro_identity(n).reversed(), 1)          # n 1'..n' n..1
    d.move(0, n - 1)                                  # 1'..(n-1)' n n' n (n-1)..1
    d.apply(Rule("SLIDE", (n,)), n - 1, BACKWARD)     # 1'..(n-1)' (n+1)' (n+1) n (n-1)..1
    for k in range(3):                                # (n+1)' (n+1) n 1'..(n-1)' (n-1)..1
        d.move(n - 1 + k, k)
    if n > 1:
        d.embed(macro_identity(n - 1), 3)             # (n+1)' (n+1) n
    d.apply(Rule("SLIDE", (n,)), 0)                   # n n' n
    return d.trace()


@lru_cache(maxsize=None)
def macro_sandwich_down(n: int) -> Trace:
    """d_n  ->  d_n u_n d_n (transpose of the up version)."""
    return transpose_trace(macro_sandwich_up(n))


@lru_cache(maxsize=None)
def macro_knuth_a(n: int) -> Trace:
    """n (n+1) n  ->  (n+1) n n."""
    _need(n)
    d = Derivation(_ups(n, n + 1, n))
    d.embed(macro_sandwich_up(n + 1), 1)               # n (n+1) (n+1)' (n+1) n
    d.apply(Rule("SLIDE", (n + 1,)), 1, BACKWARD)      # n (n+2)' (n+2) (n+1) n
    d.move(0, 2)                                       # (n+2)' (n+2) n (n+1) n
    d.apply(Rule("SLIDE", (n + 1,)), 0)                # (n+1) (n+1)' n (n+1) n
    d.swap(1)                                          # (n+1) n (n+1)' (n+1) n
    d.apply(Rule("SLIDE", (n,)), 2)                    # (n+1) n n n' n
    d.embed(macro_sandwich_up(n).reversed(), 2)        # (n+1) n n
    return d.trace()


@lru_cache(maxsize=None)
def macro_knuth_b(n: int) -> Trace:
    """(n+1) n (n+1)  ->  (n+1) (n+1) n.

    For n >= 2 the letter n+1 is carried past n' n through an (n-1)(n-1)'
    detour; for n = 1 there is no column 0, so the detour inserts 1' 1 with
    CANCEL_1 instead.
    """
    _need(n)
    d = Derivation(_ups(n + 1, n, n + 1))
    if n >= 2:
        d.embed(macro_sandwich_up(n), 1)               # (n+1) n n' n (n+1)
        d.apply(Rule("SLIDE", (n - 1,)), 2)            # (n+1) n (n-1) (n-1)' (n+1)
        d.move(4, 2)                                   # (n+1) n (n+1) (n-1) (n-1)'
        d.apply(Rule("SLIDE", (n - 1,)), 3, BACKWARD)  # (n+1) n (n+1) n' n
    else:
        d.apply(Rule("CANCEL_1"), 3, BACKWARD)         # 2 1 2 1' 1
    d.swap(2)                                          # (n+1) n n' (n+1) n
    d.apply(Rule("SLIDE", (n,)), 1, BACKWARD)          # (n+1) (n+1)' (n+1) (n+1) n
    d.embed(macro_sandwich_up(n + 1).reversed(), 0)    # (n+1) (n+1) n
    return d.trace()


@lru_cache(maxsize=None)
def macro_knuth_a_down(n: int) -> Trace:
    """d_n d_{n+1} d_n  ->  d_n d_n d_{n+1}."""
    return transpose_trace(macro_knuth_a(n))


@lru_cache(maxsize=None)
def macro_knuth_b_down(n: int) -> Trace:
    """d_{n+1} d_n d_{n+1}  ->  d_n d_{n+1} d_{n+1}."""
    return transpose_trace(macro_knuth_b(n))


@lru_cache(maxsize=None)
def block_commute(k: int) -> Trace:
    """(k k-1 ... 1) k  ->  k (k k-1 ... 1)."""
    _need(k)
    d = Derivation(_ups(*range(k, 0, -1)) + (U(k),))
    if k >= 2:
        d.move(k, 2)                                   # k (k-1) k (k-2) ... 1
        d.embed(macro_knuth_b(k - 1), 0)
    return d.trace()


@lru_cache(maxsize=None)
def group_staircase(n: int, m: int) -> Trace:
    """(n ... 1)^m  ->  n^m (n-1)^m ... 1^m."""
    _need(n)
    if m < 0:
        raise ParameterError("m must be >= 0")
    stair = _ups(*range(n, 0, -1))
    d = Derivation(stair * m)
    if m <= 1:
        return d.trace()
    d.embed(group_staircase(n, m - 1), n)              # (n..1) n^{m-1} ... 1^{m-1}
    offset = 0
    for k in range(n, 0, -1):
        # block (k..1) at offset, followed by k^{m-1}
        for r in range(m - 1):
            d.embed(block_commute(k), offset + r)
        offset += m
    return d.trace()


@lru_cache(maxsize=None)
def empty_identity(m: int, n: int) -> Trace:
    """[empty]_{m,n} = 1'^m ... n'^m n^m ... 1^m  ->  empty word."""
    _need(n)
    if m < 0:
        raise ParameterError("m must be >= 0")
    downs = tuple(D(k) for k in range(1, n + 1) for _ in range(m))
    ups = tuple(U(k) for k in range(n, 0, -1) for _ in range(m))
    d = Derivation(downs + ups)
    if m == 0:
        return d.trace()
    grouping = group_staircase(n, m)
    d.embed(grouping.reversed(), m * n)                     # ups -> (n..1)^m
    d.embed(transpose_trace(grouping).reversed(), 0)        # downs -> (1'..n')^m
    for r in range(m, 0, -1):
        d.embed(macro_identity(n), (r - 1) * n)
    return d.trace()


MACROS = {
    "identity": macro_identity,
    "sandwich_up": macro_sandwich_up,
    "sandwich_down": macro_sandwich_down,
    "knuth_a": macro_knuth_a,
    "knuth_b": macro_knuth_b,
    "knuth_a_down": macro_knuth_a_down,
    "knuth_b_down": macro_knuth_b_down,
}
