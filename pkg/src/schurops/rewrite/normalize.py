"""Certified normalization and equivalence certificates.

``normalize_with_trace`` builds ``[empty]_{M,N}`` in front of the word, then
absorbs the letters one at a time: with ``[y]`` already in place, the next
letter ``x_j`` is rewritten into ``[y x_j]`` by one of four local derivations,
chosen by whether ``x_j`` is up or down and whether the relevant alpha entry
of ``y`` is zero.
"""

from __future__ import annotations

from typing import Sequence

from ..errors import ParameterError
from ..normal_form import canonical_from, normalization_params
from ..words import Letter, Word, alpha, fingerprint, weight
from .derivation import (Derivation, empty_identity, macro_knuth_a, macro_knuth_a_down,
                         macro_sandwich_down, macro_sandwich_up)
from .rules import BACKWARD, FORWARD, Rule, Step, Trace, apply_step, FAMILIES


class _Layout:
    """Block offsets inside ``[y]_{m,n}``."""

    def __init__(self, a: dict, w: dict, m: int, n: int):
        self.alpha = {k: a.get(k, 0) for k in range(1, n + 1)}
        self.beta = {k: a.get(k, 0) + w.get(k, 0) + m for k in range(1, n + 1)}
        self.start = {}
        pos = m * n
        for k in range(n, 0, -1):
            self.start[k] = pos
            pos += self.beta[k] + self.alpha[k]
        self.length = pos

    def end(self, k: int) -> int:
        return self.start[k] + self.beta[k] + self.alpha[k]


def _absorb(d: Derivation, lay: _Layout, letter: Letter) -> None:
    """Rewrite ``[y] x_j`` (the letter sits at ``lay.length``) into ``[y x_j]``."""
    t = letter.index
    at = lay.length
    a_t = lay.alpha[t]
    a_prev = lay.alpha[t - 1] if t >= 2 else 0

    if letter.up:
        if t == 1:
            if a_t == 0:
                return                                  # [y] 1 is already [y 1]
            d.apply(Rule("CANCEL_1"), at - 1)           # ... 1' 1 -> ...
            return
        q = lay.start[t - 1] + lay.beta[t - 1]          # just after (t-1)^beta
        if a_t == 0:
            d.move(at, q)
            d.embed(macro_sandwich_up(t), q)             # t -> t t' t
            d.apply(Rule("SLIDE", (t - 1,)), q + 1)      # t' t -> (t-1)(t-1)'
            for r in range(lay.beta[t - 1]):
                d.embed(macro_knuth_a(t - 1), q - 1 - r)
        else:
            d.move(at, q)
            s = lay.end(t) - 1                           # last t' of the t-block
            d.move(s, q - 1)                             # t' crosses (t-1)^beta
            d.apply(Rule("SLIDE", (t - 1,)), q - 1)
        return

    if t == 1 or a_prev == 0:
        d.move(at, lay.end(t))
        return

    e = lay.end(t - 1)
    d.move(at, e)                                        # (t-1)'^a t' at [e-a, e]
    for r in range(a_prev - 1):
        d.embed(macro_knuth_a_down(t - 1).reversed(), e - 2 - r)
    p = e - a_prev - 1                                   # last letter of (t-1)^beta
    d.apply(Rule("SLIDE", (t - 1,)), p, BACKWARD)        # (t-1)(t-1)' -> t' t
    d.embed(macro_sandwich_down(t).reversed(), p)        # t' t t' -> t'
    d.move(p, lay.start[t - 1])


def normalize_with_trace(x: Sequence[Letter], m: int | None = None,
                         n: int | None = None) -> tuple[Word, Trace]:
    """Return ``[x]_{m,n}`` and a base-step trace from ``x`` to it.

    ``m`` and ``n`` default to ``normalization_params(x)``; larger values are
    accepted, smaller ones raise ParameterError.
    """
    x = tuple(x)
    big_m, big_n = normalization_params(x)
    m = big_m if m is None else m
    n = big_n if n is None else n
    if m < big_m or n < big_n:
        raise ParameterError(f"(m, n) = ({m}, {n}) below the required ({big_m}, {big_n})")

    d = Derivation(x)
    d.embed(empty_identity(m, n).reversed(), 0)
    for j, letter in enumerate(x):
        prefix = x[:j]
        lay = _Layout(alpha(prefix), weight(prefix), m, n)
        _absorb(d, lay, letter)
        target = canonical_from(alpha(x[:j + 1]), weight(x[:j + 1]), m, n)
        assert d.word[:len(target)] == target and d.word[len(target):] == x[j + 1:], (
            f"absorbing letter {j} of {x} went astray")
    return d.word, d.trace()


def _one_step(x: Word, y: Word) -> Step | None:
    """A single base step from x to y, if one exists."""
    if abs(len(x) - len(y)) not in (0, 2):
        return None
    cands = []
    for p in range(len(x) + 1):
        if p + 1 < len(x):
            a, b = x[p], x[p + 1]
            if a.up and b.up:
                cands.append(Step(Rule("COMM_UU", (a.index, b.index)), p))
            elif not a.up and not b.up:
                cands.append(Step(Rule("COMM_DD", (a.index, b.index)), p))
            elif not a.up:
                cands.append(Step(Rule("COMM_DU", (a.index, b.index)), p))
                if a.index == b.index and a.index >= 2:
                    cands.append(Step(Rule("SLIDE", (a.index - 1,)), p))
                if a.index == b.index == 1:
                    cands.append(Step(Rule("CANCEL_1"), p))
            else:
                cands.append(Step(Rule("COMM_DU", (b.index, a.index)), p, BACKWARD))
                if a.index == b.index:
                    cands.append(Step(Rule("SLIDE", (a.index,)), p, BACKWARD))
        cands.append(Step(Rule("CANCEL_1"), p, BACKWARD))
    for s in cands:
        try:
            if apply_step(x, s) == y:
                return s
        except Exception:
            continue
    return None


def certify_equivalence(x: Sequence[Letter], y: Sequence[Letter]) -> Trace | None:
    """A verified-by-construction trace from ``x`` to ``y``, or None if inequivalent."""
    x, y = tuple(x), tuple(y)
    if fingerprint(x) != fingerprint(y):
        return None
    if x == y:
        return Trace(x, (), y)
    s = _one_step(x, y)
    if s is not None:
        return Trace(x, (s,), y)
    mx, nx = normalization_params(x)
    my, ny = normalization_params(y)
    m, n = max(mx, my), max(nx, ny)
    cx, tx = normalize_with_trace(x, m, n)
    cy, ty = normalize_with_trace(y, m, n)
    assert cx == cy, "equal fingerprints must give equal canonical words"
    return tx.then(ty.reversed())
