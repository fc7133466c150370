"""Canonical representative words ``[x]_{m,n}``.

The canonical word is ``d1^m ... dn^m`` followed by the blocks
``uk^beta_k dk^alpha_k`` for k = n down to 1, with
``beta_k = alpha_k + w_k + m``.  It only depends on the fingerprint of ``x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ParameterError
from .words import D, U, Letter, Word, alpha, max_index, weight


@dataclass(frozen=True)
class NormalFormParams:
    m: int
    n: int
    beta: dict


def m_of(x: Sequence[Letter]) -> int:
    a, w = alpha(x), weight(x)
    return max([0] + [-(a.get(i, 0) + w.get(i, 0)) for i in set(a) | set(w)])


def n_of(x: Sequence[Letter]) -> int:
    return max(1, max_index(x))


def params(x: Sequence[Letter], m: int, n: int) -> NormalFormParams:
    if m < m_of(x):
        raise ParameterError(f"m={m} is below m(x)={m_of(x)}")
    if n < n_of(x):
        raise ParameterError(f"n={n} is below n(x)={n_of(x)}")
    a, w = alpha(x), weight(x)
    beta = {i: a.get(i, 0) + w.get(i, 0) + m for i in range(1, n + 1)}
    return NormalFormParams(m, n, beta)


def canonical_from(a: dict, w: dict, m: int, n: int) -> Word:
    letters: list[Letter] = []
    for k in range(1, n + 1):
        letters += [D(k)] * m
    for k in range(n, 0, -1):
        beta = a.get(k, 0) + w.get(k, 0) + m
        if beta < 0:
            raise ParameterError(f"negative exponent beta_{k}={beta}")
        letters += [U(k)] * beta
        letters += [D(k)] * a.get(k, 0)
    return tuple(letters)


def canonical_word(x: Sequence[Letter], m: int, n: int) -> Word:
    params(x, m, n)
    return canonical_from(alpha(x), weight(x), m, n)


def normalization_params(x: Sequence[Letter]) -> tuple[int, int]:
    """(M, N) with M the largest m_of over all prefixes of ``x`` (empty included)."""
    big_m = 0
    for j in range(1, len(x) + 1):
        big_m = max(big_m, m_of(x[:j]))
    return big_m, n_of(x)
