import itertools

import pytest
from hypothesis import strategies as st

from schurops.partitions import Partition
from schurops.words import D, U, parse_word


def W(text):
    return parse_word(text)


def alphabet(max_index):
    return [U(i) for i in range(1, max_index + 1)] + [D(i) for i in range(1, max_index + 1)]


def all_words(max_len, max_index):
    letters = alphabet(max_index)
    for n in range(max_len + 1):
        yield from itertools.product(letters, repeat=n)


def words_st(max_len, max_index, min_len=0):
    return st.lists(st.sampled_from(alphabet(max_index)), min_size=min_len,
                    max_size=max_len).map(tuple)


# --- independent diagram oracle: partitions as sets of (row, col) cells ---------

def cells(p):
    return frozenset((r, c) for r, row in enumerate(p, 1) for c in range(1, row + 1))


def is_diagram(cs):
    return all((r == 1 or (r - 1, c) in cs) and (c == 1 or (r, c - 1) in cs) for r, c in cs)


def from_cells(cs):
    rows = {}
    for r, _ in cs:
        rows[r] = rows.get(r, 0) + 1
    return Partition([rows[r] for r in sorted(rows)])


def brute_covers(p):
    """Every diagram obtained by adding one cell, with that cell's column."""
    cs = cells(p)
    out = []
    for r in range(1, len(p) + 2):
        for c in range(1, (p[0] if p else 0) + 2):
            if (r, c) not in cs and is_diagram(cs | {(r, c)}):
                out.append((c, from_cells(cs | {(r, c)})))
    return out


def brute_covered(p):
    cs = cells(p)
    return [(c, from_cells(cs - {(r, c)})) for r, c in cs if is_diagram(cs - {(r, c)})]


def brute_apply(p, x):
    """Act with cell sets, rightmost letter first; None for zero."""
    cur = p
    for a in reversed(x):
        moves = brute_covers(cur) if a.up else brute_covered(cur)
        hit = [q for c, q in moves if c == a.index]
        if not hit:
            return None
        cur = hit[0]
    return cur


def brute_alpha(x, i):
    """alpha_i by recomputing the weight of every suffix from scratch."""
    best = None
    for j in range(len(x) + 1):
        s = x[j:]
        w = lambda k: sum(1 for a in s if a.index == k and a.up) - sum(
            1 for a in s if a.index == k and not a.up)
        v = w(i + 1) - w(i)
        best = v if best is None else max(best, v)
    return best


@pytest.fixture
def w():
    return W
