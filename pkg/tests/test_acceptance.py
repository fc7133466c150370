"""End-to-end acceptance checks.

Each test prints one ``PASS``/``FAIL`` line naming its criterion, then asserts.
Every comparison is exact.
"""

import itertools
import random

import pytest

from conftest import W, all_words
from schurops.oracle import action_signature, gap_bound, semantically_equal
from schurops.partitions import ZERO, Partition
from schurops.rewrite import MACROS, certify_equivalence, verify_trace
from schurops.subalgebra import (ChainState, chain_annihilates, chain_apply, chain_relations,
                                 normalize_t_with_trace, standard_form_t, step_graph, t_stats,
                                 t_word, unbounded_witness, verify_t_trace)
from schurops.words import D, U, alpha, apply_word, apply_word_closed, fingerprint, weight


@pytest.fixture
def report(capsys):
    def emit(number, title, failures):
        with capsys.disabled():
            status = "PASS" if not failures else f"FAIL ({len(failures)} failures)"
            print(f"\n[acceptance {number:2d}] {status}: {title}")
        assert not failures, failures[:5]
    return emit


def t_words(max_len, t):
    for n in range(max_len + 1):
        yield from itertools.product((U(t), D(t)), repeat=n)


def test_fingerprint_of_worked_word(report):
    x = W("u1 u1 d3 d3 d2 u3 u2 d1 u2 u1")
    bad = []
    if weight(x) != {1: 2, 2: 1, 3: -1}:
        bad.append(("weight", weight(x)))
    if alpha(x) != {1: 2, 3: 1}:
        bad.append(("alpha", alpha(x)))
    gains = []
    for k in range(len(x) + 1):
        w = weight(x[len(x) - k:])
        gains.append(w.get(2, 0) - w.get(1, 0))
    if gains.index(max(gains)) != 4 or x[-4:] != W("u2 d1 u2 u1"):
        bad.append(("first maximal suffix", gains))
    report(1, "weight and alpha of the worked ten-letter word", bad)


def test_action_chain_on_31(report):
    bad = []
    steps = [(W("u2"), Partition((3, 2))), (W("d3 u2"), Partition((2, 2))), (W("d1 d3 u2"), ZERO)]
    for x, want in steps:
        for act in (apply_word, apply_word_closed):
            got = act(Partition((3, 1)), x)
            if got != want:
                bad.append((act.__name__, x, got))
    report(2, "(3,1) -> (3,2) -> (2,2) -> 0 letter by letter and in closed form", bad)


def test_step_graph_of_t2_tbar4_t3(report):
    x = t_word(2, ("u", 2), ("d", 4), ("u", 3))
    pts = step_graph(x, 2).points
    st = t_stats(x, 2)
    bad = []
    if (-3, 3) not in pts or (-7, -1) not in pts or pts[-1] != (-9, 1):
        bad.append(pts)
    if (st.alpha_prev, st.alpha_t, st.w_t) != (3, 1, 1):
        bad.append(st)
    report(3, "peak (-3,3), valley (-7,-1), end (-9,1); alpha = 3, 1 and w = 1", bad)


def test_fingerprint_decides_action_exhaustively(report):
    words = list(all_words(4, 3))
    # One profile set complete for every pair at once: n = 3 + 1, c = 4.
    by_sig, by_fp = {}, {}
    for x in words:
        by_sig.setdefault(action_signature(x, 4, 4), set()).add(x)
        by_fp.setdefault(fingerprint(x), set()).add(x)
    sig_classes = {frozenset(c) for c in by_sig.values()}
    fp_classes = {frozenset(c) for c in by_fp.values()}
    bad = [] if sig_classes == fp_classes else [len(sig_classes ^ fp_classes)]

    # literal pairwise calls on a seeded sample, at each pair's own bound
    rng = random.Random(4)
    for _ in range(400):
        x, y = rng.choice(words), rng.choice(words)
        if rng.random() < 0.5:
            y = rng.choice(sorted(by_fp[fingerprint(x)]))
        if (fingerprint(x) == fingerprint(y)) != semantically_equal(x, y):
            bad.append((x, y))
    pairs = len(words) ** 2
    report(4, f"fingerprint equality == oracle equality on all {pairs} pairs "
              f"(length <= 4, letters <= 3)", bad)


def test_random_equivalent_pairs_are_certified(report):
    classes = {}
    for x in all_words(5, 3):
        classes.setdefault(fingerprint(x), []).append(x)
    multi = sorted((ws for ws in classes.values() if len(ws) > 1), key=lambda ws: ws[0])
    rng = random.Random(2024)
    bad = []
    for _ in range(500):
        x, y = rng.sample(rng.choice(multi), 2)
        tr = certify_equivalence(x, y)
        try:
            assert tr is not None and (tr.start, tr.end) == (x, y)
            verify_trace(tr)
        except Exception as exc:
            bad.append((x, y, exc))
    report(5, "500 sampled equal-fingerprint pairs certified and verified", bad)


def test_derived_relation_macros(report):
    bad = []
    instances = set()
    for name, build in sorted(MACROS.items()):
        for n in range(1, 5):
            tr = build(n)
            try:
                verify_trace(tr)
            except Exception as exc:
                bad.append((name, n, exc))
                continue
            if not semantically_equal(tr.start, tr.end, c=gap_bound(tr.start, tr.end)):
                bad.append((name, n, "endpoints"))
            instances.update(s.matched_and_replacement() for s in tr.steps)
            if n <= 2:
                for wd in tr.words():
                    if not semantically_equal(wd, tr.start, c=gap_bound(wd, tr.start)):
                        bad.append((name, n, wd))
    # Each step replaces one side of a rule instance by the other inside a word;
    # since actions compose, the step is sound when the instance itself is.
    for lhs, rhs in sorted(instances):
        if not semantically_equal(lhs, rhs):
            bad.append(("instance", lhs, rhs))
    report(6, f"derived-relation macros n <= 4 verify; {len(instances)} step instances "
              f"oracle-sound", bad)


def test_local_plactic_relations(report):
    rels = []
    for i in range(1, 4):
        rels += [
            ((U(i), U(i + 1), U(i)), (U(i + 1), U(i), U(i))),
            ((U(i + 1), U(i), U(i + 1)), (U(i + 1), U(i + 1), U(i))),
            ((D(i), D(i + 1), D(i)), (D(i), D(i), D(i + 1))),
            ((D(i + 1), D(i), D(i + 1)), (D(i), D(i + 1), D(i + 1))),
        ]
    for i in range(1, 3):
        rels.append(((U(i + 1), U(i + 2), U(i + 1), U(i)), (U(i + 1), U(i + 2), U(i), U(i + 1))))
        rels.append(((D(i), D(i + 1), D(i + 2), D(i + 1)), (D(i + 1), D(i), D(i + 2), D(i + 1))))
    for i in range(1, 5):
        for j in range(1, 5):
            if abs(i - j) >= 2:
                rels.append(((U(i), U(j)), (U(j), U(i))))
    bad = [(x, y) for x, y in rels if not semantically_equal(x, y)]
    certified = 0
    for x, y in rels:
        if len(x) < 3:
            continue
        tr = certify_equivalence(x, y)
        try:
            verify_trace(tr)
            certified += 1
        except Exception as exc:
            bad.append((x, y, exc))
    report(7, f"{len(rels)} local plactic instances hold; {certified} certified by quadratic "
              f"steps", bad)


def test_subalgebra_standard_form(report):
    t = 2
    bad = []
    count = 0
    for x in t_words(8, t):
        count += 1
        a, w = alpha(x), weight(x)
        b, d, f = a.get(t - 1, 0), a.get(t, 0), w.get(t, 0)
        want = t_word(t, ("u", f + d), ("d", b + d), ("u", b))
        got, tr = normalize_t_with_trace(x, t)
        try:
            assert standard_form_t(x, t) == want == got
            verify_t_trace(tr)
            assert all(fingerprint(wd) == fingerprint(x) for wd in tr.words())
        except Exception as exc:
            bad.append((x, exc))
    report(8, f"standard form and verified traces for all {count} words of length <= 8", bad)


def test_finite_chains(report):
    t = 2
    bad = []
    for x in t_words(8, t):
        a = alpha(x)
        for rho in range(5):
            if chain_annihilates(x, t, rho) != (a.get(t - 1, 0) + a.get(t, 0) > rho):
                bad.append((x, rho))
    for rho in range(1, 5):
        for name, lhs, rhs in chain_relations(t, rho):
            for p in range(rho + 1):
                s = ChainState(rho, p)
                want = ZERO if rhs is None else chain_apply(s, rhs, t)
                if chain_apply(s, lhs, t) != want:
                    bad.append((rho, name, p))
    report(9, "annihilation criterion and chain relations for rho <= 4", bad)


def test_unbounded_witness(report):
    bad = []
    for k in range(1, 7):
        x, y = unbounded_witness(k, 2)
        _, tr = normalize_t_with_trace(y, 2)
        try:
            assert fingerprint(x) == fingerprint(y)
            verify_t_trace(tr)
            assert any(s.rule.i >= k - 1 for s in tr.steps)
        except Exception as exc:
            bad.append((k, exc))
    report(10, "witness pairs k = 1..6 use a relation of parameter >= k - 1", bad)
