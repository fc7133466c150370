"""The subalgebra generated by u_t and d_t for one fixed column t.

Words here use a single index.  A {t, t'}-word is drawn as a lattice path read
right to left (``t`` steps up, ``t'`` steps down); its highest point, lowest
point and endpoint are alpha_{t-1}, -alpha_t and w_t.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, SchurOpsError, StepMismatch, TraceError
from .words import D, U, Letter, Word, alpha, fingerprint, format_word, weight


def _check_t_word(x: Sequence[Letter], t: int, min_t: int = 2) -> None:
    if t < min_t:
        raise DomainError(f"t must be >= {min_t}, got {t}")
    for k, a in enumerate(x):
        if a.index != t:
            raise DomainError(f"letter {a} at position {k} is not u{t} or d{t}")


def t_word(t: int, *blocks: tuple[str, int]) -> Word:
    """Build ``t^a t'^b ...`` from (kind, exponent) pairs, kind 'u' or 'd'."""
    out: list[Letter] = []
    for kind, k in blocks:
        out += [U(t) if kind == "u" else D(t)] * k
    return tuple(out)


@dataclass(frozen=True)
class StepGraph:
    points: tuple  # ((x0, y0), (x1, y1), ...)


@dataclass(frozen=True)
class TWordStats:
    peak: int
    valley: int
    endpoint: int
    t: int

    @property
    def alpha_prev(self) -> int:
        return self.peak

    @property
    def alpha_t(self) -> int:
        return -self.valley

    @property
    def w_t(self) -> int:
        return self.endpoint


def step_graph(x: Sequence[Letter], t: int) -> StepGraph:
    _check_t_word(x, t)
    pts = [(0, 0)]
    cx, cy = 0, 0
    for a in reversed(x):
        cx -= 1
        cy += 1 if a.up else -1
        pts.append((cx, cy))
    return StepGraph(tuple(pts))


def t_stats(x: Sequence[Letter], t: int) -> TWordStats:
    heights = [y for _, y in step_graph(x, t).points]
    return TWordStats(max(heights), min(heights), heights[-1], t)


def standard_form_t(x: Sequence[Letter], t: int) -> Word:
    """``t^(w+a_t) t'^(a_{t-1}+a_t) t^(a_{t-1})`` for the stats of ``x``."""
    st = t_stats(x, t)
    return t_word(t, ("u", st.w_t + st.alpha_t), ("d", st.alpha_prev + st.alpha_t),
                  ("u", st.alpha_prev))


# --- unbounded relation families ------------------------------------------------


@dataclass(frozen=True)
class TRule:
    """UDU(i): t^(i+1) t'^i <-> t^(i+1) t'^(i+1) t;  DUD(i): t^i t'^(i+1) <-> t' t^(i+1) t'^(i+1)."""

    family: str
    i: int

    def sides(self, t: int) -> tuple[Word, Word]:
        i = self.i
        if self.family == "UDU":
            return t_word(t, ("u", i + 1), ("d", i)), t_word(t, ("u", i + 1), ("d", i + 1), ("u", 1))
        if self.family == "DUD":
            return t_word(t, ("u", i), ("d", i + 1)), t_word(t, ("d", 1), ("u", i + 1), ("d", i + 1))
        raise TraceError(f"unknown subalgebra relation {self.family!r}")

    @property
    def degree(self) -> int:
        return 2 * self.i + 3

    def __str__(self):
        return f"{self.family}({self.i})"


@dataclass(frozen=True)
class TStep:
    rule: TRule
    position: int
    direction: str = "F"


@dataclass(frozen=True)
class TTrace:
    t: int
    start: Word
    steps: tuple
    end: Word

    def __len__(self):
        return len(self.steps)

    def words(self):
        cur = self.start
        yield cur
        for s in self.steps:
            cur = apply_t_step(cur, s, self.t)
            yield cur


def apply_t_step(w: Sequence[Letter], s: TStep, t: int) -> Word:
    if s.rule.i < 0:
        raise TraceError(f"{s.rule}: parameter must be >= 0")
    left, right = s.rule.sides(t)
    old, new = (left, right) if s.direction == "F" else (right, left)
    p = s.position
    if p < 0 or tuple(w[p:p + len(old)]) != old:
        raise StepMismatch(f"expected {format_word(old)!r} at position {p}", p)
    return tuple(w[:p]) + new + tuple(w[p + len(old):])


def verify_t_trace(tr: TTrace) -> None:
    cur = tuple(tr.start)
    for k, s in enumerate(tr.steps):
        try:
            cur = apply_t_step(cur, s, tr.t)
        except SchurOpsError as exc:
            raise TraceError(f"step {k}: {exc}", index=k) from None
    if cur != tuple(tr.end):
        raise TraceError("replay does not reach the claimed end", index=len(tr.steps))
    if fingerprint(tr.start) != fingerprint(tr.end):
        raise TraceError("start and end have different fingerprints")


def normalize_t_with_trace(x: Sequence[Letter], t: int) -> tuple[Word, TTrace]:
    """Standard form of ``x`` and a UDU/DUD trace reaching it.

    Letters are prepended one at a time, right to left, to the standard form of
    the suffix already processed.
    """
    x = tuple(x)
    _check_t_word(x, t)
    cur = x
    steps: list[TStep] = []
    for j in range(len(x) - 1, -1, -1):
        y = x[j + 1:]
        a, w = alpha(y), weight(y)
        w_t, a_t, a_prev = w.get(t, 0), a.get(t, 0), a.get(t - 1, 0)
        if x[j].up and w_t == a_prev:
            # a new peak at the far left: t [y] -> [t y]
            s = TStep(TRule("UDU", w_t + a_t), j, "F")
        elif not x[j].up and a_t > -w_t:
            s = TStep(TRule("DUD", w_t + a_t - 1), j, "B")
        else:
            continue
        cur = apply_t_step(cur, s, t)
        steps.append(s)
    return cur, TTrace(t, x, tuple(steps), cur)


# --- finite chains ---------------------------------------------------------------


@dataclass(frozen=True)
class ChainState:
    rho: int
    pos: int

    def __post_init__(self):
        if not 0 <= self.pos <= self.rho:
            raise DomainError(f"position {self.pos} outside chain 0..{self.rho}")


def chain_apply(s: ChainState, x: Sequence[Letter], t: int):
    """Act on the (rho+1)-element chain, rightmost letter first; ZERO on falling off."""
    from .partitions import ZERO

    _check_t_word(x, t)
    pos = s.pos
    for a in reversed(x):
        pos += 1 if a.up else -1
        if pos < 0 or pos > s.rho:
            return ZERO
    return ChainState(s.rho, pos)


def chain_annihilates(x: Sequence[Letter], t: int, rho: int) -> bool:
    from .partitions import ZERO

    if rho < 0:
        raise DomainError("rho must be >= 0")
    return all(chain_apply(ChainState(rho, p), x, t) is ZERO for p in range(rho + 1))


def chain_relations(t: int, rho: int) -> list[tuple[str, Word, Word | None]]:
    """Instances of the finite-chain relations; ``None`` on the right means zero."""
    rels: list[tuple[str, Word, Word | None]] = []
    for i in range(rho):
        left, right = TRule("UDU", i).sides(t)
        rels.append((f"UDU({i})", left, right))
        left, right = TRule("DUD", i).sides(t)
        rels.append((f"DUD({i})", left, right))
    rels.append(("u^(rho+1)", t_word(t, ("u", rho + 1)), None))
    rels.append(("d^(rho+1)", t_word(t, ("d", rho + 1)), None))
    return rels


def unbounded_witness(k: int, t: int) -> tuple[Word, Word]:
    """(t^k, t^k t'^k t^k): equivalent words whose paths differ in peak/valley order."""
    if k < 1 or t < 2:
        raise DomainError("need k >= 1 and t >= 2")
    return t_word(t, ("u", k)), t_word(t, ("u", k), ("d", k), ("u", k))


# --- t = 1 ------------------------------------------------------------------------


def standard_form_t1(x: Sequence[Letter]) -> Word:
    """``u1^(w_1 + a_1) d1^(a_1)``; the only relation left for t = 1 is d1 u1 = id."""
    _check_t_word(x, 1, min_t=1)
    a1 = alpha(x).get(1, 0)
    w1 = weight(x).get(1, 0)
    return t_word(1, ("u", w1 + a1), ("d", a1))
