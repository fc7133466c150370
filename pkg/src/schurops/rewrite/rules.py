"""The five quadratic relation families as rewrite rules, plus steps and traces.

Forward rewrites the left side of a relation into the right side:

    COMM_UU(i, j)   u_i u_j  ->  u_j u_i        |i - j| >= 2
    COMM_DD(i, j)   d_i d_j  ->  d_j d_i        |i - j| >= 2
    COMM_DU(i, j)   d_i u_j  ->  u_j d_i        i != j
    CANCEL_1        d_1 u_1  ->  (empty)
    SLIDE(i)        d_{i+1} u_{i+1}  ->  u_i d_i    i >= 1

Backward goes the other way; CANCEL_1 backward inserts ``d1 u1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from ..errors import ParseError, StepMismatch, TraceError
from ..words import D, U, Letter, Word, format_word, parse_word, transpose_word

FAMILIES = ("COMM_UU", "COMM_DD", "COMM_DU", "CANCEL_1", "SLIDE")
FORWARD, BACKWARD = "F", "B"

_ARITY = {"COMM_UU": 2, "COMM_DD": 2, "COMM_DU": 2, "CANCEL_1": 0, "SLIDE": 1}


@dataclass(frozen=True)
class Rule:
    family: str
    params: tuple = ()

    def sides(self) -> tuple[Word, Word]:
        f, p = self.family, self.params
        if f == "COMM_UU":
            i, j = p
            return (U(i), U(j)), (U(j), U(i))
        if f == "COMM_DD":
            i, j = p
            return (D(i), D(j)), (D(j), D(i))
        if f == "COMM_DU":
            i, j = p
            return (D(i), U(j)), (U(j), D(i))
        if f == "CANCEL_1":
            return (D(1), U(1)), ()
        (i,) = p
        return (D(i + 1), U(i + 1)), (U(i), D(i))

    def transpose(self) -> "Rule":
        """The same relation read on transposed words (reverse, swap u and d)."""
        f, p = self.family, self.params
        if f == "COMM_UU":
            return Rule("COMM_DD", (p[1], p[0]))
        if f == "COMM_DD":
            return Rule("COMM_UU", (p[1], p[0]))
        if f == "COMM_DU":
            return Rule("COMM_DU", (p[1], p[0]))
        return self

    def __str__(self):
        if not self.params:
            return self.family
        return f"{self.family}({', '.join(map(str, self.params))})"


def check_rule(rule: Rule) -> None:
    f, p = rule.family, rule.params
    if f not in _ARITY:
        raise TraceError(f"unknown relation family {f!r}")
    if len(p) != _ARITY[f] or not all(isinstance(v, int) and not isinstance(v, bool) for v in p):
        raise TraceError(f"{f} takes {_ARITY[f]} integer parameter(s), got {p!r}")
    if any(v < 1 for v in p):
        raise TraceError(f"{f}: indices must be >= 1, got {p!r}")
    if f in ("COMM_UU", "COMM_DD") and abs(p[0] - p[1]) < 2:
        raise TraceError(f"{f}{p}: side condition |i-j| >= 2 violated")
    if f == "COMM_DU" and p[0] == p[1]:
        raise TraceError(f"{f}{p}: side condition i != j violated")


@dataclass(frozen=True)
class Step:
    rule: Rule
    position: int
    direction: str = FORWARD

    def matched_and_replacement(self) -> tuple[Word, Word]:
        left, right = self.rule.sides()
        return (left, right) if self.direction == FORWARD else (right, left)

    def inverse(self) -> "Step":
        return Step(self.rule, self.position, BACKWARD if self.direction == FORWARD else FORWARD)

    def shifted(self, offset: int) -> "Step":
        return Step(self.rule, self.position + offset, self.direction)

    def __str__(self):
        return f"{self.rule} {self.direction} @{self.position}"


def apply_step(w: Sequence[Letter], s: Step) -> Word:
    """Rewrite ``w`` at ``s.position``.

    Raises TraceError if the rule's side condition fails and StepMismatch if
    the pattern is absent.
    """
    check_rule(s.rule)
    if s.direction not in (FORWARD, BACKWARD):
        raise StepMismatch(f"unknown direction {s.direction!r}", s.position)
    old, new = s.matched_and_replacement()
    p = s.position
    if p < 0 or p + len(old) > len(w) or tuple(w[p:p + len(old)]) != old:
        found = format_word(w[p:p + len(old)]) if 0 <= p <= len(w) else "<out of range>"
        raise StepMismatch(
            f"expected {format_word(old) or '(empty)'!s} at position {p}, found {found or '(empty)'}",
            p,
        )
    return tuple(w[:p]) + new + tuple(w[p + len(old):])


@dataclass(frozen=True)
class Trace:
    start: Word
    steps: tuple
    end: Word

    def __len__(self):
        return len(self.steps)

    def words(self):
        """Every word along the trace, start and end included."""
        cur = self.start
        yield cur
        for s in self.steps:
            cur = apply_step(cur, s)
            yield cur

    def reversed(self) -> "Trace":
        return Trace(self.end, tuple(s.inverse() for s in reversed(self.steps)), self.start)

    def then(self, other: "Trace") -> "Trace":
        if tuple(self.end) != tuple(other.start):
            raise ValueError("traces do not compose: end and start differ")
        return Trace(self.start, self.steps + other.steps, other.end)

    def to_json(self) -> str:
        return dumps_trace(self)


def replay(start: Sequence[Letter], steps: Sequence[Step]) -> Word:
    cur = tuple(start)
    for s in steps:
        cur = apply_step(cur, s)
    return cur


def transpose_trace(t: Trace) -> Trace:
    """Mirror a trace onto transposed words; positions are reflected."""
    out = []
    cur = t.start
    for s in t.steps:
        old, _ = s.matched_and_replacement()
        pos = len(cur) - s.position - len(old)
        out.append(Step(s.rule.transpose(), pos, s.direction))
        cur = apply_step(cur, s)
    return Trace(transpose_word(t.start), tuple(out), transpose_word(t.end))


# --- JSON ------------------------------------------------------------------------

_PARAM_KEYS = {"COMM_UU": ("i", "j"), "COMM_DD": ("i", "j"), "COMM_DU": ("i", "j"),
               "CANCEL_1": (), "SLIDE": ("i",)}


def step_to_dict(s: Step) -> dict:
    d = {"family": s.rule.family}
    for key, val in zip(_PARAM_KEYS[s.rule.family], s.rule.params):
        d[key] = val
    d["pos"] = s.position
    d["dir"] = s.direction
    return d


def step_from_dict(d: dict, index: int | None = None) -> Step:
    if not isinstance(d, dict):
        raise ParseError(f"step {index}: expected an object", index)
    family = d.get("family")
    if family not in _PARAM_KEYS:
        raise ParseError(f"step {index}: unknown family {family!r}", index)
    keys = _PARAM_KEYS[family]
    allowed = {"family", "pos", "dir", *keys}
    extra = set(d) - allowed
    missing = allowed - set(d)
    if extra:
        raise ParseError(f"step {index}: unknown field(s) {sorted(extra)}", index)
    if missing:
        raise ParseError(f"step {index}: missing field(s) {sorted(missing)}", index)
    values = [d[k] for k in keys] + [d["pos"]]
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in values):
        raise ParseError(f"step {index}: indices and pos must be integers", index)
    if d["dir"] not in (FORWARD, BACKWARD):
        raise ParseError(f"step {index}: dir must be 'F' or 'B'", index)
    # side conditions are left to apply_step so the verifier can report them by index
    return Step(Rule(family, tuple(d[k] for k in keys)), d["pos"], d["dir"])


def trace_to_dict(t: Trace) -> dict:
    return {
        "start": format_word(t.start),
        "end": format_word(t.end),
        "steps": [step_to_dict(s) for s in t.steps],
    }


def dumps_trace(t: Trace) -> str:
    return json.dumps(trace_to_dict(t), indent=None, separators=(", ", ": "))


def trace_from_dict(d: dict) -> Trace:
    if not isinstance(d, dict):
        raise ParseError("trace must be a JSON object")
    extra = set(d) - {"start", "end", "steps"}
    missing = {"start", "end", "steps"} - set(d)
    if extra:
        raise ParseError(f"unknown trace field(s) {sorted(extra)}")
    if missing:
        raise ParseError(f"missing trace field(s) {sorted(missing)}")
    if not isinstance(d["start"], str) or not isinstance(d["end"], str):
        raise ParseError("start and end must be word strings")
    if not isinstance(d["steps"], list):
        raise ParseError("steps must be a list")
    steps = tuple(step_from_dict(s, k) for k, s in enumerate(d["steps"]))
    return Trace(parse_word(d["start"]), steps, parse_word(d["end"]))


def loads_trace(text: str) -> Trace:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return trace_from_dict(data)
