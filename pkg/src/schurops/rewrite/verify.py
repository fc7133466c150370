"""Trace checker.

Knows only the five base families in ``rules``.  Macros and case derivations
never reach this module; a certificate is accepted only if every step is a
literal instance of a quadratic relation.
"""

from __future__ import annotations

from ..errors import SchurOpsError, TraceError
from ..words import fingerprint, format_word
from .rules import Trace, apply_step


def verify_trace(t: Trace) -> None:
    """Raise TraceError (with the failing step index) unless ``t`` replays exactly."""
    cur = tuple(t.start)
    for k, s in enumerate(t.steps):
        try:
            cur = apply_step(cur, s)
        except SchurOpsError as exc:
            raise TraceError(f"step {k}: {exc}", index=k) from None
    if cur != tuple(t.end):
        raise TraceError(
            f"replay ends at {format_word(cur)!r}, trace claims {format_word(t.end)!r}",
            index=len(t.steps),
        )
    if fingerprint(t.start) != fingerprint(t.end):
        raise TraceError("start and end have different fingerprints")


def is_valid(t: Trace) -> bool:
    try:
        verify_trace(t)
    except TraceError:
        return False
    return True
