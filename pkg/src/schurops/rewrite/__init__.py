from .derivation import (MACROS, Derivation, empty_identity, macro_identity, macro_knuth_a,
                         macro_knuth_a_down, macro_knuth_b, macro_knuth_b_down,
                         macro_sandwich_down, macro_sandwich_up)
from .normalize import certify_equivalence, normalize_with_trace
from .rules import (BACKWARD, FAMILIES, FORWARD, Rule, Step, Trace, apply_step, dumps_trace,
                    loads_trace, trace_from_dict, trace_to_dict, transpose_trace)
from .verify import is_valid, verify_trace

__all__ = [
    "MACROS", "Derivation", "empty_identity", "macro_identity", "macro_knuth_a",
    "macro_knuth_a_down", "macro_knuth_b", "macro_knuth_b_down", "macro_sandwich_down",
    "macro_sandwich_up", "certify_equivalence", "normalize_with_trace", "BACKWARD",
    "FAMILIES", "FORWARD", "Rule", "Step", "Trace", "apply_step", "dumps_trace",
    "loads_trace", "trace_from_dict", "trace_to_dict", "transpose_trace", "is_valid",
    "verify_trace",
]
