"""Up- and down-operators on Young's lattice.

Operator semantics on partitions, the fingerprint equivalence decider,
canonical words, and certificates built from the five quadratic relations.
"""

from .errors import (DomainError, InvalidIndex, ParameterError, ParseError, SchurOpsError,
                     StepMismatch, TraceError)
from .normal_form import canonical_word, m_of, n_of, normalization_params
from .oracle import semantically_equal
from .partitions import (ZERO, Partition, add_box_column, conjugate, enumerate_profiles,
                         format_partition, parse_partition, remove_box_column)
from .words import (D, Fingerprint, Kind, Letter, U, alpha, apply_word, apply_word_closed,
                    equivalent, fingerprint, format_word, parse_word, weight)

__version__ = "0.1.0"
