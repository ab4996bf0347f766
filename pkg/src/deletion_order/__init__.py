"""The deletion order (basic wreath order) on words and on Coxeter groups."""

from .coxeter import CoxeterMatrix, CoxeterSystem, build_system, load_system, preset, reduced_words
from .errors import (DeletionOrderError, InfiniteGroupError, InputError, InvariantViolation,
                     ResourceCapExceeded)
from .normal_forms import compare_elements, coset_decompose, nf_delta_oracle, nf_rlex
from .words import Order, compare_deletion, format_word, parse_word

__version__ = "0.1.0"
