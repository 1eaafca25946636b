"""Sharp recovery structures for linear codes over finite fields."""

from .code import LinearCode, min_distance_exhaustive, random_full_rank
from .codefile import format_code, parse_code
from .errors import *  # noqa: F401,F403
from .gf import BOTTOM, GF, FieldElement, field_of_order
from .oracle import CodeOracle, d_bound, is_i_minimal, is_minimal, loc_exact, recovery_set_equiv
from .order import compare, count_upto, enumerate_upto, precedes, sort_key
from .recovery import (
    RecoveryStructure,
    classify,
    locality_lower_bounds,
    recover,
    recover_multi,
    sharp_structure,
    singleton_bound_check,
)
from .testset import Syzygy, TestSet, compute_test_set, divides, is_member, reduce

__version__ = "0.1.0"
