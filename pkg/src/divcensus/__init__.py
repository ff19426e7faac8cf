"""Exact censuses of divisor triples (a, b, r) with r | ab, ab <= N.

B(N) counts all such triples, A(N) the ones where r | a or r | b, C(N) the
ones where r divides both, S(N) = sum_{ab<=N} d(a).  A(N)/B(N) is the
empirical success rate of the (false in general) implication
"r | ab  =>  r | a or r | b".
"""

from .census import (
    CensusResult,
    Counterexample,
    brute_force_census,
    brute_force_census_range,
    count_all_triples,
    count_da_over_hyperbola,
    count_gcd_divisor_sum,
    count_good_triples,
    fast_census,
    list_counterexamples,
)
from .config import Config, ResourceLimitError
from .divisor_core import (
    DivisorTable,
    divisor_summatory,
    divisor_square_summatory,
    divisor_square_summatory_segmented,
    floor_quotient_blocks,
    sieve_divisor_counts,
)
from .asymptotics import (
    RatioPoint,
    a_asymptotic_check,
    lemma_bound_check,
    log_weighted_harmonic,
    ramanujan_check,
    ratio_point,
    ratio_table,
)
from .sampler import SampleEstimate, build_triple_space, divisor_list, sample_triples

__version__ = "0.1.0"
