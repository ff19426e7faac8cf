"""Exact triple censuses.

For a bound N, over ordered pairs (a, b) with ab <= N and divisors r of ab:

    B(N) = #{(a, b, r) : r | ab}                  = sum_{n<=N} d(n)^2
    A(N) = #{(a, b, r) : r | ab, r|a or r|b}      = 2*S(N) - C(N)
    C(N) = #{(a, b, r) : r | a and r | b}         = sum_{ab<=N} d(gcd(a, b))
    S(N) = sum_{ab<=N} d(a)                       = sum_{b<=N} D(floor(N/b))

The B identity collapses the inner sum over ordered factorizations of n
(there are d(n) of them, each contributing d(n) choices of r).  The A
identity is inclusion-exclusion on "r | a or r | b" plus the a <-> b
symmetry.  The C identity comes from writing a = r*c, b = r*e: the triples
with r dividing both coordinates biject with (r, c, e) such that
r^2 * c * e <= N, so

    C(N) = sum_{r<=sqrt(N)} D(floor(N / r^2)).

Every count is also computable by definitional enumeration
(brute_force_census), which is the oracle the fast identities are verified
against; the two routes share no code.
"""

from dataclasses import dataclass
from math import isqrt
from typing import Iterator, Optional

from .config import DEFAULT_ORACLE_CEILING, DEFAULT_SEGMENT_SIZE, ResourceLimitError
from .divisor_core import (
    DivisorTable,
    divisor_square_summatory,
    divisor_square_summatory_segmented,
    divisor_summatory,
    floor_quotient_blocks,
)


@dataclass(frozen=True)
class CensusResult:
    """All four counts for one N, tagged with how they were computed."""

    N: int
    b_count: int
    a_count: int
    c_count: int
    s_count: int
    method: str  # "brute" or "fast"


@dataclass(frozen=True)
class Counterexample:
    """A triple with r | ab but r dividing neither a nor b."""

    a: int
    b: int
    r: int


def _check_n(N: int) -> None:
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")


def count_all_triples(
    N: int,
    table: Optional[DivisorTable] = None,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
    threads: int = 1,
) -> int:
    """B(N) = sum_{n<=N} d(n)^2, from a table if one covers N, else segmented."""
    _check_n(N)
    if table is not None and table.n_max >= N:
        return divisor_square_summatory(N, table)
    return divisor_square_summatory_segmented(N, segment_size=segment_size, threads=threads)


def count_gcd_divisor_sum(N: int) -> int:
    """C(N) = sum_{ab<=N} d(gcd(a,b)) via C(N) = sum_{r<=sqrt(N)} D(floor(N/r^2))."""
    _check_n(N)
    return sum(divisor_summatory(N // (r * r)) for r in range(1, isqrt(N) + 1))


def count_da_over_hyperbola(N: int) -> int:
    """S(N) = sum_{ab<=N} d(a) = sum_{b<=N} D(floor(N/b)).

    Grouping b by constant quotient leaves only O(sqrt(N)) distinct D
    evaluations, each O(sqrt) itself.
    """
    _check_n(N)
    total = 0
    for q, b_lo, b_hi in floor_quotient_blocks(N):
        total += (b_hi - b_lo + 1) * divisor_summatory(q)
    return total


def count_good_triples(N: int) -> int:
    """A(N) = 2*S(N) - C(N), exactly."""
    _check_n(N)
    return 2 * count_da_over_hyperbola(N) - count_gcd_divisor_sum(N)


def fast_census(
    N: int,
    table: Optional[DivisorTable] = None,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
    threads: int = 1,
) -> CensusResult:
    """All four counts by the identity-based routes."""
    _check_n(N)
    s = count_da_over_hyperbola(N)
    c = count_gcd_divisor_sum(N)
    b = count_all_triples(N, table=table, segment_size=segment_size, threads=threads)
    return CensusResult(N=N, b_count=b, a_count=2 * s - c, c_count=c, s_count=s, method="fast")


# ---------------------------------------------------------------------------
# Definitional oracle
# ---------------------------------------------------------------------------

def _divisor_lists(n_max: int) -> list[list[int]]:
    """divisor list (ascending) for every n <= n_max, by marking multiples."""
    lists: list[list[int]] = [[] for _ in range(n_max + 1)]
    for k in range(1, n_max + 1):
        for m in range(k, n_max + 1, k):
            lists[m].append(k)
    return lists


def brute_force_census_range(
    max_n: int,
    oracle_ceiling: int = DEFAULT_ORACLE_CEILING,
) -> Iterator[CensusResult]:
    """Yield the definitional CensusResult for every N in 1..max_n.

    Counts are accumulated pair by pair: raising N by one admits exactly the
    ordered pairs with a*b = N, so each product n is enumerated once.  Every
    divisibility condition is tested literally with remainders; no census
    identity is consulted anywhere.
    """
    _check_n(max_n)
    if max_n > oracle_ceiling:
        raise ResourceLimitError(
            f"brute-force census refused at N={max_n} (ceiling {oracle_ceiling}); "
            f"use the fast path or raise DIVCENSUS_ORACLE_CEILING"
        )
    lists = _divisor_lists(max_n)
    a_total = b_total = c_total = s_total = 0
    for n in range(1, max_n + 1):
        divs = lists[n]
        for a in divs:
            b = n // a
            s_total += len(lists[a])
            for r in divs:
                b_total += 1
                in_a = a % r == 0
                in_b = b % r == 0
                if in_a or in_b:
                    a_total += 1
                if in_a and in_b:
                    c_total += 1
        yield CensusResult(
            N=n,
            b_count=b_total,
            a_count=a_total,
            c_count=c_total,
            s_count=s_total,
            method="brute",
        )


def brute_force_census(N: int, oracle_ceiling: int = DEFAULT_ORACLE_CEILING) -> CensusResult:
    """Definitional enumeration of all triples for a single N."""
    result = None
    for result in brute_force_census_range(N, oracle_ceiling=oracle_ceiling):
        pass
    return result


# ---------------------------------------------------------------------------
# Counterexamples
# ---------------------------------------------------------------------------

def _divisors(n: int) -> list[int]:
    """Ascending divisors by trial division up to sqrt(n)."""
    small = []
    large = []
    for k in range(1, isqrt(n) + 1):
        if n % k == 0:
            small.append(k)
            if k != n // k:
                large.append(n // k)
    return small + large[::-1]


def iter_counterexamples(N: int) -> Iterator[Counterexample]:
    """All triples with r | ab, ab <= N, r dividing neither a nor b.

    Emitted in lexicographic (a*b, a, r) order, which the product-first
    enumeration produces for free.
    """
    _check_n(N)
    for n in range(1, N + 1):
        divs = _divisors(n)
        for a in divs:
            b = n // a
            for r in divs:
                if a % r != 0 and b % r != 0:
                    yield Counterexample(a=a, b=b, r=r)


def list_counterexamples(N: int, limit: Optional[int] = None) -> list[Counterexample]:
    """The first `limit` counterexamples (all of them when limit is None)."""
    if limit is not None and limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    out = []
    for cx in iter_counterexamples(N):
        out.append(cx)
        if limit is not None and len(out) >= limit:
            break
    return out
