"""Divisor-count primitives: d(n) tables, D(x) = sum_{n<=x} d(n), sum d(n)^2.

Everything here is exact integer arithmetic; floats never enter.

Sieve
-----
d(n) is recovered from its divisor pairs: every divisor k <= sqrt(n) pairs
with n/k >= sqrt(n), so

    d(n) = 2 * #{k : k | n, k^2 <= n}  -  [n is a perfect square].

Looping k up to sqrt(n_max) and adding 2 at k^2, k^2+k, k^2+2k, ... (with a
-1 correction at k^2 itself) fills a whole table in O(n_max log n_max)
element increments but only O(sqrt(n_max)) vectorized passes, which is what
makes 10^7-scale tables cheap in Python.  The same pass works on a block
[lo, hi] in isolation, giving the segmented mode used for sums far beyond
the in-memory table limit.

Summatory function
------------------
D(x) counts lattice points under the hyperbola ab <= x.  Splitting at
sqrt(x) and using the a <-> b symmetry:

    D(x) = sum_{n<=x} d(n) = 2 * sum_{k<=sqrt(x)} floor(x/k) - floor(sqrt(x))^2

which is O(sqrt(x)) and needs no table, so it stays usable for arguments
as large as the census bound N itself.
"""

from dataclasses import dataclass
from math import isqrt
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .config import DEFAULT_SEGMENT_SIZE, ResourceLimitError

# In-memory d(n) tables are refused above this (int32 table ~ 4 bytes/entry,
# so the ceiling is ~0.5 GB).  Segmented iteration has no such bound.
TABLE_LIMIT = 1 << 27

# Pure-python loops beat numpy below this many terms (allocation overhead).
_VECTOR_CUTOFF = 1024


@dataclass(frozen=True)
class DivisorTable:
    """Sieved divisor counts: counts[n] = d(n) for 1 <= n <= n_max.

    counts[0] is a padding zero.  The array is marked read-only, so a table
    can be shared freely across threads.
    """

    n_max: int
    counts: np.ndarray


def sieve_divisor_counts(n_max: int, table_limit: int = TABLE_LIMIT) -> DivisorTable:
    """Sieve d(1..n_max) via the paired-divisor pass described above."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if n_max > table_limit:
        raise ResourceLimitError(
            f"in-memory divisor table refused at n_max={n_max} "
            f"(limit {table_limit}); use the segmented operations instead"
        )
    counts = np.zeros(n_max + 1, dtype=np.int32)
    for k in range(1, isqrt(n_max) + 1):
        sq = k * k
        counts[sq::k] += 2
        counts[sq] -= 1
    counts.setflags(write=False)
    return DivisorTable(n_max=n_max, counts=counts)


def divisor_summatory(x: int) -> int:
    """D(x) = sum_{n<=x} d(n), exactly, in O(sqrt(x)) via the hyperbola split."""
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    r = isqrt(x)
    # Vectorized branch: sum_{k<=r} x//k < x*(ln(r)+1) stays below 2^63 for
    # x <= 2^52, so the int64 reduction cannot overflow there.
    if r >= _VECTOR_CUTOFF and x <= (1 << 52):
        ks = np.arange(1, r + 1, dtype=np.int64)
        s = int(np.sum(x // ks))
    else:
        s = 0
        for k in range(1, r + 1):
            s += x // k
    return 2 * s - r * r


def divisor_square_summatory(x: int, table: DivisorTable) -> int:
    """sum_{n<=x} d(n)^2 from an in-memory table."""
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    if x > table.n_max:
        raise ValueError(f"x={x} exceeds table.n_max={table.n_max}")
    c = table.counts[1 : x + 1].astype(np.int64)
    return int(np.dot(c, c))


def _check_segment_size(segment_size: int) -> None:
    # The upper cap keeps per-segment int64 partial sums provably below 2^63
    # (and a segment that size would be 8 GB of RAM regardless).
    if not 1 <= segment_size <= (1 << 30):
        raise ValueError(f"segment_size must be in [1, 2^30], got {segment_size}")


def _segment_counts(lo: int, hi: int) -> np.ndarray:
    """d(n) for n in [lo, hi] without sieving anything below lo."""
    block = np.zeros(hi - lo + 1, dtype=np.int32)
    for k in range(1, isqrt(hi) + 1):
        sq = k * k
        first = max(sq, ((lo + k - 1) // k) * k)
        if first <= hi:
            block[first - lo :: k] += 2
        if lo <= sq <= hi:
            block[sq - lo] -= 1
    return block


def iter_divisor_segments(n_max: int, segment_size: int = DEFAULT_SEGMENT_SIZE):
    """Yield (lo, counts) blocks covering 1..n_max, each of <= segment_size values.

    counts[i] = d(lo + i).  Memory use is bounded by the segment size alone,
    so n_max may exceed TABLE_LIMIT by orders of magnitude.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    _check_segment_size(segment_size)
    lo = 1
    while lo <= n_max:
        hi = min(lo + segment_size - 1, n_max)
        yield lo, _segment_counts(lo, hi)
        lo = hi + 1


def _segment_square_sum(lo: int, hi: int) -> int:
    d = _segment_counts(lo, hi).astype(np.int64)
    # Partial sums stay far below 2^63: a segment of length L contributes at
    # most L * max(d)^2, and d(n) < 2 * sqrt(n) keeps that bound tiny even
    # for billion-scale hi.  The final accumulation is a Python int anyway.
    return int(np.dot(d, d))


def divisor_square_summatory_segmented(
    n_max: int,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
    threads: int = 1,
) -> int:
    """sum_{n<=n_max} d(n)^2 streamed over segments; exact for any n_max.

    With threads > 1 the disjoint segments are reduced in parallel; exact
    integer addition is associative, so the result is identical to the
    sequential one for every thread count.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    _check_segment_size(segment_size)
    ranges = []
    lo = 1
    while lo <= n_max:
        hi = min(lo + segment_size - 1, n_max)
        ranges.append((lo, hi))
        lo = hi + 1
    if threads > 1 and len(ranges) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            partials = pool.map(lambda r: _segment_square_sum(*r), ranges)
            return sum(partials)
    return sum(_segment_square_sum(lo, hi) for lo, hi in ranges)


def floor_quotient_blocks(n: int) -> list[tuple[int, int, int]]:
    """Decompose [1, n] into maximal runs of constant q = floor(n/b).

    Returns (q, b_lo, b_hi) triples in increasing b order.  There are at
    most 2*sqrt(n) + 1 of them, which is what caps the cost of sums like
    sum_b D(floor(n/b)) at O(sqrt(n)) distinct D evaluations.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    blocks = []
    b = 1
    while b <= n:
        q = n // b
        b_hi = n // q
        blocks.append((q, b, b_hi))
        b = b_hi + 1
    return blocks
