"""Seeded uniform sampling from the triple census.

A triple is drawn uniformly from the B(N) triples (a, b, r) with r | ab and
ab <= N by a three-stage draw:

    1. product n in [1, N] with probability d(n)^2 / B(N)
       (cumulative weights + binary search),
    2. a uniform over the d(n) divisors of n, b = n/a,
    3. r uniform over the d(n) divisors of n.

Stage 1's weight is exactly the number of triples with ab = n, so every
triple has probability 1/B(N) and the success indicator "r | a or r | b"
has mean A(N)/B(N).

Reproducibility: the generator is numpy's PCG64.  Trials are processed in
fixed chunks of CHUNK_TRIALS; chunk i uses the stream seeded by
SeedSequence(entropy=seed, spawn_key=(i,)).  The chunk streams depend only
on (seed, i), so the merged estimate is a deterministic function of
(N, trials, seed) no matter how many workers execute the chunks.
"""

from dataclasses import dataclass
from math import isqrt, sqrt
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .config import ResourceLimitError
from .divisor_core import TABLE_LIMIT, DivisorTable, sieve_divisor_counts

# Chunk size is part of the reproducibility contract: changing it changes
# which stream serves which trial.
CHUNK_TRIALS = 1 << 18

# Above this N the flattened divisor lists (~ N ln N entries) get heavy.
SPACE_LIMIT = 2_000_000


@dataclass(frozen=True)
class SampleEstimate:
    """Monte Carlo estimate of P(r|a or r|b) under the uniform triple draw."""

    N: int
    trials: int
    successes: int
    p_hat: float
    std_err: float
    seed: int


def divisor_list(n: int) -> list[int]:
    """Ascending divisors of n by trial division up to sqrt(n)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    small = []
    large = []
    for k in range(1, isqrt(n) + 1):
        if n % k == 0:
            small.append(k)
            if k != n // k:
                large.append(n // k)
    return small + large[::-1]


@dataclass(frozen=True)
class TripleSpace:
    """Precomputed tables for drawing triples at one N.

    cum_weights[n] = sum_{m<=n} d(m)^2, so cum_weights[N] = B(N).
    flat_divisors holds every divisor list back to back, ascending within
    each n; starts[n] indexes the first divisor of n.
    """

    N: int
    table: DivisorTable
    cum_weights: np.ndarray
    starts: np.ndarray
    flat_divisors: np.ndarray

    @property
    def total_triples(self) -> int:
        return int(self.cum_weights[self.N])

    def draw(self, trials: int, seed: int, threads: int = 1):
        """(a, b, r) arrays for `trials` seeded draws."""
        chunks = _run_chunks(self, trials, seed, threads)
        a = np.concatenate([c[0] for c in chunks])
        b = np.concatenate([c[1] for c in chunks])
        r = np.concatenate([c[2] for c in chunks])
        return a, b, r


def build_triple_space(N: int, space_limit: int = SPACE_LIMIT) -> TripleSpace:
    """Sieve the weight and divisor tables for sampling at bound N."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if N > min(space_limit, TABLE_LIMIT):
        raise ResourceLimitError(
            f"sampling space refused at N={N} "
            f"(limit {min(space_limit, TABLE_LIMIT)}): divisor lists need "
            f"~N ln N entries in memory"
        )
    table = sieve_divisor_counts(N)
    d = table.counts[1 : N + 1].astype(np.int64)
    cum = np.zeros(N + 1, dtype=np.int64)
    np.cumsum(d * d, out=cum[1:])

    # Flatten all divisor lists, grouped by n.  Stable sort on the multiple
    # preserves ascending k within each group.
    ks = [np.arange(k, N + 1, k, dtype=np.int64) for k in range(1, N + 1)]
    multiples = np.concatenate(ks)
    divisors = np.concatenate(
        [np.full(len(m), k, dtype=np.int64) for k, m in enumerate(ks, start=1)]
    )
    order = np.argsort(multiples, kind="stable")
    flat = divisors[order]

    starts = np.zeros(N + 1, dtype=np.int64)
    if N > 1:
        np.cumsum(d[:-1], out=starts[2:])
    starts.setflags(write=False)
    cum.setflags(write=False)
    flat.setflags(write=False)
    return TripleSpace(N=N, table=table, cum_weights=cum, starts=starts, flat_divisors=flat)


def _chunk_sizes(trials: int) -> list[int]:
    full, rest = divmod(trials, CHUNK_TRIALS)
    return [CHUNK_TRIALS] * full + ([rest] if rest else [])


def _draw_chunk(space: TripleSpace, count: int, seed: int, index: int):
    rng = np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(index,)))
    v = rng.integers(0, space.total_triples, size=count, dtype=np.int64)
    n = np.searchsorted(space.cum_weights, v, side="right").astype(np.int64)
    d_n = space.table.counts[n].astype(np.int64)
    base = space.starts[n]
    a = space.flat_divisors[base + rng.integers(0, d_n)]
    r = space.flat_divisors[base + rng.integers(0, d_n)]
    b = n // a
    return a, b, r


def _run_chunks(space: TripleSpace, trials: int, seed: int, threads: int):
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if not 0 <= seed < 2**64:
        raise ValueError(f"seed must fit in 64 unsigned bits, got {seed}")
    sizes = _chunk_sizes(trials)
    if threads > 1 and len(sizes) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(
                pool.map(lambda ic: _draw_chunk(space, ic[1], seed, ic[0]), enumerate(sizes))
            )
    return [_draw_chunk(space, size, seed, i) for i, size in enumerate(sizes)]


def sample_triples(
    N: int,
    trials: int,
    seed: int,
    threads: int = 1,
    space: TripleSpace | None = None,
) -> SampleEstimate:
    """Estimate P(r|a or r|b) over `trials` uniform triple draws.

    Pass a prebuilt TripleSpace to amortize the sieve across many calls
    (it does not affect the result).
    """
    if space is None:
        space = build_triple_space(N)
    elif space.N != N:
        raise ValueError(f"space was built for N={space.N}, not N={N}")
    successes = 0
    for a, b, r in _run_chunks(space, trials, seed, threads):
        successes += int(np.count_nonzero((a % r == 0) | (b % r == 0)))
    p_hat = successes / trials
    std_err = sqrt(p_hat * (1.0 - p_hat) / trials)
    return SampleEstimate(
        N=N, trials=trials, successes=successes, p_hat=p_hat, std_err=std_err, seed=seed
    )
