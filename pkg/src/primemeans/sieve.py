"""Segmented sieve of Eratosthenes over odd-only numpy bitmasks.

Segments live on a fixed absolute grid (segment s covers the odd
integers in [3 + 2*s*segment_odds, 3 + 2*(s+1)*segment_odds), with the
prime 2 prepended to segment 0).  The grid is what makes interrupted
and uninterrupted verification runs produce bit-identical numerics: a
resumed run re-enters the same block structure it would have reached
anyway.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Tuple

import numpy as np

__all__ = ["SieveConfig", "SieveError", "sieve_segment", "prime_blocks", "primes_first", "nth_prime_upper"]

DEFAULT_SEGMENT_ODDS = 1 << 20  # odd slots per segment; spans 2**21 integers


class SieveError(ValueError):
    pass


@dataclass(frozen=True)
class SieveConfig:
    segment_odds: int = DEFAULT_SEGMENT_ODDS
    max_span: int = 1 << 26  # widest [lo, hi) sieve_segment will accept

    def __post_init__(self):
        if self.segment_odds < 1 << 10 or 2 * self.segment_odds > self.max_span:
            raise SieveError("segment_odds outside supported range")


_DEFAULT_CONFIG = SieveConfig()

# Grow-only cache of small primes used to strike composites.
_base_primes = np.array([2, 3, 5, 7], dtype=np.int64)
_base_limit = 7


def _simple_sieve(bound: int) -> np.ndarray:
    mask = np.ones(bound + 1, dtype=bool)
    mask[:2] = False
    for i in range(2, math.isqrt(bound) + 1):
        if mask[i]:
            mask[i * i :: i] = False
    return np.flatnonzero(mask).astype(np.int64)


def base_primes(limit: int) -> np.ndarray:
    """All primes <= limit, cached and grown monotonically."""
    global _base_primes, _base_limit
    if limit > _base_limit:
        grown = max(limit, 2 * _base_limit)
        _base_primes = _simple_sieve(grown)
        _base_limit = grown
    return _base_primes[: int(np.searchsorted(_base_primes, limit, "right"))]


def sieve_segment(lo: int, hi: int, config: SieveConfig = _DEFAULT_CONFIG) -> np.ndarray:
    """Primes in [lo, hi) as an ordered int64 array.

    Requires 2 <= lo < hi and hi - lo within the configured span budget;
    raises SieveError otherwise.  Composites are struck with the cached
    base primes up to sqrt(hi-1) using strided clears on an odd-only
    mask, so memory is (hi-lo)/2 bits of bools per call.
    """
    if lo < 2 or hi <= lo:
        raise SieveError(f"invalid segment [{lo}, {hi})")
    if hi - lo > config.max_span:
        raise SieveError(f"segment span {hi - lo} exceeds budget {config.max_span}")

    bases = base_primes(math.isqrt(hi - 1))

    start = max(lo, 3)
    start |= 1  # first odd candidate
    out_two = lo <= 2 < hi

    if start >= hi:
        return np.array([2], dtype=np.int64) if out_two else np.empty(0, dtype=np.int64)

    m = (hi - start + 1) // 2
    mask = np.ones(m, dtype=bool)
    for p in bases[1:]:  # odd base primes only
        p = int(p)
        if p * p >= hi:
            break
        q = max(p * p, ((start + p - 1) // p) * p)
        if q % 2 == 0:
            q += p
        if q < hi:
            mask[(q - start) // 2 :: p] = False
    # 1 is not prime; it can only appear when lo <= 1, excluded by lo >= 2.
    odds = start + 2 * np.flatnonzero(mask).astype(np.int64)
    if out_two:
        return np.concatenate(([np.int64(2)], odds))
    return odds


def segment_bounds(s: int, segment_odds: int) -> Tuple[int, int]:
    lo = 3 + 2 * s * segment_odds
    return lo, lo + 2 * segment_odds


def prime_blocks(
    count_limit: int,
    segment_odds: int = DEFAULT_SEGMENT_ODDS,
    start_segment: int = 0,
    already: int = 0,
    config: SieveConfig = _DEFAULT_CONFIG,
) -> Iterator[Tuple[int, np.ndarray]]:
    """Yield (segment_index, primes) on the absolute grid until count_limit primes.

    `already` is the count of primes produced by earlier segments (used on
    resume); the final block is trimmed so the cumulative count is exactly
    count_limit.
    """
    if count_limit < 0 or already < 0 or start_segment < 0:
        raise SieveError("counts and segment indices must be non-negative")
    if count_limit <= already:
        return
    produced = already
    s = start_segment
    while produced < count_limit:
        lo, hi = segment_bounds(s, segment_odds)
        if s == 0:
            lo = 2
        block = sieve_segment(lo, hi, config)
        if produced + len(block) > count_limit:
            block = block[: count_limit - produced]
        if len(block):
            produced += len(block)
            yield s, block
        s += 1


def nth_prime_upper(n: int) -> int:
    """A safe upper bound for the n-th prime (used only for sizing)."""
    if n < 6:
        return 13
    x = float(n)
    return int(x * (math.log(x) + math.log(math.log(x)))) + 10


def primes_first(k: int, config: SieveConfig = _DEFAULT_CONFIG) -> np.ndarray:
    """The first k primes as one int64 array (convenience for small k)."""
    parts = [b for _, b in prime_blocks(k, config.segment_odds, config=config)]
    return np.concatenate(parts) if parts else np.empty(0, dtype=np.int64)
