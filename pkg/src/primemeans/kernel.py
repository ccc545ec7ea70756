"""Streaming prime-mean state: exact integer sums plus compensated log sums.

PrimeState carries, after n primes: the count n, the last prime p, the
exact integer sum of the primes, and the running sum of their natural
logs held as an unevaluated double-double pair (hi, lo) with a tracked
error radius.

The log-sum error model: each term log(p) is evaluated by libm within a
documented per-term bound eps_term(p) = 4 ulp(log p) (we charge 2
spacings, measured libm error is below 1 ulp); the compensated Neumaier
accumulation contributes one spacing of the running compensation per
step; reading the pair as a float adds one spacing of the total.  All
three are accumulated into the radius, so theta.error <= n * eps_term
holds with a wide margin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .quantity import Quantity
from .sieve import SieveConfig, prime_blocks

__all__ = ["PrimeState", "DerivedQuantities", "CorruptStateError", "advance", "quantities", "stream_states"]

LOG2 = Quantity(math.log(2.0), math.ulp(math.log(2.0)))


class CorruptStateError(ArithmeticError):
    """An identity that holds for every valid state failed; the accumulator is corrupt."""


@dataclass(frozen=True)
class PrimeState:
    """Immutable snapshot after consuming the first n primes."""

    n: int
    p: int                 # p_n; 0 for the empty state
    sum_primes: int        # exact, unbounded
    theta_hi: float        # double-double sum of log p_k
    theta_lo: float
    theta_err: float       # guaranteed radius of theta_hi + theta_lo

    @classmethod
    def initial(cls) -> "PrimeState":
        return cls(0, 0, 0, 0.0, 0.0, 0.0)

    @property
    def theta(self) -> Quantity:
        v = self.theta_hi + self.theta_lo
        return Quantity(v, self.theta_err + math.ulp(abs(v)))


def advance(state: PrimeState, p: int) -> PrimeState:
    """Consume the next prime p (must exceed state.p); returns a new state."""
    assert p > state.p and (p == 2 or p % 2 == 1), "advance requires the next prime"
    term = math.log(p)
    hi, lo = state.theta_hi, state.theta_lo
    t = hi + term
    if abs(hi) >= abs(term):
        resid = (hi - t) + term
    else:
        resid = (term - t) + hi
    lo_new = lo + resid
    err = state.theta_err + 2.0 * math.ulp(term) + math.ulp(abs(lo_new) + 5e-324)
    return PrimeState(state.n + 1, p, state.sum_primes + p, t, lo_new, err)


@dataclass(frozen=True)
class DerivedQuantities:
    """Per-n quantities with tracked radii; integers stay exact in the state."""

    n: int
    p: int
    theta: Quantity
    D: Quantity                    # log p_n - theta/n
    A: Quantity                    # mean of the primes (exact rational, rounded once)
    logG: Quantity                 # theta/n
    G: Quantity
    R: Quantity                    # A - p/2 (exact rational, rounded once)
    ratio: Quantity                # A/G
    log_ratio: Quantity            # log A - log G
    log_ratio_via_identity: Quantity  # D + log(1 + 2R/p) - log 2


def quantities(state: PrimeState) -> DerivedQuantities:
    """Derived quantities at state.n >= 1.

    The identity route uses 1 + 2R/p = 2*sum/(n*p), formed as an exact
    rational so its only radius is one float rounding.
    """
    if state.n < 1:
        raise ValueError("quantities requires n >= 1")
    n, p, s = state.n, state.p, state.sum_primes
    theta = state.theta
    n_q = Quantity.exact(n)
    logp = Quantity.exact(p).log()
    logG = theta / n_q
    D = logp - logG
    A = Quantity.from_fraction(Fraction(s, n))
    G = logG.exp()
    R = Quantity.from_fraction(Fraction(s, n) - Fraction(p, 2))
    ratio = A / G
    log_ratio = A.log() - logG
    u = Quantity.from_fraction(Fraction(2 * s, n * p))  # = 1 + 2R/p
    if not float(u.lo) > 0.0:
        raise CorruptStateError("1 + 2R/p is not positive within bounds")
    log_ratio_via_identity = D + u.log() - LOG2
    return DerivedQuantities(
        n=n, p=p, theta=theta, D=D, A=A, logG=logG, G=G, R=R,
        ratio=ratio, log_ratio=log_ratio,
        log_ratio_via_identity=log_ratio_via_identity,
    )


def stream_states(count: int, config: Optional[SieveConfig] = None) -> Iterator[PrimeState]:
    """Yield PrimeState after each of the first `count` primes."""
    cfg = config or SieveConfig()
    state = PrimeState.initial()
    for _, block in prime_blocks(count, cfg.segment_odds, config=cfg):
        for p in block.tolist():
            state = advance(state, p)
            yield state
