"""Exact truncated power series in b = 1/log p_n, with Fraction coefficients.

Everything here is exact rational arithmetic (stdlib fractions); floats
only appear when a finished series is evaluated at a Quantity point.
Truncation order is capped at MAX_ORDER because the coefficients grow
factorially.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

import numpy as np

from .quantity import DomainError, Quantity

__all__ = [
    "Rational", "SeriesPoly", "IntPoly", "SeriesError", "UntabulatedError",
    "k_sequence", "r_sequence", "cipolla", "series_mul", "series_exp",
    "ratio_expansion", "d_expansion", "d_expansion_in_n", "DExpansionN",
    "eval_series", "render_e_scaled",
]

Rational = Fraction  # exact unbounded reduced rationals; stdlib does this well

MAX_ORDER = 64


class SeriesError(ValueError):
    pass


class UntabulatedError(SeriesError):
    """Requested a polynomial family member beyond the tabulated range."""


def _as_rational(x: Union[int, Fraction]) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise SeriesError(f"exact coefficient required, got {type(x).__name__}")


@dataclass(frozen=True)
class SeriesPoly:
    """Power series in b truncated at `order`; coeffs[j] multiplies b**j."""

    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise SeriesError("series needs at least the constant term")
        if len(self.coeffs) - 1 > MAX_ORDER:
            raise SeriesError(f"truncation order above cap {MAX_ORDER}")
        object.__setattr__(self, "coeffs", tuple(_as_rational(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> "SeriesPoly":
        return cls(tuple([Fraction(0)] * (order + 1)))

    @classmethod
    def one(cls, order: int) -> "SeriesPoly":
        return cls(tuple([Fraction(1)] + [Fraction(0)] * order))

    def _check_order(self, other: "SeriesPoly"):
        if self.order != other.order:
            raise SeriesError("truncation orders must match")

    def __add__(self, other: "SeriesPoly") -> "SeriesPoly":
        self._check_order(other)
        return SeriesPoly(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "SeriesPoly") -> "SeriesPoly":
        self._check_order(other)
        return SeriesPoly(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "SeriesPoly") -> "SeriesPoly":
        """Truncated Cauchy product; degrees above the order are discarded."""
        self._check_order(other)
        m = self.order
        out = [Fraction(0)] * (m + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(0, m + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return SeriesPoly(tuple(out))

    def scale(self, c: Union[int, Fraction]) -> "SeriesPoly":
        c = _as_rational(c)
        return SeriesPoly(tuple(c * a for a in self.coeffs))

    def exp(self) -> "SeriesPoly":
        """exp of a series with zero constant term, truncated at the same order."""
        if self.coeffs[0] != 0:
            raise SeriesError("series exp requires a zero constant term")
        m = self.order
        out = SeriesPoly.one(m)
        power = SeriesPoly.one(m)
        for t in range(1, m + 1):
            power = power * self
            out = out + power.scale(Fraction(1, math.factorial(t)))
        return out

    def eval_exact(self, b: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * b + c
        return acc


def series_mul(a: SeriesPoly, b: SeriesPoly) -> SeriesPoly:
    return a * b


def series_exp(a: SeriesPoly) -> SeriesPoly:
    return a.exp()


@dataclass(frozen=True)
class IntPoly:
    """Integer-coefficient polynomial in one unknown, ascending coefficients."""

    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs or not all(isinstance(c, int) for c in self.coeffs):
            raise SeriesError("IntPoly needs integer coefficients")

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        out = [x - y for x, y in zip(a, b)]
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return IntPoly(tuple(out))

    def eval(self, x: Quantity) -> Quantity:
        acc = Quantity.exact(self.coeffs[-1])
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + Quantity.exact(c)
        return acc

    def eval_exact(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def render(self, var: str = "x") -> str:
        """Descending-power ASCII form, e.g. ``6x^2 - 42x + 84``."""
        parts = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if c == 0 and len(self.coeffs) > 1:
                continue
            mag = abs(c)
            if power == 0:
                term = str(mag)
            else:
                head = "" if mag == 1 else str(mag)
                term = f"{head}{var}" if power == 1 else f"{head}{var}^{power}"
            if not parts:
                parts.append(term if c >= 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c >= 0 else f"- {term}")
        return " ".join(parts) if parts else "0"


def k_sequence(m: int) -> Tuple[int, ...]:
    """k_1..k_m from the recurrence k_m + sum_{j<m} j! k_{m-j} = m * m!."""
    if m < 0 or m > MAX_ORDER:
        raise SeriesError("k_sequence order out of range")
    ks: list[int] = []
    for s in range(1, m + 1):
        ks.append(s * math.factorial(s) - sum(math.factorial(j) * ks[s - j - 1] for j in range(1, s)))
    return tuple(ks)


def r_sequence(m: int) -> Tuple[Fraction, ...]:
    """r_t = (t-1)! (1 - 2**-t) for t = 1..m."""
    if m < 0 or m > MAX_ORDER + 1:
        raise SeriesError("r_sequence order out of range")
    return tuple(Fraction(math.factorial(t - 1)) * (1 - Fraction(1, 2**t)) for t in range(1, m + 1))


# Tabulated polynomial families (in x = log log n); only k <= 3 exist here.
_CIPOLLA_Q = {
    1: IntPoly((-2, 1)),
    2: IntPoly((11, -6, 1)),
    3: IntPoly((-131, 84, -21, 2)),
}
_CIPOLLA_R = {
    1: IntPoly((-1, 1)),
    2: IntPoly((5, -4, 1)),
    3: IntPoly((-47, 42, -15, 2)),
}


def cipolla(kind: str, k: int) -> IntPoly:
    """Tabulated Q_k / R_k polynomials and their difference T_k = R_k - Q_k.

    Only k = 1..3 are tabulated; asking beyond raises UntabulatedError
    rather than guessing.
    """
    if k not in (1, 2, 3):
        raise UntabulatedError(f"polynomials are tabulated for k <= 3 only, got {k}")
    if kind == "Q":
        return _CIPOLLA_Q[k]
    if kind == "R":
        return _CIPOLLA_R[k]
    if kind == "T":
        return _CIPOLLA_R[k] - _CIPOLLA_Q[k]
    raise SeriesError(f"unknown polynomial family {kind!r}")


def d_expansion(m: int) -> SeriesPoly:
    """Expansion of D(n) in b = 1/log p_n: the series 1 + sum_{i<=m} k_i b**i."""
    if m < 0:
        raise SeriesError("d_expansion order must be >= 0")
    ks = k_sequence(m)
    return SeriesPoly(tuple([Fraction(1)] + [Fraction(k) for k in ks]))


def ratio_expansion(m: int) -> SeriesPoly:
    """Coefficients gamma_0..gamma_m of the ratio expansion (e-scaling NOT applied).

    Built as S1 * S2 truncated at order m, where
      S1 = 1/2 + sum_i b**i (-r_{i+1} + r_i + sum_{1<=s<i} r_s k_{i-s})
      S2 = exp(sum_j k_j b**j) truncated.
    The true asymptotic series for A_n/G_n is e * (this series).
    """
    if m < 0:
        raise SeriesError("ratio_expansion order must be >= 0")
    rs = r_sequence(m + 1)          # rs[t-1] = r_t
    ks = k_sequence(m)              # ks[j-1] = k_j

    def r(t: int) -> Fraction:
        return rs[t - 1]

    def k(j: int) -> int:
        return ks[j - 1]

    s1 = [Fraction(1, 2)]
    for i in range(1, m + 1):
        c = -r(i + 1) + r(i) + sum(r(s) * k(i - s) for s in range(1, i))
        s1.append(c)
    S1 = SeriesPoly(tuple(s1))
    S2 = SeriesPoly(tuple([Fraction(0)] + [Fraction(k(j)) for j in range(1, m + 1)])).exp()
    return S1 * S2


@dataclass(frozen=True)
class DExpansionN:
    """Truncated expansion of D(n) in the n-basis: 1 + sum (-1)^{k+1} T_k(lam)/(k! ell^k)."""

    terms: Tuple[Tuple[int, IntPoly], ...]

    @property
    def order(self) -> int:
        return len(self.terms)

    def eval(self, ell: Quantity, lam: Quantity) -> Quantity:
        out = Quantity.exact(1)
        for k, poly in self.terms:
            contrib = poly.eval(lam) / (Quantity.exact(math.factorial(k)) * ell.power(k))
            out = (out + contrib) if k % 2 == 1 else (out - contrib)
        return out

    def eval_exact(self, ell: Fraction, lam: Fraction) -> Fraction:
        out = Fraction(1)
        for k, poly in self.terms:
            sign = 1 if k % 2 == 1 else -1
            out += sign * poly.eval_exact(lam) / (math.factorial(k) * ell**k)
        return out


def d_expansion_in_n(r: int) -> DExpansionN:
    """n-basis expansion of D(n) through the T_k/(k! log^k n) term, r <= 3."""
    if r < 1:
        raise SeriesError("d_expansion_in_n order must be >= 1")
    if r > 3:
        raise UntabulatedError("n-basis expansion is tabulated through order 3 only")
    return DExpansionN(tuple((k, cipolla("T", k)) for k in range(1, r + 1)))


def eval_series(s: SeriesPoly, logp: Quantity) -> Quantity:
    """Evaluate s at b = 1/logp with full radius tracking.

    Each rational coefficient is rounded once (radius grows by the exact
    conversion error); Horner evaluation then propagates interval radii.
    Rejects a logp interval that reaches zero.
    """
    if not float(np.min(logp.lo)) > 0.0:
        raise DomainError("eval_series requires logp bounded away from zero")
    b = Quantity.exact(1) / logp
    acc = Quantity.from_fraction(s.coeffs[-1])
    for c in reversed(s.coeffs[:-1]):
        acc = acc * b + Quantity.from_fraction(c)
    return acc


def render_e_scaled(s: SeriesPoly) -> str:
    """Human rendering of e * series(b), b = 1/L: 'e/2 + e/(4L) + e/L^2 + ...'."""
    parts = []
    for j, c in enumerate(s.coeffs):
        if c == 0:
            continue
        a, b = abs(c.numerator), c.denominator
        num = "e" if a == 1 else f"{a}e"
        if j == 0:
            body = num if b == 1 else f"{num}/{b}"
        else:
            lpow = "L" if j == 1 else f"L^{j}"
            body = f"{num}/{lpow}" if b == 1 else f"{num}/({b}{lpow})"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
