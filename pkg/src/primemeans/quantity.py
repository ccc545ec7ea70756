"""Value-with-error arithmetic used by every numeric path in this package.

A Quantity is a float64 value paired with a guaranteed absolute error
radius: the true real number it stands for lies in [value - error,
value + error].  Radii only ever grow.  Every operation adds

  * the propagated input radii (first-order interval bound, widened by
    the exact cross terms where they matter), and
  * a rounding allowance of one spacing (>= 1/2 ulp) per floating-point
    rounding, with 2 spacings for libm log/exp whose worst-case error
    is above half an ulp,

then inflates the result radius by GUARD to absorb the rounding of the
radius arithmetic itself.  The model is deliberately conservative; the
verification margins this package cares about are orders of magnitude
above the radii it produces.

Values may be scalars or numpy arrays; the propagation rules are
identical (the vectorized verifier and the scalar streaming state share
this code).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

import numpy as np

__all__ = ["Quantity", "DomainError"]

# Relative inflation absorbing round-off in the radius computations themselves.
_GUARD = 1.0 + 2.0**-30

# libm log/exp are not correctly rounded; 2 spacings (>= 1 ulp) covers the
# sub-ulp worst cases of the platform libm with room to spare.
_LIBM_SPACINGS = 2.0

_EXACT_INT_LIMIT = 2**53

ScalarLike = Union[int, float, Fraction]


class DomainError(ValueError):
    """An operation left its mathematical domain within the error bounds."""


def _sp(x):
    """Spacing of |x|: an upper bound for one rounding step at x."""
    return np.spacing(np.abs(x))


def _as_value(x):
    a = np.asarray(x, dtype=np.float64)
    return a if a.ndim else np.float64(a)


class Quantity:
    """A float64 value with a guaranteed absolute error radius."""

    __slots__ = ("value", "error")

    def __init__(self, value, error=0.0):
        v = _as_value(value)
        e = _as_value(error)
        if not np.all(np.isfinite(v)):
            raise ValueError("Quantity value must be finite")
        if not (np.all(np.isfinite(e)) and np.all(e >= 0.0)):
            raise ValueError("Quantity error must be finite and nonnegative")
        object.__setattr__(self, "value", v)
        object.__setattr__(self, "error", e + np.zeros_like(v))

    def __setattr__(self, name, value):  # pragma: no cover - guard rail
        raise AttributeError("Quantity is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def exact(cls, x: ScalarLike) -> "Quantity":
        """A Quantity with zero radius; x must be exactly representable."""
        if isinstance(x, Fraction):
            return cls.from_fraction(x)
        if isinstance(x, int) and abs(x) >= _EXACT_INT_LIMIT:
            return cls.from_fraction(Fraction(x))
        return cls(float(x), 0.0)

    @classmethod
    def from_fraction(cls, fr: Fraction) -> "Quantity":
        """Round an exact rational to float64, carrying the exact conversion error."""
        v = float(fr)
        if not np.isfinite(v):
            raise ValueError("fraction overflows float64")
        err = abs(fr - Fraction(v))
        e = float(err)
        if Fraction(e) < err:  # round the radius up, never down
            e = np.nextafter(e, np.inf)
        return cls(v, e)

    @classmethod
    def from_int_array(cls, arr: np.ndarray) -> "Quantity":
        """Lift an integer array; exact below 2**53, else one conversion spacing."""
        v = arr.astype(np.float64)
        e = np.where(np.abs(arr) < _EXACT_INT_LIMIT, 0.0, _sp(v))
        return cls(v, e)

    # -- interval views ----------------------------------------------------

    @property
    def lo(self):
        return self.value - self.error

    @property
    def hi(self):
        return self.value + self.error

    def contains(self, x) -> bool:
        return bool(np.all((self.lo <= x) & (x <= self.hi)))

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _lift(x) -> "Quantity":
        if isinstance(x, Quantity):
            return x
        if isinstance(x, (int, float, Fraction)):
            return Quantity.exact(x)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        v = self.value + o.value
        return Quantity(v, (self.error + o.error + _sp(v)) * _GUARD)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        v = self.value - o.value
        return Quantity(v, (self.error + o.error + _sp(v)) * _GUARD)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o.__sub__(self)

    def __neg__(self):
        return Quantity(-self.value, self.error)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        v = self.value * o.value
        e = (
            np.abs(self.value) * o.error
            + np.abs(o.value) * self.error
            + self.error * o.error
            + _sp(v)
        )
        return Quantity(v, e * _GUARD)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        denom_lo = np.abs(o.value) - o.error
        if not np.all(denom_lo > 0.0):
            raise DomainError("division by an interval containing zero")
        v = self.value / o.value
        e = (self.error + (np.abs(v) + _sp(v)) * o.error) / denom_lo + _sp(v)
        return Quantity(v, e * _GUARD)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o.__truediv__(self)

    def log(self) -> "Quantity":
        arg_lo = self.value - self.error
        if not np.all(arg_lo > 0.0):
            raise DomainError("log of an interval reaching zero or below")
        v = np.log(self.value)
        # |log(x+d) - log(x)| <= |d| / (x - |d|), plus libm inaccuracy.
        e = self.error / arg_lo + _LIBM_SPACINGS * _sp(v)
        return Quantity(v, e * _GUARD)

    def exp(self) -> "Quantity":
        v = np.exp(self.value)
        if not np.all(np.isfinite(v)):
            raise DomainError("exp overflow")
        # exp(x+d) <= exp(x) * e^d; e^d - 1 <= expm1(error).
        e = (np.abs(v) + _sp(v)) * np.expm1(self.error) + _LIBM_SPACINGS * _sp(v)
        return Quantity(v, e * _GUARD)

    def power(self, k: int) -> "Quantity":
        """Integer power by repeated multiplication (small k only)."""
        if not isinstance(k, int) or k < 1:
            raise ValueError("power expects a positive integer exponent")
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def widen(self, extra) -> "Quantity":
        """Return a copy with the radius grown by `extra` (>= 0)."""
        return Quantity(self.value, (self.error + np.abs(extra)) * _GUARD)

    # -- misc --------------------------------------------------------------

    def item(self) -> "Quantity":
        """Collapse a 1-element array Quantity to a scalar Quantity."""
        return Quantity(float(np.asarray(self.value).reshape(-1)[0]),
                        float(np.asarray(self.error).reshape(-1)[0]))

    def __getitem__(self, idx):
        return Quantity(self.value[idx], self.error[idx])

    def __len__(self):
        return len(self.value)

    def __repr__(self):
        v = self.value
        if np.ndim(v) == 0:
            return f"Quantity({float(v):.17g} ± {float(self.error):.3g})"
        return f"Quantity(array[{np.size(v)}], max_err={float(np.max(self.error)):.3g})"


def render_quantity(value: float, error: float) -> str:
    """Fixed presentation for a value with radius: 15 significant digits,
    then the radius to two digits, ASCII only.  Shared by every output
    format so text/CSV/JSON agree byte-for-byte on numbers."""
    return f"{float(value):.14e}+/-{float(error):.2e}"
