"""Registry of explicit inequalities for prime means, with certified checking.

Each catalog entry describes one published inequality about the first ``n``
primes: lower/upper bounds for the defect ``D(n) = log p_n - theta(p_n)/n``,
for the geometric mean ``G_n``, for the log-ratio term
``log(1 + 2R(n)/p_n)``, for the ratio ``A_n/G_n``, plus a few auxiliary
estimates for ``p_n`` and the remainder ``R(n) = A_n - p_n/2`` that the main
derivations lean on.

Entries are declarative: exact rational coefficients, the claimed starting
index, and a right-hand side evaluator built from :class:`~primemeans.quantity.Quantity`
arithmetic so every comparison carries a guaranteed error radius.  A verdict
is only ``HOLDS`` or ``FAILS`` when the tracked radii cannot flip it;
everything else is ``INDETERMINATE``.

The same evaluator code runs on a single ``PrimeState`` (scalars) and on
aligned numpy arrays covering a block of consecutive indices (used by the
streaming verifier); ``Quantity`` broadcasts make the two paths identical.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from .kernel import PrimeState
from .quantity import DomainError, Quantity

__all__ = [
    "Verdict",
    "BoundSpec",
    "Basis",
    "CatalogError",
    "UnknownBoundError",
    "E",
    "catalog",
    "catalog_ids",
    "lookup",
    "eval_bound",
    "check",
    "oriented_margin",
    "classify",
    "classify_array",
    "render_catalog_table",
]

F = Fraction

# math.e is the correctly rounded double of e, so the true value lies within
# half an ulp of it.
E = Quantity(math.e, 0.5 * math.ulp(math.e))


class CatalogError(ValueError):
    """A catalog entry was used in a way its kind does not support."""


class UnknownBoundError(LookupError):
    """Requested bound id is not in the registry."""


class Verdict(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    INDETERMINATE = "indeterminate"


# Integer verdict codes used by the vectorized classifier.
HOLDS_CODE = np.int8(1)
FAILS_CODE = np.int8(-1)
INDET_CODE = np.int8(0)


class Basis:
    """Lazily evaluated shared sub-expressions for bound right-hand sides.

    Attribute summary (all ``Quantity``):

    ==========  ====================================================
    ``nq``      the index n (exact)
    ``pq``      p_n (exact below 2**53)
    ``L``       log p_n
    ``ell``     log n                (needs n >= 2 to be useful)
    ``lam``     log log n            (needs n >= 2)
    ``theta``   theta(p_n)
    ``D``       log p_n - theta(p_n)/n
    ``G``       exp(theta(p_n)/n)
    ``A``       (p_1 + ... + p_n)/n
    ``R``       A - p_n/2
    ``ratio``   A/G
    ``lrt``     log(1 + 2R/p_n) = log(2A/p_n)
    ==========  ====================================================

    In array mode the row with n = 1 has ``ell``/``lam`` computed from a
    placeholder (n treated as 2) purely so vector evaluation stays finite;
    the verifier masks that row out for every entry whose domain starts at 2.
    In scalar mode no placeholder exists: using ``ell`` at n = 1 raises
    :class:`DomainError` as soon as a division needs ``log 1 > 0``.
    """

    __slots__ = ("_array", "_n", "_p", "_sum", "_theta", "_cache")

    def __init__(self) -> None:
        raise TypeError("use Basis.from_state or Basis.from_arrays")

    @classmethod
    def from_state(cls, state: PrimeState) -> "Basis":
        if state.n < 1:
            raise ValueError("state must hold at least one prime")
        self = cls.__new__(cls)
        self._array = False
        self._n = int(state.n)
        self._p = int(state.p)
        self._sum = int(state.sum_primes)
        self._theta = state.theta
        self._cache = {}
        return self

    @classmethod
    def from_arrays(
        cls,
        n: np.ndarray,
        p: np.ndarray,
        sums: np.ndarray,
        theta: Quantity,
    ) -> "Basis":
        """Build a block context from aligned int64 arrays.

        ``sums`` must hold exact cumulative prime sums (int64 is exact well
        past the supported capacity) and ``theta`` the matching theta values.
        """
        if not (len(n) == len(p) == len(sums) == len(theta.value)):
            raise ValueError("misaligned block arrays")
        self = cls.__new__(cls)
        self._array = True
        self._n = n
        self._p = p
        self._sum = sums
        self._theta = theta
        self._cache = {}
        return self

    def _memo(self, key: str, build):
        cache = self._cache
        if key not in cache:
            cache[key] = build()
        return cache[key]

    # -- raw quantities -------------------------------------------------
    @property
    def theta(self) -> Quantity:
        return self._theta

    @property
    def nq(self) -> Quantity:
        if self._array:
            return self._memo("nq", lambda: Quantity.from_int_array(self._n))
        return self._memo("nq", lambda: Quantity.exact(self._n))

    @property
    def pq(self) -> Quantity:
        if self._array:
            return self._memo("pq", lambda: Quantity.from_int_array(self._p))
        return self._memo("pq", lambda: Quantity.exact(self._p))

    @property
    def sumq(self) -> Quantity:
        if self._array:
            return self._memo("sumq", lambda: Quantity.from_int_array(self._sum))
        return self._memo("sumq", lambda: Quantity.exact(self._sum))

    # -- logarithmic scales ---------------------------------------------
    @property
    def L(self) -> Quantity:
        return self._memo("L", lambda: self.pq.log())

    @property
    def ell(self) -> Quantity:
        def build():
            if self._array:
                safe = np.where(self._n == 1, 2, self._n)
                return Quantity.from_int_array(safe).log()
            return Quantity.exact(self._n).log()

        return self._memo("ell", build)

    @property
    def lam(self) -> Quantity:
        return self._memo("lam", lambda: self.ell.log())

    # -- derived means ---------------------------------------------------
    @property
    def logG(self) -> Quantity:
        return self._memo("logG", lambda: self.theta / self.nq)

    @property
    def D(self) -> Quantity:
        return self._memo("D", lambda: self.L - self.logG)

    @property
    def G(self) -> Quantity:
        return self._memo("G", lambda: self.logG.exp())

    @property
    def A(self) -> Quantity:
        def build():
            if self._array:
                return self.sumq / self.nq
            return Quantity.from_fraction(F(self._sum, self._n))

        return self._memo("A", build)

    @property
    def R(self) -> Quantity:
        def build():
            if self._array:
                return self.A - self.pq * F(1, 2)
            return Quantity.from_fraction(F(self._sum, self._n) - F(self._p, 2))

        return self._memo("R", build)

    @property
    def ratio(self) -> Quantity:
        return self._memo("ratio", lambda: self.A / self.G)

    @property
    def lrt(self) -> Quantity:
        """log(1 + 2R/p_n), evaluated through the exact form 2*sum/(n*p_n)."""

        def build():
            if self._array:
                u = (2 * self.sumq) / (self.nq * self.pq)
                return u.log()
            return Quantity.from_fraction(F(2 * self._sum, self._n * self._p)).log()

        return self._memo("lrt", build)


RhsFn = Callable[[Basis], Quantity]

_TARGETS: Dict[str, Callable[[Basis], Quantity]] = {
    "D": lambda b: b.D,
    "G": lambda b: b.G,
    "R-log-term": lambda b: b.lrt,
    "ratio": lambda b: b.ratio,
    "p_n": lambda b: b.pq,
    "R": lambda b: b.R,
}


@dataclass(frozen=True, kw_only=True)
class BoundSpec:
    """One registered inequality.

    ``side`` is relative to the target: ``lower`` means the claim is
    ``target > rhs`` (or >= when ``strict`` is false), ``upper`` means
    ``target < rhs`` (or <=).  ``claimed_start``/``claimed_end`` record the
    published range; ``domain_min`` is the first index where every term of
    the right-hand side is defined.  ``coefficients`` keeps the printed
    constants as exact rationals, in order of appearance, for golden tests.

    ``kind`` is ``"pointwise"`` for ordinary inequalities; the single
    ``"monotone"`` entry describes a sequence property (strict decrease of
    A_n/G_n) and cannot be evaluated pointwise.

    ``log_form`` marks G_n bounds of the shape ``G_n <> p_n/exp(X)`` that are
    compared in log scale (``theta/n <> log p_n - X``).  exp is strictly
    increasing, so the verdicts are identical, but the log form stays finite
    even where the huge cubic/quartic coefficients would overflow float64 at
    small n.  For these entries the reported margin is log-scale slack.
    """

    id: str
    target: str
    side: str
    strict: bool
    basis: str
    claimed_start: int
    claimed_end: Optional[int] = None
    domain_min: int = 1
    statement: str
    source: str
    coefficients: Tuple[Fraction, ...] = ()
    rhs: Optional[RhsFn] = field(default=None, compare=False, repr=False)
    conjectural: bool = False
    audit: bool = False
    kind: str = "pointwise"
    log_form: bool = False
    notes: str = ""

    def __post_init__(self) -> None:
        if self.side not in ("lower", "upper", "decreasing"):
            raise ValueError(f"bad side {self.side!r}")
        if self.kind not in ("pointwise", "monotone"):
            raise ValueError(f"bad kind {self.kind!r}")
        if self.kind == "pointwise":
            if self.target not in _TARGETS:
                raise ValueError(f"bad target {self.target!r}")
            if self.rhs is None:
                raise ValueError("pointwise entries need an rhs")
        if self.claimed_start < 1 or self.domain_min < 1:
            raise ValueError("indices start at 1")

    def lhs(self, basis: Basis) -> Quantity:
        if self.kind != "pointwise":
            raise CatalogError(f"{self.id} is a sequence property, not pointwise")
        if self.log_form:
            return basis.logG
        return _TARGETS[self.target](basis)


def _entry(**kw) -> BoundSpec:
    return BoundSpec(**kw)


_PI_1E19 = 234_057_667_276_344_607  # prime count below 10**19, as published


def _build_registry() -> Tuple[BoundSpec, ...]:
    c = []

    # ---- lower bounds for D(n) -------------------------------------------
    c.append(_entry(
        id="ineq-3.1", target="D", side="lower", strict=True, basis="log p_n",
        claimed_start=218,
        statement="D(n) > 1 + 1/log(p_n) + 2.7/log(p_n)^2",
        source="Prop. 3.1",
        coefficients=(F(27, 10),),
        rhs=lambda b: 1 + 1 / b.L + F(27, 10) / b.L.power(2),
    ))
    c.append(_entry(
        id="ineq-3.5", target="D", side="lower", strict=True, basis="log p_n",
        claimed_start=1,
        statement="D(n) > 1 + 1/log(p_n) + 3/log(p_n)^2 - 187/log(p_n)^3",
        source="Prop. 3.2",
        coefficients=(F(3), F(187)),
        rhs=lambda b: 1 + 1 / b.L + 3 / b.L.power(2) - 187 / b.L.power(3),
    ))
    c.append(_entry(
        id="ineq-3.6", target="D", side="lower", strict=True, basis="log p_n",
        claimed_start=1,
        statement=("D(n) > 1 + 1/log(p_n) + 3/log(p_n)^2 + 13/log(p_n)^3"
                   " - 1160159/log(p_n)^4"),
        source="Prop. 3.2",
        coefficients=(F(3), F(13), F(1160159)),
        rhs=lambda b: (1 + 1 / b.L + 3 / b.L.power(2) + 13 / b.L.power(3)
                       - 1160159 / b.L.power(4)),
    ))
    c.append(_entry(
        id="ineq-3.7", target="D", side="lower", strict=True, basis="log p_n",
        claimed_start=264, claimed_end=_PI_1E19,
        statement="D(n) > 1 + 1/log(p_n) + 3/log(p_n)^2",
        source="Cor. 3.3",
        coefficients=(F(3),),
        rhs=lambda b: 1 + 1 / b.L + 3 / b.L.power(2),
        notes=("also claimed for n >= pi(exp(1160159/13)) + 1, far beyond "
               "any scan capacity"),
    ))
    c.append(_entry(
        id="ineq-3.13", target="D", side="lower", strict=True,
        basis="log n, log log n", claimed_start=591, domain_min=2,
        statement="D(n) > 1 + 1/log(n) - (loglog(n) - 2.5)/log(n)^2",
        source="Prop. 3.6",
        coefficients=(F(5, 2),),
        rhs=lambda b: 1 + 1 / b.ell - (b.lam - F(5, 2)) / b.ell.power(2),
        notes="analytic tail from 2426927728; smaller indices machine-checked",
    ))
    c.append(_entry(
        id="D>1", target="D", side="lower", strict=True, basis="constant",
        claimed_start=10,
        statement="D(n) > 1",
        source="remark after Cor. 3.7",
        coefficients=(F(1),),
        rhs=lambda b: Quantity.exact(1),
    ))

    # ---- upper bounds for D(n) -------------------------------------------
    c.append(_entry(
        id="ineq-3.9", target="D", side="upper", strict=True, basis="log p_n",
        claimed_start=74_004_585,
        statement="D(n) < 1 + 1/log(p_n) + 3.84/log(p_n)^2",
        source="Prop. 3.5",
        coefficients=(F(96, 25),),
        rhs=lambda b: 1 + 1 / b.L + F(96, 25) / b.L.power(2),
        notes="claimed start exceeds the default scan limit; raise capacity to reach it",
    ))
    c.append(_entry(
        id="ineq-3.10", target="D", side="upper", strict=True, basis="log p_n",
        claimed_start=1,
        statement="D(n) < 1 + 1/log(p_n) + 3/log(p_n)^2 + 213/log(p_n)^3",
        source="Prop. 3.5",
        coefficients=(F(3), F(213)),
        rhs=lambda b: 1 + 1 / b.L + 3 / b.L.power(2) + 213 / b.L.power(3),
    ))
    c.append(_entry(
        id="prop-3.8", target="D", side="upper", strict=True,
        basis="log n, log log n", claimed_start=2, domain_min=2,
        statement="D(n) < 1 + 1/log(n) - (loglog(n) - 4.2)/log(n)^2",
        source="Prop. 3.8",
        coefficients=(F(21, 5),),
        rhs=lambda b: 1 + 1 / b.ell - (b.lam - F(21, 5)) / b.ell.power(2),
        notes=("final form only; the derivation routes through helper "
               "polynomials P8(x)=3x^2-6x+5.2, P9(x)=x^3-6x^2+11.4x-4.2 and "
               "an analytic tail from 1499820545"),
    ))

    # ---- upper bounds for G_n ---------------------------------------------
    c.append(_entry(
        id="prop-4.1a", target="G", side="upper", strict=True, basis="log p_n",
        claimed_start=218, log_form=True,
        statement="G_n < p_n/exp(1 + 1/log(p_n) + 2.7/log(p_n)^2)",
        source="Prop. 4.1",
        coefficients=(F(27, 10),),
        rhs=lambda b: b.L - (1 + 1 / b.L + F(27, 10) / b.L.power(2)),
    ))
    c.append(_entry(
        id="prop-4.1b", target="G", side="upper", strict=True, basis="log p_n",
        claimed_start=1, log_form=True,
        statement="G_n < p_n/exp(1 + 1/log(p_n) + 3/log(p_n)^2 - 187/log(p_n)^3)",
        source="Prop. 4.1",
        coefficients=(F(3), F(187)),
        rhs=lambda b: b.L - (1 + 1 / b.L + 3 / b.L.power(2) - 187 / b.L.power(3)),
    ))
    c.append(_entry(
        id="prop-4.1c", target="G", side="upper", strict=True, basis="log p_n",
        claimed_start=1, log_form=True,
        statement=("G_n < p_n/exp(1 + 1/log(p_n) + 3/log(p_n)^2 + 13/log(p_n)^3"
                   " - 1160159/log(p_n)^4)"),
        source="Prop. 4.1",
        coefficients=(F(3), F(13), F(1160159)),
        rhs=lambda b: b.L - (1 + 1 / b.L + 3 / b.L.power(2) + 13 / b.L.power(3)
                             - 1160159 / b.L.power(4)),
    ))
    c.append(_entry(
        id="prop-4.2", target="G", side="upper", strict=True, basis="log p_n",
        claimed_start=264, claimed_end=_PI_1E19, log_form=True,
        statement="G_n < p_n/exp(1 + 1/log(p_n) + 3/log(p_n)^2)",
        source="Prop. 4.2",
        coefficients=(F(3),),
        rhs=lambda b: b.L - (1 + 1 / b.L + 3 / b.L.power(2)),
        notes="range mirrors the D(n) bound it is derived from",
    ))
    c.append(_entry(
        id="prop-4.3", target="G", side="upper", strict=True, basis="log p_n",
        claimed_start=47,
        statement="G_n < (p_n/e)*(1 - 1/log(p_n))",
        source="Prop. 4.3",
        rhs=lambda b: (b.pq / E) * (1 - 1 / b.L),
    ))
    c.append(_entry(
        id="cor-4.4", target="G", side="upper", strict=True, basis="n, log p_n",
        claimed_start=31,
        statement=("G_n < p_n/e - (n/e)*(1 - 1/log(p_n) - 1/log(p_n)^2"
                   " - 3.69/log(p_n)^3)"),
        source="Cor. 4.4",
        coefficients=(F(369, 100),),
        rhs=lambda b: b.pq / E - (b.nq / E) * (1 - 1 / b.L - 1 / b.L.power(2)
                                               - F(369, 100) / b.L.power(3)),
        notes="analytic tail from 456441574",
    ))
    c.append(_entry(
        id="panaitopol", target="G", side="upper", strict=True, basis="p_n",
        claimed_start=10,
        statement="G_n < p_n/e",
        source="Panaitopol (1999)",
        rhs=lambda b: b.pq / E,
    ))

    # ---- lower bounds for G_n ---------------------------------------------
    c.append(_entry(
        id="ineq-4.2", target="G", side="lower", strict=True, basis="log p_n",
        claimed_start=74_004_585, log_form=True,
        statement="G_n > p_n/exp(1 + 1/log(p_n) + 3.84/log(p_n)^2)",
        source="Prop. 4.5",
        coefficients=(F(96, 25),),
        rhs=lambda b: b.L - (1 + 1 / b.L + F(96, 25) / b.L.power(2)),
        notes="claimed start exceeds the default scan limit; raise capacity to reach it",
    ))
    c.append(_entry(
        id="prop-4.5b", target="G", side="lower", strict=True, basis="log p_n",
        claimed_start=1, log_form=True,
        statement="G_n > p_n/exp(1 + 1/log(p_n) + 3/log(p_n)^2 + 213/log(p_n)^3)",
        source="Prop. 4.5",
        coefficients=(F(3), F(213)),
        rhs=lambda b: b.L - (1 + 1 / b.L + 3 / b.L.power(2) + 213 / b.L.power(3)),
    ))
    c.append(_entry(
        id="prop-4.6", target="G", side="lower", strict=True, basis="log p_n",
        claimed_start=1,
        statement="G_n > (p_n/e)*(1 - 1/log(p_n) - 4.74/log(p_n)^2)",
        source="Prop. 4.6",
        coefficients=(F(237, 50),),
        rhs=lambda b: (b.pq / E) * (1 - 1 / b.L - F(237, 50) / b.L.power(2)),
        notes=("analytic tail from 883051281 while machine checks are reported "
               "only up to 64881103; the window between is exactly what desk "
               "scans here probe"),
    ))
    c.append(_entry(
        id="cor-4.7", target="G", side="lower", strict=True, basis="n, log p_n",
        claimed_start=3,
        statement=("G_n > p_n/e - (n/e)*(1 + 3.74/log(p_n) - 5.74/log(p_n)^2"
                   " - 7.59/log(p_n)^3)"),
        source="Cor. 4.7",
        coefficients=(F(187, 50), F(287, 50), F(759, 100)),
        rhs=lambda b: b.pq / E - (b.nq / E) * (1 + F(187, 50) / b.L
                                               - F(287, 50) / b.L.power(2)
                                               - F(759, 100) / b.L.power(3)),
        notes="analytic tail from 2324692",
    ))
    c.append(_entry(
        id="hassani-g-lower", target="G", side="lower", strict=True, basis="n, p_n",
        claimed_start=1,
        statement="G_n > p_n/e - 2.37*n",
        source="Hassani (2013), Cor. 4.2",
        coefficients=(F(237, 100),),
        rhs=lambda b: b.pq / E - F(237, 100) * b.nq,
    ))

    # ---- the log-ratio term log(1 + 2R(n)/p_n) ------------------------------
    c.append(_entry(
        id="ineq-5.1-lower", target="R-log-term", side="lower", strict=True,
        basis="log n", claimed_start=2, domain_min=2,
        statement="log(1 + 2R(n)/p_n) > -15/(2*log(n))",
        source="Hassani (2013), Cor. 1.5",
        coefficients=(F(15, 2),),
        rhs=lambda b: -(F(15, 2) / b.ell),
    ))
    c.append(_entry(
        id="ineq-5.1-upper", target="R-log-term", side="upper", strict=True,
        basis="log n", claimed_start=10, domain_min=2,
        statement="log(1 + 2R(n)/p_n) < -5/(36*log(n))",
        source="Hassani (2013), Cor. 1.5",
        coefficients=(F(5, 36),),
        rhs=lambda b: -(F(5, 36) / b.ell),
    ))
    c.append(_entry(
        id="ineq-5.2", target="R-log-term", side="lower", strict=True,
        basis="log n, log log n", claimed_start=26_220, domain_min=2,
        statement=("log(1 + 2R(n)/p_n) > -1/(2log(n)) + (loglog(n) - 2.25)/(2log(n)^2)"
                   " - (loglog(n)^2 - 4.5*loglog(n) + 22.51/3)/(2log(n)^3)"),
        source="Prop. 5.1",
        coefficients=(F(9, 4), F(9, 2), F(2251, 300)),
        rhs=lambda b: (-(F(1, 2) / b.ell)
                       + (b.lam - F(9, 4)) / (2 * b.ell.power(2))
                       - (b.lam.power(2) - F(9, 2) * b.lam + F(2251, 300))
                       / (2 * b.ell.power(3))),
    ))
    c.append(_entry(
        id="prop-5.2", target="R-log-term", side="upper", strict=True,
        basis="log n, log p_n", claimed_start=6_077, domain_min=2,
        statement=("log(1 + 2R(n)/p_n) < -1/(2log(p_n)) - 1/log(p_n)^2"
                   " - 2.9/(2log(n)^2*log(p_n))"),
        source="Prop. 5.2",
        coefficients=(F(29, 10),),
        rhs=lambda b: (-(F(1, 2) / b.L) - 1 / b.L.power(2)
                       - F(29, 10) / (2 * b.ell.power(2) * b.L)),
    ))
    c.append(_entry(
        id="cor-5.3", target="R-log-term", side="upper", strict=True,
        basis="log n, log log n", claimed_start=92, domain_min=2,
        statement=("log(1 + 2R(n)/p_n) < -1/(2log(n)) + (loglog(n) - 2)/(2log(n)^2)"
                   " + (4*loglog(n) - 2.9)/log(n)^3 + 2.9*loglog(n)/(2log(n)^4)"),
        source="Cor. 5.3",
        coefficients=(F(2), F(4), F(29, 10), F(29, 10)),
        rhs=lambda b: (-(F(1, 2) / b.ell)
                       + (b.lam - 2) / (2 * b.ell.power(2))
                       + (4 * b.lam - F(29, 10)) / b.ell.power(3)
                       + F(29, 10) * b.lam / (2 * b.ell.power(4))),
    ))

    # ---- bounds for the ratio A_n/G_n ---------------------------------------
    c.append(_entry(
        id="thm-6.1", target="ratio", side="lower", strict=True,
        basis="log n, log log n", claimed_start=139, domain_min=2,
        statement="A_n/G_n > e/2 + e/(4log(n)) - e*(loglog(n) - 2.8)/(4log(n)^2)",
        source="Thm. 6.1",
        coefficients=(F(14, 5),),
        rhs=lambda b: (E / 2 + E / (4 * b.ell)
                       - E * (b.lam - F(14, 5)) / (4 * b.ell.power(2))),
        notes="analytic tail from 465944315",
    ))
    c.append(_entry(
        id="cor-6.2", target="ratio", side="lower", strict=True, basis="log p_n",
        claimed_start=62,
        statement="A_n/G_n > e/2 + e/(4log(p_n)) + 0.61e/log(p_n)^2",
        source="Cor. 6.2",
        coefficients=(F(61, 100),),
        rhs=lambda b: E / 2 + E / (4 * b.L) + F(61, 100) * E / b.L.power(2),
        notes="analytic tail from 1499820545",
    ))
    c.append(_entry(
        id="cor-6.3", target="ratio", side="lower", strict=True, basis="constant",
        claimed_start=1, audit=True,
        statement="A_n/G_n > e/2",
        source="Cor. 6.3",
        rhs=lambda b: E / 2,
        notes=("claimed for every n, but the ratio only crosses e/2 past n = 10 "
               "(ratio(10) ~ 1.3474 < e/2 ~ 1.3591); the verifier reports the "
               "exact violation set instead of suppressing it"),
    ))
    c.append(_entry(
        id="thm-6.4", target="ratio", side="upper", strict=True, basis="log p_n",
        claimed_start=294_635,
        statement="A_n/G_n < e/2 + e/(4log(p_n)) + 1.52e/log(p_n)^2",
        source="Thm. 6.4",
        coefficients=(F(38, 25),),
        rhs=lambda b: E / 2 + E / (4 * b.L) + F(38, 25) * E / b.L.power(2),
    ))
    c.append(_entry(
        id="cor-6.5", target="ratio", side="upper", strict=True,
        basis="log n, log log n", claimed_start=2, domain_min=2,
        statement="A_n/G_n < e/2 + e/(4log(n)) - e*(loglog(n) - 6.44)/(4log(n)^2)",
        source="Cor. 6.5",
        coefficients=(F(161, 25),),
        rhs=lambda b: (E / 2 + E / (4 * b.ell)
                       - E * (b.lam - F(161, 25)) / (4 * b.ell.power(2))),
        notes="analytic tail from 1499820545",
    ))

    # ---- auxiliary estimates the derivations lean on -------------------------
    c.append(_entry(
        id="rosser-3.4", target="p_n", side="upper", strict=False,
        basis="n, log p_n", claimed_start=7,
        statement="p_n <= n*log(p_n)",
        source="Rosser (1939)",
        rhs=lambda b: b.nq * b.L,
    ))
    c.append(_entry(
        id="dusart-5.3", target="p_n", side="lower", strict=False,
        basis="n, log n, log log n", claimed_start=2, domain_min=2,
        statement="p_n >= n*(log(n) + loglog(n) - 1)",
        source="Dusart (1999)",
        rhs=lambda b: b.nq * (b.ell + b.lam - 1),
    ))
    c.append(_entry(
        id="env-5.4-lower", target="R", side="lower", strict=True,
        basis="n, log n, log log n", claimed_start=256_376, domain_min=2,
        statement=("R(n) > -n/4 - n/(4log(n)) + n*(loglog(n) - 4.42)/(4log(n)^2)"),
        source="Prop. 5.1 proof",
        coefficients=(F(221, 50),),
        rhs=lambda b: (-(b.nq * F(1, 4)) - b.nq / (4 * b.ell)
                       + b.nq * (b.lam - F(221, 50)) / (4 * b.ell.power(2))),
    ))
    c.append(_entry(
        id="env-5.4-upper", target="R", side="upper", strict=True, basis="constant",
        claimed_start=256_376,
        statement="R(n) < 0",
        source="Prop. 5.1 proof",
        rhs=lambda b: Quantity.exact(0),
    ))
    c.append(_entry(
        id="env-s2", target="R", side="upper", strict=True,
        basis="n, log n, log log n", claimed_start=78_150_372, domain_min=2,
        statement=("R(n) < -n/4 - n/(4log(n)) + n*(loglog(n) - 2.9)/(4log(n)^2)"),
        source="Prop. 5.2 proof",
        coefficients=(F(29, 10),),
        rhs=lambda b: (-(b.nq * F(1, 4)) - b.nq / (4 * b.ell)
                       + b.nq * (b.lam - F(29, 10)) / (4 * b.ell.power(2))),
        notes="claimed start exceeds the default scan limit; raise capacity to reach it",
    ))

    # ---- conjectural entries (exploratory probes) ----------------------------
    c.append(_entry(
        id="conj-3.4", target="D", side="lower", strict=True, basis="log p_n",
        claimed_start=264, conjectural=True,
        statement="D(n) > 1 + 1/log(p_n) + 3/log(p_n)^2 (conjectured unconditional)",
        source="Conj. 3.4",
        coefficients=(F(3),),
        rhs=lambda b: 1 + 1 / b.L + 3 / b.L.power(2),
        notes="same bound as ineq-3.7 without the upper cutoff on n",
    ))
    c.append(_entry(
        id="conj-monotone", target="ratio", side="decreasing", strict=True,
        basis="sequence", claimed_start=226, conjectural=True, kind="monotone",
        statement="A_{n+1}/G_{n+1} < A_n/G_n for every n >= 226",
        source="closing remark",
        notes="sequence property: checked by the monotone scanner, not pointwise",
    ))

    ids = [s.id for s in c]
    if len(ids) != len(set(ids)):
        raise AssertionError("duplicate bound ids in registry")
    return tuple(c)


_REGISTRY: Tuple[BoundSpec, ...] = _build_registry()
_BY_ID: Dict[str, BoundSpec] = {s.id: s for s in _REGISTRY}


def catalog() -> List[BoundSpec]:
    """All registered bounds, in registry order."""
    return list(_REGISTRY)


def catalog_ids() -> List[str]:
    return [s.id for s in _REGISTRY]


def lookup(bound_id: str) -> BoundSpec:
    try:
        return _BY_ID[bound_id]
    except KeyError:
        raise UnknownBoundError(
            f"unknown bound id {bound_id!r}; valid ids: {', '.join(_BY_ID)}"
        ) from None


def eval_bound(spec: BoundSpec, state: PrimeState) -> Quantity:
    """Interval evaluation of the right-hand side at a scalar state.

    Raises :class:`DomainError` when a term is undefined at ``state.n``
    (for example any log(n)-based expression at n = 1).
    """
    if spec.kind != "pointwise":
        raise CatalogError(f"{spec.id} has no pointwise right-hand side")
    basis = Basis.from_state(state)
    if state.n < spec.domain_min:
        raise DomainError(
            f"{spec.id} is undefined at n={state.n}; needs n >= {spec.domain_min}"
        )
    return spec.rhs(basis)


def oriented_margin(spec: BoundSpec, lhs: Quantity, rhs: Quantity) -> Quantity:
    """Signed slack, oriented so positive always means the claim holds."""
    return lhs - rhs if spec.side == "lower" else rhs - lhs


def classify(margin: Quantity, strict: bool) -> Verdict:
    """Scalar verdict from an oriented margin with certainty radii."""
    lo, hi = float(margin.lo), float(margin.hi)
    if strict:
        if lo > 0.0:
            return Verdict.HOLDS
        if hi <= 0.0:
            return Verdict.FAILS
    else:
        if lo >= 0.0:
            return Verdict.HOLDS
        if hi < 0.0:
            return Verdict.FAILS
    return Verdict.INDETERMINATE


def classify_array(margin: Quantity, strict: bool) -> np.ndarray:
    """Vector verdicts: +1 holds, -1 fails, 0 indeterminate."""
    lo = margin.lo
    hi = margin.hi
    if strict:
        holds = lo > 0.0
        fails = hi <= 0.0
    else:
        holds = lo >= 0.0
        fails = hi < 0.0
    out = np.zeros(np.shape(lo), dtype=np.int8)
    out[holds] = HOLDS_CODE
    out[fails] = FAILS_CODE
    return out


def check(spec: BoundSpec, state: PrimeState) -> Verdict:
    """Certified verdict for one bound at one state."""
    rhs = eval_bound(spec, state)
    lhs = spec.lhs(Basis.from_state(state))
    return classify(oriented_margin(spec, lhs, rhs), spec.strict)


def render_catalog_table() -> str:
    """Plain-text registry listing (id, claim, range, anchor)."""
    rows = []
    header = (
        f"{'id':<16} {'tgt':<10} {'side':<10} {'claimed range':<28} "
        f"{'flags':<10} {'source':<24} statement"
    )
    rows.append(header)
    rows.append("-" * len(header))
    for s in _REGISTRY:
        if s.claimed_end is None:
            rng = f"n >= {s.claimed_start}"
        else:
            rng = f"{s.claimed_start} <= n <= {s.claimed_end}"
        flags = []
        if s.conjectural:
            flags.append("conj")
        if s.audit:
            flags.append("audit")
        if not s.strict:
            flags.append("non-strict")
        if s.kind == "monotone":
            flags.append("seq")
        rows.append(
            f"{s.id:<16} {s.target:<10} {s.side:<10} {rng:<28} "
            f"{','.join(flags) or '-':<10} {s.source:<24} {s.statement}"
        )
    return "\n".join(rows)
