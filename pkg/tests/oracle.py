"""Independent reference implementations used only by the test suite.

Primes come from a classic one-shot bytearray sieve (no numpy), integer
aggregates from Python bignums, and real-valued quantities from gmpy2
binary floats at 106-160 bits -- at least twice the working precision of
the package under test.  Agreement between the two stacks is therefore
evidence, not tautology.

The inequality table at the bottom re-encodes every pointwise catalog
entry directly as an mpfr expression over (n, p_n, sum, theta_n), written
from the printed statements rather than from the package's internals, so
verdict comparisons exercise an independent reading of each formula.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Dict, List, NamedTuple

import gmpy2
from gmpy2 import mpfr

DEFAULT_BITS = 160


# ---------------------------------------------------------------------------
# primes, the boring way
# ---------------------------------------------------------------------------

def _upper_bound(count: int) -> int:
    if count < 6:
        return 15
    c = float(count)
    return int(c * (math.log(c) + math.log(math.log(c)) + 1.0)) + 10


def naive_primes(count: int) -> List[int]:
    """First ``count`` primes via a plain byte sieve."""
    if count <= 0:
        return []
    bound = _upper_bound(count)
    while True:
        flags = bytearray(b"\x01") * (bound + 1)
        flags[0] = flags[1] = 0
        for q in range(2, int(bound ** 0.5) + 1):
            if flags[q]:
                step = bytes(len(range(q * q, bound + 1, q)))
                flags[q * q::q] = step
        primes = [i for i in range(2, bound + 1) if flags[i]]
        if len(primes) >= count:
            return primes[:count]
        bound *= 2


# ---------------------------------------------------------------------------
# high-precision rows
# ---------------------------------------------------------------------------

class Row(NamedTuple):
    """Everything about index n, exactly or at oracle precision."""
    n: int
    p: int
    sum_primes: int            # exact
    A: Fraction                # exact
    R: Fraction                # exact: A - p/2
    theta: "mpfr"
    logG: "mpfr"               # theta / n
    G: "mpfr"
    D: "mpfr"                  # log p - theta/n
    ratio: "mpfr"              # A / G
    lam_big: "mpfr"            # log(2A/p) = log(1 + 2R/p)
    log_ratio: "mpfr"          # log(A/G)


def rows(count: int, bits: int = DEFAULT_BITS) -> List[Row]:
    """Oracle rows for n = 1..count, one sweep."""
    primes = naive_primes(count)
    out: List[Row] = []
    with gmpy2.context(precision=bits):
        theta = mpfr(0)
        total = 0
        for i, p in enumerate(primes, start=1):
            total += p
            theta += gmpy2.log(p)
            a_exact = Fraction(total, i)
            r_exact = a_exact - Fraction(p, 2)
            logg = theta / i
            g = gmpy2.exp(logg)
            logp = gmpy2.log(p)
            a = mpfr(total) / i
            ratio = a / g
            out.append(Row(
                n=i, p=p, sum_primes=total, A=a_exact, R=r_exact,
                theta=theta, logG=logg, G=g, D=logp - logg, ratio=ratio,
                lam_big=gmpy2.log((2 * mpfr(total)) / (mpfr(i) * p)),
                log_ratio=gmpy2.log(ratio),
            ))
    return out


def row_at(n: int, bits: int = DEFAULT_BITS) -> Row:
    return rows(n, bits)[-1]


def theta_at(n: int, bits: int = DEFAULT_BITS) -> float:
    return float(row_at(n, bits).theta)


def ratio_leq_e_half_set(limit: int, bits: int = DEFAULT_BITS) -> set:
    """Exact oracle for {n <= limit : A_n/G_n <= e/2}."""
    bad = set()
    with gmpy2.context(precision=bits):
        half_e = gmpy2.exp(mpfr(1)) / 2
        for row in rows(limit, bits):
            if row.ratio <= half_e:
                bad.add(row.n)
    return bad


# ---------------------------------------------------------------------------
# independent verdicts for every pointwise inequality
# ---------------------------------------------------------------------------
# Each entry maps a bound id to (side, strict, domain_min, expr) where expr
# computes (lhs, rhs) as mpfr from a Row.  They are transcriptions of the
# printed statements; log/loglog of the *index* are spelled out explicitly.

def _l(row: Row) -> "mpfr":
    return gmpy2.log(row.p)


def _ell(row: Row) -> "mpfr":
    return gmpy2.log(row.n)


def _lam(row: Row) -> "mpfr":
    return gmpy2.log(gmpy2.log(row.n))


def _fr(x: Fraction) -> "mpfr":
    return mpfr(x.numerator) / x.denominator


_E = lambda: gmpy2.exp(mpfr(1))

OracleExpr = Callable[[Row], tuple]

INEQUALITIES: Dict[str, tuple] = {
    # id: (side, strict, domain_min, expr)
    "ineq-3.1": ("lower", True, 1, lambda r: (
        r.D, 1 + 1 / _l(r) + mpfr("2.7") / _l(r) ** 2)),
    "ineq-3.5": ("lower", True, 1, lambda r: (
        r.D, 1 + 1 / _l(r) + 3 / _l(r) ** 2 - 187 / _l(r) ** 3)),
    "ineq-3.6": ("lower", True, 1, lambda r: (
        r.D, 1 + 1 / _l(r) + 3 / _l(r) ** 2 + 13 / _l(r) ** 3
        - 1160159 / _l(r) ** 4)),
    "ineq-3.7": ("lower", True, 1, lambda r: (
        r.D, 1 + 1 / _l(r) + 3 / _l(r) ** 2)),
    "ineq-3.13": ("lower", True, 2, lambda r: (
        r.D, 1 + 1 / _ell(r) - (_lam(r) - mpfr("2.5")) / _ell(r) ** 2)),
    "D>1": ("lower", True, 1, lambda r: (r.D, mpfr(1))),
    "ineq-3.9": ("upper", True, 1, lambda r: (
        r.D, 1 + 1 / _l(r) + mpfr("3.84") / _l(r) ** 2)),
    "ineq-3.10": ("upper", True, 1, lambda r: (
        r.D, 1 + 1 / _l(r) + 3 / _l(r) ** 2 + 213 / _l(r) ** 3)),
    "prop-3.8": ("upper", True, 2, lambda r: (
        r.D, 1 + 1 / _ell(r) - (_lam(r) - mpfr("4.2")) / _ell(r) ** 2)),
    "prop-4.1a": ("upper", True, 1, lambda r: (
        r.G, r.p * gmpy2.exp(-(1 + 1 / _l(r) + mpfr("2.7") / _l(r) ** 2)))),
    "prop-4.1b": ("upper", True, 1, lambda r: (
        r.G, r.p * gmpy2.exp(-(1 + 1 / _l(r) + 3 / _l(r) ** 2
                               - 187 / _l(r) ** 3)))),
    "prop-4.1c": ("upper", True, 1, lambda r: (
        r.G, r.p * gmpy2.exp(-(1 + 1 / _l(r) + 3 / _l(r) ** 2
                               + 13 / _l(r) ** 3 - 1160159 / _l(r) ** 4)))),
    "prop-4.2": ("upper", True, 1, lambda r: (
        r.G, r.p * gmpy2.exp(-(1 + 1 / _l(r) + 3 / _l(r) ** 2)))),
    "prop-4.3": ("upper", True, 1, lambda r: (
        r.G, (r.p / _E()) * (1 - 1 / _l(r)))),
    "cor-4.4": ("upper", True, 1, lambda r: (
        r.G, r.p / _E() - (mpfr(r.n) / _E()) * (1 - 1 / _l(r)
        - 1 / _l(r) ** 2 - mpfr("3.69") / _l(r) ** 3))),
    "panaitopol": ("upper", True, 1, lambda r: (r.G, r.p / _E())),
    "ineq-4.2": ("lower", True, 1, lambda r: (
        r.G, r.p * gmpy2.exp(-(1 + 1 / _l(r) + mpfr("3.84") / _l(r) ** 2)))),
    "prop-4.5b": ("lower", True, 1, lambda r: (
        r.G, r.p * gmpy2.exp(-(1 + 1 / _l(r) + 3 / _l(r) ** 2
                               + 213 / _l(r) ** 3)))),
    "prop-4.6": ("lower", True, 1, lambda r: (
        r.G, (r.p / _E()) * (1 - 1 / _l(r) - mpfr("4.74") / _l(r) ** 2))),
    "cor-4.7": ("lower", True, 1, lambda r: (
        r.G, r.p / _E() - (mpfr(r.n) / _E()) * (1 + mpfr("3.74") / _l(r)
        - mpfr("5.74") / _l(r) ** 2 - mpfr("7.59") / _l(r) ** 3))),
    "hassani-g-lower": ("lower", True, 1, lambda r: (
        r.G, r.p / _E() - mpfr("2.37") * r.n)),
    "ineq-5.1-lower": ("lower", True, 2, lambda r: (
        r.lam_big, -mpfr(15) / (2 * _ell(r)))),
    "ineq-5.1-upper": ("upper", True, 2, lambda r: (
        r.lam_big, -mpfr(5) / (36 * _ell(r)))),
    "ineq-5.2": ("lower", True, 2, lambda r: (
        r.lam_big, -1 / (2 * _ell(r)) + (_lam(r) - mpfr("2.25")) / (2 * _ell(r) ** 2)
        - (_lam(r) ** 2 - mpfr("4.5") * _lam(r) + mpfr(2251) / 100 / 3)
        / (2 * _ell(r) ** 3))),
    "prop-5.2": ("upper", True, 2, lambda r: (
        r.lam_big, -1 / (2 * _l(r)) - 1 / _l(r) ** 2
        - mpfr("2.9") / (2 * _ell(r) ** 2 * _l(r)))),
    "cor-5.3": ("upper", True, 2, lambda r: (
        r.lam_big, -1 / (2 * _ell(r)) + (_lam(r) - 2) / (2 * _ell(r) ** 2)
        + (4 * _lam(r) - mpfr("2.9")) / _ell(r) ** 3
        + mpfr("2.9") * _lam(r) / (2 * _ell(r) ** 4))),
    "thm-6.1": ("lower", True, 2, lambda r: (
        r.ratio, _E() / 2 + _E() / (4 * _ell(r))
        - _E() * (_lam(r) - mpfr("2.8")) / (4 * _ell(r) ** 2))),
    "cor-6.2": ("lower", True, 1, lambda r: (
        r.ratio, _E() / 2 + _E() / (4 * _l(r)) + mpfr("0.61") * _E() / _l(r) ** 2)),
    "cor-6.3": ("lower", True, 1, lambda r: (r.ratio, _E() / 2)),
    "thm-6.4": ("upper", True, 1, lambda r: (
        r.ratio, _E() / 2 + _E() / (4 * _l(r)) + mpfr("1.52") * _E() / _l(r) ** 2)),
    "cor-6.5": ("upper", True, 2, lambda r: (
        r.ratio, _E() / 2 + _E() / (4 * _ell(r))
        - _E() * (_lam(r) - mpfr("6.44")) / (4 * _ell(r) ** 2))),
    "rosser-3.4": ("upper", False, 1, lambda r: (mpfr(r.p), r.n * _l(r))),
    "dusart-5.3": ("lower", False, 2, lambda r: (
        mpfr(r.p), r.n * (_ell(r) + _lam(r) - 1))),
    "env-5.4-lower": ("lower", True, 2, lambda r: (
        _fr(r.R), -mpfr(r.n) / 4 - r.n / (4 * _ell(r))
        + r.n * (_lam(r) - mpfr("4.42")) / (4 * _ell(r) ** 2))),
    "env-5.4-upper": ("upper", True, 1, lambda r: (_fr(r.R), mpfr(0))),
    "env-s2": ("upper", True, 2, lambda r: (
        _fr(r.R), -mpfr(r.n) / 4 - r.n / (4 * _ell(r))
        + r.n * (_lam(r) - mpfr("2.9")) / (4 * _ell(r) ** 2))),
    "conj-3.4": ("lower", True, 1, lambda r: (
        r.D, 1 + 1 / _l(r) + 3 / _l(r) ** 2)),
}


def verdict(bound_id: str, row: Row, bits: int = DEFAULT_BITS) -> str:
    """'holds' / 'fails' by direct high-precision comparison.

    Raises if the row is below the inequality's domain (log log n needs
    n >= 2, etc.), mirroring the package's domain rules.
    """
    side, strict, domain_min, expr = INEQUALITIES[bound_id]
    if row.n < domain_min:
        raise ValueError(f"{bound_id} undefined at n={row.n}")
    with gmpy2.context(precision=bits):
        lhs, rhs = expr(row)
        if side == "lower":
            ok = lhs > rhs if strict else lhs >= rhs
        else:
            ok = lhs < rhs if strict else lhs <= rhs
    return "holds" if ok else "fails"
