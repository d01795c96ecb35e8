"""Shared exact arithmetic: factorial table, binomials, certified bounds on e."""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache

_fact = [1]
_fact_lock = threading.Lock()


def factorial(n: int) -> int:
    """n! from an append-only cache."""
    if n < 0:
        raise ValueError("factorial of a negative number")
    if n >= len(_fact):
        with _fact_lock:
            while len(_fact) <= n:
                _fact.append(_fact[-1] * len(_fact))
    return _fact[n]


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return factorial(n) // (factorial(k) * factorial(n - k))


@lru_cache(maxsize=None)
def e_upper(terms: int = 24) -> Fraction:
    """Rational strictly above e: the Taylor partial sum plus a tail bound.

    sum_{k>K} 1/k! < 2/(K+1)! for K >= 1.
    """
    s = sum(Fraction(1, factorial(k)) for k in range(terms + 1))
    return s + Fraction(2, factorial(terms + 1))


def e_lower(terms: int = 24) -> Fraction:
    return sum(Fraction(1, factorial(k)) for k in range(terms + 1))


def int_ge_exp(value: int, numer: int, denom: int = 1) -> bool:
    """Certify ``value >= exp(numer/denom)`` (returns False when undecided or false).

    Uses value**denom >= e**numer with e replaced by a rational upper bound.
    """
    if value <= 0:
        return False
    if numer <= 0:
        return value >= 1
    num, den = _e_upper_powers(numer)
    return value**denom * den >= num


@lru_cache(maxsize=1024)
def _e_upper_powers(k: int) -> tuple:
    eu = e_upper()
    return eu.numerator**k, eu.denominator**k
