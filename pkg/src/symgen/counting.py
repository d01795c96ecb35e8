"""Exact counts behind the second-moment argument.

The prime window, the sizes of the class-closed sets C (has a p-cycle with
p in the window) and M (cyclic minimal degree above sqrt(n)/2), permutations
with bounded cycle lengths, solutions of s**nu = 1, and the truncated
asymptotic series for the generation probability. Asymptotic statements are
turned into finite-range reports; nothing here asserts them at small n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .characters import PARTITION_GUARD, class_size, partition_count, partitions
from .exact import binomial, factorial
from .perm import exceeds_half_root, min_degree_from_cycle_type

__all__ = [
    "PAIR_COEFFICIENTS",
    "TRIPLE_COEFFICIENTS",
    "PrimeWindow",
    "bounded_cycle_bound_check",
    "count_bounded_cycles",
    "count_nu_roots",
    "divisor_count",
    "divisors",
    "dixon_series",
    "dixon_series_exact",
    "frak_C_density_bound_check",
    "frak_C_size",
    "frak_M_size",
    "is_prime",
    "k_of_N",
    "pi_n",
    "primes_upto",
]

#: c_1..c_6 of p(S_n) = 1 + c_1/n + ... (pairs).
PAIR_COEFFICIENTS = (-1, -1, -4, -23, -171, -1542)
#: c_1..c_5 of the probability that three random permutations generate >= A_n.
TRIPLE_COEFFICIENTS = (0, -1, 0, -3, -6)


def primes_upto(m: int) -> list:
    if m < 2:
        return []
    sieve = bytearray([1]) * (m + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(m) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, m + 1, i)))
    return [i for i, v in enumerate(sieve) if v]


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    return all(m % d for d in range(2, math.isqrt(m) + 1))


@dataclass(frozen=True)
class PrimeWindow:
    n: int
    primes: tuple


@lru_cache(maxsize=None)
def pi_n(n: int) -> PrimeWindow:
    """Primes p with n/2 < p < 3n/5."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return PrimeWindow(n, tuple(p for p in primes_upto(n) if 2 * p > n and 5 * p < 3 * n))


def frak_C_size(n: int) -> int:
    """Number of permutations in S_n containing a p-cycle for some window prime p.

    Each window prime contributes C(n, p) (p-1)! (n-p)! = n!/p; the events
    are disjoint because two cycles longer than n/2 cannot coexist.
    """
    return sum(factorial(n) // p for p in pi_n(n).primes)


def frak_C_density_bound_check(n_max: int, n_min: int = 2) -> dict:
    """Report, per n with a nonempty window, whether sum 1/p >= 1/(2 ln n)."""
    rows = []
    for n in range(max(n_min, 2), n_max + 1):
        primes = pi_n(n).primes
        if not primes:
            continue
        s = sum(Fraction(1, p) for p in primes)
        bound = 1 / (2 * math.log(n))
        rows.append({"n": n, "density": s, "bound": bound, "pass": float(s) >= bound,
                     "density_times_log_n": float(s) * math.log(n)})
    holds_from = None
    for row in reversed(rows):
        if not row["pass"]:
            break
        holds_from = row["n"]
    return {"rows": rows, "holds_from": holds_from}


def frak_M_size(n: int) -> int:
    """Number of s in S_n whose cyclic group has minimal degree > sqrt(n)/2."""
    count = partition_count(n)
    if count > PARTITION_GUARD:
        raise ValueError(f"partition guard exceeded: {count} > {PARTITION_GUARD}")
    return sum(class_size(ct) for ct in partitions(n)
               if exceeds_half_root(min_degree_from_cycle_type(ct), n))


def _cycle_dp(m: int, allowed) -> int:
    # b(k) = sum over the length j of the cycle through a fixed point
    b = [1] + [0] * m
    for k in range(1, m + 1):
        b[k] = sum(binomial(k - 1, j - 1) * factorial(j - 1) * b[k - j] for j in allowed if j <= k)
    return b[m]


def count_bounded_cycles(m: int, r: int) -> int:
    """Permutations of S_m all of whose cycles have length <= r."""
    if m < 0 or r < 1:
        raise ValueError("need m >= 0 and r >= 1")
    return _cycle_dp(m, range(1, min(r, m) + 1))


def bounded_cycle_bound_check(m_max: int) -> list:
    """Exact check of count <= (2r/m)^(m/(2r)) * m! for 1 <= r <= m/2, m <= m_max.

    With m/(2r) = a/b in lowest terms both sides are raised to the power b,
    leaving a comparison of rationals.
    """
    rows = []
    for m in range(2, m_max + 1):
        for r in range(1, m // 2 + 1):
            count = count_bounded_cycles(m, r)
            expo = Fraction(m, 2 * r)
            ratio = Fraction(count, factorial(m))
            ok = ratio**expo.denominator <= Fraction(2 * r, m) ** expo.numerator
            rows.append({"m": m, "r": r, "count": count, "pass": ok})
    return rows


def divisors(nu: int) -> list:
    if nu < 1:
        raise ValueError("nu must be >= 1")
    small = [d for d in range(1, math.isqrt(nu) + 1) if nu % d == 0]
    return sorted(set(small + [nu // d for d in small]))


def divisor_count(nu: int) -> int:
    """d(nu) from the prime factorisation."""
    if nu < 1:
        raise ValueError("nu must be >= 1")
    total, d = 1, 2
    while d * d <= nu:
        e = 0
        while nu % d == 0:
            nu //= d
            e += 1
        total *= e + 1
        d += 1
    if nu > 1:
        total *= 2
    return total


@lru_cache(maxsize=None)
def _roots_for(n: int, lengths: tuple) -> int:
    return _cycle_dp(n, lengths)


def count_nu_roots(n: int, nu: int) -> int:
    """#{s in S_n : s**nu = 1}; all cycle lengths must divide nu."""
    if n < 0 or nu < 1:
        raise ValueError("need n >= 0 and nu >= 1")
    return _roots_for(n, tuple(d for d in divisors(nu) if d <= n))


def k_of_N(n: int, N: int) -> int:
    """#{(nu, s) : 1 <= nu <= N, s in S_n, s**nu = 1}."""
    if n < 1 or N < 1:
        raise ValueError("need n >= 1 and N >= 1")
    return sum(count_nu_roots(n, nu) for nu in range(1, N + 1))


def dixon_series_exact(n: int, order: int, generators: int = 2) -> Fraction:
    """Truncated expansion 1 + sum_{m <= order} c_m / n**m, as a rational."""
    coeffs = {2: PAIR_COEFFICIENTS, 3: TRIPLE_COEFFICIENTS}.get(generators)
    if coeffs is None:
        raise ValueError("generators must be 2 or 3")
    if not 0 <= order <= len(coeffs):
        raise ValueError(f"order {order} exceeds the {len(coeffs)} available coefficients")
    if n < 2:
        raise ValueError("n must be >= 2")
    return 1 + sum(Fraction(c, n**m) for m, c in enumerate(coeffs[:order], start=1))


def dixon_series(n: int, order: int, generators: int = 2) -> float:
    return float(dixon_series_exact(n, order, generators))
