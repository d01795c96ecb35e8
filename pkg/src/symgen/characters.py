"""Irreducible characters of S_n.

Partitions, rim hooks (border strips), the Murnaghan-Nakayama recursion,
hook-length dimensions, the family Lambda(n, p) of partitions carrying a
p-rim hook with remainder (n - p), and inner products with class indicators.
All arithmetic is exact (``int`` and ``fractions.Fraction``).
"""

from __future__ import annotations

import csv
import io
import math
import operator
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator, Optional

from .exact import binomial, factorial, int_ge_exp

__all__ = [
    "LambdaEntry",
    "Partition",
    "RimHook",
    "character_bound_survey",
    "character_table",
    "character_table_csv",
    "class_size",
    "conjugate",
    "delta",
    "dim_lower_bound_check",
    "dimension",
    "frak_C_inner_product",
    "hook_lengths",
    "inner_product_indicator",
    "is_border_strip",
    "lambda_np",
    "lambda_np_leg",
    "mn_character",
    "partitions",
    "rim_hooks",
]

PARTITION_GUARD = 10**5


class Partition(tuple):
    """A weakly decreasing tuple of positive integers; also used for cycle types."""

    def __new__(cls, parts=()):
        parts = tuple(map(int, parts))
        if parts and parts[-1] <= 0:
            raise ValueError(f"parts must be positive: {parts}")
        if any(map(operator.lt, parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts) -> "Partition":
        """Canonicalise an arbitrary multiset of positive parts."""
        return cls(sorted((p for p in parts if p), reverse=True))

    @property
    def n(self) -> int:
        return sum(self)

    def counts(self) -> Counter:
        return Counter(self)

    def __repr__(self):
        return f"Partition({tuple(self)})"


def partitions(n: int) -> list:
    """All partitions of n in reverse lexicographic order, starting at (n)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return [Partition(p) for p in _partitions(n, n)]


def _partitions(n: int, cap: int) -> Iterator[tuple]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    # Euler's pentagonal recurrence
    if n < 0:
        return 0
    if n == 0:
        return 1
    total, k = 0, 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_count(n - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


def conjugate(lam) -> Partition:
    out = []
    i = len(lam)
    for j in range(1, (lam[0] if lam else 0) + 1):
        while lam[i - 1] < j:
            i -= 1
        out.append(i)
    return Partition(out)


def class_size(ct) -> int:
    """Size of the conjugacy class with cycle type ``ct``: n! / prod j^c_j c_j!."""
    n = sum(ct)
    denom = 1
    for j, c in Counter(ct).items():
        denom *= j**c * factorial(c)
    return factorial(n) // denom


# -- rim hooks ---------------------------------------------------------------

@dataclass(frozen=True)
class RimHook:
    """A removable border strip. ``cells`` are 1-based (row, column) boxes."""

    cells: tuple
    leg_length: int
    remainder: Partition

    @property
    def length(self) -> int:
        return len(self.cells)


def skew_cells(lam, mu) -> tuple:
    return tuple((i + 1, j + 1) for i, row in enumerate(lam)
                 for j in range(mu[i] if i < len(mu) else 0, row))


def is_border_strip(cells) -> bool:
    """Edgewise connected and free of 2x2 squares."""
    cs = set(cells)
    if not cs:
        return False
    if any((i + 1, j) in cs and (i, j + 1) in cs and (i + 1, j + 1) in cs for i, j in cs):
        return False
    start = next(iter(cs))
    seen = {start}
    stack = [start]
    while stack:
        i, j = stack.pop()
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in cs and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cs)


def _beta(lam) -> list:
    l = len(lam)
    return [lam[i] + (l - 1 - i) for i in range(l)]


def _from_beta(beta) -> Partition:
    bs = sorted(beta, reverse=True)
    l = len(bs)
    return Partition(x for x in (bs[i] - (l - 1 - i) for i in range(l)) if x > 0)


def _remove_hooks(lam: tuple, r: int) -> list:
    """(remainder, leg length) for every r-rim hook, via beta numbers.

    Removing an r-rim hook is moving one bead b to the free position b - r;
    the leg length is the number of beads strictly between.
    """
    beta = _beta(lam)
    bset = set(beta)
    out = []
    for b in beta:
        t = b - r
        if t < 0 or t in bset:
            continue
        leg = sum(1 for x in beta if t < x < b)
        nb = [t if x == b else x for x in beta]
        out.append((_from_beta(nb), leg))
    return out


def rim_hooks(lam, r: int) -> list:
    """All r-rim hooks of ``lam`` with their leg lengths and remainders."""
    lam = Partition(lam)
    if not 1 <= r <= lam.n:
        raise ValueError(f"hook length {r} outside 1..{lam.n}")
    return [RimHook(skew_cells(lam, mu), leg, mu) for mu, leg in _remove_hooks(tuple(lam), r)]


# -- characters ---------------------------------------------------------------

@lru_cache(maxsize=None)
def _mn(lam: tuple, cycles: tuple) -> int:
    if not cycles:
        return 1 if not lam else 0
    r, rest = cycles[0], cycles[1:]
    total = 0
    for mu, leg in _remove_hooks(lam, r):
        val = _mn(tuple(mu), rest)
        if val:
            total += -val if leg % 2 else val
    return total


def mn_character(lam, ct, order: str = "decreasing") -> int:
    """chi^lam on the class of cycle type ``ct`` by the Murnaghan-Nakayama rule.

    Cycles are removed largest first by default; ``order="increasing"``
    removes smallest first (the value is independent of the order).
    """
    lam = tuple(lam)
    if sum(lam) != sum(ct):
        raise ValueError(f"size mismatch: |lambda| = {sum(lam)}, |cycle type| = {sum(ct)}")
    cycles = tuple(sorted(ct, reverse=(order == "decreasing")))
    return _mn(lam, cycles)


def hook_lengths(lam) -> list:
    """Hook length of every box, row by row."""
    lc = conjugate(lam)
    return [[lam[i] - j + lc[j] - i - 1 for j in range(lam[i])] for i in range(len(lam))]


def dimension(lam) -> int:
    """chi^lam(1) by the hook length formula."""
    n = sum(lam)
    prod = 1
    for row in hook_lengths(lam):
        prod *= math.prod(row)
    return factorial(n) // prod


def character_table(n: int) -> tuple:
    """(partitions, classes, table) with ``table[i][j] = chi^{parts[i]}(classes[j])``."""
    parts = partitions(n)
    _guard(len(parts))
    return parts, parts, [[mn_character(lam, ct) for ct in parts] for lam in parts]


def character_table_csv(n: int) -> str:
    parts, classes, table = character_table(n)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["lambda"] + [_ptext(c) for c in classes])
    for lam, row in zip(parts, table):
        w.writerow([_ptext(lam)] + [str(v) for v in row])
    return buf.getvalue()


def _ptext(p) -> str:
    return "(" + ",".join(str(x) for x in p) + ")"


def _guard(count: int):
    if count > PARTITION_GUARD:
        raise ValueError(f"partition guard exceeded: {count} > {PARTITION_GUARD}")


# -- Lambda(n, p) -----------------------------------------------------------------

@dataclass(frozen=True)
class LambdaEntry:
    """A member of Lambda(n, p) with its distinguished p-rim hook."""

    partition: Partition
    hook: RimHook
    case: str  # "a": hook avoids row 1, "b": hook meets row 1

    @property
    def leg_length(self) -> int:
        return self.hook.leg_length


def _check_window_prime(n: int, p: int):
    from .counting import is_prime

    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not n < 2 * p < 2 * n:
        raise ValueError(f"{p} is outside n/2 < p < n for n = {n}")


def lambda_np(n: int, p: int) -> list:
    """Closed form of Lambda(n, p) for p prime with n/2 < p < n.

    The window primes n/2 < p < 3n/5 are the case of interest; the closed
    form holds on the whole range n/2 < p < n.

    lam = (l1, l2, 1^(n - l1 - l2)) with either
    (a) l1 = n - p and 1 <= l2 <= n - p, leg length p - l2, or
    (b) n - p < l1 <= p - 1 and l2 = n - p + 1, leg length p - l1.
    """
    _check_window_prime(n, p)
    out = []
    m = n - p
    for l2 in range(1, m + 1):
        lam = Partition((m, l2) + (1,) * (p - l2))
        out.append(LambdaEntry(lam, RimHook(skew_cells(lam, (m,)), p - l2, Partition((m,))), "a"))
    for l1 in range(m + 1, p):
        lam = Partition((l1, m + 1) + (1,) * (p - 1 - l1))
        out.append(LambdaEntry(lam, RimHook(skew_cells(lam, (m,)), p - l1, Partition((m,))), "b"))
    return out


def lambda_np_leg(lam, n: int, p: int) -> Optional[int]:
    """Leg length of the distinguished hook if ``lam`` is in Lambda(n, p), else None."""
    lam = tuple(lam)
    m = n - p
    if sum(lam) != n or len(lam) < 2 or any(x != 1 for x in lam[2:]):
        return None
    l1, l2 = lam[0], lam[1]
    if len(lam) != 2 + n - l1 - l2:
        return None
    if l1 == m and 1 <= l2 <= m:
        return p - l2
    if m < l1 <= p - 1 and l2 == m + 1:
        return p - l1
    return None


def dim_lower_bound_check(n: int) -> list:
    """Per (p, lam) in Lambda(n, p): certified dim >= exp(n/4) and dim >= C(n, p)/n.

    The exponential comparison is decided exactly as dim**4 >= e**n with e
    replaced by a rational upper bound, so ``pass`` is a certificate.
    """
    from .counting import pi_n

    rows = []
    for p in pi_n(n).primes:
        cnp = binomial(n, p)
        for entry in lambda_np(n, p):
            d = dimension(entry.partition)
            rows.append({
                "n": n,
                "p": p,
                "lambda": list(entry.partition),
                "dimension": d,
                "exp_bound_pass": int_ge_exp(d, n, 4),
                "binomial_bound_pass": n * d >= cnp,
            })
    return rows


# -- inner products -----------------------------------------------------------

def inner_product_indicator(lam, predicate: Callable, n: int) -> Fraction:
    """<chi^lam, 1_S> for the class-closed set S = {types t : predicate(t)}, by class sums."""
    classes = partitions(n)
    _guard(len(classes))
    total = sum(class_size(ct) * mn_character(lam, ct) for ct in classes if predicate(ct))
    return Fraction(total, factorial(n))


def frak_C_inner_product(lam, n: int) -> Fraction:
    """<chi^lam, 1_C> where C = permutations with a p-cycle for some p in the window.

    Closed form: 1/p summed over the window for the trivial character, and
    (-1)^leg / p summed over the primes p with lam in Lambda(n, p) otherwise.
    """
    from .counting import pi_n

    lam = tuple(lam)
    primes = pi_n(n).primes
    if lam == (n,):
        return sum((Fraction(1, p) for p in primes), Fraction(0))
    total = Fraction(0)
    for p in primes:
        leg = lambda_np_leg(lam, n, p)
        if leg is not None:
            total += Fraction((-1) ** leg, p)
    return total


# -- character bound ------------------------------------------------------------

def delta(n: int, f: int) -> float:
    """Exponent in |chi(s)| <= chi(1)^(1 - delta) for s with f fixed points."""
    if not 0 <= f <= n:
        raise ValueError(f"fixed point count {f} outside 0..{n}")
    if n < 2:
        raise ValueError("n must be >= 2")
    if f == 0:
        return 1 / 13
    return math.log(n / f) / (32 * math.log(n))


def character_bound_survey(n: int) -> dict:
    """Check |chi^lam(C)| <= dim(lam)^(1 - delta) over the whole table (report only)."""
    if n > 16:
        raise ValueError("survey guard: n <= 16")
    parts, classes, table = character_table(n)
    dims = [dimension(lam) for lam in parts]
    violations = []
    checked = 0
    for i, lam in enumerate(parts):
        for j, ct in enumerate(classes):
            f = sum(1 for x in ct if x == 1)
            dl = delta(n, f)
            chi = abs(table[i][j])
            checked += 1
            if chi == 0 or dims[i] == 1:
                continue
            if math.log(chi) > (1 - dl) * math.log(dims[i]) + 1e-12:
                violations.append({"lambda": list(lam), "class": list(ct), "chi": table[i][j],
                                   "dimension": dims[i], "delta": dl})
    return {"n": n, "checked": checked, "violation_count": len(violations), "violations": violations}
