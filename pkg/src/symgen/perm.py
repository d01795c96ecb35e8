"""Permutations of {1..n}: composition, powers, cycle structure, sampling.

Composition convention, used everywhere in the package::

    (p * q)(i) == p(q(i))

so a product such as ``pi * sigma**i`` is ``compose(pi, power(sigma, i))``.
Points are 1-based in every public surface (parsing, formatting, ``__call__``)
and stored 0-based internally as a tuple of images.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "INFINITY",
    "Permutation",
    "PermutationError",
    "compose",
    "exceeds_half_root",
    "format_cycles",
    "format_oneline",
    "cycle_type",
    "fixed_points",
    "fixed_points_of_power",
    "in_frak_C",
    "in_frak_M",
    "inverse",
    "min_degree_cyclic",
    "min_degree_from_cycle_type",
    "order",
    "parse",
    "power",
    "random_even_permutation",
    "random_permutation",
    "shuffle_images",
]

#: Marker for the minimal degree of the trivial group (empty minimum).
INFINITY = math.inf


class PermutationError(ValueError):
    """Malformed permutation data (bad text, repeated or out-of-range point)."""


class Permutation:
    """An immutable permutation of ``{1..n}``.

    ``Permutation([2, 1, 3])`` is the transposition swapping 1 and 2 in S_3.
    The cycle decomposition is computed lazily and cached.
    """

    __slots__ = ("_img", "_cycles")

    def __init__(self, images: Iterable[int]):
        img = tuple(int(x) - 1 for x in images)
        n = len(img)
        if n == 0:
            raise PermutationError("degree must be positive")
        if sorted(img) != list(range(n)):
            raise PermutationError(f"images {[x + 1 for x in img]} are not a bijection of 1..{n}")
        self._img = img
        self._cycles = None

    @classmethod
    def _raw(cls, img: tuple) -> "Permutation":
        # trusted 0-based tuple, no validation
        p = object.__new__(cls)
        p._img = img
        p._cycles = None
        return p

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._raw(tuple(range(n)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        """Build from 1-based cycles, e.g. ``from_cycles([(1, 2, 3), (4, 5)], 6)``."""
        img = list(range(n))
        seen = set()
        for cyc in cycles:
            for x in cyc:
                if not 1 <= x <= n:
                    raise PermutationError(f"point {x} out of range 1..{n}")
                if x in seen:
                    raise PermutationError(f"repeated point {x}")
                seen.add(x)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                img[a - 1] = b - 1
        return cls._raw(tuple(img))

    @property
    def n(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple:
        """1-based image list: ``images[i - 1] == p(i)``."""
        return tuple(x + 1 for x in self._img)

    @property
    def array(self) -> tuple:
        """0-based image tuple (internal representation)."""
        return self._img

    def __call__(self, i: int) -> int:
        return self._img[i - 1] + 1

    def cycles(self, include_fixed: bool = True) -> list:
        """Cycles as 0-based tuples, each starting at its smallest point."""
        if self._cycles is None:
            img = self._img
            seen = [False] * len(img)
            out = []
            for start in range(len(img)):
                if seen[start]:
                    continue
                cyc = [start]
                seen[start] = True
                j = img[start]
                while j != start:
                    seen[j] = True
                    cyc.append(j)
                    j = img[j]
                out.append(tuple(cyc))
            self._cycles = out
        if include_fixed:
            return self._cycles
        return [c for c in self._cycles if len(c) > 1]

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self._img))

    def parity(self) -> int:
        """0 for even, 1 for odd."""
        return (self.n - len(self.cycles())) % 2

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, k: int) -> "Permutation":
        return power(self, k)

    def __invert__(self) -> "Permutation":
        return inverse(self)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self._img == other._img

    def __hash__(self):
        return hash(self._img)

    def __repr__(self):
        return f"Permutation.from_cycles({format_cycles(self)!r}, n={self.n})"

    def __str__(self):
        return format_cycles(self)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return ``p * q``, the map ``i -> p(q(i))``."""
    if p.n != q.n:
        raise PermutationError(f"degree mismatch: {p.n} vs {q.n}")
    a = p._img
    return Permutation._raw(tuple(map(a.__getitem__, q._img)))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.n
    for i, x in enumerate(p._img):
        inv[x] = i
    return Permutation._raw(tuple(inv))


def power(p: Permutation, k: int) -> Permutation:
    """``p**k`` for any integer k, stepping each cycle by ``k mod len`` in O(n)."""
    img = [0] * p.n
    for cyc in p.cycles():
        m = len(cyc)
        s = k % m
        for idx, x in enumerate(cyc):
            img[x] = cyc[(idx + s) % m]
    return Permutation._raw(tuple(img))


def cycle_type(p: Permutation) -> tuple:
    """Weakly decreasing cycle lengths, fixed points included as 1-cycles."""
    return tuple(sorted((len(c) for c in p.cycles()), reverse=True))


def order(p: Permutation) -> int:
    return math.lcm(*(len(c) for c in p.cycles()))


def fixed_points(p: Permutation) -> int:
    return sum(1 for i, x in enumerate(p._img) if i == x)


def fixed_points_of_power(ct: Sequence[int], k: int) -> int:
    """Fixed points of ``s**k`` for any s of cycle type ``ct``: sum of j over j-cycles with j | k."""
    return sum(j for j in ct if k % j == 0)


def _prime_factors(m: int) -> list:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def min_degree_from_cycle_type(ct: Sequence[int]):
    """Minimal degree of the cyclic group generated by an element of type ``ct``.

    Any non-identity power s**k has Fix(s**k) = Fix(s**gcd(k, L)) with L the
    order, and gcd(k, L) divides L/q for some prime q | L, so the maximum
    number of fixed points is attained at one of the exponents L/q.
    """
    n = sum(ct)
    L = math.lcm(*ct) if ct else 1
    if L == 1:
        return INFINITY
    return min(n - fixed_points_of_power(ct, L // q) for q in _prime_factors(L))


def min_degree_cyclic(p: Permutation):
    return min_degree_from_cycle_type(cycle_type(p))


def in_frak_C(p: Permutation, primes: Iterable[int]) -> bool:
    """True iff p has a cycle whose length is one of ``primes``."""
    ps = set(primes)
    return any(len(c) in ps for c in p.cycles())


def exceeds_half_root(d, n: int) -> bool:
    """``d > sqrt(n)/2`` decided in integers; ``INFINITY`` always exceeds."""
    if d == INFINITY:
        return True
    return 4 * d * d > n


def in_frak_M(p: Permutation) -> bool:
    """Minimal degree of <p> exceeds sqrt(n)/2 (the identity qualifies vacuously)."""
    return exceeds_half_root(min_degree_cyclic(p), p.n)


# -- sampling ---------------------------------------------------------------

def shuffle_images(rng: np.random.Generator, n: int) -> tuple:
    """Fisher-Yates shuffle of range(n) using exactly n-1 bounded draws."""
    a = list(range(n))
    if n > 1:
        draws = rng.integers(0, np.arange(n, 1, -1)).tolist()
        for i, j in zip(range(n - 1, 0, -1), draws):
            a[i], a[j] = a[j], a[i]
    return tuple(a)


def random_permutation(rng: np.random.Generator, n: int) -> Permutation:
    """Uniform element of S_n."""
    if n < 1:
        raise PermutationError("n must be >= 1")
    return Permutation._raw(shuffle_images(rng, n))


def _parity_of(img: tuple) -> int:
    seen = [False] * len(img)
    cycles = 0
    for s in range(len(img)):
        if not seen[s]:
            cycles += 1
            j = s
            while not seen[j]:
                seen[j] = True
                j = img[j]
    return (len(img) - cycles) % 2


def random_even_permutation(rng: np.random.Generator, n: int) -> Permutation:
    """Uniform element of A_n by rejection from S_n."""
    if n < 2:
        raise PermutationError("n must be >= 2")
    while True:
        img = shuffle_images(rng, n)
        if _parity_of(img) == 0:
            return Permutation._raw(img)


# -- text formats -----------------------------------------------------------

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse(text: str, n: int) -> Permutation:
    """Parse cycle notation ``"(1 2 3)(4 5)"`` or one-line notation ``"2 3 1 5 4"``.

    The degree is always explicit.
    """
    s = text.strip()
    if s.startswith("("):
        if _CYCLE_RE.sub("", s).strip():
            raise PermutationError(f"malformed cycle notation: {text!r}")
        cycles = []
        for body in _CYCLE_RE.findall(s):
            tokens = body.replace(",", " ").split()
            try:
                cycles.append([int(t) for t in tokens])
            except ValueError:
                raise PermutationError(f"malformed cycle notation: {text!r}") from None
        return Permutation.from_cycles(cycles, n)
    tokens = s.replace(",", " ").split()
    try:
        vals = [int(t) for t in tokens]
    except ValueError:
        raise PermutationError(f"malformed one-line notation: {text!r}") from None
    if len(vals) != n:
        raise PermutationError(f"one-line notation has {len(vals)} entries, expected {n}")
    seen = set()
    for v in vals:
        if not 1 <= v <= n:
            raise PermutationError(f"point {v} out of range 1..{n}")
        if v in seen:
            raise PermutationError(f"repeated point {v}")
        seen.add(v)
    return Permutation(vals)


def format_cycles(p: Permutation) -> str:
    cyc = p.cycles(include_fixed=False)
    if not cyc:
        return "()"
    return "".join("(" + " ".join(str(x + 1) for x in c) + ")" for c in cyc)


def format_oneline(p: Permutation) -> str:
    return " ".join(str(x) for x in p.images)
