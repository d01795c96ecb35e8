"""Subgroups generated by tuples of permutations.

Orbits, minimal blocks of imprimitivity, a deterministic Schreier-Sims
base and strong generating set, and the four-way classification used by the
generation-probability experiments.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence

from .perm import Permutation, PermutationError

__all__ = [
    "Bsgs",
    "Classification",
    "Kind",
    "bsgs",
    "classify_tuple",
    "contains",
    "extract_p_cycle",
    "group_order",
    "is_primitive",
    "jordan_witness",
    "minimal_block",
    "orbits",
]


def _mul(p: tuple, q: tuple) -> tuple:
    return tuple(map(p.__getitem__, q))


def _inv(p: tuple) -> tuple:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def _degree(gens: Sequence[Permutation], n: Optional[int]) -> int:
    if gens:
        d = gens[0].n
        if any(g.n != d for g in gens):
            raise PermutationError("generators have different degrees")
        if n is not None and n != d:
            raise PermutationError(f"degree mismatch: {n} vs {d}")
        return d
    if n is None:
        raise ValueError("degree required for an empty generator list")
    return n


# -- orbits and blocks ------------------------------------------------------

def _orbits0(arrays: Sequence[tuple], n: int) -> list:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in arrays:
        for i, x in enumerate(g):
            a, b = find(i), find(x)
            if a != b:
                parent[b] = a
    groups: dict = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


def orbits(gens: Sequence[Permutation], n: Optional[int] = None) -> list:
    """Orbits of <gens> on {1..n} as sorted lists of 1-based points."""
    n = _degree(gens, n)
    return [[x + 1 for x in orb] for orb in _orbits0([g.array for g in gens], n)]


def _minimal_block0(arrays: Sequence[tuple], n: int, a: int, b: int) -> list:
    # Atkinson: merge a~b, then close under "x~y implies g(x)~g(y)" along merge edges.
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    parent[b] = a
    queue = [(a, b)]
    while queue:
        x, y = queue.pop()
        for g in arrays:
            u, v = find(g[x]), find(g[y])
            if u != v:
                parent[v] = u
                queue.append((u, v))
    root = find(a)
    return [i for i in range(n) if find(i) == root]


def _check_transitive(arrays, n):
    if len(_orbits0(arrays, n)) != 1:
        raise ValueError("group is not transitive")


def minimal_block(gens: Sequence[Permutation], alpha: int, beta: int) -> list:
    """Smallest block of imprimitivity containing the points alpha and beta.

    Returns the whole point set when no proper block contains both.
    """
    n = _degree(gens, None)
    if alpha == beta:
        raise ValueError("alpha and beta must differ")
    arrays = [g.array for g in gens]
    _check_transitive(arrays, n)
    return [x + 1 for x in _minimal_block0(arrays, n, alpha - 1, beta - 1)]


def _find_block0(arrays, n) -> Optional[list]:
    """A nontrivial block through point 0, or None if the (transitive) group is primitive."""
    if n <= 3 or _is_prime(n):
        # block sizes divide n
        return None
    for b in range(1, n):
        blk = _minimal_block0(arrays, n, 0, b)
        if len(blk) < n:
            return blk
    return None


def is_primitive(gens: Sequence[Permutation]) -> bool:
    n = _degree(gens, None)
    arrays = [g.array for g in gens]
    _check_transitive(arrays, n)
    return _find_block0(arrays, n) is None


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


# -- Schreier-Sims -----------------------------------------------------------

@dataclass
class Bsgs:
    """Base and strong generating set.

    ``transversals[i]`` maps each point of the i-th basic orbit to a coset
    representative u with ``u(base[i]) == point``; all data is 0-based.
    """

    n: int
    base: list
    strong_gens: list
    transversals: list
    _inv_transversals: list = field(default_factory=list, repr=False)

    @property
    def order(self) -> int:
        return math.prod(len(t) for t in self.transversals)

    def basic_orbits(self) -> list:
        return [sorted(t) for t in self.transversals]

    def sift(self, g: tuple) -> tuple:
        """Return (residue, level reached)."""
        if not self._inv_transversals:
            self._inv_transversals = [{k: _inv(u) for k, u in t.items()} for t in self.transversals]
        for level, b in enumerate(self.base):
            beta = g[b]
            inv = self._inv_transversals[level]
            if beta not in inv:
                return g, level
            g = _mul(inv[beta], g)
        return g, len(self.base)


def _orbit_transversal(n, b, gens) -> dict:
    ident = tuple(range(n))
    trans = {b: ident}
    frontier = [b]
    while frontier:
        nxt = []
        for x in frontier:
            ux = trans[x]
            for s in gens:
                y = s[x]
                if y not in trans:
                    trans[y] = _mul(s, ux)
                    nxt.append(y)
        frontier = nxt
    return trans


def _schreier_sims0(arrays: Sequence[tuple], n: int) -> Bsgs:
    ident = tuple(range(n))
    gens = []
    for g in arrays:
        if g != ident and g not in gens:
            gens.append(g)
    if not gens:
        return Bsgs(n, [], [], [])

    nfact = math.factorial(n)
    all_even = all(_parity0(g) == 0 for g in gens)
    target = nfact // 2 if all_even else nfact

    base: list = []
    for g in gens:
        if all(g[b] == b for b in base):
            base.append(next(i for i in range(n) if g[i] != i))
    strong = list(gens)
    level_gens = [[s for s in strong if all(s[b] == b for b in base[:i])] for i in range(len(base))]
    trans = [_orbit_transversal(n, base[i], level_gens[i]) for i in range(len(base))]
    inv_cache: list = [dict() for _ in base]

    def inv_u(level, beta):
        c = inv_cache[level]
        u = c.get(beta)
        if u is None:
            u = c[beta] = _inv(trans[level][beta])
        return u

    def strip(g, start):
        for lv in range(start, len(base)):
            beta = g[base[lv]]
            if beta not in trans[lv]:
                return g, lv
            g = _mul(inv_u(lv, beta), g)
        return g, len(base)

    def complete() -> bool:
        # partial orbit product is a lower bound for |G|; equality with the
        # largest possible order certifies the structure is a full BSGS
        return math.prod(len(t) for t in trans) == target

    i = len(base) - 1
    while i >= 0 and not complete():
        restart = False
        for beta in list(trans[i]):
            u_beta = trans[i][beta]
            for s in level_gens[i]:
                gamma = s[beta]
                sg = _mul(inv_u(i, gamma), _mul(s, u_beta))
                if sg == ident:
                    continue
                h, j = strip(sg, i + 1)
                if j < len(base) or h != ident:
                    if j == len(base):
                        base.append(next(x for x in range(n) if h[x] != x))
                        level_gens.append([])
                        trans.append({})
                        inv_cache.append({})
                    strong.append(h)
                    for lv in range(i + 1, j + 1):
                        level_gens[lv].append(h)
                        trans[lv] = _orbit_transversal(n, base[lv], level_gens[lv])
                        inv_cache[lv] = {}
                    i = j
                    restart = True
                    break
            if restart:
                break
        if not restart:
            i -= 1
    return Bsgs(n, base, strong, trans)


def _parity0(g: tuple) -> int:
    seen = [False] * len(g)
    cycles = 0
    for s in range(len(g)):
        if not seen[s]:
            cycles += 1
            j = s
            while not seen[j]:
                seen[j] = True
                j = g[j]
    return (len(g) - cycles) % 2


def bsgs(gens: Sequence[Permutation], n: Optional[int] = None) -> Bsgs:
    """Deterministic Schreier-Sims for <gens>."""
    n = _degree(gens, n)
    return _schreier_sims0([g.array for g in gens], n)


def group_order(b: Bsgs) -> int:
    return b.order


def contains(b: Bsgs, p: Permutation) -> bool:
    """Membership by sifting."""
    if p.n != b.n:
        raise PermutationError(f"degree mismatch: {p.n} vs {b.n}")
    h, level = b.sift(p.array)
    return level == len(b.base) and h == tuple(range(b.n))


# -- p-cycles and Jordan's theorem -------------------------------------------

def extract_p_cycle(p: Permutation, prime: int) -> Permutation:
    """Power of p that is a single ``prime``-cycle.

    Requires a cycle of length ``prime`` and no other cycle length divisible
    by it (automatic when prime > n/2).
    """
    lengths = [len(c) for c in p.cycles()]
    if lengths.count(prime) != 1 or any(m % prime == 0 for m in lengths if m != prime):
        raise ValueError(f"no power of {p} is a {prime}-cycle")
    e = math.lcm(*(m for m in lengths if m != prime)) if len(lengths) > 1 else 1
    return p ** e


def _jordan_prime(g: tuple, n: int) -> Optional[int]:
    """Largest prime p <= n-3 such that some power of g is a p-cycle."""
    seen = [False] * n
    lengths = []
    for s in range(n):
        if not seen[s]:
            m = 0
            j = s
            while not seen[j]:
                seen[j] = True
                j = g[j]
                m += 1
            lengths.append(m)
    best = None
    for p in set(lengths):
        if p <= n - 3 and _is_prime(p) and lengths.count(p) == 1:
            if all(m % p for m in lengths if m != p):
                if best is None or p > best:
                    best = p
    return best


def _short_products(arrays: Sequence[tuple], limit: int):
    """Yield up to ``limit`` distinct products of the generators in breadth-first word order."""
    seen: set = set()
    queue = deque(arrays)
    while queue and len(seen) < limit:
        w = queue.popleft()
        if w in seen:
            continue
        seen.add(w)
        yield w
        for g in arrays:
            queue.append(_mul(w, g))


def jordan_witness(gens: Sequence[Permutation], max_words: int = 64) -> Optional[tuple]:
    """Search short products for an element with a p-cycle power, p prime <= n-3.

    Returns (element, p) or None.
    """
    n = _degree(gens, None)
    if n < 5:
        return None
    for w in _short_products([g.array for g in gens], max_words):
        p = _jordan_prime(w, n)
        if p is not None:
            return Permutation._raw(w), p
    return None


# -- classification -----------------------------------------------------------

class Kind(str, Enum):
    ALL_OR_ALTERNATING = "AllOrAlternating"
    INTRANSITIVE = "Intransitive"
    TRANSITIVE_IMPRIMITIVE = "TransitiveImprimitive"
    PRIMITIVE_PROPER = "PrimitiveProper"


@dataclass(frozen=True)
class Classification:
    """Outcome of :func:`classify_tuple` with its witness.

    ``orbits`` for Intransitive, ``block`` for TransitiveImprimitive, ``order``
    when a group order was computed, ``jordan_prime`` when Jordan's theorem
    decided the case, and ``alternating`` (all generators even) for
    AllOrAlternating.
    """

    kind: Kind
    orbits: Optional[tuple] = None
    block: Optional[tuple] = None
    order: Optional[int] = None
    jordan_prime: Optional[int] = None
    alternating: Optional[bool] = None

    def to_dict(self) -> dict:
        d: dict = {"kind": self.kind.value}
        if self.orbits is not None:
            d["orbit_sizes"] = [len(o) for o in self.orbits]
        if self.block is not None:
            d["block"] = list(self.block)
        if self.order is not None:
            d["order"] = str(self.order)
        if self.jordan_prime is not None:
            d["jordan_prime"] = self.jordan_prime
        if self.alternating is not None:
            d["alternating"] = self.alternating
        return d


def classify_tuple(perms: Sequence[Permutation], fast_path: bool = True, max_words: int = 64) -> Classification:
    """Decide which of the four cases <perms> falls in.

    With ``fast_path`` a short product having a p-cycle power (p <= n-3) in a
    primitive group settles AllOrAlternating by Jordan's theorem, skipping
    the order computation. A transitive group containing a p-cycle with
    p > n/2 is automatically primitive: the cycle cannot stabilise a block
    of size b < n (b would exceed n/2) nor permute n/b < p blocks nontrivially.
    """
    if not perms:
        raise ValueError("need at least one permutation")
    n = _degree(perms, None)
    arrays = [p.array for p in perms]
    all_even = all(_parity0(g) == 0 for g in arrays)
    if n <= 2:
        # every subgroup of S_2 contains A_2 = 1
        return Classification(Kind.ALL_OR_ALTERNATING, order=2 if not all_even else 1,
                              alternating=all_even)

    orbs = _orbits0(arrays, n)
    if len(orbs) > 1:
        return Classification(Kind.INTRANSITIVE, orbits=tuple(tuple(x + 1 for x in o) for o in orbs))

    witness = jordan_witness(perms, max_words) if fast_path else None
    if witness is not None and 2 * witness[1] > n:
        return Classification(Kind.ALL_OR_ALTERNATING, jordan_prime=witness[1], alternating=all_even)

    blk = _find_block0(arrays, n)
    if blk is not None:
        return Classification(Kind.TRANSITIVE_IMPRIMITIVE, block=tuple(x + 1 for x in blk))

    if witness is not None:
        return Classification(Kind.ALL_OR_ALTERNATING, jordan_prime=witness[1], alternating=all_even)

    order = _schreier_sims0(arrays, n).order
    if 2 * order >= math.factorial(n):
        return Classification(Kind.ALL_OR_ALTERNATING, order=order, alternating=all_even)
    return Classification(Kind.PRIMITIVE_PROPER, order=order)
