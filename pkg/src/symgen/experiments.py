"""Seeded Monte Carlo and exact small-n experiments.

Trial ``t`` of a run with seed ``s`` draws from its own Philox stream keyed
by ``s`` with ``t`` in the top word of the counter, so results do not depend
on how trials are split across workers.
"""

from __future__ import annotations

import itertools
import math
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import numpy as np

from .characters import (
    class_size,
    dimension,
    frak_C_inner_product,
    mn_character,
    partition_count,
    partitions,
)
from .counting import dixon_series, frak_C_size, frak_M_size, pi_n
from .exact import factorial
from .groups import Kind, _mul, _parity0, _schreier_sims0, classify_tuple
from .perm import (
    Permutation,
    exceeds_half_root,
    min_degree_from_cycle_type,
    shuffle_images,
)

__all__ = [
    "ExperimentConfig",
    "enumerate_words",
    "estimate_p",
    "evaluate_word",
    "exact_p_small",
    "exact_pair_correlation",
    "exact_variance_X",
    "is_reduced",
    "min_degree_filter_stats",
    "pair_correlation_terms",
    "second_moment_run",
    "trial_rng",
    "word_count",
    "word_experiment",
]

WORD_GUARD = 12
DIRECT_CORRELATION_MAX_N = 9
CHARACTER_CORRELATION_MAX_N = 12


@dataclass(frozen=True)
class ExperimentConfig:
    n: int
    trials: int = 1000
    seed: int = 0
    N: int = 1
    generators: int = 2
    word_length: int = 4
    group: str = "S"
    workers: int = 1

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be >= 2")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.N < 1:
            raise ValueError("N must be >= 1")
        if self.generators not in (2, 3):
            raise ValueError("generators must be 2 or 3")
        if self.group not in ("S", "A"):
            raise ValueError("group must be 'S' or 'A'")

    def echo(self) -> dict:
        d = asdict(self)
        d.pop("workers")
        return d


def trial_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=seed % 2**128, counter=index << 192))


def _run_trials(fn, config: ExperimentConfig) -> list:
    """Apply ``fn(config, start, stop)`` over all trials; returns per-trial results in order."""
    T = config.trials
    if config.workers <= 1 or T < 2:
        return fn(config, 0, T)
    chunks = max(config.workers * 4, 1)
    bounds = [T * k // chunks for k in range(chunks + 1)]
    with ProcessPoolExecutor(max_workers=config.workers) as pool:
        futures = [pool.submit(fn, config, a, b) for a, b in zip(bounds, bounds[1:]) if b > a]
        out = []
        for f in futures:
            out.extend(f.result())
    return out


def _ci95(successes: int, trials: int) -> tuple:
    p = successes / trials
    if min(successes, trials - successes) < 30:
        # Wilson score interval
        z = 1.959963984540054
        denom = 1 + z * z / trials
        centre = (p + z * z / (2 * trials)) / denom
        half = z * math.sqrt(p * (1 - p) / trials + z * z / (4 * trials * trials)) / denom
        return centre - half, centre + half, "wilson"
    se = math.sqrt(p * (1 - p) / trials)
    return p - 1.959963984540054 * se, p + 1.959963984540054 * se, "normal"


def _sigma_distance(estimate: float, theoretical: float, trials: int) -> Optional[float]:
    if not 0 <= theoretical <= 1:
        return None
    sd = math.sqrt(theoretical * (1 - theoretical) / trials)
    if sd == 0:
        return 0.0 if estimate == theoretical else math.inf
    return (estimate - theoretical) / sd


# -- generation probability -------------------------------------------------------

def _sample(rng, n: int, group: str) -> Permutation:
    while True:
        img = shuffle_images(rng, n)
        if group == "S" or _parity0(img) == 0:
            return Permutation._raw(img)


def _estimate_chunk(config: ExperimentConfig, start: int, stop: int) -> list:
    out = []
    for t in range(start, stop):
        rng = trial_rng(config.seed, t)
        perms = [_sample(rng, config.n, config.group) for _ in range(config.generators)]
        c = classify_tuple(perms)
        out.append((c.kind.value, bool(c.alternating)))
    return out


def _group_elements(n: int, group: str) -> list:
    out = []
    for img in itertools.permutations(range(n)):
        if group == "S" or _parity0(img) == 0:
            out.append(img)
    return out


def estimate_p(config: ExperimentConfig, mode: str = "sample") -> dict:
    """Probability that ``config.generators`` random elements of G generate >= A_n.

    ``mode="enumerate"`` (n <= 4) classifies every tuple instead of sampling
    and returns the exact proportion.
    """
    t0 = time.perf_counter()
    n = config.n
    if mode == "enumerate":
        if n > 4:
            raise ValueError("enumeration guard: n <= 4")
        elems = _group_elements(n, config.group)
        kinds = Counter()
        for tup in itertools.product(elems, repeat=config.generators):
            kinds[classify_tuple([Permutation._raw(g) for g in tup]).kind.value] += 1
        total = len(elems) ** config.generators
        exact = Fraction(kinds[Kind.ALL_OR_ALTERNATING.value], total)
        return {
            "experiment": "estimate_p",
            "config": config.echo() | {"mode": mode},
            "seed": config.seed,
            "results": {"exact": exact, "estimate": float(exact), "tuples": total,
                        "counts": {k.value: kinds[k.value] for k in Kind}},
            "oracle_comparison": {},
            "runtime_ms": (time.perf_counter() - t0) * 1000,
        }

    results = _run_trials(_estimate_chunk, config)
    T = config.trials
    kinds = Counter(k for k, _ in results)
    alt = sum(1 for k, a in results if k == Kind.ALL_OR_ALTERNATING.value and a)
    hits = kinds[Kind.ALL_OR_ALTERNATING.value]
    est = hits / T
    lo, hi, method = _ci95(hits, T)

    order = 6 if config.generators == 2 else 5
    theoretical = dixon_series(n, order, config.generators)
    comparison = {
        "theoretical": theoretical,
        "source": f"series order {order}",
        "sigma_distance": _sigma_distance(est, theoretical, T),
    }
    if config.generators == 2 and n <= 5:
        exact = exact_p_small(n, group=config.group)
        comparison.update(theoretical=float(exact), exact=exact, source="exhaustive",
                          sigma_distance=_sigma_distance(est, float(exact), T),
                          series_value=theoretical)
    return {
        "experiment": "estimate_p",
        "config": config.echo() | {"mode": mode},
        "seed": config.seed,
        "results": {
            "estimate": est,
            "stderr": math.sqrt(est * (1 - est) / T),
            "ci95": [lo, hi],
            "ci_method": method,
            "counts": {k.value: kinds[k.value] for k in Kind},
            "alternating_count": alt,
        },
        "oracle_comparison": comparison,
        "runtime_ms": (time.perf_counter() - t0) * 1000,
    }


@lru_cache(maxsize=None)
def exact_p_small(n: int, generators: int = 2, group: str = "S") -> Fraction:
    """Exact proportion of pairs in G x G whose group has order >= n!/2.

    Pairs are grouped by the conjugacy class (in S_n) of the first entry;
    simultaneous conjugation preserves the generated group's order.
    """
    if n > 6:
        raise ValueError("exhaustive guard: n <= 6")
    if generators != 2:
        raise ValueError("only pairs are supported")
    half = factorial(n) // 2
    if n == 1:
        return Fraction(1)
    elems = _group_elements(n, group)
    reps = {}
    for g in elems:
        key = tuple(sorted(_cycle_lengths(g), reverse=True))
        reps.setdefault(key, g)
    good = 0
    for ct, rep in reps.items():
        # an even class of S_n lies wholly in A_n
        size = class_size(ct)
        hits = sum(1 for s in elems if _schreier_sims0([rep, s], n).order >= half)
        good += size * hits
    return Fraction(good, len(elems) ** 2)


def _cycle_lengths(img) -> list:
    n = len(img)
    seen = [False] * n
    out = []
    for s in range(n):
        if not seen[s]:
            m, j = 0, s
            while not seen[j]:
                seen[j] = True
                j = img[j]
                m += 1
            out.append(m)
    return out


# -- second moment over pi * sigma^i ---------------------------------------------

def _in_frak_M_img(img) -> bool:
    return exceeds_half_root(min_degree_from_cycle_type(_cycle_lengths(img)), len(img))


def _second_moment_chunk(config: ExperimentConfig, start: int, stop: int) -> list:
    n, N = config.n, config.N
    primes = set(pi_n(n).primes)
    out = []
    for t in range(start, stop):
        rng = trial_rng(config.seed, t)
        pi = shuffle_images(rng, n)
        rejections = 0
        while True:
            sigma = shuffle_images(rng, n)
            if _in_frak_M_img(sigma):
                break
            rejections += 1
        x, X = pi, 0
        for i in range(N):
            if not primes.isdisjoint(_cycle_lengths(x)):
                X += 1
            if i < N - 1:
                x = _mul(x, sigma)
        jordan_ok = None
        if X > 0 and n >= 8:
            c = classify_tuple([Permutation._raw(pi), Permutation._raw(sigma)], fast_path=False)
            jordan_ok = c.kind != Kind.PRIMITIVE_PROPER
        out.append((X, rejections, jordan_ok))
    return out


def _moments(values: list, trials: int) -> dict:
    mean = sum(values) / trials
    var = sum((v - mean) ** 2 for v in values) / trials
    p0 = sum(1 for v in values if v == 0) / trials
    return {"mean": mean, "variance": var, "p_zero": p0}


def second_moment_run(config: ExperimentConfig) -> dict:
    """X = #{0 <= i < N : pi sigma^i has a window-prime cycle}, pi uniform, sigma uniform on M."""
    t0 = time.perf_counter()
    n, N, T = config.n, config.N, config.trials
    if not pi_n(n).primes:
        raise ValueError(f"prime window for n = {n} is empty")
    rows = _run_trials(_second_moment_chunk, config)
    xs = [r[0] for r in rows]
    m = _moments(xs, T)
    sample_var = sum((v - m["mean"]) ** 2 for v in xs) / (T - 1) if T > 1 else 0.0
    se_mean = math.sqrt(sample_var / T)
    q = Fraction(frak_C_size(n), factorial(n))
    exp_mean = N * q
    checked = [r[2] for r in rows if r[2] is not None]
    chebyshev_rhs = m["variance"] / m["mean"] ** 2 if m["mean"] > 0 else math.inf
    p0_se = math.sqrt(m["p_zero"] * (1 - m["p_zero"]) / T)
    results = {
        **m,
        "sample_variance": sample_var,
        "stderr_mean": se_mean,
        "histogram": {str(k): v for k, v in sorted(Counter(xs).items())},
        "max_X": max(xs),
        "chebyshev_bound": chebyshev_rhs,
        "chebyshev_consistent": m["p_zero"] <= chebyshev_rhs + 3 * p0_se,
        "jordan_checked": len(checked),
        "jordan_violations": sum(1 for ok in checked if not ok),
        "mean_rejections": sum(r[1] for r in rows) / T,
    }
    comparison = {
        "theoretical": exp_mean,
        "sigma_distance": (m["mean"] - float(exp_mean)) / se_mean if se_mean > 0 else 0.0,
    }
    if partition_count(n) <= 200 and n <= CHARACTER_CORRELATION_MAX_N:
        comparison["exact_variance"] = exact_variance_X(n, N)
    return {
        "experiment": "second_moment",
        "config": config.echo(),
        "seed": config.seed,
        "results": results,
        "oracle_comparison": comparison,
        "runtime_ms": (time.perf_counter() - t0) * 1000,
    }


# -- pair correlation: direct and character sides ---------------------------------

def power_type(ct, nu: int) -> tuple:
    """Cycle type of s**nu for s of type ``ct``: a j-cycle splits into gcd(j, nu) cycles."""
    out = []
    for j in ct:
        g = math.gcd(j, nu)
        out.extend([j // g] * g)
    return tuple(sorted(out, reverse=True))


def _frak_M_classes(n: int) -> list:
    return [ct for ct in partitions(n) if exceeds_half_root(min_degree_from_cycle_type(ct), n)]


def _representative(ct) -> np.ndarray:
    img = np.arange(sum(ct))
    start = 0
    for j in ct:
        img[start:start + j] = np.roll(np.arange(start, start + j), -1)
        start += j
    return img


def _has_cycle_length(perms: np.ndarray, lengths) -> np.ndarray:
    rows, n = perms.shape
    points = np.arange(n)
    cur = perms.copy()
    cyc = np.zeros((rows, n), dtype=np.int16)
    for k in range(1, n + 1):
        hit = (cur == points) & (cyc == 0)
        cyc[hit] = k
        cur = np.take_along_axis(perms, cur, axis=1)
    return np.isin(cyc, list(lengths)).any(axis=1)


def _direct_correlation(n: int, nu: int) -> Fraction:
    primes = pi_n(n).primes
    mclasses = _frak_M_classes(n)
    msize = sum(class_size(t) for t in mclasses)
    if not primes:
        return Fraction(0)
    allp = np.array(list(itertools.permutations(range(n))), dtype=np.int8)
    frak_c = allp[_has_cycle_length(allp, primes)]
    g_cache: dict = {}
    total = 0
    for t in mclasses:
        tau_type = power_type(t, nu)
        if tau_type not in g_cache:
            tau = _representative(tau_type)
            g_cache[tau_type] = int(_has_cycle_length(frak_c[:, tau], primes).sum())
        total += class_size(t) * g_cache[tau_type]
    return Fraction(total, factorial(n) * msize)


def _r_inner(lam, n: int, nu: int, mclasses) -> Fraction:
    return Fraction(sum(class_size(t) * mn_character(lam, power_type(t, nu)) for t in mclasses), factorial(n))


def pair_correlation_terms(n: int, nu: int) -> dict:
    """Per-character terms (n!/|M|) <chi, 1_C>^2 <chi, r_nu> / chi(1), keyed by partition."""
    if n > CHARACTER_CORRELATION_MAX_N:
        raise ValueError(f"guard: n <= {CHARACTER_CORRELATION_MAX_N}")
    mclasses = _frak_M_classes(n)
    msize = sum(class_size(t) for t in mclasses)
    terms = {}
    for lam in partitions(n):
        c = frak_C_inner_product(lam, n)
        if c == 0:
            continue
        terms[tuple(lam)] = Fraction(factorial(n), msize) * c * c * _r_inner(lam, n, nu, mclasses) / dimension(lam)
    return terms


def exact_pair_correlation(n: int, nu: int) -> tuple:
    """Q(pi sigma^i, pi sigma^(i+nu) both in C) computed directly and by characters.

    The direct side enumerates C explicitly and counts x in C with x tau in C
    for tau of each type sigma^nu; the character side is the convolution
    expansion. Returns ``(direct, character)``.
    """
    if nu < 1:
        raise ValueError("nu must be >= 1")
    if n > DIRECT_CORRELATION_MAX_N:
        raise ValueError(f"guard: direct enumeration needs n <= {DIRECT_CORRELATION_MAX_N}")
    direct = _direct_correlation(n, nu)
    character = sum(pair_correlation_terms(n, nu).values(), Fraction(0))
    return direct, character


def exact_variance_X(n: int, N: int) -> Fraction:
    """Exact Var X from the character side of the pair correlation."""
    q = Fraction(frak_C_size(n), factorial(n))
    var = N * q * (1 - q)
    for nu in range(1, N):
        Q = sum(pair_correlation_terms(n, nu).values(), Fraction(0))
        var += 2 * (N - nu) * (Q - q * q)
    return var


# -- words in the free group on a, b ------------------------------------------------

LETTERS = "aAbB"
_INVERSE = {"a": "A", "A": "a", "b": "B", "B": "b"}


def is_reduced(w: str) -> bool:
    return all(ch in _INVERSE for ch in w) and all(_INVERSE[x] != y for x, y in zip(w, w[1:]))


def word_count(max_len: int, exact: bool = False) -> int:
    """Reduced words of length <= max_len (2*3^L - 1), or of length exactly L (4*3^(L-1))."""
    if exact:
        return 1 if max_len == 0 else 4 * 3 ** (max_len - 1)
    return 2 * 3**max_len - 1


def enumerate_words(max_len: int) -> list:
    """All freely reduced words of length <= max_len in shortlex order.

    Letters: a, A = a^-1, b, B = b^-1.
    """
    if max_len > WORD_GUARD:
        raise ValueError(f"word guard: max_len <= {WORD_GUARD}")
    out = [""]
    level = [""]
    for _ in range(max_len):
        level = [w + x for w in level for x in LETTERS if not w or _INVERSE[w[-1]] != x]
        out.extend(level)
    return out


def evaluate_word(w: str, sigma: Permutation, tau: Permutation) -> Permutation:
    """w(sigma, tau) as the product of the letters, left to right."""
    letters = {"a": sigma, "A": ~sigma, "b": tau, "B": ~tau}
    result = Permutation.identity(sigma.n)
    for ch in w:
        result = result * letters[ch]
    return result


def _word_tree(sigma: tuple, tau: tuple, max_len: int):
    """Yield (word, value) over the prefix tree; one composition per node."""
    from .groups import _inv

    letters = {"a": sigma, "A": _inv(sigma), "b": tau, "B": _inv(tau)}
    ident = tuple(range(len(sigma)))
    stack = [("", ident)]
    while stack:
        w, val = stack.pop()
        yield w, val
        if len(w) < max_len:
            for x in LETTERS:
                if not w or _INVERSE[w[-1]] != x:
                    stack.append((w + x, _mul(val, letters[x])))


def _word_chunk(config: ExperimentConfig, start: int, stop: int) -> list:
    n, L = config.n, config.word_length
    primes = set(pi_n(n).primes)
    ident = tuple(range(n))
    out = []
    for t in range(start, stop):
        rng = trial_rng(config.seed, t)
        pi = shuffle_images(rng, n)
        sigma = shuffle_images(rng, n)
        tau = shuffle_images(rng, n)
        X = 0
        trivial = [0] * (L + 1)
        for w, val in _word_tree(sigma, tau, L):
            if not primes.isdisjoint(_cycle_lengths(_mul(pi, val))):
                X += 1
            if val == ident:
                trivial[len(w)] += 1
        out.append((X, trivial))
    return out


def word_experiment(config: ExperimentConfig) -> dict:
    """X = #{w reduced, |w| <= L : pi w(sigma, tau) in C} with pi, sigma, tau uniform.

    The restriction of (sigma, tau) to pairs of large minimal degree is not
    applied; the mean identity does not need it.
    """
    t0 = time.perf_counter()
    n, L, T = config.n, config.word_length, config.trials
    if L > WORD_GUARD:
        raise ValueError(f"word guard: word_length <= {WORD_GUARD}")
    if not pi_n(n).primes:
        raise ValueError(f"prime window for n = {n} is empty")
    rows = _run_trials(_word_chunk, config)
    xs = [r[0] for r in rows]
    m = _moments(xs, T)
    sample_var = sum((v - m["mean"]) ** 2 for v in xs) / (T - 1) if T > 1 else 0.0
    se_mean = math.sqrt(sample_var / T)
    words_total = word_count(L)
    q = Fraction(frak_C_size(n), factorial(n))
    trivial_freq = []
    for length in range(L + 1):
        hits = sum(r[1][length] for r in rows)
        trivial_freq.append(hits / (T * word_count(length, exact=True)))
    pts = [(k, math.log(f)) for k, f in enumerate(trivial_freq) if k > 0 and f > 0]
    slope = None
    if len(pts) >= 2:
        kx = [p[0] for p in pts]
        ky = [p[1] for p in pts]
        slope = float(np.polyfit(kx, ky, 1)[0])
    results = {
        **m,
        "sample_variance": sample_var,
        "stderr_mean": se_mean,
        "histogram": {str(k): v for k, v in sorted(Counter(xs).items())},
        "words_at_most_L": words_total,
        "words_exactly_L": word_count(L, exact=True),
        "identity_frequency_by_length": trivial_freq,
        "identity_decay_slope": slope,
        "min_degree_pair_filter_applied": False,
    }
    exp_mean = words_total * q
    return {
        "experiment": "words",
        "config": config.echo(),
        "seed": config.seed,
        "results": results,
        "oracle_comparison": {
            "theoretical": exp_mean,
            "sigma_distance": (m["mean"] - float(exp_mean)) / se_mean if se_mean > 0 else 0.0,
        },
        "runtime_ms": (time.perf_counter() - t0) * 1000,
    }


# -- minimal degree filter -----------------------------------------------------------

def _filter_chunk(config: ExperimentConfig, start: int, stop: int) -> list:
    out = []
    for t in range(start, stop):
        rng = trial_rng(config.seed, t)
        first = _in_frak_M_img(shuffle_images(rng, config.n))
        rejections = 0 if first else 1
        if not first:
            while not _in_frak_M_img(shuffle_images(rng, config.n)):
                rejections += 1
        out.append((first, rejections))
    return out


def min_degree_filter_stats(n: int, trials: int, seed: int, workers: int = 1) -> dict:
    """Empirical |M|/n! and rejection counts of the sampler used for sigma."""
    t0 = time.perf_counter()
    config = ExperimentConfig(n=n, trials=trials, seed=seed, workers=workers)
    rows = _run_trials(_filter_chunk, config)
    accepted = sum(1 for r in rows if r[0])
    frac = accepted / trials
    results = {
        "fraction_in_M": frac,
        "stderr": math.sqrt(frac * (1 - frac) / trials),
        "mean_rejections": sum(r[1] for r in rows) / trials,
    }
    comparison: dict = {}
    if partition_count(n) <= 10**5:
        exact = Fraction(frak_M_size(n), factorial(n))
        comparison = {
            "theoretical": exact,
            "sigma_distance": _sigma_distance(frac, float(exact), trials),
            "expected_rejections": 1 / exact - 1,
        }
    return {
        "experiment": "min_degree_filter",
        "config": config.echo(),
        "seed": seed,
        "results": results,
        "oracle_comparison": comparison,
        "runtime_ms": (time.perf_counter() - t0) * 1000,
    }
