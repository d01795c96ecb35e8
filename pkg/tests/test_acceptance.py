"""Acceptance criteria, each at its stated tolerance.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""

import math
import time
from fractions import Fraction

import pytest

from conftest import all_perms, closure, record
from symgen import reports
from symgen.characters import (
    class_size,
    dim_lower_bound_check,
    dimension,
    frak_C_inner_product,
    lambda_np,
    lambda_np_leg,
    mn_character,
    partitions,
    rim_hooks,
)
from symgen.counting import (
    bounded_cycle_bound_check,
    count_bounded_cycles,
    count_nu_roots,
    dixon_series,
    frak_C_size,
    k_of_N,
    pi_n,
)
from symgen.exact import factorial
from symgen.experiments import (
    ExperimentConfig,
    estimate_p,
    exact_p_small,
    exact_pair_correlation,
    second_moment_run,
    word_experiment,
)
from symgen.verify import lambda_brute, orthogonality


def _within(estimate, target, trials, k=3.0):
    sd = math.sqrt(target * (1 - target) / trials)
    return abs(estimate - target) <= k * sd, (estimate - target) / sd


# 1 --------------------------------------------------------------------------------
def test_c01_exact_generation_probability():
    t0 = time.perf_counter()
    elems = all_perms(3)
    hits = sum(1 for a in elems for b in elems if len(closure([a, b], 3)) >= 3)
    exact_ok = exact_p_small(3) == Fraction(26, 36) == Fraction(hits, 36)
    r = estimate_p(ExperimentConfig(n=3, trials=100_000, seed=2024))
    ok, z = _within(r["results"]["estimate"], 26 / 36, 100_000)
    elapsed = time.perf_counter() - t0
    good = exact_ok and ok and elapsed < 60
    record(1, "p(S_3) = 26/36; 1e5-trial estimate within 3 sigma; < 1 min", good,
           f"exact={exact_p_small(3)}, estimate={r['results']['estimate']:.5f}, z={z:+.2f}, {elapsed:.1f}s")
    assert good


# 2 --------------------------------------------------------------------------------
@pytest.mark.parametrize("n,generators,order", [(50, 2, 6), (100, 2, 6), (10, 3, 5)])
def test_c02_series_agreement(n, generators, order):
    trials = 10_000
    target = dixon_series(n, order, generators)
    r = estimate_p(ExperimentConfig(n=n, trials=trials, seed=7, generators=generators))
    est = r["results"]["estimate"]
    ok, z = _within(est, target, trials)
    label = "pairs" if generators == 2 else "triples"
    record(2, "estimates within 3 sigma of the truncated series", ok,
           f"n={n} {label}: {est:.5f} vs {target:.6f}, z={z:+.2f}")
    assert ok


# 3 --------------------------------------------------------------------------------
def test_c03_character_table_exactness():
    t0 = time.perf_counter()
    bad = []
    for n in range(1, 11):
        parts = partitions(n)
        if sum(dimension(l) ** 2 for l in parts) != factorial(n):
            bad.append((n, "dim^2"))
        if orthogonality(n) != (True, True):
            bad.append((n, "orthogonality"))
        if any(dimension(l) != mn_character(l, (1,) * n) for l in parts):
            bad.append((n, "dim vs MN"))
    elapsed = time.perf_counter() - t0
    good = not bad and elapsed < 120
    record(3, "n <= 10: sum dim^2 = n!, row/column orthogonality, dim = chi(1); < 2 min", good,
           f"failures={bad}, {elapsed:.1f}s")
    assert good


# 4 --------------------------------------------------------------------------------
def test_c04_lambda_classification():
    mismatches = []
    checked = 0
    for n in range(2, 41):
        for p in pi_n(n).primes:
            closed = sorted(e.partition for e in lambda_np(n, p))
            scan = sorted(l for l in partitions(n) if l != (n,)
                          and any(h.remainder == (n - p,) for h in rim_hooks(l, p)))
            if closed != scan or closed != sorted(lambda_brute(n, p)):
                mismatches.append((n, p))
            checked += 1
    fig = lambda_np(10, 7)
    cases = [e.case for e in fig]
    fig_ok = len(fig) == 6 and cases.count("a") == 3 and cases.count("b") == 3
    good = not mismatches and fig_ok
    record(4, "Lambda(n,p) = rim-hook scan for n <= 40; n=10, p=7 gives 3 + 3", good,
           f"{checked} (n,p) pairs, mismatches={mismatches}, entries={[tuple(e.partition) for e in fig]}")
    assert good


# 5 --------------------------------------------------------------------------------
@pytest.mark.parametrize("n", [9, 12])
def test_c05_class_sum_identity(n):
    nf = factorial(n)
    bad = []
    for p in pi_n(n).primes:
        classes = [c for c in partitions(n) if p in c]
        for lam in partitions(n):
            value = sum(class_size(c) * mn_character(lam, c) for c in classes)
            if lam == (n,):
                expected = nf // p
            else:
                leg = lambda_np_leg(lam, n, p)
                expected = 0 if leg is None else (-1) ** leg * nf // p
            if value != expected:
                bad.append(tuple(lam))
    record(5, "sum over p-cycle classes of |C| chi(C) = +-n!/p on Lambda, n!/p at (n), else 0", not bad,
           f"n={n}, primes={list(pi_n(n).primes)}, {len(partitions(n))} partitions, failures={bad}")
    assert not bad


# 6 --------------------------------------------------------------------------------
def test_c06_dimension_bound():
    rows = failures = 0
    for n in range(12, 301):
        for row in dim_lower_bound_check(n):
            rows += 1
            # exp_bound_pass certifies dim >= exp(n/4); binomial_bound_pass is dim >= C(n,p)/n
            if not (row["exp_bound_pass"] and row["binomial_bound_pass"]):
                failures += 1
    record(6, "certified dim >= exp(n/4) and dim >= C(n,p)/n for 12 <= n <= 300", failures == 0,
           f"{rows} (n, p, lambda) rows, {failures} failures")
    assert failures == 0


# 7 --------------------------------------------------------------------------------
@pytest.mark.parametrize("n", [9, 12])
def test_c07_parseval(n):
    total = sum(frak_C_inner_product(l, n) ** 2 for l in partitions(n))
    target = Fraction(frak_C_size(n), factorial(n))
    ok = total == target
    detail = f"n={n}: sum = {total}, |C|/n! = {target}"
    if n == 12:
        primes = set(pi_n(12).primes)
        oracle = sum(class_size(c) for c in partitions(12) if primes & set(c))
        ok = ok and oracle == frak_C_size(12) == 68_428_800
        detail += f", |C| = {frak_C_size(12)} (class-sum oracle {oracle})"
    record(7, "Parseval for C exact; |C| at n=12 matches class sum", ok, detail)
    assert ok


# 8 --------------------------------------------------------------------------------
def test_c08_pair_correlation():
    t0 = time.perf_counter()
    values = {nu: exact_pair_correlation(9, nu) for nu in (1, 2, 3)}
    elapsed = time.perf_counter() - t0
    good = all(d == c for d, c in values.values()) and elapsed < 300
    record(8, "direct = character expansion at n=9, nu in {1,2,3}; < 5 min", good,
           ", ".join(f"nu={nu}: {d} / {c}" for nu, (d, c) in values.items()) + f", {elapsed:.1f}s")
    assert good


# 9 --------------------------------------------------------------------------------
def test_c09_counting_identities():
    checks = {
        "nu_roots(4,2)=10": count_nu_roots(4, 2) == 10,
        "k(3,6)=19": k_of_N(3, 6) == 19,
        "k lower bound": all(k_of_N(n, N) >= factorial(n) // n * (N // n) for n, N in ((5, 25), (7, 49), (9, 81))),
        "bounded-cycle bound m<=60": all(r["pass"] for r in bounded_cycle_bound_check(60)),
        "nu_roots vs class sums": all(
            count_nu_roots(n, nu) == sum(class_size(l) for l in partitions(n) if all(nu % x == 0 for x in l))
            for n in range(0, 13) for nu in range(1, 31)),
        "bounded count vs class sums": all(
            count_bounded_cycles(m, r) == sum(class_size(c) for c in partitions(m) if c[0] <= r)
            for m in range(1, 13) for r in range(1, m // 2 + 1)),
    }
    good = all(checks.values())
    record(9, "exact counts and bounded-cycle inequality", good, ", ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in checks.items()))
    assert good


# 10 -------------------------------------------------------------------------------
def test_c10_second_moment():
    trials = 1000
    r = second_moment_run(ExperimentConfig(n=12, N=144, trials=trials, seed=10))
    res = r["results"]
    target = Fraction(144, 7)
    z = (res["mean"] - float(target)) / res["stderr_mean"]
    mean_ok = abs(z) <= 3
    p0, var, mean = res["p_zero"], res["variance"], res["mean"]
    slack = 3 * math.sqrt(p0 * (1 - p0) / trials)
    cheb_ok = p0 <= var / mean**2 + slack
    jordan_ok = res["jordan_violations"] == 0 and res["jordan_checked"] == sum(
        v for k, v in res["histogram"].items() if k != "0")
    good = mean_ok and cheb_ok and jordan_ok
    record(10, "n=12, N=144, 1e3 trials: mean vs 144/7, Chebyshev, Jordan implication", good,
           f"mean={mean:.3f} (z={z:+.2f}), P(X=0)={p0:.3f} <= {var / mean**2:.3f}+{slack:.3f}, "
           f"jordan violations {res['jordan_violations']}/{res['jordan_checked']}, "
           f"var={var:.1f} (exact {float(r['oracle_comparison']['exact_variance']):.1f})")
    assert good


# 11 -------------------------------------------------------------------------------
def test_c11_determinism():
    runs = {
        "estimate": lambda w: estimate_p(ExperimentConfig(n=10, trials=300, seed=11, workers=w)),
        "second_moment": lambda w: second_moment_run(ExperimentConfig(n=12, N=20, trials=200, seed=11, workers=w)),
        "words": lambda w: word_experiment(ExperimentConfig(n=9, word_length=3, trials=100, seed=11, workers=w)),
    }
    same = {}
    for name, fn in runs.items():
        blobs = {reports.payload_bytes(fn(w)) for w in (1, 1, 2, 3)}
        same[name] = len(blobs) == 1
    good = all(same.values())
    record(11, "byte-identical payloads across reruns and worker counts {1, 2, 3}", good,
           ", ".join(f"{k}={'identical' if v else 'DIFFER'}" for k, v in same.items()))
    assert good
