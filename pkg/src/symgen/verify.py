"""Exact verification suites, each yielding one record per check.

A record is ``{"suite", "check", "pass", "report_only", "detail"}``.
Report-only checks describe statements that hold only for sufficiently
large n and never fail a run.
"""

from __future__ import annotations

from fractions import Fraction

from .characters import (
    character_bound_survey,
    character_table,
    class_size,
    dim_lower_bound_check,
    dimension,
    frak_C_inner_product,
    inner_product_indicator,
    is_border_strip,
    lambda_np,
    lambda_np_leg,
    mn_character,
    partitions,
    rim_hooks,
    skew_cells,
)
from .counting import (
    bounded_cycle_bound_check,
    count_nu_roots,
    frak_C_density_bound_check,
    frak_C_size,
    k_of_N,
    pi_n,
)
from .exact import factorial
from .experiments import exact_pair_correlation

SUITES = ("chars", "lambda", "counting", "correlation")
DEFAULT_NMAX = {"chars": 10, "lambda": 40, "counting": 12, "correlation": 9}
# the correlation suite always runs at n = 9 (direct enumeration of S_9)
NMAX_GUARD = {"chars": 16, "lambda": 60, "counting": 40, "correlation": 9}


def _rec(suite, check, ok, detail=None, report_only=False):
    return {"suite": suite, "check": check, "pass": bool(ok), "report_only": report_only,
            "detail": detail or {}}


def orthogonality(n: int) -> tuple:
    """(rows_ok, columns_ok) for the character table of S_n, as exact rationals."""
    parts, classes, table = character_table(n)
    sizes = [class_size(c) for c in classes]
    nf = factorial(n)
    k = len(parts)
    rows_ok = all(
        Fraction(sum(sizes[c] * table[a][c] * table[b][c] for c in range(k)), nf) == (a == b)
        for a in range(k) for b in range(a, k)
    )
    cols_ok = all(
        Fraction(sum(table[a][c] * table[a][d] for a in range(k)) * sizes[c], nf) == (c == d)
        for c in range(k) for d in range(c, k)
    )
    return rows_ok, cols_ok


def lambda_brute(n: int, p: int) -> list:
    """Partitions lam != (n) with a p-border-strip lam/(n-p), by direct skew-shape test."""
    out = []
    for lam in partitions(n):
        if lam == (n,) or lam[0] < n - p:
            continue
        if is_border_strip(skew_cells(lam, (n - p,))):
            out.append(lam)
    return out


def class_sum_identity(n: int, p: int) -> dict:
    """sum over classes with a p-cycle of |C| chi^lam(C), against the closed form, per lam."""
    classes = [c for c in partitions(n) if p in c]
    nf = factorial(n)
    out = {}
    for lam in partitions(n):
        value = sum(class_size(c) * mn_character(lam, c) for c in classes)
        if lam == (n,):
            expected = nf // p
        else:
            leg = lambda_np_leg(lam, n, p)
            expected = 0 if leg is None else (-1) ** leg * nf // p
        out[tuple(lam)] = (value, expected)
    return out


def suite_chars(nmax: int):
    for n in range(1, nmax + 1):
        parts = partitions(n)
        yield _rec("chars", f"sum_dim_squared[n={n}]", sum(dimension(l) ** 2 for l in parts) == factorial(n))
        yield _rec("chars", f"dim_equals_mn[n={n}]",
                   all(dimension(l) == mn_character(l, (1,) * n) for l in parts))
        rows_ok, cols_ok = orthogonality(n)
        yield _rec("chars", f"row_orthogonality[n={n}]", rows_ok)
        yield _rec("chars", f"column_orthogonality[n={n}]", cols_ok)
    survey = character_bound_survey(min(nmax, 14))
    yield _rec("chars", f"character_bound_survey[n={survey['n']}]", True,
               {"checked": survey["checked"], "violations": survey["violation_count"]}, report_only=True)


def suite_lambda(nmax: int, dim_nmax: int = 300):
    bad = []
    for n in range(2, nmax + 1):
        for p in pi_n(n).primes:
            closed = sorted(e.partition for e in lambda_np(n, p))
            via_hooks = sorted(l for l in partitions(n) if l != (n,)
                               and any(h.remainder == (n - p,) for h in rim_hooks(l, p)))
            if closed != via_hooks or closed != sorted(lambda_brute(n, p)):
                bad.append([n, p])
    yield _rec("lambda", f"closed_form_vs_scan[n<={nmax}]", not bad, {"mismatches": bad})
    entries = lambda_np(10, 7)
    yield _rec("lambda", "lambda_n10_p7_three_plus_three",
               len(entries) == 6 and [e.case for e in entries].count("a") == 3,
               {"partitions": [list(e.partition) for e in entries]})
    for n in (9, 12):
        for p in pi_n(n).primes:
            ident = class_sum_identity(n, p)
            yield _rec("lambda", f"class_sum_identity[n={n},p={p}]", all(v == e for v, e in ident.values()))
        total = sum(frak_C_inner_product(l, n) ** 2 for l in partitions(n))
        yield _rec("lambda", f"parseval_C[n={n}]", total == Fraction(frak_C_size(n), factorial(n)),
                   {"sum": total})
        oracle_ok = all(
            frak_C_inner_product(l, n) == inner_product_indicator(l, lambda c: bool(set(c) & set(pi_n(n).primes)), n)
            for l in partitions(n))
        yield _rec("lambda", f"inner_product_vs_class_sum[n={n}]", oracle_ok)
    failures = []
    for n in range(12, dim_nmax + 1):
        for row in dim_lower_bound_check(n):
            if not (row["exp_bound_pass"] and row["binomial_bound_pass"]):
                failures.append([n, row["p"], row["lambda"]])
    yield _rec("lambda", f"dimension_lower_bound[12<=n<={dim_nmax}]", not failures, {"failures": failures[:20]})


def suite_counting(nmax: int):
    yield _rec("counting", "nu_roots[4,2]", count_nu_roots(4, 2) == 10)
    yield _rec("counting", "k_of_N[3,6]", k_of_N(3, 6) == 19)
    for n, N in ((5, 25), (7, 49), (9, 81)):
        yield _rec("counting", f"k_of_N_lower[{n},{N}]", k_of_N(n, N) >= factorial(n) // n * (N // n))
    rows = bounded_cycle_bound_check(60)
    yield _rec("counting", "bounded_cycle_bound[m<=60]", all(r["pass"] for r in rows), {"checked": len(rows)})
    ok = True
    for n in range(0, nmax + 1):
        parts = partitions(n)
        for nu in range(1, 31):
            direct = sum(class_size(l) for l in parts if all(nu % x == 0 for x in l))
            ok &= direct == count_nu_roots(n, nu)
    yield _rec("counting", f"nu_roots_vs_class_sum[n<={nmax},nu<=30]", ok)
    n = 12
    oracle = sum(class_size(c) for c in partitions(n) if 7 in c)
    yield _rec("counting", "frak_C_size_vs_class_sum[n=12]", oracle == frak_C_size(12) == 68428800,
               {"value": frak_C_size(12)})
    dens = frak_C_density_bound_check(1000)
    last = dens["rows"][-1]
    yield _rec("counting", "density_bound[n<=1000]", True,
               {"holds_from": dens["holds_from"], "passing": sum(r["pass"] for r in dens["rows"]),
                "rows": len(dens["rows"]), "density_times_log_n_at_max": last["density_times_log_n"]},
               report_only=True)


def suite_correlation():
    for nu in (1, 2, 3):
        direct, character = exact_pair_correlation(9, nu)
        yield _rec("correlation", f"pair_correlation[n=9,nu={nu}]", direct == character,
                   {"direct": direct, "character": character})


def run_suite(name: str, nmax=None):
    if name == "all":
        for s in SUITES:
            yield from run_suite(s, nmax)
        return
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    n = nmax if nmax is not None else DEFAULT_NMAX[name]
    if name != "correlation" and n > NMAX_GUARD[name]:
        raise ValueError(f"nmax guard for suite {name}: nmax <= {NMAX_GUARD[name]}")
    if name == "chars":
        yield from suite_chars(n)
    elif name == "lambda":
        yield from suite_lambda(n)
    elif name == "counting":
        yield from suite_counting(n)
    else:
        yield from suite_correlation()
