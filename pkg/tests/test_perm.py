import math
from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symgen.characters import partitions
from symgen.perm import (
    INFINITY,
    Permutation,
    PermutationError,
    compose,
    cycle_type,
    fixed_points,
    fixed_points_of_power,
    format_cycles,
    format_oneline,
    in_frak_C,
    in_frak_M,
    inverse,
    min_degree_cyclic,
    min_degree_from_cycle_type,
    order,
    parse,
    power,
    random_even_permutation,
    random_permutation,
)

from conftest import cyc


@st.composite
def perms(draw, max_n=30):
    n = draw(st.integers(1, max_n))
    return Permutation(draw(st.permutations(list(range(1, n + 1)))))


@st.composite
def perm_pairs(draw, max_n=20):
    n = draw(st.integers(1, max_n))
    a = draw(st.permutations(list(range(1, n + 1))))
    b = draw(st.permutations(list(range(1, n + 1))))
    return Permutation(a), Permutation(b)


def from_type(ct):
    cycles, start = [], 1
    for c in ct:
        cycles.append(list(range(start, start + c)))
        start += c
    return Permutation.from_cycles(cycles, sum(ct))


def test_compose_examples():
    assert compose(cyc("(1 2)", 3), cyc("(1 2)", 3)).is_identity()
    assert compose(cyc("(1 2 3)", 3), cyc("(1 2)", 3)) == cyc("(1 3)", 3)
    p = cyc("(1 4 2)(3 5)", 5)
    assert compose(p, Permutation.identity(5)) == p


def test_compose_convention_is_right_to_left():
    p, q = cyc("(1 2 3)", 3), cyc("(1 2)", 3)
    for i in range(1, 4):
        assert compose(p, q)(i) == p(q(i))


def test_power_examples():
    assert power(cyc("(1 2 3 4 5)", 5), 5).is_identity()
    assert power(cyc("(1 2 3 4 5 6)", 6), 2) == cyc("(1 3 5)(2 4 6)", 6)
    p = cyc("(1 5 2)(3 4)", 6)
    assert power(p, -1) == inverse(p)


@given(perms(), st.integers(-20, 20))
def test_power_matches_repeated_compose(p, k):
    acc = Permutation.identity(p.n)
    step = p if k >= 0 else inverse(p)
    for _ in range(abs(k)):
        acc = compose(acc, step)
    assert power(p, k) == acc


def test_cycle_type_examples():
    assert cycle_type(Permutation.identity(4)) == (1, 1, 1, 1)
    assert cycle_type(cyc("(1 2 3)(4 5)", 6)) == (3, 2, 1)
    assert cycle_type(cyc("(1 2)(3 4)", 4)) == (2, 2)


@given(perm_pairs())
def test_cycle_type_conjugation_invariant(pair):
    p, g = pair
    assert cycle_type(g * p * ~g) == cycle_type(p)


def test_order_and_fixed_points():
    assert order(cyc("(1 2 3 4 5 6 7)", 7)) == 7
    assert order(cyc("(1 2 3)(4 5)", 5)) == 6
    assert order(Permutation.identity(3)) == 1
    assert fixed_points(Permutation.identity(6)) == 6
    assert fixed_points(cyc("(1 2 3 4 5 6)", 6)) == 0
    assert fixed_points(cyc("(1 2)", 5)) == 3


@settings(max_examples=200)
@given(perms(max_n=12), st.integers(1, 60))
def test_fixed_points_of_power_formula(p, k):
    k = k % order(p) or order(p)
    ct = cycle_type(p)
    by_divisor = sum(j * c for j, c in Counter(ct).items() if k % j == 0)
    assert fixed_points(power(p, k)) == fixed_points_of_power(ct, k) == by_divisor


def test_frak_C_examples():
    assert in_frak_C(cyc("(1 2 3 4 5 6 7)(8 9 10 11 12)", 12), [7])
    assert not in_frak_C(Permutation.identity(12), [7])
    rng = np.random.default_rng(0)
    assert not any(in_frak_C(random_permutation(rng, 8), []) for _ in range(50))


def test_min_degree_examples():
    assert min_degree_cyclic(cyc("(1 2 3 4 5 6 7 8 9)", 9)) == 9
    assert min_degree_cyclic(cyc("(1 2)", 9)) == 2
    assert min_degree_cyclic(cyc("(1 2 3 4 5 6)", 6)) == 6
    assert min_degree_cyclic(Permutation.identity(4)) == INFINITY


@pytest.mark.parametrize("n", range(1, 13))
def test_min_degree_matches_brute_force(n):
    for ct in partitions(n):
        p = from_type(ct)
        L = order(p)
        brute = min((n - fixed_points(power(p, k)) for k in range(1, L)), default=INFINITY)
        assert min_degree_from_cycle_type(ct) == brute


def test_frak_M_examples():
    for n in range(2, 15):
        assert in_frak_M(Permutation.from_cycles([list(range(1, n + 1))], n))
    assert not in_frak_M(cyc("(1 2)", 25))
    assert in_frak_M(cyc("(1 2)", 9))
    assert in_frak_M(Permutation.identity(16))
    # boundary: sqrt(16)/2 = 2 exactly, and 2 > 2 fails
    assert not in_frak_M(cyc("(1 2)", 16))


@given(perm_pairs(max_n=12))
def test_membership_is_class_function(pair):
    p, g = pair
    q = g * p * ~g
    assert in_frak_M(p) == in_frak_M(q)
    assert in_frak_C(p, [5, 7]) == in_frak_C(q, [5, 7])


def test_random_permutation_reproducible():
    a = random_permutation(np.random.default_rng(7), 5)
    b = random_permutation(np.random.default_rng(7), 5)
    assert a == b
    assert random_permutation(np.random.default_rng(1), 1).is_identity()


def test_random_permutation_uniform_on_s3():
    rng = np.random.default_rng(3)
    counts = Counter(random_permutation(rng, 3) for _ in range(6000))
    assert len(counts) == 6
    # chi-square with 5 dof; 20.5 is the 0.999 quantile
    chi2 = sum((c - 1000) ** 2 / 1000 for c in counts.values())
    assert chi2 < 20.5


def test_random_even_permutation():
    rng = np.random.default_rng(4)
    assert all(random_even_permutation(rng, 2).is_identity() for _ in range(20))
    seen = Counter(random_even_permutation(rng, 4) for _ in range(2400))
    assert len(seen) == 12 and all(p.parity() == 0 for p in seen)


def test_parse_and_format():
    assert parse("(1 2)", 3).images == (2, 1, 3)
    assert parse("()", 2).is_identity()
    assert parse("2 3 1", 3) == cyc("(1 2 3)", 3)
    with pytest.raises(PermutationError):
        parse("(1 1)", 3)
    with pytest.raises(PermutationError):
        parse("(1 4)", 3)
    with pytest.raises(PermutationError):
        parse("1 2", 3)
    with pytest.raises(PermutationError):
        Permutation([1, 1, 2])


@given(perms())
def test_format_roundtrip(p):
    assert parse(format_cycles(p), p.n) == p
    assert parse(format_oneline(p), p.n) == p


@given(perms())
def test_parity_matches_cycle_count(p):
    assert p.parity() == (p.n - len(cycle_type(p))) % 2
    assert math.lcm(*cycle_type(p)) == order(p)
