"""
Exact counts
============

Sizes of the sets used in the second-moment argument, roots of unity in
S_n, and the bounded-cycle inequality, all as exact integers.
"""

# %%
from symgen.counting import (
    bounded_cycle_bound_check,
    count_bounded_cycles,
    count_nu_roots,
    frak_C_density_bound_check,
    frak_C_size,
    frak_M_size,
    k_of_N,
    pi_n,
)
from symgen.exact import factorial

for n in (9, 12, 30, 84):
    print(f"n={n}: primes in (n/2, 3n/5) = {list(pi_n(n).primes)}, |C|/n! = {frak_C_size(n) / factorial(n):.4f}")

# %%
print("|M| for n=12:", frak_M_size(12), "of", factorial(12))
print("s^2 = 1 in S_4:", count_nu_roots(4, 2))
print("sum over i <= 6 of #{s in S_3 : s^i = 1}:", k_of_N(3, 6))
print("permutations of S_10 with all cycles <= 3:", count_bounded_cycles(10, 3))

# %%
rows = bounded_cycle_bound_check(40)
print("bounded-cycle inequality:", sum(r["pass"] for r in rows), "of", len(rows), "rows pass")

# %%
# The density of C shrinks like 0.18 / log n, so a bound of 1/(2 log n) is not reached.
d = frak_C_density_bound_check(2000, 1990)
for r in d["rows"][-3:]:
    print(r["n"], float(r["density"]), "vs", round(r["bound"], 4), " density*log n =", round(r["density_times_log_n"], 3))
