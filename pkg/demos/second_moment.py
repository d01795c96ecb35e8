"""
Counting long prime cycles along pi * sigma^i
=============================================

X counts i < N with pi * sigma^i containing a cycle of prime length in
(n/2, 3n/5). Its mean and variance are known exactly from characters.
"""

# %%
from symgen.experiments import ExperimentConfig, exact_pair_correlation, exact_variance_X, second_moment_run

direct, character = exact_pair_correlation(9, 2)
print("pair correlation at n=9, nu=2:", direct, "(direct)", character, "(characters)")

# %%
r = second_moment_run(ExperimentConfig(n=12, N=144, trials=300, seed=3))
res = r["results"]
print(f"mean {res['mean']:.2f} vs {float(r['oracle_comparison']['theoretical']):.2f}")
print(f"variance {res['variance']:.1f} vs exact {float(exact_variance_X(12, 144)):.1f}")
print("P(X = 0):", res["p_zero"], " Chebyshev bound:", round(res["chebyshev_bound"], 3))
print("Jordan implication violations:", res["jordan_violations"], "of", res["jordan_checked"])
