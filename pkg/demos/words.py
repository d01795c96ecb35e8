"""
Reduced words in two random permutations
========================================

Evaluate every freely reduced word of length <= L at a random pair and
count how many land in C after multiplying by a random pi.
"""

# %%
import numpy as np

from symgen.experiments import ExperimentConfig, enumerate_words, evaluate_word, word_count, word_experiment
from symgen.perm import random_permutation

print("words of length <= 2:", enumerate_words(2))
print("counts:", word_count(4), "of length <= 4,", word_count(4, exact=True), "of length exactly 4")

rng = np.random.default_rng(0)
s, t = random_permutation(rng, 6), random_permutation(rng, 6)
print("abA at a random pair:", evaluate_word("abA", s, t), "=", s * t * ~s)

# %%
r = word_experiment(ExperimentConfig(n=12, word_length=5, trials=200, seed=4))
res = r["results"]
print("mean X:", res["mean"], "expected", float(r["oracle_comparison"]["theoretical"]))
print("identity frequency by length:", [round(f, 5) for f in res["identity_frequency_by_length"]])
