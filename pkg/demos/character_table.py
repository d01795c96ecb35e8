"""
Characters of S_n via Murnaghan-Nakayama
========================================

Exact integer character tables, hook lengths, and orthogonality checked in
rational arithmetic.
"""

# %%
from fractions import Fraction

from symgen.characters import character_table, character_table_csv, class_size, dimension, hook_lengths
from symgen.exact import factorial

print(character_table_csv(5))

# %%
print("hook lengths of (4,1):", hook_lengths((4, 1)), "-> dimension", dimension((4, 1)))

# %%
n = 7
parts, classes, table = character_table(n)
print(f"n={n}: sum of squared dimensions = {sum(r[-1] ** 2 for r in table)} = {factorial(n)}")
inner = Fraction(sum(class_size(c) * a * b for c, a, b in zip(classes, table[1], table[1])), factorial(n))
print("<chi, chi> for", parts[1], "=", inner)
