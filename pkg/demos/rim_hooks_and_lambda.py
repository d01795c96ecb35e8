"""
Which characters see a long prime cycle?
========================================

For a prime n/2 < p < n, only partitions with a p-rim hook leaving the
one-row shape (n-p) have a nonzero sum over classes containing a p-cycle.
"""

# %%
from symgen.characters import class_size, lambda_np, mn_character, partitions, rim_hooks
from symgen.exact import factorial

for e in lambda_np(10, 7):
    print(f"case {e.case}: {tuple(e.partition)}  leg length {e.leg_length}")

# %%
# The class sum is +-n!/p exactly on these partitions, and 0 elsewhere (except the trivial one).
n, p = 12, 7
classes = [c for c in partitions(n) if p in c]
for lam in partitions(n)[:12]:
    s = sum(class_size(c) * mn_character(lam, c) for c in classes)
    print(tuple(lam), s, "=", f"{s * p // factorial(n)} * n!/p" if s else "0")

# %%
print("3-rim hooks of (2,2):", rim_hooks((2, 2), 3))
