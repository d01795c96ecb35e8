"""
Permutations and the groups they generate
=========================================

Build permutations from cycle notation, compose them, and decide what a
pair of permutations generates.
"""

# %%
# Products read right to left: (p*q)(i) = p(q(i)).
from symgen.perm import parse, cycle_type, order, min_degree_cyclic, in_frak_M

p = parse("(1 2 3)", 3)
q = parse("(1 2)", 3)
print("p*q =", p * q)
print("cycle type of (1 2 3)(4 5) in S_6:", cycle_type(parse("(1 2 3)(4 5)", 6)))
print("order:", order(parse("(1 2 3)(4 5)", 5)))

# %%
# Minimal degree of a cyclic group: the fewest points moved by a non-identity power.
s = parse("(1 2 3 4 5 6)", 6)
print("min degree of <(1 2 3 4 5 6)>:", min_degree_cyclic(s))
print("(1 2) large minimal degree in S_9? ", in_frak_M(parse("(1 2)", 9)))
print("(1 2) large minimal degree in S_25?", in_frak_M(parse("(1 2)", 25)))

# %%
# Orbits, blocks and the order from Schreier-Sims.
from symgen.groups import bsgs, classify_tuple, group_order, minimal_block, orbits

square = [parse("(1 2 3 4)", 4), parse("(1 3)", 4)]
print("orbits:", orbits(square))
print("smallest block holding 1 and 3:", minimal_block(square, 1, 3))
print("order of the square's symmetry group:", group_order(bsgs(square)))

# %%
# Classification: intransitive, imprimitive, primitive proper, or containing A_n.
for gens, n in [(["(1 2 3)", "(4 5)"], 5), (["(1 2 3 4)", "(1 3)"], 4),
                (["(1 2 3 4 5)", "(2 3 5 4)"], 5), (["(1 2 3 4 5 6 7 8 9 10)", "(1 2)"], 10)]:
    c = classify_tuple([parse(g, n) for g in gens])
    print(gens, "->", c.kind.value, c.to_dict())
