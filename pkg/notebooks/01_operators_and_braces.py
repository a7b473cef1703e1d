"""
Rota-Baxter operators, descendent groups and braces
===================================================

Start from S3 split as rotations times one reflection, read off the operator
R(hl) = l^-1, and follow it to a skew brace and a solution of the braid relation.
"""

# %%
import numpy as np

from rrbgroups import catalog, core, rrb
from rrbgroups.braces import induced_brace, lambda_map, ybe_check, ybe_solution

r = catalog.s3_exact_factorization()
print(r.H.label, "order", r.H.order)
print("R =", r.R.tolist())

# %%
# R is a homomorphism from the descendent group x o y = x phi_{R(x)}(y) into G.
D = r.descendent()
print(D.table)
assert all(r.r(D.mul(x, y)) == r.G.mul(r.r(x), r.r(y)) for x in range(6) for y in range(6))

# %%
# The induced brace keeps the old product as "dot" and uses the descendent
# product as "circ".  lambda_a(b) = a^-1 (a o b) is an action of the circle group.
b = induced_brace(r)
print("trivial brace?", b.is_trivial())
print(lambda_map(b).perms)

# %%
sol = ybe_solution(b)
print("braid relation:", ybe_check(sol.left, sol.right) or "holds")

# %%
# How many operators does each small group carry for its conjugation action?
for G in [core.cyclic(n) for n in range(1, 7)] + [core.symmetric(3), core.dihedral(4)]:
    ops = rrb.enumerate_rb_operators(G, G, rrb.adjoint_action(G))
    nontriv = sum(not induced_brace(rrb.rota_baxter_group(G, R)).is_trivial() for R in ops)
    print(f"{G.label:>4}  operators {len(ops):3d}  non-trivial braces {nontriv}")
