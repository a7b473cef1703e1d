"""
From RRB cohomology to brace cohomology
=======================================

Each RRB extension induces a brace extension.  On classes this is an additive map,
bijective when T and S are identities, and in general not onto.
"""

# %%
from rrbgroups import catalog
from rrbgroups.bridge import class_map, pi_non_surjectivity_check

for name, m in catalog.example_modules().items():
    cm = class_map(m)
    print(f"{name:>13}  {cm.source.factors} -> {cm.target.factors}  image {cm.image_size}"
          f"  injective {cm.injective}  surjective {cm.surjective}")

# %%
# Z/p^2 with x o y = x + y + p x y extends Z/p by Z/p as braces, but no RRB
# extension of the Z/p data with trivial G side induces it.
for p in (2, 3):
    rep = pi_non_surjectivity_check(p)
    print(f"p={p}: {rep.rrb_cocycles} RRB cocycles, brace H2 of order {rep.brace_h2_order},"
          f" image {rep.attained}, target class {rep.e1_class}, certified {rep.certified}")
