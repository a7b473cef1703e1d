"""
Second cohomology and extensions
================================

A module over a small RRB group, its second cohomology, and one extension per
class.  Brute force and Smith normal form should give the same count.
"""

# %%
from rrbgroups import catalog
from rrbgroups.cohomology import h1, h2
from rrbgroups.extensions import cocycle_from_extension, enumerate_ext, equivalent, semidirect, split_classify

mods = catalog.example_modules()
for name, m in mods.items():
    print(f"{name:>13}  H1 {h1(m).factors}  H2 {h2(m).factors}")

# %%
# Every class of z2_trivial, built as an extension, then checked against the others.
m = mods["z2_trivial"]
classes = enumerate_ext(m)
for c in classes:
    split = split_classify(c.extension).split
    print(c.coords, "split" if split else "non-split", "|H| =", c.extension.total.H.order)

# %%
# Enumerating every normalized cochain and sorting by direct search gives the same number.
found = enumerate_ext(m, "enumerate")
print(len(found), "classes by search;", sum(c.size for c in found), "cocycles in total")

# %%
# Two extensions are equivalent exactly when their cocycles differ by a coboundary.
a, b = classes[1].extension, classes[2].extension
print(equivalent(a, a).equivalent, equivalent(a, b).equivalent)

# %%
sd = semidirect(mods["klein_swap"])
print("semidirect class:", h2(mods["klein_swap"]).class_of(cocycle_from_extension(sd)))
