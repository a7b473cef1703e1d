import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

from rrbgroups import catalog  # noqa: E402
from rrbgroups.core import aut_as_group, cyclic, direct_product, homomorphisms, symmetric, trivial_group  # noqa: E402
from rrbgroups.cohomology import enumerate_modules  # noqa: E402
from rrbgroups.rrb import enumerate_rb_operators, rrb_new, trivial_rrb  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def small_groups():
    """Every group of order at most 6 up to isomorphism, plus the trivial group."""
    return [trivial_group(), cyclic(2), cyclic(3), cyclic(4), direct_product(cyclic(2), cyclic(2)),
            cyclic(5), cyclic(6), symmetric(3)]


def actions(A, B):
    """All actions of B on A by automorphisms, as permutation arrays."""
    autA, perms = aut_as_group(A)
    return [np.array([perms[i] for i in h]) for h in homomorphisms(B, autA)]


def module_zoo():
    """A spread of modules with |A|, |B|, |K|, |L| <= 4, nontrivial actions included."""
    out = dict(catalog.example_modules())
    Z2, Z3 = cyclic(2), cyclic(3)
    inv = actions(Z3, Z2)[1]
    for R in enumerate_rb_operators(Z3, Z2, inv):
        base = rrb_new(Z3, Z2, inv, R)
        for i, m in enumerate(enumerate_modules(base, trivial_rrb(Z3, Z2, [0, 0, 0]))[:4]):
            out[f"z3_z2_{''.join(map(str, R))}_{i}"] = m
    mods = enumerate_modules(rrb_new(Z3, Z2, inv, [0, 0, 0]), trivial_rrb(Z3, Z3, [0, 0, 0]))
    out["z3_z3_sigma_f"] = mods[2]
    out["z3_z3_nu_f"] = mods[5]
    return out


@pytest.fixture(scope="session")
def zoo():
    return module_zoo()
