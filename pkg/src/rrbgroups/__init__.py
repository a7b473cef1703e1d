"""Finite relative Rota-Baxter groups, skew braces, and their extension cohomology."""

from . import abelian, braces, bridge, catalog, cohomology, core, extensions, io, rrb
from .abelian import abelian_decomposition, smith_normal_form
from .braces import (
    GoodTriplet,
    SkewLeftBrace,
    brace_extension_from_cocycle,
    brace_h2,
    brace_new,
    good_triplet_verify,
    induced_brace,
    ybe_check,
    ybe_solution,
)
from .bridge import class_map, lambda_pi_psi, pi_non_surjectivity_check, triplet_from_module
from .cohomology import RRBModule, d1, d2, h0, h1, h2, h2_central, module_new, trivial_module
from .core import FiniteGroup, cyclic, dihedral, direct_product, group_from_table, symmetric
from .errors import RRBError
from .extensions import (
    RRBExtension,
    cocycle_from_extension,
    enumerate_ext,
    equivalent,
    extension_from_cocycle,
    semidirect,
    split_classify,
)
from .rrb import RRBGroup, enumerate_rb_operators, from_exact_factorization, from_opposite, rrb_new

__version__ = "0.1.0"
