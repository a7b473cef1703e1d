"""Named small examples used by the bundled documents, demos and tests."""

from __future__ import annotations

import itertools

import numpy as np

from .braces import SkewLeftBrace, brace_new
from .cohomology import RRBModule, module_new, trivial_module
from . import io
from .core import cyclic, direct_product, symmetric, trivial_group
from .extensions import enumerate_ext, semidirect
from .rrb import RRBGroup, from_exact_factorization, from_opposite, trivial_rrb


def _perm_index(p: tuple[int, ...]) -> int:
    return list(itertools.permutations(range(len(p)))).index(p)


def s3_exact_factorization() -> RRBGroup:
    """S3 = A3 . <(0 1)> with R(h l) = l^-1."""
    S3 = symmetric(3)
    rot = [_perm_index(p) for p in [(0, 1, 2), (1, 2, 0), (2, 0, 1)]]
    swap = [_perm_index((0, 1, 2)), _perm_index((1, 0, 2))]
    return from_exact_factorization(S3, rot, swap)


def z6_exact_factorization() -> RRBGroup:
    return from_exact_factorization(cyclic(6), [0, 2, 4], [0, 3])


def opposite_s3() -> RRBGroup:
    return from_opposite(symmetric(3))


def opposite_cyclic(n: int) -> RRBGroup:
    return from_opposite(cyclic(n))


def hom_operator(n: int = 4, m: int = 2) -> RRBGroup:
    """Trivial action and R the reduction Z/n -> Z/m (m divides n)."""
    return trivial_rrb(cyclic(n), cyclic(m), np.arange(n) % m)


def base_z2() -> RRBGroup:
    return trivial_rrb(cyclic(2), cyclic(2), [0, 1])


def z2_trivial_module() -> RRBModule:
    return trivial_module(base_z2(), trivial_rrb(cyclic(2), cyclic(2), [0, 1]))


def z2_bilinear_module() -> RRBModule:
    """K = L = Z/2 with S = 0 and f(l, a) = l a."""
    Z2 = cyclic(2)
    coeff = trivial_rrb(Z2, Z2, [0, 0])
    ident = [[0, 1], [0, 1]]
    return module_new(base_z2(), coeff, ident, ident, ident, [[0, 0], [0, 1]])


def z3_inversion_module() -> RRBModule:
    """K = L = Z/3, S = id, and the generator of A = B = Z/2 inverts both."""
    Z3 = cyclic(3)
    coeff = trivial_rrb(Z3, Z3, [0, 1, 2])
    inv = [[0, 1, 2], [0, 2, 1]]
    triv = [[0, 1, 2], [0, 1, 2]]
    return module_new(base_z2(), coeff, triv, inv, inv, np.zeros((3, 2), dtype=np.int64))


def z3_mu_module() -> RRBModule:
    """K = Z/3 inverted by A = Z/2, L = Z/2, S = 0."""
    Z2, Z3 = cyclic(2), cyclic(3)
    coeff = trivial_rrb(Z3, Z2, [0, 0, 0])
    return module_new(base_z2(), coeff, [[0, 1, 2], [0, 1, 2]], [[0, 1, 2], [0, 2, 1]], [[0, 1], [0, 1]],
                      np.zeros((2, 2), dtype=np.int64))


def klein_swap_module() -> RRBModule:
    """A = B = Z/2, K = L = Z/2 x Z/2 with the generator swapping the factors, S = id."""
    V = direct_product(cyclic(2), cyclic(2))
    coeff = trivial_rrb(V, V, [0, 1, 2, 3])
    swap = [[0, 1, 2, 3], [0, 2, 1, 3]]
    triv = [[0, 1, 2, 3], [0, 1, 2, 3]]
    return module_new(base_z2(), coeff, triv, swap, swap, np.zeros((4, 2), dtype=np.int64))


def degenerate_module(nB: int, nL: int) -> RRBModule:
    """Base (1, Z/nB, 1, 1), coefficients (1, Z/nL, 1, 1), trivial actions."""
    one = trivial_group()
    base = trivial_rrb(one, cyclic(nB), [0])
    coeff = trivial_rrb(one, cyclic(nL), [0])
    return trivial_module(base, coeff)


def cyclic_p2_brace(p: int) -> SkewLeftBrace:
    """Z/p^2 with x o y = x + y + p x y."""
    q = p * p
    return brace_new(cyclic(q), [[(x + y + p * x * y) % q for y in range(q)] for x in range(q)])


def z4_brace() -> SkewLeftBrace:
    return cyclic_p2_brace(2)


def example_modules() -> dict[str, RRBModule]:
    return {
        "z2_trivial": z2_trivial_module(),
        "z2_bilinear": z2_bilinear_module(),
        "z3_inversion": z3_inversion_module(),
        "z3_mu": z3_mu_module(),
        "klein_swap": klein_swap_module(),
    }


def nonsplit_z2_extension():
    """Extension of the Z/2 base by the trivial Z/2 module along the first nonzero class."""
    return next(c.extension for c in enumerate_ext(z2_trivial_module()) if any(c.coords))


def example_documents() -> dict[str, dict]:
    """The documents shipped in the package data directory."""
    rrbs = {
        "s3_exact_factorization": s3_exact_factorization(),
        "z6_exact_factorization": z6_exact_factorization(),
        "opposite_s3": opposite_s3(),
        "opposite_z4": opposite_cyclic(4),
        "hom_operator_z4_z2": hom_operator(4, 2),
    }
    docs = {name: io.to_document("rrb", r) for name, r in rrbs.items()}
    for name, m in example_modules().items():
        docs[f"module_{name}"] = io.to_document("module", m)
    docs["brace_z4"] = io.to_document("brace", z4_brace())
    docs["brace_z9"] = io.to_document("brace", cyclic_p2_brace(3))
    docs["ext_semidirect_z2_bilinear"] = io.to_document("extension", semidirect(z2_bilinear_module()))
    docs["ext_nonsplit_z2"] = io.to_document("extension", nonsplit_z2_extension())
    return docs
