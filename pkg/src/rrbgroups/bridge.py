"""Passing between RRB extensions and skew brace extensions.

``induced_brace_extension`` sends an RRB extension to the extension of induced
braces; ``lift_brace_extension`` goes back through (B., Bo, lambda, id).  On
cocycles the composite is ``lambda_pi_psi``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .braces import (
    BraceCocyclePair,
    BraceExtension,
    BraceH2,
    GoodTriplet,
    brace_extension_cocycle,
    brace_extension_from_cocycle,
    brace_extension_verify,
    brace_h2,
    brace_new,
    good_triplet_verify,
    induced_brace,
    rrb_from_brace,
    trivial_brace,
)
from .cohomology import (
    CohomologyResult,
    RRBCochain2,
    RRBModule,
    d2,
    h2,
    spaces,
    trivial_module,
)
from .core import cyclic, trivial_group
from .errors import NotACocycle, NotBijective
from .extensions import (
    ActionQuadruple,
    RRBExtension,
    _build,
    canonical_section,
    extension_verify,
)
from .rrb import rrb_hom, trivial_rrb

__all__ = [
    "induced_brace_extension",
    "lift_brace_extension",
    "triplet_from_module",
    "epsilon_from_action",
    "epsilon_direct",
    "recover_rrb_action",
    "lambda_pi_psi",
    "ClassMap",
    "class_map",
    "NonSurjectivityReport",
    "pi_non_surjectivity_check",
]


def induced_brace_extension(e: RRBExtension) -> BraceExtension:
    return brace_extension_verify(induced_brace(e.kernel), induced_brace(e.total), induced_brace(e.quot),
                                  e.incl.psi, e.proj.psi)


def lift_brace_extension(be: BraceExtension) -> RRBExtension:
    k, t, q = rrb_from_brace(be.kernel), rrb_from_brace(be.total), rrb_from_brace(be.quotient)
    return extension_verify(rrb_hom(k, t, be.incl, be.incl), rrb_hom(t, q, be.proj, be.proj))


def epsilon_from_action(m: RRBModule) -> np.ndarray:
    """eps_a(k) = nu_{T(a)}^-1 (mu_a(k) f(S(k), a))."""
    K = m.K
    return np.array([[m.nu_inv(int(m.T[a]), K.mul(m.mu.perms[a, k], m.f[m.S[k], a])) for k in K.elements()]
                     for a in m.A.elements()], dtype=np.int64)


def epsilon_direct(e: RRBExtension, s=None) -> np.ndarray:
    """Conjugation s(a)^-1 o k o s(a) in the descendent group of the total RRB group."""
    s = canonical_section(e) if s is None else s
    D = e.total.descendent()
    back = {int(x): i for i, x in enumerate(e.incl.psi)}
    return np.array([[back[D.prod(D.inv(int(s.sH[a])), int(e.incl.psi[k]), int(s.sH[a]))]
                      for k in e.kernel.H.elements()] for a in e.quot.H.elements()], dtype=np.int64)


def triplet_from_module(m: RRBModule) -> GoodTriplet:
    """xi_a = nu_{T(a)}, zeta_a = mu_a, eps as in ``epsilon_from_action``."""
    M = induced_brace(m.base)
    xi = m.nu.perms[m.T]
    return good_triplet_verify(M, m.K, xi, m.mu.perms, epsilon_from_action(m))


def recover_rrb_action(t: GoodTriplet, T, S) -> ActionQuadruple:
    """Invert ``triplet_from_module`` when T and S are bijective."""
    T, S = np.asarray(T), np.asarray(S)
    if len(set(T.tolist())) != len(T) or len(set(S.tolist())) != len(S):
        raise NotBijective("T and S must be bijections")
    Tinv = np.empty_like(T)
    Tinv[T] = np.arange(len(T))
    Sinv = np.empty_like(S)
    Sinv[S] = np.arange(len(S))
    I = t.I
    X, Z, E = t.xi.perms, t.zeta.perms, t.eps.perms
    nu = X[Tinv]
    sigma = np.array([S[E[Tinv[b]][Sinv]] for b in range(len(T))], dtype=np.int64)
    f = np.array([[I.mul(X[a, E[a, Sinv[l]]], I.inv(Z[a, Sinv[l]])) for a in range(len(T))]
                  for l in range(len(S))], dtype=np.int64)
    return ActionQuadruple(nu, Z.copy(), sigma, f)


def lambda_pi_psi(m: RRBModule, z: RRBCochain2) -> BraceCocyclePair:
    """(tau1, f) with f(a1, a2) = tau1(a1, beta_{T(a1)}(a2)) rho(a2, T(a1)) nu_{T(a1)}(f(chi(a1), a2))."""
    if not d2(m, z).is_zero(m):
        raise NotACocycle("not a 2-cocycle")
    K = m.K
    n = m.A.order
    f = np.empty((n, n), dtype=np.int64)
    for a1 in range(n):
        t1 = int(m.T[a1])
        for a2 in range(n):
            f[a1, a2] = K.prod(z.tau1[a1, m.beta(t1, a2)], z.rho[a2, t1], m.nu.perms[t1, m.f[z.chi[a1], a2]])
    return BraceCocyclePair(z.tau1.copy(), f)


@dataclass
class ClassMap:
    """The map H^2 of the module -> H^2 of the induced brace, on classes."""

    source: CohomologyResult
    target: BraceH2
    images: list[tuple[int, ...]]  # image of each source generator
    additive: bool
    injective: bool
    surjective: bool
    image_size: int
    table: dict = field(default_factory=dict, repr=False)


def class_map(m: RRBModule) -> ClassMap:
    src = h2(m)
    t = triplet_from_module(m)
    tgt = brace_h2(t)

    def image_of(coords):
        return tgt.class_of(lambda_pi_psi(m, src.cocycle(coords)))

    gens = [tuple(int(i == j) for i in range(len(src.factors))) for j in range(len(src.factors))]
    images = [image_of(g) for g in gens]
    additive = True
    for i, gi in enumerate(gens):
        for j, gj in enumerate(gens):
            s = tuple((a + b) % d for a, b, d in zip(gi, gj, src.factors))
            want = tuple((x + y) % d for x, y, d in zip(images[i], images[j], tgt.factors))
            if image_of(s) != want:
                additive = False
    table = {tuple(c): image_of(c) for c in src.quotient.all_classes()}
    img = set(table.values())
    return ClassMap(src, tgt, images, additive, len(img) == len(table), len(img) == tgt.order, len(img), table)


# ---------------------------------------------------------------- non-surjectivity


@dataclass
class NonSurjectivityReport:
    p: int
    rrb_cocycles: int  # all 2-cocycles of the RRB data, each an extension
    all_induced_trivial: bool  # every induced total brace is trivial
    e1_nontrivial: bool
    e1_class: tuple[int, ...]
    brace_h2_order: int
    attained: list[tuple[int, ...]]
    trivial_total: list[tuple[int, ...]]  # classes whose total brace is trivial
    certified: bool


def pi_non_surjectivity_check(p: int) -> NonSurjectivityReport:
    """A = K = (Z/p, 1, trivial, trivial); Z/p^2 with x o y = x + y + p x y is not reached."""
    if p not in (2, 3):
        raise ValueError("p must be 2 or 3")
    Zp, one = cyclic(p), trivial_group()
    base = trivial_rrb(Zp, one, np.zeros(p, dtype=np.int64))
    coeff = trivial_rrb(cyclic(p), one, np.zeros(p, dtype=np.int64))
    m = trivial_module(base, coeff)
    c2 = spaces(m)[1]
    cocycles = [RRBCochain2(*c2.from_vector(v)) for v in c2.iter_vectors()]
    cocycles = [z for z in cocycles if d2(m, z).is_zero(m)]
    all_trivial = all(induced_brace_extension(_build(m, z)).total.is_trivial() for z in cocycles)

    q = p * p
    e1_total = brace_new(cyclic(q), [[(x + y + p * x * y) % q for y in range(q)] for x in range(q)])
    t = triplet_from_module(m)
    M = t.brace
    e1 = brace_extension_verify(trivial_brace(m.K), e1_total, M, [p * y for y in range(p)], [x % p for x in range(q)])
    bh = brace_h2(t)
    e1_class = bh.class_of(brace_extension_cocycle(e1))
    attained = sorted({bh.class_of(lambda_pi_psi(m, z)) for z in cocycles})
    trivial_total = []
    for c in bh.quotient.all_classes():
        be = brace_extension_from_cocycle(t, bh.representative(c))
        if be.total.is_trivial():
            trivial_total.append(tuple(c))
    certified = (all_trivial and not e1_total.is_trivial() and e1_class not in attained
                 and set(trivial_total) <= set(attained))
    return NonSurjectivityReport(p, len(cocycles), all_trivial, not e1_total.is_trivial(), e1_class, bh.order,
                                 attained, trivial_total, certified)
