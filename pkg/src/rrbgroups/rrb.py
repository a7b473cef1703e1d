"""Relative Rota-Baxter groups (H, G, phi, R) and their structure maps."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from . import core
from .core import FiniteGroup, GroupAction, group_action, group_from_table
from .errors import (
    NotAnIdeal,
    NotExactFactorization,
    NotRRBHom,
    NotRotaBaxter,
    SearchBudgetExceeded,
)

__all__ = [
    "RRBGroup",
    "RRBHom",
    "RRBIdeal",
    "rrb_new",
    "rrb_violation",
    "from_exact_factorization",
    "from_opposite",
    "rota_baxter_group",
    "adjoint_action",
    "trivial_rrb",
    "enumerate_rb_operators",
    "descendent_group",
    "is_ideal",
    "ideal_violations",
    "quotient",
    "center",
    "rrb_hom",
    "kernel",
    "image",
    "rrb_isomorphisms",
    "is_bijective",
]


@dataclass(frozen=True, eq=False)
class RRBGroup:
    H: FiniteGroup
    G: FiniteGroup
    phi: GroupAction  # G acting on H by automorphisms
    R: np.ndarray  # H -> G
    _desc: list = field(default_factory=list, repr=False)

    def r(self, h: int) -> int:
        return int(self.R[h])

    def act(self, g: int, h: int) -> int:
        return int(self.phi.perms[g, h])

    def circ(self, h1: int, h2: int) -> int:
        """h1 o_R h2 = h1 phi_{R(h1)}(h2)"""
        return self.H.mul(h1, int(self.phi.perms[self.R[h1], h2]))

    def descendent(self) -> FiniteGroup:
        if not self._desc:
            self._desc.append(descendent_group(self))
        return self._desc[0]


def rrb_violation(H: FiniteGroup, G: FiniteGroup, phi: GroupAction, R: np.ndarray):
    """First pair (h1, h2) breaking R(h1)R(h2) = R(h1 phi_{R(h1)}(h2)), or None."""
    P = phi.perms
    lhs = G.table[R[:, None], R[None, :]]
    circ = H.table[np.arange(H.order)[:, None], P[R][:, :]]
    rhs = R[circ]
    bad = np.argwhere(lhs != rhs)
    return None if not len(bad) else (int(bad[0][0]), int(bad[0][1]))


def rrb_new(H: FiniteGroup, G: FiniteGroup, phi, R) -> RRBGroup:
    """Validate and build. ``phi`` may be a GroupAction or an (|G|, |H|) array."""
    if not isinstance(phi, GroupAction):
        phi = group_action(G, H, phi, "hom")
    elif phi.actor is not G or phi.space is not H or phi.variance != "hom":
        phi = group_action(G, H, phi.perms, "hom")
    R = np.asarray(R, dtype=np.int64)
    if R.shape != (H.order,) or R.min() < 0 or R.max() >= G.order:
        raise NotRotaBaxter("R has the wrong shape or range")
    bad = rrb_violation(H, G, phi, R)
    if bad is not None:
        raise NotRotaBaxter(f"identity fails at {bad}", witness=bad)
    R.setflags(write=False)
    return RRBGroup(H, G, phi, R)


def adjoint_action(G: FiniteGroup) -> GroupAction:
    perms = np.array([[G.conj(g, x) for x in G.elements()] for g in G.elements()], dtype=np.int64)
    return group_action(G, G, perms, "hom")


def rota_baxter_group(G: FiniteGroup, R) -> RRBGroup:
    """(G, G, conjugation, R)."""
    return rrb_new(G, G, adjoint_action(G), R)


def trivial_rrb(H: FiniteGroup, G: FiniteGroup, R) -> RRBGroup:
    """Trivial action; R must then be a homomorphism."""
    return rrb_new(H, G, core.trivial_action(G, H), R)


def from_exact_factorization(G: FiniteGroup, Hsub: Sequence[int], Lsub: Sequence[int]) -> RRBGroup:
    """R(h l) = l^-1 on G = H L with H cap L = 1, phi conjugation."""
    hs, ls = sorted(set(Hsub)), sorted(set(Lsub))
    if not (G.is_subgroup(hs) and G.is_subgroup(ls)):
        raise NotExactFactorization("factors must be subgroups")
    R = -np.ones(G.order, dtype=np.int64)
    for h in hs:
        for l in ls:
            x = G.mul(h, l)
            if R[x] >= 0:
                raise NotExactFactorization("factorization is not unique", witness=x)
            R[x] = G.inv(l)
    if (R < 0).any():
        raise NotExactFactorization("H L does not cover G", witness=int(np.flatnonzero(R < 0)[0]))
    return rota_baxter_group(G, R)


def from_opposite(G: FiniteGroup) -> RRBGroup:
    """(G, G^op, phi_x(y) = x^-1 y x, identity)."""
    Gop = core.opposite(G)
    perms = np.array([[G.prod(G.inv(x), y, x) for y in G.elements()] for x in G.elements()], dtype=np.int64)
    return rrb_new(G, Gop, group_action(Gop, G, perms, "hom"), np.arange(G.order))


def enumerate_rb_operators(H: FiniteGroup, G: FiniteGroup, phi, budget: int = 10**6) -> list[np.ndarray]:
    """All R: H -> G making (H, G, phi, R) an RRB group, in lexicographic order.

    Backtracking over the values R(h); every assignment is propagated through
    R(h1 o h2) = R(h1) R(h2) before branching again.
    """
    if not isinstance(phi, GroupAction):
        phi = group_action(G, H, phi, "hom")
    P = phi.perms
    n = H.order
    nodes = 0
    out: list[np.ndarray] = []

    def propagate(R: np.ndarray) -> bool:
        changed = True
        while changed:
            changed = False
            assigned = np.flatnonzero(R >= 0)
            for h1 in assigned:
                g1 = R[h1]
                row = P[g1]
                for h2 in assigned:
                    p = H.table[h1, row[h2]]
                    v = G.table[g1, R[h2]]
                    if R[p] < 0:
                        R[p] = v
                        changed = True
                    elif R[p] != v:
                        return False
        return True

    def rec(R: np.ndarray):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded("operator search exceeded budget", witness=budget)
        if not propagate(R):
            return
        free = np.flatnonzero(R < 0)
        if not len(free):
            out.append(R.copy())
            return
        h = free[0]
        for g in G.elements():
            R2 = R.copy()
            R2[h] = g
            rec(R2)

    R0 = -np.ones(n, dtype=np.int64)
    R0[H.identity] = G.identity
    rec(R0)
    out.sort(key=lambda r: r.tolist())
    return out


def descendent_group(rrb: RRBGroup) -> FiniteGroup:
    """(H, o_R); R is a homomorphism from it to G."""
    H = rrb.H
    t = H.table[np.arange(H.order)[:, None], rrb.phi.perms[rrb.R]]
    return group_from_table(t, f"{H.label}_R")


def is_bijective(rrb: RRBGroup) -> bool:
    return rrb.H.order == rrb.G.order and len(set(rrb.R.tolist())) == rrb.G.order


# ---------------------------------------------------------------- homs


@dataclass(frozen=True, eq=False)
class RRBHom:
    source: RRBGroup
    target: RRBGroup
    psi: np.ndarray  # H -> H'
    eta: np.ndarray  # G -> G'


def _rrb_hom_violation(src: RRBGroup, tgt: RRBGroup, psi: np.ndarray, eta: np.ndarray):
    if core._hom_violation(src.H, tgt.H, psi) is not None:
        return "psi is not a homomorphism"
    if core._hom_violation(src.G, tgt.G, eta) is not None:
        return "eta is not a homomorphism"
    if not np.array_equal(eta[src.R], tgt.R[psi]):
        return "eta R != R' psi"
    # psi(phi_g(h)) = phi'_{eta(g)}(psi(h))
    lhs = psi[src.phi.perms]
    rhs = tgt.phi.perms[eta][:, psi]
    if not np.array_equal(lhs, rhs):
        return "psi does not intertwine the actions"
    return None


def rrb_hom(src: RRBGroup, tgt: RRBGroup, psi, eta) -> RRBHom:
    psi = np.asarray(psi, dtype=np.int64)
    eta = np.asarray(eta, dtype=np.int64)
    if psi.shape != (src.H.order,) or eta.shape != (src.G.order,):
        raise NotRRBHom("maps have the wrong shape")
    bad = _rrb_hom_violation(src, tgt, psi, eta)
    if bad:
        raise NotRRBHom(bad)
    return RRBHom(src, tgt, psi, eta)


@dataclass(frozen=True)
class RRBIdeal:
    K: tuple[int, ...]
    L: tuple[int, ...]


def ideal_violations(rrb: RRBGroup, K: Sequence[int], L: Sequence[int]) -> list[str]:
    """Every ideal condition that fails, as short descriptions."""
    H, G = rrb.H, rrb.G
    Ks, Ls = set(int(x) for x in K), set(int(x) for x in L)
    out = []
    if not H.is_normal(Ks):
        out.append("K is not a normal subgroup of H")
    if not G.is_normal(Ls):
        out.append("L is not a normal subgroup of G")
    if any(rrb.act(g, k) not in Ks for g in G.elements() for k in Ks):
        out.append("K is not phi-invariant")
    if any(H.mul(rrb.act(l, h), H.inv(h)) not in Ks for l in Ls for h in H.elements()):
        out.append("phi_l(h) h^-1 not in K for some l in L")
    if any(rrb.r(k) not in Ls for k in Ks):
        out.append("R(K) is not inside L")
    return out


def is_ideal(rrb: RRBGroup, K: Sequence[int], L: Sequence[int]) -> tuple[bool, list[str]]:
    v = ideal_violations(rrb, K, L)
    return (not v, v)


def quotient(rrb: RRBGroup, K: Sequence[int], L: Sequence[int]) -> tuple[RRBGroup, RRBHom]:
    """(H/K, G/L, induced phi, induced R) and the projection onto it."""
    bad = ideal_violations(rrb, K, L)
    if bad:
        raise NotAnIdeal("; ".join(bad), witness=bad)
    Hq, ph, rh = core.quotient_group(rrb.H, K, f"{rrb.H.label}/K")
    Gq, pg, rg = core.quotient_group(rrb.G, L, f"{rrb.G.label}/L")
    perms = np.array([[ph[rrb.act(int(g), int(h))] for h in rh] for g in rg], dtype=np.int64)
    R = np.array([pg[rrb.r(int(h))] for h in rh], dtype=np.int64)
    q = rrb_new(Hq, Gq, perms, R)
    return q, rrb_hom(rrb, q, ph, pg)


def center(rrb: RRBGroup) -> tuple[list[int], list[int]]:
    """(Z(H) cap {h : phi_{R(h)} = id} cap Fix(phi), ker phi)."""
    ident = np.arange(rrb.H.order)
    P = rrb.phi.perms
    zh = rrb.H.center()
    left = [h for h in zh if np.array_equal(P[rrb.R[h]], ident) and all(P[g, h] == h for g in rrb.G.elements())]
    kerphi = [g for g in rrb.G.elements() if np.array_equal(P[g], ident)]
    return left, kerphi


def kernel(h: RRBHom) -> tuple[list[int], list[int]]:
    s, t = h.source, h.target
    return ([x for x in s.H.elements() if h.psi[x] == t.H.identity],
            [x for x in s.G.elements() if h.eta[x] == t.G.identity])


def image(h: RRBHom) -> RRBGroup:
    """Image as a standalone RRB group on the sorted image sets."""
    t = h.target
    Hi, hinc = core.subgroup_of(t.H, sorted(set(h.psi.tolist())))
    Gi, ginc = core.subgroup_of(t.G, sorted(set(h.eta.tolist())))
    hpos = {int(x): i for i, x in enumerate(hinc)}
    gpos = {int(x): i for i, x in enumerate(ginc)}
    perms = np.array([[hpos[t.act(int(g), int(x))] for x in hinc] for g in ginc], dtype=np.int64)
    R = np.array([gpos[t.r(int(x))] for x in hinc], dtype=np.int64)
    return rrb_new(Hi, Gi, perms, R)


def rrb_isomorphisms(a: RRBGroup, b: RRBGroup, budget: int = 10**6) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """All RRB isomorphisms a -> b, as (psi, eta) pairs."""
    if a.H.order != b.H.order or a.G.order != b.G.order:
        return
    etas = list(core.group_isomorphisms(a.G, b.G, budget))
    for psi in core.group_isomorphisms(a.H, b.H, budget):
        for eta in etas:
            if _rrb_hom_violation(a, b, psi, eta) is None:
                yield psi, eta
