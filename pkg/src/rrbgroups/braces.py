"""Skew left braces, their Yang-Baxter solutions, and abelian brace extensions.

A skew left brace is stored as two Cayley tables on the same index set: the
additive group ``dot`` and the multiplicative group ``circ``.  Extensions by a
trivial brace on an abelian group are described by a good triplet of actions
and a pair of 2-cochains ``(g, f)``; see ``brace_extension_from_cocycle`` for
the multiplication rules they encode.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import core
from .abelian import LatticeQuotient, abelian_decomposition
from .cochains import (
    Block,
    CochainSpace,
    homology_enumerate,
    homology_snf,
    linearize,
    matrix_columns,
)
from .core import FiniteGroup, GroupAction, group_action, group_from_table
from .errors import CrossCheckFailed, NotABrace, NotAnExtension, NotGoodTriplet, NotRRBHom, SolutionCheckFailed
from .rrb import RRBGroup, RRBHom, rrb_new


@dataclass(frozen=True, eq=False)
class SkewLeftBrace:
    dot: FiniteGroup
    circ: FiniteGroup

    @property
    def order(self) -> int:
        return self.dot.order

    @property
    def identity(self) -> int:
        return self.dot.identity

    def lam(self, a: int, b: int) -> int:
        return self.dot.mul(self.dot.inv(a), self.circ.mul(a, b))

    def is_trivial(self) -> bool:
        return self.dot.same_as(self.circ)


def _brace_violation(dot: FiniteGroup, circ: FiniteGroup):
    D, C = dot.table, circ.table
    n = dot.order
    a = np.arange(n)[:, None, None]
    lhs = C[a, D[None, :, :]]  # a o (b c)
    ab = C[:, :, None]  # (a o b)
    ac = C[:, None, :]
    rhs = D[D[ab, dot.inverses[a]], ac]
    bad = np.argwhere(lhs != rhs)
    return None if not len(bad) else tuple(int(v) for v in bad[0])


def brace_new(dot, circ) -> SkewLeftBrace:
    """Validate a pair of tables. Accepts FiniteGroups or raw tables."""
    try:
        d = dot if isinstance(dot, FiniteGroup) else group_from_table(dot, "dot")
        c = circ if isinstance(circ, FiniteGroup) else group_from_table(circ, "circ")
    except core.NotAGroup as exc:
        raise NotABrace(f"not a group: {exc}", witness=exc.witness) from exc
    if d.order != c.order:
        raise NotABrace("tables have different sizes")
    bad = _brace_violation(d, c)
    if bad is not None:
        raise NotABrace(f"brace law fails at {bad}", witness=bad)
    return SkewLeftBrace(d, c)


def trivial_brace(g: FiniteGroup) -> SkewLeftBrace:
    return SkewLeftBrace(g, g)


def induced_brace(rrb: RRBGroup) -> SkewLeftBrace:
    """(H, ., o_R)."""
    return brace_new(rrb.H, rrb.descendent())


def lambda_map(b: SkewLeftBrace) -> GroupAction:
    """lambda_a(x) = a^-1 (a o x), an action of (B, o) on (B, .)."""
    D, C = b.dot.table, b.circ.table
    perms = D[b.dot.inverses[:, None], C]
    return group_action(b.circ, b.dot, perms, "hom")


def rrb_from_brace(b: SkewLeftBrace) -> RRBGroup:
    """(B., Bo, lambda, identity)."""
    return rrb_new(b.dot, b.circ, lambda_map(b), np.arange(b.order))


# ---------------------------------------------------------------- YBE


@dataclass(frozen=True, eq=False)
class YBESolution:
    """r(x, y) = (left[x, y], right[x, y])."""

    brace: SkewLeftBrace
    left: np.ndarray
    right: np.ndarray


def ybe_check(left: np.ndarray, right: np.ndarray) -> str | None:
    n = left.shape[0]
    # bijectivity of r on X x X
    if len(set((left * n + right).ravel().tolist())) != n * n:
        return "r is not bijective"
    for x in range(n):
        if len(set(left[x, :].tolist())) != n:
            return f"left component not a bijection for x={x}"
        if len(set(right[:, x].tolist())) != n:
            return f"right component not a bijection for y={x}"
    x = np.arange(n)[:, None, None]
    y = np.arange(n)[None, :, None]
    z = np.arange(n)[None, None, :]
    x, y, z = np.broadcast_arrays(x, y, z)
    # r12 r23 r12 vs r23 r12 r23
    def r12(a, b, c):
        return left[a, b], right[a, b], c

    def r23(a, b, c):
        return a, left[b, c], right[b, c]

    lhs = r12(*r23(*r12(x, y, z)))
    rhs = r23(*r12(*r23(x, y, z)))
    for u, v in zip(lhs, rhs):
        bad = np.argwhere(u != v)
        if len(bad):
            return f"braid relation fails at {tuple(int(t) for t in bad[0])}"
    return None


def ybe_solution(b: SkewLeftBrace) -> YBESolution:
    C = b.circ.table
    lam = lambda_map(b).perms
    left = lam  # left[x, y] = lambda_x(y)
    cinv = b.circ.inverses
    right = C[C[cinv[left], np.arange(b.order)[:, None]], np.arange(b.order)[None, :]]
    bad = ybe_check(left, right)
    if bad:
        raise SolutionCheckFailed(bad)
    return YBESolution(b, left, right)


# ---------------------------------------------------------------- homs


@dataclass(frozen=True, eq=False)
class BraceHom:
    source: SkewLeftBrace
    target: SkewLeftBrace
    image: np.ndarray


def brace_hom(src: SkewLeftBrace, tgt: SkewLeftBrace, image) -> BraceHom:
    img = np.asarray(image, dtype=np.int64)
    if core._hom_violation(src.dot, tgt.dot, img) is not None:
        raise NotRRBHom("not a homomorphism of additive groups")
    if core._hom_violation(src.circ, tgt.circ, img) is not None:
        raise NotRRBHom("not a homomorphism of multiplicative groups")
    return BraceHom(src, tgt, img)


def brace_hom_from_rrb_hom(h: RRBHom) -> BraceHom:
    return brace_hom(induced_brace(h.source), induced_brace(h.target), h.psi)


def brace_isomorphic(a: SkewLeftBrace, b: SkewLeftBrace) -> bool:
    for img in core.group_isomorphisms(a.dot, b.dot):
        if core._hom_violation(a.circ, b.circ, img) is None:
            return True
    return False


# ---------------------------------------------------------------- triplets


@dataclass(frozen=True, eq=False)
class GoodTriplet:
    """Actions on an abelian group I attached to a brace M.

    xi: (M, o) -> Aut I homomorphism; zeta: (M, .) -> Aut I anti-homomorphism;
    eps: (M, o) -> Aut I anti-homomorphism.
    """

    brace: SkewLeftBrace
    I: FiniteGroup
    xi: GroupAction
    zeta: GroupAction
    eps: GroupAction


def good_triplet_violation(t: GoodTriplet):
    M, I = t.brace, t.I
    X, Z, E = t.xi.perms, t.zeta.perms, t.eps.perms
    for m1 in M.dot.elements():
        for m2 in M.dot.elements():
            p = M.dot.mul(m1, m2)
            lhs = I.table[X[p][E[p]], Z[m2]]
            rhs = I.table[Z[m2][X[m1][E[m1]]], X[m2][E[m2]]]
            if not np.array_equal(lhs, rhs):
                return (1, (m1, m2))
            w = M.dot.mul(M.dot.inv(m1), M.circ.mul(m1, m2))
            if not np.array_equal(Z[w][X[m1]], X[m1][Z[m2]]):
                return (2, (m1, m2))
    return None


def good_triplet_verify(brace: SkewLeftBrace, I: FiniteGroup, xi, zeta, eps) -> GoodTriplet:
    if not I.is_abelian():
        raise NotGoodTriplet("coefficient group must be abelian")
    try:
        xi = group_action(brace.circ, I, getattr(xi, "perms", xi), "hom")
        zeta = group_action(brace.dot, I, getattr(zeta, "perms", zeta), "anti")
        eps = group_action(brace.circ, I, getattr(eps, "perms", eps), "anti")
    except core.NotAnAction as exc:
        raise NotGoodTriplet(f"bad action: {exc}", witness=exc.witness) from exc
    t = GoodTriplet(brace, I, xi, zeta, eps)
    bad = good_triplet_violation(t)
    if bad:
        raise NotGoodTriplet(f"condition {bad[0]} fails at {bad[1]}", witness=bad)
    return t


def trivial_triplet(brace: SkewLeftBrace, I: FiniteGroup) -> GoodTriplet:
    return GoodTriplet(brace, I, core.trivial_action(brace.circ, I, "hom"),
                       core.trivial_action(brace.dot, I, "anti"), core.trivial_action(brace.circ, I, "anti"))


# ---------------------------------------------------------------- cohomology


@dataclass(frozen=True, eq=False)
class BraceCocyclePair:
    g: np.ndarray  # M x M -> I, additive-group part
    f: np.ndarray  # M x M -> I, multiplicative-group part


def brace_spaces(t: GoodTriplet) -> tuple[CochainSpace, CochainSpace, CochainSpace]:
    Id = abelian_decomposition(t.I)
    M = t.brace.dot
    c1 = CochainSpace((Block("theta", (M,), Id),))
    c2 = CochainSpace((Block("g", (M, M), Id), Block("f", (M, M), Id)))
    c3 = CochainSpace(tuple(Block(f"c{i}", (M, M, M), Id) for i in (1, 2, 3)))
    return c1, c2, c3


def brace_d1(t: GoodTriplet, theta: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Change of section s -> s o theta, as the pair (g, f) it adds."""
    M, I = t.brace, t.I
    X, Z, E = t.xi.perms, t.zeta.perms, t.eps.perms
    n = M.order
    g = np.empty((n, n), dtype=np.int64)
    f = np.empty((n, n), dtype=np.int64)
    for m1 in range(n):
        for m2 in range(n):
            p = M.dot.mul(m1, m2)
            g[m1, m2] = I.prod(I.inv(X[p, theta[p]]), Z[m2, X[m1, theta[m1]]], X[m2, theta[m2]])
            c = M.circ.mul(m1, m2)
            f[m1, m2] = X[c, I.prod(I.inv(theta[c]), E[m2, theta[m1]], theta[m2])]
    return g, f


def brace_d2(t: GoodTriplet, g: np.ndarray, f: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """The three cocycle expressions; (g, f) is a cocycle iff all vanish."""
    M, I = t.brace, t.I
    D, C = M.dot, M.circ
    X, Z, E = t.xi.perms, t.zeta.perms, t.eps.perms
    n = M.order
    c1 = np.empty((n, n, n), dtype=np.int64)
    c2 = np.empty((n, n, n), dtype=np.int64)
    c3 = np.empty((n, n, n), dtype=np.int64)
    inv = I.inv
    for m1 in range(n):
        m1i = D.inv(m1)
        for m2 in range(n):
            d12, o12 = D.mul(m1, m2), C.mul(m1, m2)
            xi12_inv = X[C.inv(o12)]
            for m3 in range(n):
                c1[m1, m2, m3] = I.prod(g[m2, m3], inv(g[d12, m3]), g[m1, D.mul(m2, m3)], inv(Z[m3, g[m1, m2]]))
                o123 = C.mul(o12, m3)
                c2[m1, m2, m3] = I.prod(
                    X[m1, f[m2, m3]], inv(f[o12, m3]), f[m1, C.mul(m2, m3)],
                    inv(X[o123, E[m3, xi12_inv[f[m1, m2]]]]))
                o13 = C.mul(m1, m3)
                w = D.mul(m1i, o13)
                c3[m1, m2, m3] = I.prod(
                    X[m1, g[m2, m3]], Z[o13, g[m1, m1i]], inv(Z[o13, g[o12, m1i]]),
                    inv(g[D.mul(o12, m1i), o13]), inv(Z[w, f[m1, m2]]),
                    f[m1, D.mul(m2, m3)], inv(f[m1, m3]))
    return c1, c2, c3


@dataclass
class BraceH2:
    order: int
    factors: list[int]
    quotient: LatticeQuotient = field(repr=False)
    space: CochainSpace = field(repr=False)

    def class_of(self, pair: BraceCocyclePair) -> tuple[int, ...]:
        return self.quotient.class_of(self.space.to_vector((pair.g, pair.f)))

    def representative(self, coords: Sequence[int]) -> BraceCocyclePair:
        g, f = self.space.from_vector(self.space.reduce(self.quotient.element(coords)))
        return BraceCocyclePair(g, f)


def brace_h2(t: GoodTriplet, method: str = "snf") -> BraceH2:
    """Second cohomology of M with coefficients in I and the given triplet.

    ``method`` is "snf", "enumerate" (brute force over all cochain pairs) or
    "both", which raises CrossCheckFailed on disagreement.
    """
    c1, c2, c3 = brace_spaces(t)
    d2 = lambda c: brace_d2(t, c[0], c[1])
    d1 = lambda c: brace_d1(t, c[0])
    M1 = linearize(d1, c1, c2)
    M2 = linearize(d2, c2, c3)
    q = homology_snf(M2, c2, c3, matrix_columns(M1, c1.dim))
    res = BraceH2(q.order, list(q.factors), q, c2)
    if method in ("enumerate", "both"):
        e = homology_enumerate(d2, c2, c3, d1, None, c1)
        if method == "both" and (e.order, e.factors) != (res.order, res.factors):
            raise CrossCheckFailed("enumeration and SNF disagree", witness=(e, res))
        if method == "enumerate":
            res = BraceH2(e.order, e.factors, q, c2)
    return res


# ---------------------------------------------------------------- extensions


@dataclass(frozen=True, eq=False)
class BraceExtension:
    """0 -> kernel --incl--> total --proj--> quotient -> 0, kernel a trivial brace."""

    kernel: SkewLeftBrace
    total: SkewLeftBrace
    quotient: SkewLeftBrace
    incl: np.ndarray
    proj: np.ndarray


def brace_extension_verify(kernel: SkewLeftBrace, total: SkewLeftBrace, quotient: SkewLeftBrace, incl, proj) -> BraceExtension:
    incl = np.asarray(incl, dtype=np.int64)
    proj = np.asarray(proj, dtype=np.int64)
    try:
        brace_hom(kernel, total, incl)
        brace_hom(total, quotient, proj)
    except NotRRBHom as exc:
        raise NotAnExtension(str(exc)) from exc
    if len(set(incl.tolist())) != kernel.order:
        raise NotAnExtension("inclusion is not injective")
    if len(set(proj.tolist())) != quotient.order:
        raise NotAnExtension("projection is not surjective")
    ker = sorted(x for x in total.dot.elements() if proj[x] == quotient.identity)
    if ker != sorted(incl.tolist()):
        raise NotAnExtension("image of inclusion is not the kernel of projection")
    if not (kernel.is_trivial() and kernel.dot.is_abelian()):
        raise NotAnExtension("kernel must be a trivial brace on an abelian group")
    return BraceExtension(kernel, total, quotient, incl, proj)


def canonical_brace_section(e: BraceExtension) -> np.ndarray:
    s = np.full(e.quotient.order, -1, dtype=np.int64)
    for x in e.total.dot.elements():
        m = e.proj[x]
        if s[m] < 0:
            s[m] = x
    s[e.quotient.identity] = e.total.identity
    return s


def _kernel_index(e: BraceExtension) -> dict[int, int]:
    return {int(x): i for i, x in enumerate(e.incl)}


def triplet_from_extension(e: BraceExtension, section=None) -> GoodTriplet:
    s = canonical_brace_section(e) if section is None else np.asarray(section)
    D, C = e.total.dot, e.total.circ
    back = _kernel_index(e)
    M, I = e.quotient, e.kernel.dot
    xi = np.array([[back[e.total.lam(int(s[m]), int(e.incl[y]))] for y in I.elements()] for m in M.dot.elements()])
    zeta = np.array([[back[D.prod(D.inv(int(s[m])), int(e.incl[y]), int(s[m]))] for y in I.elements()] for m in M.dot.elements()])
    eps = np.array([[back[C.prod(C.inv(int(s[m])), int(e.incl[y]), int(s[m]))] for y in I.elements()] for m in M.dot.elements()])
    return good_triplet_verify(M, I, xi, zeta, eps)


def brace_extension_cocycle(e: BraceExtension, section=None) -> BraceCocyclePair:
    """(g, f) with s(m1 m2) g = s(m1) s(m2) and s(m1 o m2) f = s(m1) o s(m2)."""
    s = canonical_brace_section(e) if section is None else np.asarray(section)
    M = e.quotient
    if np.any(e.proj[s] != np.arange(M.order)) or s[M.identity] != e.total.identity:
        raise NotAnExtension("section is not a normalized section of the projection")
    D, C = e.total.dot, e.total.circ
    back = _kernel_index(e)
    n = M.order
    g = np.empty((n, n), dtype=np.int64)
    f = np.empty((n, n), dtype=np.int64)
    for m1 in range(n):
        for m2 in range(n):
            g[m1, m2] = back[D.prod(D.inv(int(s[M.dot.mul(m1, m2)])), int(s[m1]), int(s[m2]))]
            f[m1, m2] = back[D.mul(D.inv(int(s[M.circ.mul(m1, m2)])), C.mul(int(s[m1]), int(s[m2])))]
    return BraceCocyclePair(g, f)


def brace_extension_from_cocycle(t: GoodTriplet, pair: BraceCocyclePair) -> BraceExtension:
    """Total brace on pairs (m, y), index m * |I| + y.

    (m1, y1) . (m2, y2) = (m1 m2,  g(m1, m2) + zeta_{m2}(y1) + y2)
    (m1, y1) o (m2, y2) = (m1 o m2, f(m1, m2) + xi_{m1 o m2} eps_{m2} xi_{m1}^-1 (y1) + xi_{m1}(y2))
    """
    M, I = t.brace, t.I
    X, Z, E = t.xi.perms, t.zeta.perms, t.eps.perms
    k = I.order
    N = M.order * k
    dot = np.empty((N, N), dtype=np.int64)
    circ = np.empty((N, N), dtype=np.int64)
    for x in range(N):
        m1, y1 = divmod(x, k)
        for y in range(N):
            m2, y2 = divmod(y, k)
            md = M.dot.mul(m1, m2)
            dot[x, y] = md * k + I.prod(pair.g[m1, m2], Z[m2, y1], y2)
            mc = M.circ.mul(m1, m2)
            circ[x, y] = mc * k + I.prod(pair.f[m1, m2], X[mc, E[m2, X[M.circ.inv(m1), y1]]], X[m1, y2])
    total = brace_new(dot, circ)
    incl = np.array([M.identity * k + y for y in range(k)], dtype=np.int64)
    proj = np.arange(N) // k
    return brace_extension_verify(trivial_brace(I), total, M, incl, proj)
