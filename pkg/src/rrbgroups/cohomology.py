"""Cohomology of RRB groups with coefficients in an abelian RRB module.

Notation.  The base is (A, B, beta, T), the coefficients are (K, L, trivial, S)
with K, L abelian and S a homomorphism.  A module adds

* ``nu``: B -> Aut(K), a homomorphism,
* ``mu``: A -> Aut(K), an anti-homomorphism,
* ``sigma``: B -> Aut(L), an anti-homomorphism,
* ``f``: L x A -> K, additive in l and a ``mu``-derivation in a,

stored as a ``(|L|, |A|)`` array of elements of K.

Cochains of degree 1 are pairs (theta1: A -> K, theta2: B -> L); degree 2 are
quadruples (tau1, tau2, rho, chi); degree 3 are quintuples.  All are
normalized and stored as arrays of element indices (see ``cochains``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from . import core
from .abelian import (
    LatticeQuotient,
    abelian_decomposition,
    invariants_from_orders,
    kernel_lattice,
)
from .cochains import (
    Block,
    CochainSpace,
    homology_enumerate,
    homology_snf,
    linearize,
    matrix_columns,
)
from .core import FiniteGroup, GroupAction
from .errors import CrossCheckFailed, NotAModule, NotCentralModule, NotInC0, SearchBudgetExceeded
from .rrb import RRBGroup

__all__ = [
    "RRBModule",
    "RRBCochain1",
    "RRBCochain2",
    "RRBCocycle2",
    "RRBCochain3",
    "CohomologyResult",
    "module_new",
    "module_verify",
    "module_violation",
    "trivial_module",
    "enumerate_modules",
    "spaces",
    "c0_fixed_set",
    "d0",
    "d1",
    "d2",
    "d1_central",
    "d2_central",
    "is_central",
    "h0",
    "h1",
    "h2",
    "h2_central",
    "random_cocycle",
    "zero_cochain2",
    "cochain1_from_vector",
    "cochain2_from_vector",
    "group_d1",
    "group_d2",
    "twisted_d1",
]


@dataclass(frozen=True, eq=False)
class RRBModule:
    base: RRBGroup
    coeff: RRBGroup
    nu: GroupAction
    mu: GroupAction
    sigma: GroupAction
    f: np.ndarray
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def A(self) -> FiniteGroup:
        return self.base.H

    @property
    def B(self) -> FiniteGroup:
        return self.base.G

    @property
    def K(self) -> FiniteGroup:
        return self.coeff.H

    @property
    def L(self) -> FiniteGroup:
        return self.coeff.G

    @property
    def T(self) -> np.ndarray:
        return self.base.R

    @property
    def S(self) -> np.ndarray:
        return self.coeff.R

    def beta(self, b: int, a: int) -> int:
        return int(self.base.phi.perms[b, a])

    def nu_inv(self, b: int, k: int) -> int:
        return int(self.nu.perms[self.B.inv(b), k])


@dataclass(frozen=True, eq=False)
class RRBCochain1:
    theta1: np.ndarray
    theta2: np.ndarray

    def parts(self) -> tuple:
        return (self.theta1, self.theta2)


@dataclass(frozen=True, eq=False)
class RRBCochain2:
    tau1: np.ndarray
    tau2: np.ndarray
    rho: np.ndarray  # rho[a, b]
    chi: np.ndarray

    def parts(self) -> tuple:
        return (self.tau1, self.tau2, self.rho, self.chi)


# a 2-cocycle is a 2-cochain killed by d2; same container
RRBCocycle2 = RRBCochain2


@dataclass(frozen=True, eq=False)
class RRBCochain3:
    d_tau1: np.ndarray
    d_tau2: np.ndarray
    gamma1: np.ndarray  # (a, b1, b2)
    gamma2: np.ndarray  # (a1, a2, b)
    gamma3: np.ndarray  # (a1, a2)

    def parts(self) -> tuple:
        return (self.d_tau1, self.d_tau2, self.gamma1, self.gamma2, self.gamma3)

    def is_zero(self, m: RRBModule) -> bool:
        eK, eL = m.K.identity, m.L.identity
        return all(bool(np.all(x == e)) for x, e in zip(self.parts(), (eK, eL, eK, eK, eL)))


# ---------------------------------------------------------------- modules


def module_violation(m: RRBModule):
    """(condition, witness) for the first failing module condition, else None.

    0: coefficient RRB group not trivial-abelian;  1: nu / mu not actions of the
    right variance;  2: sigma not an anti-action;  3: f not additive in l or not
    a derivation in a;  4: compatibility of S with nu, mu and f;  5: nu and mu
    commute through beta;  6: nu_b f(sigma_b l, a) = f(l, beta_b a).
    """
    A, B, K, L = m.A, m.B, m.K, m.L
    if not (K.is_abelian() and L.is_abelian()):
        return (0, "coefficient groups must be abelian")
    if not m.coeff.phi.is_trivial():
        return (0, "coefficient action must be trivial")
    for act, actor, space, var, cond in ((m.nu, B, K, "hom", 1), (m.mu, A, K, "anti", 1), (m.sigma, B, L, "anti", 2)):
        if act.perms.shape != (actor.order, space.order):
            return (cond, "action array has the wrong shape")
        bad = core._action_violation(actor, space, act.perms, var)
        if bad:
            return (cond, bad)
    f = m.f
    if f.shape != (L.order, A.order):
        return (3, "f has the wrong shape")
    mu, nu, sig = m.mu.perms, m.nu.perms, m.sigma.perms
    for a in A.elements():
        for l1 in L.elements():
            for l2 in L.elements():
                if f[L.mul(l1, l2), a] != K.mul(f[l1, a], f[l2, a]):
                    return (3, ("not additive", l1, l2, a))
    for l in L.elements():
        for a1 in A.elements():
            for a2 in A.elements():
                if f[l, A.mul(a1, a2)] != K.mul(mu[a2, f[l, a1]], f[l, a2]):
                    return (3, ("not a derivation", l, a1, a2))
    S, T = m.S, m.T
    for a in A.elements():
        ta = int(T[a])
        ti = B.inv(ta)
        for k in K.elements():
            lhs = S[K.mul(nu[ti, mu[a, k]], nu[ti, f[S[k], a]])]
            if lhs != sig[ta, S[k]]:
                return (4, (a, k))
    for b in B.elements():
        for a in A.elements():
            ba = m.beta(b, a)
            if not np.array_equal(nu[b][mu[a]], mu[ba][nu[b]]):
                return (5, (b, a))
            for l in L.elements():
                if nu[b, f[sig[b, l], a]] != f[l, ba]:
                    return (6, (b, l, a))
    return None


def module_verify(m: RRBModule) -> RRBModule:
    bad = module_violation(m)
    if bad:
        raise NotAModule(f"module condition {bad[0]} fails: {bad[1]}", witness=bad)
    return m


def module_new(base: RRBGroup, coeff: RRBGroup, nu, mu, sigma, f) -> RRBModule:
    """Build from arrays or GroupActions and verify."""
    def as_action(x, actor, space, var):
        p = np.asarray(getattr(x, "perms", x), dtype=np.int64)
        p.setflags(write=False)
        return GroupAction(actor, space, p, var)

    m = RRBModule(
        base, coeff,
        as_action(nu, base.G, coeff.H, "hom"),
        as_action(mu, base.H, coeff.H, "anti"),
        as_action(sigma, base.G, coeff.G, "anti"),
        np.asarray(f, dtype=np.int64),
    )
    return module_verify(m)


def trivial_module(base: RRBGroup, coeff: RRBGroup) -> RRBModule:
    A, B, K, L = base.H, base.G, coeff.H, coeff.G
    return module_new(
        base, coeff,
        core.trivial_action(B, K).perms, core.trivial_action(A, K).perms, core.trivial_action(B, L).perms,
        np.full((L.order, A.order), K.identity, dtype=np.int64),
    )


def _derivations(A: FiniteGroup, K: FiniteGroup, L: FiniteGroup, mu: np.ndarray, budget: int) -> Iterator[np.ndarray]:
    """All f: L x A -> K additive in l and mu-derivations in a."""
    homs = list(core.homomorphisms(L, K))
    gens = core.generating_set(A)
    count = 0
    for choice in itertools.product(range(len(homs)), repeat=len(gens)):
        count += 1
        if count > budget:
            raise SearchBudgetExceeded("derivation search exceeded budget", witness=budget)
        f = -np.ones((L.order, A.order), dtype=np.int64)
        f[:, A.identity] = K.identity
        known = {A.identity}
        frontier = [A.identity]
        ok = True
        while frontier and ok:
            nxt = []
            for x in frontier:
                for g, c in zip(gens, choice):
                    y = A.mul(x, g)
                    # f(l, x g) = mu_g(f(l, x)) f(l, g)
                    col = np.array([K.mul(mu[g, f[l, x]], homs[c][l]) for l in L.elements()])
                    if y not in known:
                        f[:, y] = col
                        known.add(y)
                        nxt.append(y)
                    elif not np.array_equal(f[:, y], col):
                        ok = False
                        break
                if not ok:
                    break
            frontier = nxt
        if not ok:
            continue
        good = all(f[l, A.mul(a1, a2)] == K.mul(mu[a2, f[l, a1]], f[l, a2])
                   for l in L.elements() for a1 in A.elements() for a2 in A.elements())
        if good:
            yield f


def enumerate_modules(base: RRBGroup, coeff: RRBGroup, budget: int = 10**6) -> list[RRBModule]:
    """Every module structure (nu, mu, sigma, f) on the given base and coefficients."""
    A, B, K, L = base.H, base.G, coeff.H, coeff.G
    autK, permsK = core.aut_as_group(K)
    autL, permsL = core.aut_as_group(L)
    nus = [np.array([permsK[i] for i in h]) for h in core.homomorphisms(B, autK, budget)]
    mus = [np.array([permsK[i] for i in h]) for h in core.homomorphisms(core.opposite(A), autK, budget)]
    sigmas = [np.array([permsL[i] for i in h]) for h in core.homomorphisms(core.opposite(B), autL, budget)]
    out = []
    for mu in mus:
        fs = list(_derivations(A, K, L, mu, budget))
        for nu, sigma, f in itertools.product(nus, sigmas, fs):
            m = RRBModule(base, coeff, GroupAction(B, K, nu, "hom"), GroupAction(A, K, mu, "anti"),
                          GroupAction(B, L, sigma, "anti"), f)
            if module_violation(m) is None:
                out.append(m)
    return out


def is_central(m: RRBModule) -> bool:
    return (m.nu.is_trivial() and m.mu.is_trivial() and m.sigma.is_trivial()
            and bool(np.all(m.f == m.K.identity)))


# ---------------------------------------------------------------- cochain spaces


def spaces(m: RRBModule) -> tuple[CochainSpace, CochainSpace, CochainSpace]:
    if "spaces" not in m._cache:
        A, B = m.A, m.B
        Kd, Ld = abelian_decomposition(m.K), abelian_decomposition(m.L)
        c1 = CochainSpace((Block("theta1", (A,), Kd), Block("theta2", (B,), Ld)))
        c2 = CochainSpace((Block("tau1", (A, A), Kd), Block("tau2", (B, B), Ld),
                           Block("rho", (A, B), Kd), Block("chi", (A,), Ld)))
        c3 = CochainSpace((Block("d_tau1", (A, A, A), Kd), Block("d_tau2", (B, B, B), Ld),
                           Block("gamma1", (A, B, B), Kd), Block("gamma2", (A, A, B), Kd),
                           Block("gamma3", (A, A), Ld)))
        m._cache["spaces"] = (c1, c2, c3)
    return m._cache["spaces"]


def group_d1(X: FiniteGroup, M: FiniteGroup, act: np.ndarray, theta: np.ndarray) -> np.ndarray:
    """(d theta)(x1, x2) = theta(x2) theta(x1 x2)^-1 act_{x2}(theta(x1)), right action."""
    n = X.order
    out = np.empty((n, n), dtype=np.int64)
    for x1 in range(n):
        for x2 in range(n):
            out[x1, x2] = M.prod(theta[x2], M.inv(theta[X.mul(x1, x2)]), act[x2, theta[x1]])
    return out


def group_d2(X: FiniteGroup, M: FiniteGroup, act: np.ndarray, tau: np.ndarray) -> np.ndarray:
    """(d tau)(x1, x2, x3) = tau(x2,x3) tau(x1x2,x3)^-1 tau(x1,x2x3) act_{x3}(tau(x1,x2))^-1."""
    n = X.order
    out = np.empty((n, n, n), dtype=np.int64)
    for x1 in range(n):
        for x2 in range(n):
            x12 = X.mul(x1, x2)
            for x3 in range(n):
                out[x1, x2, x3] = M.prod(tau[x2, x3], M.inv(tau[x12, x3]), tau[x1, X.mul(x2, x3)],
                                         M.inv(act[x3, tau[x1, x2]]))
    return out


def twisted_d1(m: RRBModule, chi: np.ndarray) -> np.ndarray:
    """chi(a2) chi(a1 o_T a2)^-1 sigma_{T(a2)}(chi(a1)) on the descendent group of the base."""
    A, L = m.A, m.L
    D = m.base.descendent()
    sig = m.sigma.perms
    n = A.order
    out = np.empty((n, n), dtype=np.int64)
    for a1 in range(n):
        for a2 in range(n):
            out[a1, a2] = L.prod(chi[a2], L.inv(chi[D.mul(a1, a2)]), sig[m.T[a2], chi[a1]])
    return out


def c0_fixed_set(m: RRBModule) -> list[tuple[int, int]]:
    """Pairs (k, l) on which the degree-0 coboundary is defined."""
    A, B, K, L = m.A, m.B, m.K, m.L
    nu, mu, sig, f, S, T = m.nu.perms, m.mu.perms, m.sigma.perms, m.f, m.S, m.T
    ks = [k for k in K.elements()
          if all(nu[b, k] == k for b in B.elements()) and all(S[mu[a, k]] == S[k] for a in A.elements())]
    ls = [l for l in L.elements()
          if all(sig[T[a], l] == l for a in A.elements())
          and all(f[sig[b, l], a] == f[l, a] for b in B.elements() for a in A.elements())]
    return [(k, l) for k in ks for l in ls]


def d0(m: RRBModule, k: int, l: int) -> RRBCochain1:
    if (k, l) not in set(c0_fixed_set(m)):
        raise NotInC0("pair is outside the degree-0 fixed set", witness=(k, l))
    return _d0(m, k, l)


def _d0(m: RRBModule, k: int, l: int) -> RRBCochain1:
    K, L = m.K, m.L
    t1 = np.array([K.mul(m.mu.perms[a, k], K.inv(k)) for a in m.A.elements()], dtype=np.int64)
    t2 = np.array([L.mul(m.sigma.perms[b, l], L.inv(l)) for b in m.B.elements()], dtype=np.int64)
    return RRBCochain1(t1, t2)


def d1(m: RRBModule, c: RRBCochain1) -> RRBCochain2:
    A, B, K, L = m.A, m.B, m.K, m.L
    nu, mu, sig, f, S, T = m.nu.perms, m.mu.perms, m.sigma.perms, m.f, m.S, m.T
    th1, th2 = c.theta1, c.theta2
    tau1 = group_d1(A, K, mu, th1)
    tau2 = group_d1(B, L, sig, th2)
    rho = np.empty((A.order, B.order), dtype=np.int64)
    for a in A.elements():
        for b in B.elements():
            rho[a, b] = K.mul(nu[b, K.mul(f[th2[b], a], th1[a])], K.inv(th1[m.beta(b, a)]))
    chi = np.array([L.mul(S[m.nu_inv(int(T[a]), th1[a])], L.inv(th2[T[a]])) for a in A.elements()], dtype=np.int64)
    return RRBCochain2(tau1, tau2, rho, chi)


def d2(m: RRBModule, z: RRBCochain2) -> RRBCochain3:
    A, B, K, L = m.A, m.B, m.K, m.L
    nu, mu, f, S, T = m.nu.perms, m.mu.perms, m.f, m.S, m.T
    tau1, tau2, rho, chi = z.tau1, z.tau2, z.rho, z.chi
    inv = K.inv
    dt1 = group_d2(A, K, mu, tau1)
    dt2 = group_d2(B, L, m.sigma.perms, tau2)
    nA, nB = A.order, B.order
    g1 = np.empty((nA, nB, nB), dtype=np.int64)
    for a in range(nA):
        for b1 in range(nB):
            for b2 in range(nB):
                b12 = B.mul(b1, b2)
                g1[a, b1, b2] = K.prod(rho[a, b12], nu[b12, f[tau2[b1, b2], a]],
                                       inv(rho[m.beta(b2, a), b1]), inv(nu[b1, rho[a, b2]]))
    g2 = np.empty((nA, nA, nB), dtype=np.int64)
    for a1 in range(nA):
        for a2 in range(nA):
            for b in range(nB):
                g2[a1, a2, b] = K.prod(rho[A.mul(a1, a2), b], nu[b, tau1[a1, a2]],
                                       inv(mu[m.beta(b, a2), rho[a1, b]]), inv(rho[a2, b]),
                                       inv(tau1[m.beta(b, a1), m.beta(b, a2)]))
    D = m.base.descendent()
    dchi = twisted_d1(m, chi)
    g3 = np.empty((nA, nA), dtype=np.int64)
    for a1 in range(nA):
        t1 = int(T[a1])
        for a2 in range(nA):
            inner = K.prod(rho[a2, t1], tau1[a1, m.beta(t1, a2)], nu[t1, f[chi[a1], a2]])
            g3[a1, a2] = L.prod(S[m.nu_inv(int(T[D.mul(a1, a2)]), inner)], L.inv(tau2[t1, T[a2]]), L.inv(dchi[a1, a2]))
    return RRBCochain3(dt1, dt2, g1, g2, g3)


def _require_central(m: RRBModule):
    if not is_central(m):
        raise NotCentralModule("module actions are not all trivial")


def d1_central(m: RRBModule, c: RRBCochain1) -> RRBCochain2:
    _require_central(m)
    A, B, K, L = m.A, m.B, m.K, m.L
    th1, th2 = c.theta1, c.theta2
    triv_a = np.tile(np.arange(K.order), (A.order, 1))
    triv_b = np.tile(np.arange(L.order), (B.order, 1))
    rho = np.array([[K.mul(th1[a], K.inv(th1[m.beta(b, a)])) for b in B.elements()] for a in A.elements()], dtype=np.int64)
    chi = np.array([L.mul(m.S[th1[a]], L.inv(th2[m.T[a]])) for a in A.elements()], dtype=np.int64)
    return RRBCochain2(group_d1(A, K, triv_a, th1), group_d1(B, L, triv_b, th2), rho, chi)


def d2_central(m: RRBModule, z: RRBCochain2) -> RRBCochain3:
    _require_central(m)
    A, B, K, L = m.A, m.B, m.K, m.L
    T, S = m.T, m.S
    tau1, tau2, rho, chi = z.parts()
    inv = K.inv
    triv_a = np.tile(np.arange(K.order), (A.order, 1))
    triv_b = np.tile(np.arange(L.order), (B.order, 1))
    nA, nB = A.order, B.order
    g1 = np.empty((nA, nB, nB), dtype=np.int64)
    for a in range(nA):
        for b1 in range(nB):
            for b2 in range(nB):
                g1[a, b1, b2] = K.prod(rho[a, B.mul(b1, b2)], inv(rho[m.beta(b2, a), b1]), inv(rho[a, b2]))
    g2 = np.empty((nA, nA, nB), dtype=np.int64)
    for a1 in range(nA):
        for a2 in range(nA):
            for b in range(nB):
                g2[a1, a2, b] = K.prod(rho[A.mul(a1, a2), b], inv(rho[a1, b]), inv(rho[a2, b]),
                                       tau1[a1, a2], inv(tau1[m.beta(b, a1), m.beta(b, a2)]))
    dchi = twisted_d1(m, chi)
    g3 = np.empty((nA, nA), dtype=np.int64)
    for a1 in range(nA):
        t1 = int(T[a1])
        for a2 in range(nA):
            g3[a1, a2] = L.prod(S[K.mul(rho[a2, t1], tau1[a1, m.beta(t1, a2)])],
                                L.inv(tau2[t1, T[a2]]), L.inv(dchi[a1, a2]))
    return RRBCochain3(group_d2(A, K, triv_a, tau1), group_d2(B, L, triv_b, tau2), g1, g2, g3)


# ---------------------------------------------------------------- cohomology groups


@dataclass
class CohomologyResult:
    degree: int
    factors: list[int]
    order: int
    representatives: list = field(default_factory=list)
    quotient: LatticeQuotient | None = field(default=None, repr=False)
    space: CochainSpace | None = field(default=None, repr=False)

    def class_of(self, cochain) -> tuple[int, ...]:
        return self.quotient.class_of(self.space.to_vector(cochain.parts()))

    def cocycle(self, coords: Sequence[int]):
        """A representative cocycle for the class with the given coordinates."""
        parts = self.space.from_vector(self.space.reduce(self.quotient.element(coords)))
        return RRBCochain1(*parts) if self.degree == 1 else RRBCochain2(*parts)


def _as2(parts) -> RRBCochain2:
    return RRBCochain2(*parts)


def _matrices(m: RRBModule, central: bool = False):
    key = ("mats", central)
    if key not in m._cache:
        c1, c2, c3 = spaces(m)
        dd1 = d1_central if central else d1
        dd2 = d2_central if central else d2
        M1 = linearize(lambda c: dd1(m, RRBCochain1(*c)).parts(), c1, c2)
        M2 = linearize(lambda c: dd2(m, _as2(c)).parts(), c2, c3)
        m._cache[key] = (M1, M2)
    return m._cache[key]


def _c0_images(m: RRBModule) -> list[list[int]]:
    c1 = spaces(m)[0]
    return [c1.to_vector(_d0(m, k, l).parts()) for k, l in c0_fixed_set(m)]


def h0(m: RRBModule) -> CohomologyResult:
    """Kernel of the degree-0 coboundary on the fixed set; computed directly."""
    c0 = c0_fixed_set(m)
    c1 = spaces(m)[0]
    ker = [(k, l) for k, l in c0 if c1.is_zero(_d0(m, k, l).parts())]
    K, L = m.K, m.L
    orders = []
    for k, l in ker:
        orders.append(np.lcm(K.element_order(k), L.element_order(l)))
    fac = invariants_from_orders(int(o) for o in orders)
    return CohomologyResult(0, fac, len(ker), representatives=ker)


def _check(res: CohomologyResult, enum) -> None:
    if (enum.order, enum.factors) != (res.order, res.factors):
        raise CrossCheckFailed("enumeration and SNF disagree",
                               witness=((enum.order, enum.factors), (res.order, res.factors)))


def h1(m: RRBModule, method: str = "snf") -> CohomologyResult:
    c1, c2, _ = spaces(m)
    M1, _ = _matrices(m)
    q = homology_snf(M1, c1, c2, _c0_images(m))
    reps = [RRBCochain1(*c1.from_vector(c1.reduce(g))) for g in q.gens]
    res = CohomologyResult(1, list(q.factors), q.order, reps, q, c1)
    if method in ("enumerate", "both"):
        e = homology_enumerate(lambda c: d1(m, RRBCochain1(*c)).parts(), c1, c2,
                               lambda c: c, _c0_images(m), c1)
        _check(res, e)
    return res


def _h2(m: RRBModule, method: str, central: bool) -> CohomologyResult:
    c1, c2, c3 = spaces(m)
    M1, M2 = _matrices(m, central)
    q = homology_snf(M2, c2, c3, matrix_columns(M1, c1.dim))
    reps = [_as2(c2.from_vector(c2.reduce(g))) for g in q.gens]
    res = CohomologyResult(2, list(q.factors), q.order, reps, q, c2)
    if method in ("enumerate", "both"):
        dd1 = d1_central if central else d1
        dd2 = d2_central if central else d2
        e = homology_enumerate(lambda c: dd2(m, _as2(c)).parts(), c2, c3,
                               lambda c: dd1(m, RRBCochain1(*c)).parts(), None, c1)
        _check(res, e)
    return res


def h2(m: RRBModule, method: str = "snf") -> CohomologyResult:
    """H^2 of the module. ``method``: "snf", or "both" to cross-check by enumeration."""
    return _h2(m, method, False)


def h2_central(m: RRBModule, method: str = "snf") -> CohomologyResult:
    _require_central(m)
    return _h2(m, method, True)


def cochain1_from_vector(m: RRBModule, v: Sequence[int]) -> RRBCochain1:
    c1 = spaces(m)[0]
    return RRBCochain1(*c1.from_vector(c1.reduce(v)))


def cochain2_from_vector(m: RRBModule, v: Sequence[int]) -> RRBCochain2:
    c2 = spaces(m)[1]
    return _as2(c2.from_vector(c2.reduce(v)))


def random_cocycle(m: RRBModule, rng: np.random.Generator) -> RRBCochain2:
    """A random element of ker d2 (random combination of kernel lattice generators)."""
    c1, c2, c3 = spaces(m)
    _, M2 = _matrices(m)
    gens = kernel_lattice(M2, c2.factors, c3.factors)
    v = [0] * c2.dim
    for g in gens:
        c = int(rng.integers(0, 64))
        v = [x + c * y for x, y in zip(v, g)]
    return cochain2_from_vector(m, v)


def zero_cochain2(m: RRBModule) -> RRBCochain2:
    return _as2(spaces(m)[1].zero())
