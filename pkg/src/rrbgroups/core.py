"""Finite groups stored as Cayley tables, with homomorphisms and actions.

Elements are the integers ``0..n-1``.  The identity is whatever the table says
it is; nothing assumes it is ``0``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from .errors import NotAGroup, NotAHomomorphism, NotAnAction, SearchBudgetExceeded

__all__ = [
    "FiniteGroup",
    "GroupHom",
    "GroupAction",
    "group_from_table",
    "cyclic",
    "trivial_group",
    "direct_product",
    "opposite",
    "symmetric",
    "dihedral",
    "subgroup_of",
    "quotient_group",
    "group_hom",
    "group_action",
    "trivial_action",
    "homomorphisms",
    "group_isomorphisms",
    "automorphism_group",
    "aut_as_group",
    "generating_set",
    "tabulate",
]


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    table: np.ndarray
    identity: int
    inverses: np.ndarray
    label: str = ""

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label or '?'}, order={self.order})"

    def elements(self) -> range:
        return range(self.order)

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def inv(self, x: int) -> int:
        return int(self.inverses[x])

    def prod(self, *xs: int) -> int:
        acc = self.identity
        for x in xs:
            acc = int(self.table[acc, x])
        return acc

    def power(self, x: int, n: int) -> int:
        if n < 0:
            x, n = self.inv(x), -n
        acc = self.identity
        for _ in range(n):
            acc = int(self.table[acc, x])
        return acc

    def conj(self, g: int, x: int) -> int:
        """g x g^-1"""
        return self.prod(g, x, self.inv(g))

    def element_order(self, x: int) -> int:
        n, y = 1, x
        while y != self.identity:
            y = int(self.table[y, x])
            n += 1
        return n

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def same_as(self, other: "FiniteGroup") -> bool:
        return self.table.shape == other.table.shape and bool(np.array_equal(self.table, other.table))

    def generated(self, gens: Iterable[int]) -> list[int]:
        """Sorted list of elements of the subgroup generated by ``gens``."""
        gens = [int(g) for g in gens]
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = int(self.table[x, g])
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen)

    def is_subgroup(self, subset: Iterable[int]) -> bool:
        s = set(int(x) for x in subset)
        if self.identity not in s:
            return False
        return all(int(self.table[x, self.inverses[y]]) in s for x in s for y in s)

    def is_normal(self, subset: Iterable[int]) -> bool:
        s = set(int(x) for x in subset)
        return self.is_subgroup(s) and all(self.conj(g, x) in s for g in self.elements() for x in s)

    def center(self) -> list[int]:
        t = self.table
        return [x for x in self.elements() if np.array_equal(t[x, :], t[:, x])]


def group_from_table(table, label: str = "") -> FiniteGroup:
    """Validate a Cayley table and wrap it. Raises NotAGroup."""
    t = np.asarray(table, dtype=np.int64)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise NotAGroup("table must be a non-empty square array", witness=t.shape)
    n = t.shape[0]
    if t.min() < 0 or t.max() >= n:
        raise NotAGroup("table entries out of range")
    for i in range(n):
        if len(set(t[i, :].tolist())) != n:
            raise NotAGroup("row is not a permutation", witness=("row", i))
        if len(set(t[:, i].tolist())) != n:
            raise NotAGroup("column is not a permutation", witness=("column", i))
    left = t[t]  # (ij)k
    right = t[np.arange(n)[:, None, None], t[None, :, :]]  # i(jk)
    bad = np.argwhere(left != right)
    if len(bad):
        raise NotAGroup("not associative", witness=tuple(int(v) for v in bad[0]))
    ids = [e for e in range(n) if np.array_equal(t[e, :], np.arange(n)) and np.array_equal(t[:, e], np.arange(n))]
    if not ids:
        raise NotAGroup("no identity element")
    e = ids[0]
    inverses = np.array([int(np.flatnonzero(t[x, :] == e)[0]) for x in range(n)], dtype=np.int64)
    t.setflags(write=False)
    inverses.setflags(write=False)
    return FiniteGroup(t, e, inverses, label)


def _from_trusted(table: np.ndarray, label: str) -> FiniteGroup:
    # for constructions that are groups by design; still cheap to sanity check
    return group_from_table(table, label)


def cyclic(n: int) -> FiniteGroup:
    a = np.arange(n)
    return _from_trusted((a[:, None] + a[None, :]) % n, f"Z{n}")


def trivial_group() -> FiniteGroup:
    return cyclic(1)


def direct_product(g1: FiniteGroup, g2: FiniteGroup) -> FiniteGroup:
    """Element (i, j) has index ``i * |g2| + j``."""
    n1, n2 = g1.order, g2.order
    i = np.arange(n1 * n2)
    a, b = i // n2, i % n2
    t = g1.table[a[:, None], a[None, :]] * n2 + g2.table[b[:, None], b[None, :]]
    return _from_trusted(t, f"{g1.label}x{g2.label}")


def opposite(g: FiniteGroup) -> FiniteGroup:
    return _from_trusted(g.table.T.copy(), f"{g.label}^op")


def _perm_group(perms: list[tuple[int, ...]], label: str) -> FiniteGroup:
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    t = np.empty((n, n), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            t[i, j] = index[tuple(p[x] for x in q)]  # p after q
    return _from_trusted(t, label)


def symmetric(n: int) -> FiniteGroup:
    """S_n on lexicographically ordered permutations; product is composition p(q(x))."""
    if not 1 <= n <= 5:
        raise ValueError("symmetric groups are only built for n <= 5")
    return _perm_group(list(itertools.permutations(range(n))), f"S{n}")


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the regular n-gon, order 2n.  Index r^i s^j -> 2*i + j."""
    t = np.empty((2 * n, 2 * n), dtype=np.int64)
    for x in range(2 * n):
        i, j = divmod(x, 2)
        for y in range(2 * n):
            k, l = divmod(y, 2)
            # r^i s^j r^k s^l = r^(i + (-1)^j k) s^(j+l)
            t[x, y] = 2 * ((i + (k if j == 0 else -k)) % n) + (j + l) % 2
    return _from_trusted(t, f"D{2 * n}")


def subgroup_of(g: FiniteGroup, subset: Sequence[int], label: str = "") -> tuple[FiniteGroup, np.ndarray]:
    """Subgroup as a standalone group plus the inclusion array (sorted elements)."""
    elems = sorted(set(int(x) for x in subset))
    if not g.is_subgroup(elems):
        raise NotAGroup("subset is not a subgroup", witness=elems)
    pos = {x: i for i, x in enumerate(elems)}
    t = np.array([[pos[g.mul(x, y)] for y in elems] for x in elems], dtype=np.int64)
    return group_from_table(t, label), np.array(elems, dtype=np.int64)


def quotient_group(g: FiniteGroup, normal: Sequence[int], label: str = "") -> tuple[FiniteGroup, np.ndarray, np.ndarray]:
    """G/N on cosets indexed by their minimal element.

    Returns ``(Q, proj, reps)`` where ``proj[x]`` is the coset index of x and
    ``reps[c]`` the minimal element of coset c.
    """
    n_set = sorted(set(int(x) for x in normal))
    if not g.is_normal(n_set):
        raise NotAGroup("subset is not a normal subgroup", witness=n_set)
    proj = -np.ones(g.order, dtype=np.int64)
    reps = []
    for x in g.elements():
        if proj[x] < 0:
            c = len(reps)
            reps.append(x)
            for y in n_set:
                proj[g.mul(x, y)] = c
    reps_a = np.array(reps, dtype=np.int64)
    t = np.array([[proj[g.mul(a, b)] for b in reps] for a in reps], dtype=np.int64)
    return group_from_table(t, label), proj, reps_a


@dataclass(frozen=True, eq=False)
class GroupHom:
    domain: FiniteGroup
    codomain: FiniteGroup
    image: np.ndarray

    def __call__(self, x: int) -> int:
        return int(self.image[x])

    def kernel(self) -> list[int]:
        return [x for x in self.domain.elements() if self.image[x] == self.codomain.identity]

    def image_set(self) -> list[int]:
        return sorted(set(int(v) for v in self.image))

    def is_injective(self) -> bool:
        return len(set(self.image.tolist())) == self.domain.order

    def is_surjective(self) -> bool:
        return len(set(self.image.tolist())) == self.codomain.order


def _hom_violation(dom: FiniteGroup, cod: FiniteGroup, img: np.ndarray):
    lhs = img[dom.table]
    rhs = cod.table[img[:, None], img[None, :]]
    bad = np.argwhere(lhs != rhs)
    return None if not len(bad) else tuple(int(v) for v in bad[0])


def group_hom(domain: FiniteGroup, codomain: FiniteGroup, image) -> GroupHom:
    img = np.asarray(image, dtype=np.int64)
    if img.shape != (domain.order,) or (len(img) and (img.min() < 0 or img.max() >= codomain.order)):
        raise NotAHomomorphism("image array has the wrong shape or range")
    bad = _hom_violation(domain, codomain, img)
    if bad is not None:
        raise NotAHomomorphism("map is not multiplicative", witness=bad)
    return GroupHom(domain, codomain, img)


@dataclass(frozen=True, eq=False)
class GroupAction:
    """``perms[g]`` is the permutation of ``space`` by which ``g`` acts.

    ``variance`` is ``"hom"`` (perms[gh] = perms[g] o perms[h]) or ``"anti"``
    (perms[gh] = perms[h] o perms[g]).  Every perms[g] is an automorphism.
    """

    actor: FiniteGroup
    space: FiniteGroup
    perms: np.ndarray
    variance: str = "hom"

    def act(self, g: int, x: int) -> int:
        return int(self.perms[g, x])

    def inverse_perm(self, g: int) -> np.ndarray:
        out = np.empty_like(self.perms[g])
        out[self.perms[g]] = np.arange(self.space.order)
        return out

    def act_inv(self, g: int, x: int) -> int:
        """Apply the inverse automorphism of the one attached to g."""
        return int(self.perms[self.actor.inv(g), x])

    def is_trivial(self) -> bool:
        return bool(np.all(self.perms == np.arange(self.space.order)[None, :]))


def _action_violation(actor: FiniteGroup, space: FiniteGroup, perms: np.ndarray, variance: str):
    n = space.order
    for g in actor.elements():
        p = perms[g]
        if len(set(p.tolist())) != n:
            return ("not bijective", g)
        if _hom_violation(space, space, p) is not None:
            return ("not an automorphism", g)
    if not np.array_equal(perms[actor.identity], np.arange(n)):
        return ("identity acts nontrivially", actor.identity)
    for g in actor.elements():
        for h in actor.elements():
            gh = actor.mul(g, h)
            comp = perms[g][perms[h]] if variance == "hom" else perms[h][perms[g]]
            if not np.array_equal(perms[gh], comp):
                return ("composition rule fails", (g, h))
    return None


def group_action(actor: FiniteGroup, space: FiniteGroup, perms, variance: str = "hom") -> GroupAction:
    if variance not in ("hom", "anti"):
        raise ValueError("variance must be 'hom' or 'anti'")
    p = np.asarray(perms, dtype=np.int64)
    if p.shape != (actor.order, space.order):
        raise NotAnAction("perms must have shape (|actor|, |space|)", witness=p.shape)
    bad = _action_violation(actor, space, p, variance)
    if bad is not None:
        raise NotAnAction(bad[0], witness=bad[1])
    p.setflags(write=False)
    return GroupAction(actor, space, p, variance)


def trivial_action(actor: FiniteGroup, space: FiniteGroup, variance: str = "hom") -> GroupAction:
    p = np.tile(np.arange(space.order, dtype=np.int64), (actor.order, 1))
    return GroupAction(actor, space, p, variance)


def generating_set(g: FiniteGroup) -> list[int]:
    """Small generating set, built greedily from elements of large order."""
    by_order = sorted(g.elements(), key=lambda x: (-g.element_order(x), x))
    gens: list[int] = []
    span = {g.identity}
    for x in by_order:
        if x not in span:
            gens.append(x)
            span = set(g.generated(gens))
        if len(span) == g.order:
            break
    return gens


def _extend_on_generators(dom: FiniteGroup, gens: Sequence[int], imgs: Sequence[int], cod: FiniteGroup):
    """Extend generator images to a full hom, or return None if inconsistent."""
    img = -np.ones(dom.order, dtype=np.int64)
    img[dom.identity] = cod.identity
    frontier = [dom.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g, gi in zip(gens, imgs):
                y = dom.mul(x, g)
                v = cod.mul(int(img[x]), gi)
                if img[y] < 0:
                    img[y] = v
                    nxt.append(y)
                elif img[y] != v:
                    return None
        frontier = nxt
    if _hom_violation(dom, cod, img) is not None:
        return None
    return img


def homomorphisms(dom: FiniteGroup, cod: FiniteGroup, budget: int = 10**6) -> Iterator[np.ndarray]:
    """All homomorphisms dom -> cod as image arrays."""
    gens = generating_set(dom)
    cand = []
    for g in gens:
        k = dom.element_order(g)
        cand.append([y for y in cod.elements() if k % cod.element_order(y) == 0])
    count = 0
    for imgs in itertools.product(*cand):
        count += 1
        if count > budget:
            raise SearchBudgetExceeded("homomorphism search exceeded budget", witness=budget)
        img = _extend_on_generators(dom, gens, imgs, cod)
        if img is not None:
            yield img


def group_isomorphisms(g1: FiniteGroup, g2: FiniteGroup, budget: int = 10**6) -> Iterator[np.ndarray]:
    """All isomorphisms g1 -> g2, via backtracking on generator images with order pruning."""
    if g1.order != g2.order:
        return
    gens = generating_set(g1)
    orders2 = [g2.element_order(y) for y in g2.elements()]
    cand = [[y for y in g2.elements() if orders2[y] == g1.element_order(g)] for g in gens]
    nodes = 0

    def rec(i: int, chosen: list[int]):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded("isomorphism search exceeded budget", witness=budget)
        if i == len(gens):
            img = _extend_on_generators(g1, gens, chosen, g2)
            if img is not None and len(set(img.tolist())) == g2.order:
                yield img
            return
        for y in cand[i]:
            if y in chosen:
                continue
            yield from rec(i + 1, chosen + [y])

    yield from rec(0, [])


def automorphism_group(g: FiniteGroup, budget: int = 10**6) -> list[np.ndarray]:
    """Automorphisms as permutation arrays; the identity map comes first."""
    auts = list(group_isomorphisms(g, g, budget))
    auts.sort(key=lambda p: (not np.array_equal(p, np.arange(g.order)), p.tolist()))
    return auts


def aut_as_group(g: FiniteGroup, budget: int = 10**6) -> tuple[FiniteGroup, list[np.ndarray]]:
    """Aut(g) as an abstract group; product is composition (apply right factor first)."""
    auts = automorphism_group(g, budget)
    index = {tuple(p.tolist()): i for i, p in enumerate(auts)}
    t = np.array([[index[tuple(p[q].tolist())] for q in auts] for p in auts], dtype=np.int64)
    return group_from_table(t, f"Aut({g.label})"), auts


def tabulate(fn: Callable[[int], int], g: FiniteGroup) -> np.ndarray:
    return np.array([fn(x) for x in g.elements()], dtype=np.int64)
