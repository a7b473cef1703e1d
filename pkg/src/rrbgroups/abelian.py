"""Finite abelian groups: invariant factors, Smith normal form, lattice quotients.

All integer linear algebra runs on Python ints (lists of lists), so nothing
overflows.  A finite abelian group in coordinates is ``Z^n / diag(e) Z^n``; a
subquotient of such a group is handled by lifting both pieces to full-rank
lattices in ``Z^n``.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .core import FiniteGroup, quotient_group
from .errors import NotAbelian

Matrix = list[list[int]]


# ---------------------------------------------------------------- SNF


def _identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


@dataclass
class SNF:
    """``U @ A @ V == D`` with U, V unimodular; ``Uinv`` is U's inverse."""

    diag: list[int]
    U: Matrix
    Uinv: Matrix
    V: Matrix
    rank: int


def smith_normal_form(a: Sequence[Sequence[int]], want_v: bool = True, want_u: bool = True) -> SNF:
    A = [[int(x) for x in row] for row in a]
    m = len(A)
    n = len(A[0]) if m else 0
    U, Uinv = (_identity(m), _identity(m)) if want_u else ([], [])
    V = _identity(n) if want_v else None

    def row_add(dst: int, src: int, q: int):
        # row_dst += q * row_src
        if q == 0:
            return
        A[dst] = [x + q * y for x, y in zip(A[dst], A[src])]
        if want_u:
            U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]
            for r in Uinv:
                r[src] -= q * r[dst]

    def row_swap(i: int, j: int):
        if i == j:
            return
        A[i], A[j] = A[j], A[i]
        if want_u:
            U[i], U[j] = U[j], U[i]
            for r in Uinv:
                r[i], r[j] = r[j], r[i]

    def row_neg(i: int):
        A[i] = [-x for x in A[i]]
        if want_u:
            U[i] = [-x for x in U[i]]
            for r in Uinv:
                r[i] = -r[i]

    def col_add(dst: int, src: int, q: int):
        if q == 0:
            return
        for r in A:
            r[dst] += q * r[src]
        if V is not None:
            for r in V:
                r[dst] += q * r[src]

    def col_swap(i: int, j: int):
        if i == j:
            return
        for r in A:
            r[i], r[j] = r[j], r[i]
        if V is not None:
            for r in V:
                r[i], r[j] = r[j], r[i]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                if row[j] and (best is None or abs(row[j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
                    if abs(row[j]) == 1:
                        break
            if best is not None and abs(A[best[0]][best[1]]) == 1:
                break
        if best is None:
            break
        row_swap(t, best[0])
        col_swap(t, best[1])
        while True:
            done = True
            p = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    row_add(i, t, -(A[i][t] // p))
                    if A[i][t]:
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    col_add(j, t, -(A[t][j] // p))
                    if A[t][j]:
                        done = False
            if not done:
                # a remainder is smaller than the pivot: move it in and repeat
                best = None
                for i in range(t, m):
                    if A[i][t] and (best is None or abs(A[i][t]) < abs(A[best][t])):
                        best = i
                row_swap(t, best)
                bestc = None
                for j in range(t, n):
                    if A[t][j] and (bestc is None or abs(A[t][j]) < abs(A[t][bestc])):
                        bestc = j
                col_swap(t, bestc)
                continue
            bad = None if abs(p) == 1 else next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p), None)
            if bad is None:
                break
            row_add(t, bad[0], 1)
        if A[t][t] < 0:
            row_neg(t)
        t += 1
    diag = [A[i][i] for i in range(min(m, n))]
    rank = sum(1 for d in diag if d)
    return SNF(diag, U, Uinv, V if V is not None else [], rank)


def _matvec(M: Matrix, v: Sequence[int]) -> list[int]:
    return [sum(a * b for a, b in zip(row, v)) for row in M]


def _columns_to_matrix(cols: Sequence[Sequence[int]], n: int) -> Matrix:
    return [[int(c[i]) for c in cols] for i in range(n)]


def integer_kernel(M: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    """Basis of {x in Z^ncols : M x = 0}."""
    if not M:
        return [[int(i == j) for i in range(ncols)] for j in range(ncols)]
    # column echelon form of M stacked on the identity; unimodular column
    # operations only, so the trailing zero columns carry a kernel basis
    m = len(M)
    cols = [[int(M[i][j]) for i in range(m)] + [int(k == j) for k in range(ncols)] for j in range(ncols)]
    piv = 0
    for i in range(m):
        while True:
            live = [j for j in range(piv, ncols) if cols[j][i]]
            if not live:
                break
            j0 = min(live, key=lambda j: abs(cols[j][i]))
            cols[piv], cols[j0] = cols[j0], cols[piv]
            p = cols[piv]
            clean = True
            for j in range(piv + 1, ncols):
                c = cols[j]
                if c[i]:
                    q = c[i] // p[i]
                    cols[j] = [x - q * y for x, y in zip(c, p)]
                    if cols[j][i]:
                        clean = False
            if clean:
                piv += 1
                break
        if piv == ncols:
            break
    return [c[m:] for c in cols[piv:]]


# ---------------------------------------------------------------- lattices


@dataclass
class LatticeQuotient:
    """The finite group ``big / small`` for full-rank lattices small <= big in Z^n.

    ``gens`` are lifts (in Z^n) of generators of the cyclic factors
    ``factors`` (all > 1, ascending divisibility).
    """

    n: int
    factors: list[int]
    gens: list[list[int]]
    _basis_inv: Matrix = field(repr=False)  # maps Z^n coords to quotient coords (scaled)
    _scale: list[int] = field(repr=False)
    _keep: list[int] = field(repr=False)

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    def class_of(self, x: Sequence[int]) -> tuple[int, ...]:
        """Coordinates of x (an element of ``big``) in the quotient."""
        y = _matvec(self._basis_inv, x)
        out = []
        for i, d in zip(self._keep, self.factors):
            num = y[i]
            if num % self._scale[i]:
                raise ValueError("vector is not in the ambient lattice")
            out.append((num // self._scale[i]) % d)
        return tuple(out)

    def is_trivial_class(self, x: Sequence[int]) -> bool:
        return all(c == 0 for c in self.class_of(x))

    def element(self, coords: Sequence[int]) -> list[int]:
        v = [0] * self.n
        for c, g in zip(coords, self.gens):
            for i in range(self.n):
                v[i] += c * g[i]
        return v

    def all_classes(self) -> Iterable[tuple[int, ...]]:
        return itertools.product(*[range(d) for d in self.factors])


def lattice_quotient(big: Sequence[Sequence[int]], small: Sequence[Sequence[int]], n: int) -> LatticeQuotient:
    """Invariant factors of ``span(big) / span(small)``.

    Both generator lists must span full-rank lattices of Z^n and span(small)
    must sit inside span(big).
    """
    if n == 0:
        return LatticeQuotient(0, [], [], [], [], [])
    s1 = smith_normal_form(_columns_to_matrix(big, n), want_v=False)
    if s1.rank != n:
        raise ValueError("ambient lattice is not full rank")
    d1 = s1.diag[:n]
    # big = Uinv diag(d1) Z^n, so coordinates of v are diag(d1)^-1 U v
    X = []
    for c in small:
        y = _matvec(s1.U, c)
        row = []
        for yi, di in zip(y, d1):
            if yi % di:
                raise ValueError("small lattice is not contained in the big one")
            row.append(yi // di)
        X.append(row)
    s2 = smith_normal_form(_columns_to_matrix(X, n) if X else [[0] for _ in range(n)], want_v=False)
    if s2.rank != n:
        raise ValueError("sub-lattice is not full rank")
    d2 = s2.diag[:n]
    # quotient coordinate of v: U2 diag(d1)^-1 U1 v
    vol = math.prod(d1)
    weights = [vol // d for d in d1]
    basis_inv = [[sum(s2.U[i][k] * s1.U[k][j] * weights[k] for k in range(n)) for j in range(n)] for i in range(n)]
    scale = [vol] * n
    keep = [i for i in range(n) if d2[i] != 1]
    # generators: columns of Uinv1 diag(d1) Uinv2
    gens = []
    for i in keep:
        col = [s2.Uinv[k][i] * d1[k] for k in range(n)]
        gens.append(_matvec(s1.Uinv, col))
    return LatticeQuotient(n, [d2[i] for i in keep], gens, basis_inv, scale, keep)


def relation_lattice(factors: Sequence[int]) -> list[list[int]]:
    n = len(factors)
    return [[f if i == j else 0 for i in range(n)] for j, f in enumerate(factors)]


def kernel_lattice(matrix: Sequence[Sequence[int]], dom_factors: Sequence[int], cod_factors: Sequence[int]) -> list[list[int]]:
    """Generators of the lift to Z^n of the kernel of a map Z^n/e -> Z^p/c."""
    n = len(dom_factors)
    # each row is one congruence; reduced, zero and repeated ones can go
    rows = {}
    for row, c in zip(matrix, cod_factors):
        r = tuple(int(x) % c for x in row)
        if any(r):
            rows[(r, c)] = None
    p = len(rows)
    if p == 0 or n == 0:
        return relation_lattice(dom_factors) + [[int(i == j) for i in range(n)] for j in range(n)]
    keys = list(rows)
    aug = [list(r) + [c if k == i else 0 for k in range(p)] for i, (r, c) in enumerate(keys)]
    ker = integer_kernel(aug, n + p)
    return [v[:n] for v in ker] + relation_lattice(dom_factors)


def solve_mod(matrix: Sequence[Sequence[int]], n: int, cod_factors: Sequence[int], target: Sequence[int]):
    """Some x in Z^n with ``matrix x = target`` modulo cod_factors, or None."""
    p = len(cod_factors)
    if p == 0:
        return [0] * n
    aug = [list(matrix[i]) + [cod_factors[i] if k == i else 0 for k in range(p)] for i in range(p)]
    s = smith_normal_form(aug)
    y = _matvec(s.U, target)
    w = [0] * (n + p)
    for i in range(p):
        d = s.diag[i] if i < len(s.diag) else 0
        if d == 0:
            if y[i] != 0:
                return None
        else:
            if y[i] % d:
                return None
            w[i] = y[i] // d
    x = _matvec(s.V, w)
    return x[:n]


# ---------------------------------------------------------------- decomposition


def invariants_from_orders(orders: Iterable[int]) -> list[int]:
    """Invariant factors of a finite abelian group from the multiset of element orders."""
    counts = Counter(orders)
    total = sum(counts.values())
    primes = sorted({p for m in counts for p in _prime_factors(m)})
    parts: dict[int, list[int]] = {}
    for p in primes:
        sylow = sum(c for m, c in counts.items() if _is_p_power(m, p))
        # exps[k-1] = log_p |G[p^k]| - log_p |G[p^(k-1)]|
        exps = []
        prev = 0
        k = 1
        while True:
            size = sum(c for m, c in counts.items() if (p ** k) % m == 0)
            r = round(math.log(size, p))
            exps.append(r - prev)
            if size == sylow:
                break
            prev = r
            k += 1
        # exps[k-1] = #cyclic p-factors of exponent >= k
        cyc = []
        for k in range(len(exps), 0, -1):
            more = exps[k - 1] - (exps[k] if k < len(exps) else 0)
            cyc += [p ** k] * more
        parts[p] = sorted(cyc, reverse=True)
    width = max((len(v) for v in parts.values()), default=0)
    out = []
    for i in range(width):
        out.append(math.prod(v[i] for v in parts.values() if i < len(v)))
    out = sorted(out)
    if math.prod(out) != total:
        raise ValueError("order census is not that of an abelian group")
    return out


def _is_p_power(m: int, p: int) -> bool:
    while m % p == 0:
        m //= p
    return m == 1


def _prime_factors(m: int) -> list[int]:
    out, d = [], 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


@dataclass(frozen=True, eq=False)
class AbelianDecomposition:
    """G ~ Z/d_1 x ... x Z/d_k with d_1 | d_2 | ... (all d_i > 1).

    ``coords[x]`` is the coordinate vector of element x, ``from_coords`` maps a
    tuple of residues back to an element index.
    """

    group: FiniteGroup
    factors: tuple[int, ...]
    gens: tuple[int, ...]
    coords: np.ndarray
    _lookup: dict = field(repr=False)

    def from_coords(self, c: Sequence[int]) -> int:
        return self._lookup[tuple(int(x) % d for x, d in zip(c, self.factors))]

    def to_coords(self, x: int) -> tuple[int, ...]:
        return tuple(int(v) for v in self.coords[x])

    @property
    def rank(self) -> int:
        return len(self.factors)


def _cyclic_split(g: FiniteGroup) -> tuple[list[int], list[int]]:
    """Generators and orders of a decomposition, largest factor last."""
    if g.order == 1:
        return [], []
    top = max(g.elements(), key=lambda x: (g.element_order(x), -x))
    n = g.element_order(top)
    sub = g.generated([top])
    q, proj, reps = quotient_group(g, sub)
    qgens, qorders = _cyclic_split(q)
    gens, orders = [], []
    for qg, d in zip(qgens, qorders):
        base = int(reps[qg])
        # some lift base * top^j has order exactly d
        for j in range(n):
            x = g.mul(base, g.power(top, j))
            if g.element_order(x) == d:
                gens.append(x)
                orders.append(d)
                break
        else:  # cannot happen for a maximal-order cyclic subgroup
            raise AssertionError("no lift of the right order")
    return gens + [top], orders + [n]


def abelian_decomposition(g: FiniteGroup) -> AbelianDecomposition:
    if not g.is_abelian():
        raise NotAbelian("group is not abelian", witness=next(
            (x, y) for x in g.elements() for y in g.elements() if g.mul(x, y) != g.mul(y, x)))
    gens, orders = _cyclic_split(g)
    lookup = {}
    coords = np.zeros((g.order, len(orders)), dtype=np.int64)
    for c in itertools.product(*[range(d) for d in orders]):
        x = g.prod(*[g.power(gi, ci) for gi, ci in zip(gens, c)])
        lookup[c] = x
        coords[x] = c
    if len(lookup) != g.order or len(set(lookup.values())) != g.order:
        raise AssertionError("decomposition is not bijective")
    coords.setflags(write=False)
    return AbelianDecomposition(g, tuple(orders), tuple(gens), coords, lookup)


# ---------------------------------------------------------------- homs


@dataclass(frozen=True, eq=False)
class FinAbHom:
    """A homomorphism Z^n/dom_factors -> Z^p/cod_factors given by an integer p x n matrix."""

    dom_factors: tuple[int, ...]
    cod_factors: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...]

    def __call__(self, x: Sequence[int]) -> tuple[int, ...]:
        return tuple(v % c for v, c in zip(_matvec([list(r) for r in self.matrix], x), self.cod_factors))


def finab_hom(dom_factors, cod_factors, matrix) -> FinAbHom:
    dom_factors, cod_factors = tuple(dom_factors), tuple(cod_factors)
    M = tuple(tuple(int(v) for v in row) for row in matrix)
    for j, d in enumerate(dom_factors):
        for i, c in enumerate(cod_factors):
            if (d * M[i][j]) % c:
                raise ValueError(f"column {j} is not killed by its order {d}")
    return FinAbHom(dom_factors, cod_factors, M)


def finab_cokernel(f: FinAbHom) -> tuple[int, int, list[int]]:
    """(|ker f|, |im f|, invariant factors of coker f)."""
    p = len(f.cod_factors)
    if p == 0:
        return math.prod(f.dom_factors), 1, []
    aug = [list(f.matrix[i]) + [f.cod_factors[i] if k == i else 0 for k in range(p)] for i in range(p)]
    s = smith_normal_form(aug, want_v=False)
    coker = sorted(d for d in s.diag if d not in (0, 1))
    img = math.prod(f.cod_factors) // math.prod(coker)
    return math.prod(f.dom_factors) // img, img, coker
