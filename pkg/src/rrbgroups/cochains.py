"""Normalized cochains with abelian coefficients, and their homology.

A cochain block is a map ``X_1 x ... x X_r -> K`` stored as an integer array of
element indices of K, with the identity on every tuple containing an identity
argument.  A cochain space is a list of blocks; in coordinates it is the
finite abelian group obtained by decomposing K once per non-degenerate tuple.

Coboundary maps are written pointwise on such arrays.  Because they are
homomorphisms they are turned into integer matrices by evaluating them on
coordinate basis vectors (``linearize``).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

import numpy as np

from .abelian import (
    AbelianDecomposition,
    LatticeQuotient,
    invariants_from_orders,
    kernel_lattice,
    lattice_quotient,
    relation_lattice,
)
from .core import FiniteGroup
from .errors import TooLarge

Cochain = tuple  # tuple of numpy arrays, one per block

ENUMERATION_LIMIT = 1 << 16
MAX_COORDINATES = 4000


@dataclass(frozen=True, eq=False)
class Block:
    name: str
    args: tuple[FiniteGroup, ...]
    coeff: AbelianDecomposition

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(g.order for g in self.args)

    def nondegenerate(self) -> list[tuple[int, ...]]:
        ranges = [[x for x in g.elements() if x != g.identity] for g in self.args]
        return list(itertools.product(*ranges))


@dataclass(frozen=True, eq=False)
class CochainSpace:
    blocks: tuple[Block, ...]
    _tuples: list = field(default_factory=list, repr=False)

    def __post_init__(self):
        for b in self.blocks:
            self._tuples.append(b.nondegenerate())

    @property
    def factors(self) -> list[int]:
        out = []
        for b, tups in zip(self.blocks, self._tuples):
            out += list(b.coeff.factors) * len(tups)
        return out

    @property
    def dim(self) -> int:
        return len(self.factors)

    @property
    def size(self) -> int:
        return math.prod(self.factors)

    def zero(self) -> Cochain:
        return tuple(np.full(b.shape, b.coeff.group.identity, dtype=np.int64) for b in self.blocks)

    def to_vector(self, c: Cochain) -> list[int]:
        v: list[int] = []
        for b, tups, arr in zip(self.blocks, self._tuples, c):
            coords = b.coeff.coords
            for t in tups:
                v.extend(int(x) for x in coords[arr[t]])
        return v

    def from_vector(self, v: Sequence[int]) -> Cochain:
        out = []
        i = 0
        for b, tups in zip(self.blocks, self._tuples):
            arr = np.full(b.shape, b.coeff.group.identity, dtype=np.int64)
            r = b.coeff.rank
            for t in tups:
                arr[t] = b.coeff.from_coords(v[i:i + r])
                i += r
            out.append(arr)
        return tuple(out)

    def reduce(self, v: Sequence[int]) -> tuple[int, ...]:
        return tuple(int(x) % f for x, f in zip(v, self.factors))

    def is_zero(self, c: Cochain) -> bool:
        return all(bool(np.all(arr == b.coeff.group.identity)) for b, arr in zip(self.blocks, c))

    def iter_vectors(self) -> Iterator[tuple[int, ...]]:
        return itertools.product(*[range(f) for f in self.factors])

    def random_vector(self, rng: np.random.Generator) -> list[int]:
        return [int(rng.integers(f)) for f in self.factors]

    def add(self, c1: Cochain, c2: Cochain) -> Cochain:
        return tuple(b.coeff.group.table[x, y] for b, x, y in zip(self.blocks, c1, c2))

    def neg(self, c: Cochain) -> Cochain:
        return tuple(b.coeff.group.inverses[x] for b, x in zip(self.blocks, c))


def linearize(fn: Callable[[Cochain], Cochain], dom: CochainSpace, cod: CochainSpace) -> list[list[int]]:
    """Integer matrix (rows = cod coordinates) of a pointwise-defined homomorphism."""
    if dom.dim > MAX_COORDINATES or cod.dim > MAX_COORDINATES:
        raise TooLarge("cochain space too large for exact linear algebra", witness=(dom.dim, cod.dim))
    cols = []
    for j in range(dom.dim):
        e = [0] * dom.dim
        e[j] = 1
        cols.append(cod.to_vector(fn(dom.from_vector(e))))
    return [[cols[j][i] for j in range(dom.dim)] for i in range(cod.dim)]


def homology_snf(
    d_out: list[list[int]],
    space: CochainSpace,
    out_space: CochainSpace,
    image_gens: Sequence[Sequence[int]],
) -> LatticeQuotient:
    """ker(d_out) / span(image_gens) on ``space``, through lattices and SNF."""
    big = kernel_lattice(d_out, space.factors, out_space.factors)
    small = [list(g) for g in image_gens] + relation_lattice(space.factors)
    return lattice_quotient(big, small, space.dim)


def matrix_columns(M: list[list[int]], ncols: int) -> list[list[int]]:
    return [[row[j] for row in M] for j in range(ncols)]


@dataclass
class EnumeratedHomology:
    order: int
    factors: list[int]
    kernel_size: int
    image_size: int


def homology_enumerate(
    d_out: Callable[[Cochain], Cochain],
    space: CochainSpace,
    out_space: CochainSpace,
    d_in: Callable[[Cochain], Cochain] | None,
    in_vectors: Sequence[Sequence[int]] | None,
    in_space: CochainSpace | None = None,
) -> EnumeratedHomology:
    """Same quotient as ``homology_snf`` by listing every cochain.

    The incoming image is either ``d_in`` applied to every vector of
    ``in_space`` or to the explicit list ``in_vectors`` (cochains given as
    vectors of ``in_space``).  Invariant factors come from the census of
    element orders in the quotient, not from any matrix reduction.
    """
    if space.size > ENUMERATION_LIMIT:
        raise TooLarge("too many cochains to enumerate", witness=space.size)
    kernel = [v for v in space.iter_vectors() if out_space.is_zero(d_out(space.from_vector(v)))]
    image = {space.reduce(space.to_vector(space.zero()))}
    if d_in is not None:
        if in_vectors is None:
            if in_space.size > ENUMERATION_LIMIT:
                raise TooLarge("too many cochains to enumerate", witness=in_space.size)
            in_vectors = in_space.iter_vectors()
        for w in in_vectors:
            image.add(space.reduce(space.to_vector(d_in(in_space.from_vector(w)))))
    facs = space.factors
    orders = []
    for v in kernel:
        m, acc = 1, tuple(v)
        while acc not in image:
            acc = tuple((a + b) % f for a, b, f in zip(acc, v, facs))
            m += 1
        orders.append(m)
    # every coset appears |image| times in the census
    census = []
    reps: dict[int, int] = {}
    for o in orders:
        reps[o] = reps.get(o, 0) + 1
    for o, c in reps.items():
        census += [o] * (c // len(image))
    return EnumeratedHomology(len(kernel) // len(image), invariants_from_orders(census), len(kernel), len(image))
