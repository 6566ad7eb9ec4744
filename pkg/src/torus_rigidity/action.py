"""Actions of Z^r on T^m by commuting unimodular matrices.

An element of the acting group is an exponent vector ``gamma``; it acts by
``G_1^gamma_1 ... G_r^gamma_r``.  Characters of T^m are identified with Z^m,
and the character ``z`` composed with ``M`` is the character ``M^T z``, so the
dual action is generated by the transposes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, reduce
from math import lcm
from typing import Sequence

from .cyclo import k_index, root_of_unity_orders
from .errors import DimensionMismatch, NonCommuting, NotUnimodular
from .exact import (
    IntegerMatrix,
    LatticeBasis,
    RationalSubspace,
    as_matrix,
    charpoly,
    determinant,
    integer_points,
    intersect_subspaces,
    rational_kernel,
    unimodular_inverse,
)


@dataclass(frozen=True)
class MatrixAction:
    generators: tuple[IntegerMatrix, ...]
    _inverses: tuple[IntegerMatrix, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        gens = tuple(as_matrix(g) for g in self.generators)
        if not gens:
            raise ValueError("an action needs at least one generator")
        m = gens[0].shape[0]
        for i, g in enumerate(gens):
            if not g.is_square or g.dim != m:
                raise DimensionMismatch(f"generator {i} has shape {g.shape}, expected ({m}, {m})")
            d = determinant(g)
            if abs(d) != 1:
                raise NotUnimodular(f"generator {i} has determinant {d}")
        for i, j in itertools.combinations(range(len(gens)), 2):
            if gens[i] @ gens[j] != gens[j] @ gens[i]:
                raise NonCommuting(i, j)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "_inverses", tuple(unimodular_inverse(g) for g in gens))

    @classmethod
    def of(cls, *generators) -> MatrixAction:
        return cls(tuple(as_matrix(g) for g in generators))

    @classmethod
    def trivial(cls, m: int, r: int = 1) -> MatrixAction:
        return cls((IntegerMatrix.identity(m),) * r)

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def dim(self) -> int:
        return self.generators[0].dim

    def inverse_generators(self) -> tuple[IntegerMatrix, ...]:
        return self._inverses

    def apply(self, gamma: Sequence[int]) -> IntegerMatrix:
        if len(gamma) != self.rank:
            raise DimensionMismatch(f"exponent vector of length {len(gamma)} for rank {self.rank}")
        out = IntegerMatrix.identity(self.dim)
        for g, ginv, e in zip(self.generators, self._inverses, gamma):
            if e:
                out = out @ ((g if e > 0 else ginv) ** abs(e))
        return out

    def dual(self) -> MatrixAction:
        return dual_action(self)

    def k_indices(self) -> tuple[int, ...]:
        return tuple(k_index(g) for g in self.generators)


def dual_action(a: MatrixAction) -> MatrixAction:
    return MatrixAction(tuple(g.T for g in a.generators))


def finite_orbit_subspace(a: MatrixAction) -> RationalSubspace:
    """Rational vectors whose orbit under the whole group is finite."""
    kernels = [rational_kernel((g ** k_index(g)).minus_identity()) for g in a.generators]
    return intersect_subspaces(kernels)


def finite_orbit_lattice(a: MatrixAction) -> LatticeBasis:
    return integer_points(finite_orbit_subspace(a))


def is_ergodic(a: MatrixAction) -> bool:
    return finite_orbit_lattice(dual_action(a)).rank == 0


@dataclass(frozen=True)
class SubgroupLattice:
    """Finite-index subgroup of the exponent lattice Z^r."""

    lattice: LatticeBasis

    @classmethod
    def full(cls, r: int) -> SubgroupLattice:
        return cls(LatticeBasis.from_generators(IntegerMatrix.identity(r).rows, r))

    @classmethod
    def from_generators(cls, vectors, r: int) -> SubgroupLattice:
        lat = LatticeBasis.from_generators(vectors, r)
        if not lat.is_full():
            raise ValueError("subgroup must have finite index")
        return cls(lat)

    @property
    def rank(self) -> int:
        return self.lattice.ambient_dim

    @property
    def basis(self) -> tuple[tuple[int, ...], ...]:
        return self.lattice.basis

    @cached_property
    def index(self) -> int:
        return self.lattice.index()

    def contains(self, gamma: Sequence[int]) -> bool:
        return self.lattice.contains(gamma)

    def __contains__(self, gamma) -> bool:
        return self.contains(gamma)

    def reduce(self, gamma: Sequence[int]) -> tuple[int, ...]:
        """The coset representative of ``gamma`` in the canonical box."""
        g = list(gamma)
        for i, b in enumerate(self.basis):
            q = g[i] // b[i]
            if q:
                g = [x - q * y for x, y in zip(g, b)]
        return tuple(g)


def restriction(M: IntegerMatrix, L: LatticeBasis) -> IntegerMatrix:
    """Matrix of M on an M-invariant lattice, in the lattice basis (column convention)."""
    cols = [L.coordinates(M.apply(b)) for b in L.basis]
    return IntegerMatrix(tuple(zip(*cols)))


def matrix_order(R: IntegerMatrix) -> int:
    """Order of a finite-order integer matrix."""
    cap = reduce(lcm, root_of_unity_orders(charpoly(R)).orders, 1)
    P = R
    for i in range(1, cap + 1):
        if P.is_identity():
            return i
        P = P @ R
    raise ValueError(f"matrix {R} does not have finite order")


def gamma_rho(a: MatrixAction) -> SubgroupLattice:
    """Group elements acting trivially on every character with a finite orbit."""
    r = a.rank
    F = finite_orbit_lattice(dual_action(a))
    if F.rank == 0:
        return SubgroupLattice.full(r)
    restricted = [restriction(g.T, F) for g in a.generators]
    orders = [matrix_order(R) for R in restricted]
    powers = [[R ** e for e in range(o)] for R, o in zip(restricted, orders)]
    gens = [tuple(o * int(i == j) for j in range(r)) for i, o in enumerate(orders)]
    for gamma in itertools.product(*(range(o) for o in orders)):
        if not any(gamma):
            continue
        P = reduce(lambda X, Y: X @ Y, (powers[j][e] for j, e in enumerate(gamma)))
        if P.is_identity():
            gens.append(gamma)
    return SubgroupLattice.from_generators(gens, r)


def coset_representatives(lam: SubgroupLattice) -> list[tuple[int, ...]]:
    """Box representatives of Z^r / lam, first coordinate varying fastest."""
    diag = [b[i] for i, b in enumerate(lam.basis)]
    return [tuple(reversed(t)) for t in itertools.product(*(range(d) for d in reversed(diag)))]


def fixed_subspace(a: MatrixAction, lam: SubgroupLattice) -> RationalSubspace:
    """Vectors fixed by every element of ``lam``; the basis suffices."""
    return intersect_subspaces([rational_kernel(a.apply(b).minus_identity()) for b in lam.basis])
