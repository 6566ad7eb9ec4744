"""Explicit non-affine equivariant maps between tori.

The map is built by averaging a bump over the cosets of Gamma_rho::

    S(x) = sum_i sigma(-gamma_i) g(<chi0, rho(gamma_i) x> mod 1)
    f(x) = S(x) mod Z^n

where ``g`` is a tent on the circle pointing in a Gamma_rho-fixed direction
``v``.  All combinatorial data (chi0, representatives, matrices, v) is exact;
floating point only enters when the map is evaluated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

import numpy as np
from sympy import prime

from .action import (
    MatrixAction,
    SubgroupLattice,
    coset_representatives,
    dual_action,
    finite_orbit_lattice,
    gamma_rho,
)
from .decide import DecisionReport
from .errors import EmptyF, PreconditionError, SeparationFailure
from .exact import IntegerMatrix, LatticeBasis, Vector

DEFAULT_SEPARATION = 1e-3
DEFAULT_ATTEMPTS = 200


def arc_distance(a, b):
    """Distance on R/Z; works elementwise on arrays."""
    d = np.abs(np.asarray(a, dtype=float) - np.asarray(b, dtype=float)) % 1.0
    return np.minimum(d, 1.0 - d)


@dataclass(frozen=True)
class BumpFunction:
    """Tent on the circle: ``direction`` at ``center``, zero beyond ``radius``."""

    center: float
    radius: float
    direction: Vector

    def weight(self, t):
        return np.maximum(0.0, 1.0 - arc_distance(t, self.center) / self.radius)

    def __call__(self, t) -> np.ndarray:
        return float(self.weight(t)) * np.asarray(self.direction, dtype=float)


@dataclass(frozen=True)
class WitnessSpec:
    rho: MatrixAction
    sigma: MatrixAction
    gamma_rho: SubgroupLattice
    chi0: Vector
    x0: tuple[float, ...]
    reps: tuple[Vector, ...]
    c: tuple[float, ...]
    bump_radius: float
    v: Vector
    rho_mats: tuple[IntegerMatrix, ...]
    sigma_inv_mats: tuple[IntegerMatrix, ...]

    @property
    def d(self) -> int:
        return len(self.reps)

    @property
    def bump_center(self) -> float:
        return self.c[-1]

    @property
    def bump(self) -> BumpFunction:
        return BumpFunction(self.bump_center, self.bump_radius, self.v)

    @cached_property
    def character_rows(self) -> tuple[Vector, ...]:
        """chi0 composed with rho(gamma_i), as exact integer characters."""
        return tuple(M.T.apply(self.chi0) for M in self.rho_mats)

    @cached_property
    def _chi_array(self) -> np.ndarray:
        return np.array(self.character_rows, dtype=float)

    @cached_property
    def _w_array(self) -> np.ndarray:
        return np.array([M.apply(self.v) for M in self.sigma_inv_mats], dtype=float)


def _orbit_differences(chi: Vector, mats: Sequence[IntegerMatrix]) -> set[Vector]:
    return {tuple(a - b for a, b in zip(M.apply(chi), chi)) for M in mats}


def fold_multiplier(A1: set[Vector], A2: set[Vector]) -> int:
    """Smallest n >= 1 with n*A1 and A2 sharing no nonzero vector."""
    n = 1
    while True:
        if not any(any(a) and tuple(n * x for x in a) in A2 for a in A1):
            return n
        n += 1


def select_chi0(F: LatticeBasis, dual: MatrixAction, lam: SubgroupLattice) -> Vector:
    """A character in F whose stabiliser under the dual action is exactly ``lam``."""
    if F.rank == 0:
        raise EmptyF("no character has a finite orbit")
    reps = coset_representatives(lam)
    mats = [dual.apply(g) for g in reps]
    chi = F.basis[0]
    for z in F.basis[1:]:
        n = fold_multiplier(_orbit_differences(chi, mats), _orbit_differences(z, mats))
        chi = tuple(n * a - b for a, b in zip(chi, z))
    for g, M in zip(reps, mats):
        if any(g) and M.apply(chi) == chi:
            raise AssertionError(f"character {chi} is also fixed by {g}")
    return chi


def circle_values(rows: Sequence[Vector], x0: Sequence[float]) -> tuple[float, ...]:
    """0 followed by <row, x0> mod 1 for each row, computed exactly from the stored floats."""
    xs = [Fraction(x) for x in x0]
    return (0.0,) + tuple(float(sum(a * x for a, x in zip(r, xs)) % 1) for r in rows)


def min_pairwise_gap(c: Sequence[float]) -> float:
    arr = np.asarray(c, dtype=float)
    if len(arr) < 2:
        return 1.0
    gaps = arc_distance(arr[:, None], arr[None, :])
    return float(gaps[np.triu_indices(len(arr), 1)].min())


def sqrt_prime_point(m: int, offset: int) -> tuple[float, ...]:
    return tuple(math.sqrt(prime(offset + i + 1)) % 1.0 for i in range(m))


def select_x0(rows: Sequence[Vector], m: int, tol: float = DEFAULT_SEPARATION,
              max_attempts: int = DEFAULT_ATTEMPTS) -> tuple[tuple[float, ...], tuple[float, ...]]:
    """Slide along sqrt(primes) until the circle values are pairwise > tol apart.

    ``rows`` are the characters chi0 o rho(gamma_i).  Returns (x0, c).
    """
    best = 0.0
    for offset in range(max_attempts):
        x0 = sqrt_prime_point(m, offset)
        c = circle_values(rows, x0)
        gap = min_pairwise_gap(c)
        if gap > tol:
            return x0, c
        best = max(best, gap)
    raise SeparationFailure(best, tol, max_attempts)


def build_witness(rho: MatrixAction, sigma: MatrixAction, report: DecisionReport,
                  tol: float = DEFAULT_SEPARATION,
                  max_attempts: int = DEFAULT_ATTEMPTS) -> WitnessSpec:
    cert = report.certificate
    if not report.exists_nonaffine or cert.vector is None or cert.gamma_rho is None:
        raise PreconditionError(f"no witness for a NO decision ({cert.kind})")
    lam = gamma_rho(rho)
    if lam.basis != SubgroupLattice.from_generators(cert.gamma_rho, rho.rank).basis:
        raise PreconditionError("report does not match the source action")
    v = tuple(cert.vector)
    for b in lam.basis:
        if sigma.apply(b).apply(v) != v:
            raise PreconditionError(f"direction {v} is not fixed by sigma({b})")

    dual = dual_action(rho)
    F = finite_orbit_lattice(dual)
    chi0 = select_chi0(F, dual, lam)
    reps = tuple(coset_representatives(lam))
    rho_mats = tuple(rho.apply(g) for g in reps)
    sigma_inv = tuple(sigma.apply(tuple(-e for e in g)) for g in reps)
    rows = [M.T.apply(chi0) for M in rho_mats]
    x0, c = select_x0(rows, rho.dim, tol, max_attempts)
    delta = 0.5 * float(arc_distance(np.asarray(c[:-1]), c[-1]).min())
    return WitnessSpec(rho, sigma, lam, chi0, x0, reps, c, delta, v, rho_mats, sigma_inv)


def with_representatives(w: WitnessSpec, reps: Sequence[Sequence[int]]) -> WitnessSpec:
    """Same witness data over another transversal of Gamma_rho (one per coset, same order)."""
    reps = tuple(tuple(g) for g in reps)
    if len(reps) != w.d:
        raise ValueError(f"expected {w.d} representatives, got {len(reps)}")
    for old, new in zip(w.reps, reps):
        if w.gamma_rho.reduce(old) != w.gamma_rho.reduce(new):
            raise ValueError(f"{new} is not in the coset of {old}")
    return WitnessSpec(
        w.rho, w.sigma, w.gamma_rho, w.chi0, w.x0, reps, w.c, w.bump_radius, w.v,
        tuple(w.rho.apply(g) for g in reps),
        tuple(w.sigma.apply(tuple(-e for e in g)) for g in reps),
    )


def eval_S(w: WitnessSpec, x) -> np.ndarray:
    """Lift of the witness to R^n; accepts one point (m,) or a batch (N, m)."""
    X = np.asarray(x, dtype=float)
    single = X.ndim == 1
    X = np.atleast_2d(X)
    args = (X @ w._chi_array.T) % 1.0
    out = w.bump.weight(args) @ w._w_array
    return out[0] if single else out


def eval_f(w: WitnessSpec, x) -> np.ndarray:
    return np.mod(eval_S(w, x), 1.0)
