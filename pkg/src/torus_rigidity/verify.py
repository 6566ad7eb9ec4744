"""Independent checks: sampled equivariance, non-constancy, brute-force orbits,
and the fixed-point oracles for commuting families."""

from __future__ import annotations

import enum
import itertools
from collections import deque
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .action import MatrixAction, finite_orbit_subspace, is_ergodic
from .errors import NonCommuting
from .exact import IntegerMatrix, as_matrix, intersect_subspaces, rational_kernel, unimodular_inverse
from .witness import WitnessSpec, arc_distance, eval_f, eval_S

EQUIVARIANCE_TOL = 1e-9
NONCONSTANCY_FRACTION = 1e-3


def torus_distance(a, b) -> np.ndarray:
    """Max over coordinates of the circle distance; batched over leading axes."""
    return arc_distance(a, b).max(axis=-1)


def sample_torus(m: int, n_samples: int, seed: int) -> np.ndarray:
    rng = np.random.Generator(np.random.PCG64(seed))
    return rng.random((n_samples, m))


@dataclass(frozen=True)
class VerificationReport:
    samples: int
    seed: int
    max_equivariance_error: float
    per_generator_errors: tuple[float, ...]
    nonconstancy_gap: float
    tol: float
    nontriviality_threshold: float

    @property
    def passed(self) -> bool:
        return (self.max_equivariance_error < self.tol
                and self.nonconstancy_gap > self.nontriviality_threshold)


def equivariance_errors(w: WitnessSpec, rho: MatrixAction, sigma: MatrixAction,
                        X: np.ndarray) -> list[float]:
    fx = eval_f(w, X) if len(X) else np.zeros((0, sigma.dim))
    errors = []
    for A, B in zip(rho.generators, sigma.generators):
        if not len(X):
            errors.append(0.0)
            continue
        A_f = np.array(A.rows, dtype=float)
        B_f = np.array(B.rows, dtype=float)
        moved = np.mod(X @ A_f.T, 1.0)
        lhs = eval_f(w, moved)
        rhs = np.mod(fx @ B_f.T, 1.0)
        errors.append(float(torus_distance(lhs, rhs).max()))
    return errors


def check_nonaffine(w: WitnessSpec, n_samples: int, seed: int) -> float:
    """Largest distance between two values of S over x0, the origin and samples."""
    pts = np.vstack([np.asarray(w.x0, dtype=float)[None, :],
                     np.zeros((1, w.rho.dim)),
                     sample_torus(w.rho.dim, n_samples, seed)])
    S = eval_S(w, pts)
    gap = 0.0
    for start in range(0, len(S), 512):
        block = S[start:start + 512]
        d = np.linalg.norm(block[:, None, :] - S[None, :, :], axis=-1)
        gap = max(gap, float(d.max()))
    return gap


def check_equivariance(w: WitnessSpec, rho: MatrixAction, sigma: MatrixAction,
                       n_samples: int = 1000, seed: int = 0,
                       tol: float = EQUIVARIANCE_TOL) -> VerificationReport:
    X = sample_torus(rho.dim, n_samples, seed)
    errs = equivariance_errors(w, rho, sigma, X)
    threshold = NONCONSTANCY_FRACTION * float(np.linalg.norm(np.asarray(w.v, dtype=float)))
    return VerificationReport(
        samples=n_samples,
        seed=seed,
        max_equivariance_error=max(errs, default=0.0),
        per_generator_errors=tuple(errs),
        nonconstancy_gap=check_nonaffine(w, n_samples, seed),
        tol=tol,
        nontriviality_threshold=threshold,
    )


# --- brute-force orbits ----------------------------------------------------


class OrbitStatus(enum.Enum):
    FINITE = "finite"
    INFINITE = "infinite"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class OrbitResult:
    status: OrbitStatus
    size: int
    escape: tuple[int, ...] | None = None

    @property
    def is_finite(self) -> bool:
        return self.status is OrbitStatus.FINITE


def brute_orbit_finite(generators: Sequence, z: Sequence[int], size_bound: int = 10_000,
                       norm_bound: int = 10**6) -> OrbitResult:
    """Breadth-first search of the orbit of ``z`` under the generators and their inverses.

    Escaping ``norm_bound`` or exceeding ``size_bound`` is reported as
    INCONCLUSIVE, never INFINITE: a search that stops is not a proof.
    """
    mats = [as_matrix(g) for g in generators]
    moves = [g.rows for g in mats] + [unimodular_inverse(g).rows for g in mats]
    start = tuple(int(a) for a in z)
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for rows in moves:
            nxt = tuple(sum(a * b for a, b in zip(r, u)) for r in rows)
            if nxt in seen:
                continue
            if max(map(abs, nxt)) > norm_bound:
                return OrbitResult(OrbitStatus.INCONCLUSIVE, len(seen), escape=nxt)
            seen.add(nxt)
            if len(seen) > size_bound:
                return OrbitResult(OrbitStatus.INCONCLUSIVE, len(seen))
            queue.append(nxt)
    return OrbitResult(OrbitStatus.FINITE, len(seen))


# --- fixed-point oracles ---------------------------------------------------


def _common_fixed(mats: Sequence[IntegerMatrix]):
    return intersect_subspaces([rational_kernel(M.minus_identity()) for M in mats])


def oracle_prop42(generators: Sequence) -> bool:
    """A commuting family with a fixed covector also has a fixed vector."""
    mats = [as_matrix(g) for g in generators]
    for i, j in itertools.combinations(range(len(mats)), 2):
        if mats[i] @ mats[j] != mats[j] @ mats[i]:
            raise NonCommuting(i, j)
    dual_fixed = _common_fixed([M.T for M in mats])
    return dual_fixed.is_zero() or not _common_fixed(mats).is_zero()


def oracle_prop43(a: MatrixAction) -> bool:
    """Ergodicity agrees with the absence of finite-orbit vectors."""
    return is_ergodic(a) == finite_orbit_subspace(a).is_zero()
