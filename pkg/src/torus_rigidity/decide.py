"""Decision procedures for the existence of non-affine equivariant maps.

Every report carries a certificate naming the exact objects behind the
answer; :func:`check_certificate` re-verifies those claims.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .action import (
    MatrixAction,
    SubgroupLattice,
    dual_action,
    finite_orbit_lattice,
    finite_orbit_subspace,
    fixed_subspace,
    gamma_rho,
    is_ergodic,
)
from .cyclo import k_index, root_of_unity_orders
from .errors import (
    DimensionMismatch,
    NotEquivariant,
    NotSurjective,
    NotUnimodular,
    RankMismatch,
)
from .exact import (
    IntegerMatrix,
    Vector,
    as_matrix,
    charpoly,
    determinant,
    matrix_rank,
    primitive,
    rational_kernel,
)

EXACT = "exact"
ALMOST = "almost"
CYCLIC = "cyclic"
FACTOR = "factor"
MODES = (EXACT, ALMOST, CYCLIC, FACTOR)

# NO certificates
SOURCE_ERGODIC = "SourceErgodic"
NO_FINITE_ORBIT_TARGET_VECTOR = "NoFiniteOrbitTargetVector"
NO_GAMMA_RHO_FIXED_VECTOR = "NoGammaRhoFixedVector"
TARGET_ERGODIC = "TargetErgodic"
# YES certificates
GAMMA_RHO_FIXED_VECTOR = "GammaRhoFixedVector"
FINITE_ORBIT_TARGET_VECTOR = "FiniteOrbitTargetVector"
TARGET_NON_ERGODIC = "TargetNonErgodic"


@dataclass(frozen=True)
class Certificate:
    kind: str
    f_lattice: tuple[Vector, ...] | None = None
    gamma_rho: tuple[Vector, ...] | None = None
    gamma_index: int | None = None
    vector: Vector | None = None
    k_index: int | None = None
    determinant: int | None = None


@dataclass(frozen=True)
class DecisionReport:
    exists_nonaffine: bool
    mode: str
    certificate: Certificate
    diagnostics: dict[str, Any] = field(default_factory=dict)


def _check_ranks(rho: MatrixAction, sigma: MatrixAction):
    if rho.rank != sigma.rank:
        raise RankMismatch(f"source has {rho.rank} generators, target has {sigma.rank}")


def _diagnostics(rho: MatrixAction, sigma: MatrixAction) -> dict[str, Any]:
    return {"source_k": list(rho.k_indices()), "target_k": list(sigma.k_indices())}


def decide_nonaffine(rho: MatrixAction, sigma: MatrixAction) -> DecisionReport:
    """Exact equivariance: non-ergodic source and a nonzero target vector fixed by Gamma_rho."""
    _check_ranks(rho, sigma)
    diag = _diagnostics(rho, sigma)
    F = finite_orbit_lattice(dual_action(rho))
    diag["f_rank"] = F.rank
    if F.rank == 0:
        return DecisionReport(False, EXACT, Certificate(SOURCE_ERGODIC, f_lattice=()), diag)
    lam = gamma_rho(rho)
    W = fixed_subspace(sigma, lam)
    diag["fixed_rank"] = W.rank
    if W.is_zero():
        cert = Certificate(NO_GAMMA_RHO_FIXED_VECTOR, F.basis, lam.basis, lam.index)
        return DecisionReport(False, EXACT, cert, diag)
    cert = Certificate(GAMMA_RHO_FIXED_VECTOR, F.basis, lam.basis, lam.index,
                       primitive(W.basis[0]))
    return DecisionReport(True, EXACT, cert, diag)


def decide_cyclic(A, B) -> DecisionReport:
    """Single-automorphism fast path through k_A and det(B^k_A - I).

    An ergodic A (no root-of-unity eigenvalue at all) admits no non-ergodic
    source, so it is answered NO before the eigenvalue test on B.
    """
    A, B = as_matrix(A), as_matrix(B)
    for name, M in (("A", A), ("B", B)):
        if abs(determinant(M)) != 1:
            raise NotUnimodular(f"{name} = {M} is not unimodular")
    k = k_index(A)
    diag = {"source_k": [k], "target_k": [k_index(B)]}
    if not root_of_unity_orders(charpoly(A)):
        return DecisionReport(False, CYCLIC, Certificate(SOURCE_ERGODIC, f_lattice=(), k_index=k), diag)
    shifted = (B ** k).minus_identity()
    d = determinant(shifted)
    diag["det"] = d
    if d != 0:
        cert = Certificate(NO_GAMMA_RHO_FIXED_VECTOR, gamma_rho=((k,),), gamma_index=k,
                           k_index=k, determinant=d)
        return DecisionReport(False, CYCLIC, cert, diag)
    v = primitive(rational_kernel(shifted).basis[0])
    cert = Certificate(GAMMA_RHO_FIXED_VECTOR, gamma_rho=((k,),), gamma_index=k, vector=v,
                       k_index=k, determinant=0)
    return DecisionReport(True, CYCLIC, cert, diag)


def rigidity_certificate(rho: MatrixAction, sigma: MatrixAction) -> Certificate | None:
    """A reason every equivariant map must be affine, if one is visible without Gamma_rho."""
    if is_ergodic(rho):
        return Certificate(SOURCE_ERGODIC, f_lattice=())
    if finite_orbit_subspace(sigma).is_zero():
        return Certificate(NO_FINITE_ORBIT_TARGET_VECTOR)
    return None


def decide_almost(rho: MatrixAction, sigma: MatrixAction) -> DecisionReport:
    _check_ranks(rho, sigma)
    diag = _diagnostics(rho, sigma)
    blocked = rigidity_certificate(rho, sigma)
    if blocked is not None:
        return DecisionReport(False, ALMOST, blocked, diag)
    F = finite_orbit_lattice(dual_action(rho))
    W = finite_orbit_subspace(sigma)
    diag["f_rank"] = F.rank
    diag["finite_orbit_rank"] = W.rank
    cert = Certificate(FINITE_ORBIT_TARGET_VECTOR, f_lattice=F.basis, vector=primitive(W.basis[0]))
    return DecisionReport(True, ALMOST, cert, diag)


def check_factor_map(rho: MatrixAction, sigma: MatrixAction, theta) -> IntegerMatrix:
    _check_ranks(rho, sigma)
    theta = as_matrix(theta)
    if theta.shape != (sigma.dim, rho.dim):
        raise DimensionMismatch(
            f"factor matrix has shape {theta.shape}, expected ({sigma.dim}, {rho.dim})"
        )
    if matrix_rank(theta) != sigma.dim:
        raise NotSurjective(f"factor matrix has rank {matrix_rank(theta)} < {sigma.dim}")
    for j, (A, B) in enumerate(zip(rho.generators, sigma.generators)):
        if B @ theta != theta @ A:
            raise NotEquivariant(f"generator {j}: sigma(e_j) theta != theta rho(e_j)")
    return theta


def decide_factor(rho: MatrixAction, sigma: MatrixAction, theta) -> DecisionReport:
    """Factor situation: a non-affine map exists iff the target is not ergodic."""
    check_factor_map(rho, sigma, theta)
    diag = _diagnostics(rho, sigma)
    if is_ergodic(sigma):
        return DecisionReport(False, FACTOR, Certificate(TARGET_ERGODIC), diag)
    exact = decide_nonaffine(rho, sigma)
    if not exact.exists_nonaffine:
        raise AssertionError("non-ergodic factor but the exact decision says NO")
    diag.update(exact.diagnostics)
    c = exact.certificate
    cert = Certificate(TARGET_NON_ERGODIC, c.f_lattice, c.gamma_rho, c.gamma_index, c.vector)
    return DecisionReport(True, FACTOR, cert, diag)


def check_certificate(report: DecisionReport, rho: MatrixAction, sigma: MatrixAction) -> bool:
    """Re-verify the exact claims of a certificate.

    Ergodicity claims are re-derived through the finite-orbit subspace of the
    action itself rather than the dual lattice the decision used.
    """
    c = report.certificate
    if c.kind == SOURCE_ERGODIC:
        return finite_orbit_subspace(rho).is_zero()
    if c.kind == TARGET_ERGODIC:
        return finite_orbit_subspace(sigma).is_zero()
    if c.kind == NO_FINITE_ORBIT_TARGET_VECTOR:
        return finite_orbit_subspace(sigma).is_zero()
    if c.kind == FINITE_ORBIT_TARGET_VECTOR:
        v = c.vector
        return any(v) and all(
            (g ** k).apply(v) == tuple(v) for g, k in zip(sigma.generators, sigma.k_indices())
        )

    lam = SubgroupLattice.from_generators(c.gamma_rho, rho.rank)
    if c.f_lattice is not None:
        dual = dual_action(rho)
        for b in lam.basis:
            M = dual.apply(b)
            if any(M.apply(z) != tuple(z) for z in c.f_lattice):
                return False
    if c.kind == NO_GAMMA_RHO_FIXED_VECTOR:
        if c.determinant is not None:
            return determinant(sigma.apply(lam.basis[0]).minus_identity()) == c.determinant != 0
        stacked = [row for b in lam.basis for row in sigma.apply(b).minus_identity().rows]
        return matrix_rank(stacked) == sigma.dim
    if c.kind in (GAMMA_RHO_FIXED_VECTOR, TARGET_NON_ERGODIC):
        v = c.vector
        return any(v) and all(sigma.apply(b).apply(v) == tuple(v) for b in lam.basis)
    raise ValueError(f"unknown certificate kind {c.kind!r}")
