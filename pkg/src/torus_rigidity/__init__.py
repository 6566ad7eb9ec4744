"""Rigidity of equivariant maps between toral automorphism actions."""

from .action import (
    MatrixAction,
    SubgroupLattice,
    coset_representatives,
    dual_action,
    finite_orbit_lattice,
    finite_orbit_subspace,
    fixed_subspace,
    gamma_rho,
    is_ergodic,
)
from .cyclo import cyclotomic, k_index, root_of_unity_orders
from .decide import (
    Certificate,
    DecisionReport,
    check_certificate,
    decide_almost,
    decide_cyclic,
    decide_factor,
    decide_nonaffine,
    rigidity_certificate,
)
from .exact import (
    IntegerMatrix,
    IntegerPolynomial,
    LatticeBasis,
    RationalSubspace,
    charpoly,
    intersect_subspaces,
    lattice_saturate,
    rational_kernel,
    unimodular_inverse,
)
from .verify import brute_orbit_finite, check_equivariance, check_nonaffine, oracle_prop42, oracle_prop43
from .witness import WitnessSpec, build_witness, eval_f, eval_S
from .config import OrbitSearchConfig, PipelineConfig, VerifyConfig, WitnessConfig

__version__ = "0.1.0"
