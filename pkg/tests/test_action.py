import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from torus_rigidity import fixtures as fx
from torus_rigidity.action import (
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
from torus_rigidity.errors import NonCommuting, NotUnimodular
from torus_rigidity.exact import IntegerMatrix, LatticeBasis, RationalSubspace
from torus_rigidity.random_systems import random_commuting_action
from torus_rigidity.verify import brute_orbit_finite

from .strategies import seeds


def actions():
    return seeds.map(lambda s: random_commuting_action(random.Random(s)))


def test_constructor_rejects_bad_generators():
    with pytest.raises(NonCommuting) as exc:
        MatrixAction.of(fx.UNIPOTENT.rows, fx.UNIPOTENT.T.rows)
    assert exc.value.pair == (0, 1)
    with pytest.raises(NotUnimodular):
        MatrixAction.of([[2, 0], [0, 1]])


def test_apply_examples():
    assert MatrixAction.trivial(2, 2).apply((0, 0)).is_identity()
    assert fx.unipotent_action().apply((2,)) == IntegerMatrix(((1, 2), (0, 1)))
    a = MatrixAction((fx.CAT, fx.CAT))
    assert a.apply((1, -1)).is_identity()


@given(actions(), st.data())
def test_apply_is_homomorphism(a, data):
    exps = st.lists(st.integers(-3, 3), min_size=a.rank, max_size=a.rank)
    g1, g2 = data.draw(exps), data.draw(exps)
    total = tuple(x + y for x, y in zip(g1, g2))
    assert a.apply(total) == a.apply(g1) @ a.apply(g2)


def test_dual_action_examples():
    sym = MatrixAction((fx.CAT,))
    assert dual_action(sym) == sym
    assert dual_action(fx.unipotent_action()).generators[0] == IntegerMatrix(((1, 0), (1, 1)))
    assert dual_action(dual_action(fx.cat_action())) == fx.cat_action()


@given(actions())
def test_dual_is_involution(a):
    assert dual_action(dual_action(a)) == a


def test_finite_orbit_subspace_examples():
    assert finite_orbit_subspace(fx.cat_action()).is_zero()
    assert finite_orbit_subspace(fx.unipotent_action()) == RationalSubspace.span([(1, 0)], 2)
    assert finite_orbit_subspace(fx.identity_action(3)).is_full()


def test_finite_orbit_lattice_examples():
    assert finite_orbit_lattice(dual_action(fx.cat_action())).rank == 0
    assert finite_orbit_lattice(dual_action(fx.unipotent_action())).basis == ((0, 1),)
    assert finite_orbit_lattice(fx.identity_action(2)).is_full()


def test_finite_orbit_lattice_is_saturated():
    """Fix(G) = {x + y = 2z}; its primitive echelon vectors (2,0,1), (0,2,1)
    span an index-2 sublattice that misses (1,1,1)."""
    u, w = (1, 1, 1), (1, 1, -2)
    G = IntegerMatrix(tuple(tuple(int(i == j) + u[i] * w[j] for j in range(3)) for i in range(3)))
    a = MatrixAction((G,))
    L = finite_orbit_lattice(a)
    assert L.rank == 2
    assert L.contains((1, 1, 1))
    assert brute_orbit_finite(a.generators, (1, 1, 1)).is_finite


def test_is_ergodic_examples():
    assert is_ergodic(fx.cat_action())
    assert not is_ergodic(fx.identity_action(1))
    assert not is_ergodic(fx.order3_action())


def test_gamma_rho_examples():
    assert gamma_rho(fx.cat_action()).index == 1
    lam = gamma_rho(fx.order3_action())
    assert lam.basis == ((3,),) and lam.index == 3
    assert gamma_rho(fx.orbit_fixture_actions()["unipotent_and_minus_identity"]).basis == (
        (1, 0), (0, 2))


@pytest.mark.parametrize("A", [fx.ORDER3, fx.ROTATION4, fx.CAT, fx.UNIPOTENT, -fx.UNIPOTENT,
                               IntegerMatrix(((0, 1, 0), (0, 0, 1), (1, 0, 0)))])
def test_cyclic_gamma_rho_is_k_multiple(A):
    """For one generator, Gamma_rho is k_A Z whenever A^k_A fixes F pointwise."""
    from torus_rigidity.cyclo import k_index
    a = MatrixAction((A,))
    k = k_index(A)
    F = finite_orbit_lattice(dual_action(a))
    assert all((A.T ** k).apply(z) == z for z in F.basis)
    expected = k if F.rank else 1
    assert gamma_rho(a).basis == ((expected,),)


def brute_gamma_rho_members(a, box):
    F = finite_orbit_lattice(dual_action(a))
    dual = dual_action(a)
    out = set()
    for g in itertools.product(range(-box, box + 1), repeat=a.rank):
        M = dual.apply(g)
        if all(M.apply(z) == z for z in F.basis):
            out.add(g)
    return out


@settings(max_examples=25)
@given(actions())
def test_gamma_rho_against_enumeration(a):
    lam = gamma_rho(a)
    box = 4 if a.rank <= 2 else 2
    members = brute_gamma_rho_members(a, box)
    for g in itertools.product(range(-box, box + 1), repeat=a.rank):
        assert lam.contains(g) == (g in members)


@settings(max_examples=30)
@given(actions())
def test_gamma_rho_membership(a):
    F = finite_orbit_lattice(dual_action(a))
    dual = dual_action(a)
    lam = gamma_rho(a)
    for b in lam.basis:
        M = dual.apply(b)
        assert all(M.apply(z) == z for z in F.basis)
    for g in coset_representatives(lam):
        if any(g):
            M = dual.apply(g)
            assert any(M.apply(z) != z for z in F.basis)


def test_coset_representative_examples():
    assert coset_representatives(SubgroupLattice.full(2)) == [(0, 0)]
    assert coset_representatives(SubgroupLattice.from_generators([(3,)], 1)) == [(0,), (1,), (2,)]
    lam = SubgroupLattice.from_generators([(2, 0), (0, 2)], 2)
    assert coset_representatives(lam) == [(0, 0), (1, 0), (0, 1), (1, 1)]


@given(st.lists(st.lists(st.integers(-4, 4), min_size=2, max_size=2), min_size=2, max_size=4))
def test_coset_representatives_are_a_transversal(gens):
    lat = LatticeBasis.from_generators(gens, 2)
    if not lat.is_full():
        return
    lam = SubgroupLattice(lat)
    reps = coset_representatives(lam)
    assert len(reps) == lam.index
    assert len({lam.reduce(g) for g in reps}) == len(reps)
    for g in itertools.product(range(-3, 4), repeat=2):
        assert lam.reduce(g) in reps


def test_fixed_subspace_examples():
    assert fixed_subspace(fx.identity_action(2), SubgroupLattice.full(1)).is_full()
    assert fixed_subspace(fx.unipotent_action(), SubgroupLattice.full(1)) == RationalSubspace.span(
        [(1, 0)], 2)
    assert fixed_subspace(fx.flip_action(), SubgroupLattice.full(1)).is_zero()


@given(actions())
def test_finite_orbit_subspace_is_invariant(a):
    W = finite_orbit_subspace(a)
    for g in a.generators:
        assert W.is_invariant_under(g)


@given(actions())
def test_ergodic_iff_no_finite_orbit_vector(a):
    assert is_ergodic(a) == finite_orbit_subspace(a).is_zero()


@pytest.mark.parametrize("name", sorted(fx.orbit_fixture_actions()))
def test_brute_orbits_agree_with_lattice(name):
    a = fx.orbit_fixture_actions()[name]
    L = finite_orbit_lattice(a)
    box = 3 if a.dim == 2 else 1
    for z in itertools.product(range(-box, box + 1), repeat=a.dim):
        result = brute_orbit_finite(a.generators, z, size_bound=2_000)
        assert result.is_finite == L.contains(z), z
