import dataclasses
import random

import numpy as np
import pytest
from hypothesis import given

from torus_rigidity import fixtures as fx
from torus_rigidity.action import MatrixAction
from torus_rigidity.decide import decide_nonaffine
from torus_rigidity.errors import NonCommuting
from torus_rigidity.random_systems import random_polynomial_family
from torus_rigidity.verify import (
    OrbitStatus,
    brute_orbit_finite,
    check_equivariance,
    check_nonaffine,
    oracle_prop42,
    oracle_prop43,
    sample_torus,
    torus_distance,
)
from torus_rigidity.witness import build_witness

from .strategies import seeds


def witness(pair):
    rho, sigma = pair
    return build_witness(rho, sigma, decide_nonaffine(rho, sigma)), rho, sigma


FIXTURES = [fx.unipotent_to_identity, fx.order3_to_unipotent]


def test_torus_distance():
    assert torus_distance([0.05, 0.5], [0.95, 0.5]) == pytest.approx(0.1)
    assert torus_distance(np.zeros((3, 2)), np.full((3, 2), 0.25)).tolist() == [0.25] * 3


def test_sampling_is_seeded():
    assert np.array_equal(sample_torus(2, 5, 7), sample_torus(2, 5, 7))
    assert not np.array_equal(sample_torus(2, 5, 7), sample_torus(2, 5, 8))
    X = sample_torus(3, 1000, 0)
    assert X.shape == (1000, 3) and X.min() >= 0 and X.max() < 1


@pytest.mark.parametrize("make", FIXTURES)
def test_fixture_witnesses_pass(make):
    w, rho, sigma = witness(make())
    report = check_equivariance(w, rho, sigma, n_samples=1000, seed=0)
    assert report.max_equivariance_error < 1e-9
    assert report.nonconstancy_gap > 0.5 * np.linalg.norm(w.v)
    assert report.passed and report.seed == 0 and report.samples == 1000
    assert len(report.per_generator_errors) == rho.rank


def test_identity_example_gap_is_one():
    w, _, _ = witness(fx.unipotent_to_identity())
    assert check_nonaffine(w, 100, 0) == pytest.approx(1.0, abs=1e-12)


def test_corrupted_direction_fails():
    w, rho, sigma = witness(fx.order3_to_unipotent())
    bad = dataclasses.replace(w, v=(1, 1))
    report = check_equivariance(bad, rho, sigma, n_samples=1000, seed=0)
    assert report.max_equivariance_error > 0.1
    assert not report.passed


def test_zero_direction_has_no_gap():
    w, rho, sigma = witness(fx.unipotent_to_identity())
    flat = dataclasses.replace(w, v=(0,))
    assert check_nonaffine(flat, 50, 1) == 0.0
    assert not check_equivariance(flat, rho, sigma, 50, 1).passed


def test_zero_samples_is_vacuous():
    w, rho, sigma = witness(fx.unipotent_to_identity())
    report = check_equivariance(w, rho, sigma, n_samples=0, seed=0)
    assert report.max_equivariance_error == 0.0 and report.passed


def test_report_determinism():
    w, rho, sigma = witness(fx.order3_to_unipotent())
    assert check_equivariance(w, rho, sigma, 300, 42) == check_equivariance(w, rho, sigma, 300, 42)


# --- brute orbits -----------------------------------------------------------------


def test_brute_orbit_examples():
    assert brute_orbit_finite([fx.CAT], (0, 0)) == brute_orbit_finite([fx.CAT], (0, 0))
    r = brute_orbit_finite([fx.CAT], (0, 0))
    assert r.status is OrbitStatus.FINITE and r.size == 1
    cat = brute_orbit_finite([fx.CAT], (1, 0), size_bound=10_000)
    assert cat.status is OrbitStatus.INCONCLUSIVE and cat.escape is not None
    for z in [(1, 0), (3, -2), (0, 5)]:
        r = brute_orbit_finite([fx.ORDER3], z)
        assert r.is_finite and r.size <= 3


def test_brute_orbit_size_bound():
    r = brute_orbit_finite([fx.UNIPOTENT], (0, 1), size_bound=50)
    assert r.status is OrbitStatus.INCONCLUSIVE and r.size > 50


# --- oracles ------------------------------------------------------------------------


def test_prop42_examples():
    assert oracle_prop42([fx.UNIPOTENT])
    assert oracle_prop42([fx.ONE])
    assert oracle_prop42([fx.CAT])
    with pytest.raises(NonCommuting):
        oracle_prop42([fx.UNIPOTENT, fx.UNIPOTENT.T])


def test_prop43_examples():
    for a in (fx.cat_action(), fx.identity_action(3), fx.unipotent_action()):
        assert oracle_prop43(a)


@given(seeds)
def test_oracles_on_polynomial_families(seed):
    assert oracle_prop42(random_polynomial_family(random.Random(seed)))
    family = random_polynomial_family(random.Random(seed), unimodular=True)
    assert oracle_prop43(MatrixAction(tuple(family)))
