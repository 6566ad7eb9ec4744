import itertools
from math import gcd

import numpy as np
import pytest
import sympy
from hypothesis import given

from torus_rigidity.cyclo import candidate_orders, cyclotomic, k_index, root_of_unity_orders
from torus_rigidity.errors import NotUnimodular
from torus_rigidity.exact import IntegerMatrix, IntegerPolynomial, charpoly, unimodular_inverse
from torus_rigidity.fixtures import CAT, ORDER3, ROTATION4, UNIPOTENT

from .strategies import unimodular_matrices


def poly(*desc):
    return IntegerPolynomial.from_descending(*desc)


@pytest.mark.parametrize("n, expected", [
    (1, poly(1, -1)),
    (4, poly(1, 0, 1)),
    (6, poly(1, -1, 1)),
])
def test_cyclotomic_examples(n, expected):
    assert cyclotomic(n) == expected


@pytest.mark.parametrize("n", range(1, 61))
def test_cyclotomic_matches_sympy(n):
    x = sympy.symbols("x")
    ref = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()
    assert cyclotomic(n) == poly(*map(int, ref))


def brute_totient(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@pytest.mark.parametrize("m", range(1, 7))
def test_candidate_enumeration_complete(m):
    """Brute-force totient table well past the 2 m^2 bound."""
    table = {n for n in range(1, 10 * m * m + 50) if brute_totient(n) <= m}
    assert set(candidate_orders(m)) == table


@pytest.mark.parametrize("p, expected", [
    (poly(1, -3, 1), ()),
    (poly(1, -2, 1), ((1, 2),)),
    (poly(1, 1, 1), ((3, 1),)),
])
def test_root_of_unity_orders_examples(p, expected):
    assert root_of_unity_orders(p).multiplicities == expected


def test_root_of_unity_multiplicities_of_product():
    p = cyclotomic(1) * cyclotomic(4) * cyclotomic(4) * cyclotomic(6) * poly(1, -3, 1)
    spec = root_of_unity_orders(p)
    assert spec.multiplicities == ((1, 1), (4, 2), (6, 1))
    assert sum(sympy.totient(n) * k for n, k in spec.multiplicities) <= p.degree


def numeric_root_orders(A, max_order=200):
    """Float oracle: orders of eigenvalues lying on roots of unity."""
    found = set()
    for lam in np.linalg.eigvals(np.array(A.tolist(), dtype=float)):
        if abs(abs(lam) - 1) > 1e-6:
            continue
        for n in range(1, max_order):
            if abs(lam ** n - 1) < 1e-6:
                found.add(n)
                break
    return found


@given(unimodular_matrices(max_dim=4))
def test_orders_match_numeric_eigenvalues(A):
    assert set(root_of_unity_orders(charpoly(A)).orders) == numeric_root_orders(A)


@pytest.mark.parametrize("A, expected", [
    (CAT, 1),
    (ORDER3, 3),
    (IntegerMatrix(((-1,),)), 2),
    (ROTATION4, 4),
    (UNIPOTENT, 1),
])
def test_k_index_examples(A, expected):
    assert k_index(A) == expected


def test_k_index_order3_brute_force():
    """A^3 = I, and the first two powers keep primitive cube roots."""
    assert ORDER3 ** 3 == IntegerMatrix.identity(2)
    for i in (1, 2):
        assert 3 in root_of_unity_orders(charpoly(ORDER3 ** i)).orders


def test_k_index_rejects_non_unimodular():
    with pytest.raises(NotUnimodular):
        k_index(IntegerMatrix(((2, 0), (0, 1))))


def has_proper_root(A):
    return root_of_unity_orders(charpoly(A)).has_proper()


@given(unimodular_matrices(max_dim=4))
def test_k_index_minimal(A):
    k = k_index(A)
    assert not has_proper_root(A ** k)
    for i in range(1, k):
        assert has_proper_root(A ** i)


@given(unimodular_matrices(max_dim=4), unimodular_matrices(max_dim=4))
def test_k_index_similarity_and_transpose_invariant(A, P):
    assert k_index(A.T) == k_index(A)
    if P.dim == A.dim:
        assert k_index(P @ A @ unimodular_inverse(P)) == k_index(A)


def test_block_with_many_orders():
    # companion matrices of Phi_5 and Phi_12 share dimension 4
    phi5 = IntegerMatrix(((0, 0, 0, -1), (1, 0, 0, -1), (0, 1, 0, -1), (0, 0, 1, -1)))
    phi12 = IntegerMatrix(((0, 0, 0, -1), (1, 0, 0, 0), (0, 1, 0, 1), (0, 0, 1, 0)))
    assert charpoly(phi5) == cyclotomic(5)
    assert charpoly(phi12) == cyclotomic(12)
    assert k_index(phi5) == 5 and k_index(phi12) == 12
    for A, k in ((phi5, 5), (phi12, 12)):
        assert A ** k == IntegerMatrix.identity(4)
        assert all(A ** i != IntegerMatrix.identity(4) for i in range(1, k))
