"""Root-of-unity eigenvalues via cyclotomic divisibility."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from math import lcm

from sympy import divisors, totient

from .errors import NotUnimodular
from .exact import IntegerMatrix, IntegerPolynomial, charpoly, determinant


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntegerPolynomial:
    """Phi_n, obtained by dividing x^n - 1 by Phi_d for every proper divisor d."""
    if n < 1:
        raise ValueError("cyclotomic polynomials are indexed by n >= 1")
    p = IntegerPolynomial((-1,) + (0,) * (n - 1) + (1,))
    for d in divisors(n)[:-1]:
        p, r = p.divmod_monic(cyclotomic(d))
        assert r.is_zero()
    return p


def candidate_orders(m: int) -> list[int]:
    """Every n with phi(n) <= m.

    phi(n) >= sqrt(n/2) bounds the search by n <= 2 m^2.
    """
    return [n for n in range(1, 2 * m * m + 1) if totient(n) <= m]


@dataclass(frozen=True)
class RootOfUnitySpectrum:
    """Orders n of primitive n-th roots of unity among the roots, with multiplicities."""

    multiplicities: tuple[tuple[int, int], ...]

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(n for n, _ in self.multiplicities)

    def multiplicity(self, n: int) -> int:
        return dict(self.multiplicities).get(n, 0)

    def has_proper(self) -> bool:
        """True when some root of unity other than 1 is present."""
        return any(n > 1 for n in self.orders)

    def __bool__(self) -> bool:
        return bool(self.multiplicities)


def root_of_unity_orders(p: IntegerPolynomial) -> RootOfUnitySpectrum:
    if not p.is_monic() or p.degree < 1:
        raise ValueError("expected a monic polynomial of degree >= 1")
    found = []
    for n in candidate_orders(p.degree):
        phi = cyclotomic(n)
        mult = 0
        q = p
        while q.degree >= phi.degree:
            quot, rem = q.divmod_monic(phi)
            if not rem.is_zero():
                break
            mult += 1
            q = quot
        if mult:
            found.append((n, mult))
    return RootOfUnitySpectrum(tuple(found))


def k_index(A: IntegerMatrix) -> int:
    """Smallest i >= 1 such that A^i has no root-of-unity eigenvalue other than 1."""
    if abs(determinant(A)) != 1:
        raise NotUnimodular(f"k-index needs a unimodular matrix, got {A}")
    return reduce(lcm, root_of_unity_orders(charpoly(A)).orders, 1)
