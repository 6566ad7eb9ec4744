"""Named matrices, actions and system pairs used by the tests and scripts."""

from __future__ import annotations

from .action import MatrixAction
from .exact import IntegerMatrix

CAT = IntegerMatrix(((2, 1), (1, 1)))
UNIPOTENT = IntegerMatrix(((1, 1), (0, 1)))
ORDER3 = IntegerMatrix(((0, -1), (1, -1)))
ROTATION4 = IntegerMatrix(((0, -1), (1, 0)))
MINUS_ONE = IntegerMatrix(((-1,),))
ONE = IntegerMatrix(((1,),))


def cat_action() -> MatrixAction:
    return MatrixAction((CAT,))


def unipotent_action() -> MatrixAction:
    return MatrixAction((UNIPOTENT,))


def order3_action() -> MatrixAction:
    return MatrixAction((ORDER3,))


def identity_action(m: int, r: int = 1) -> MatrixAction:
    return MatrixAction.trivial(m, r)


def flip_action() -> MatrixAction:
    """z -> -z on the circle."""
    return MatrixAction((MINUS_ONE,))


def example1_pair() -> tuple[MatrixAction, MatrixAction]:
    """Identity on the circle mapped to the flip: neither ergodic, yet rigid."""
    return identity_action(1), flip_action()


def unipotent_to_identity() -> tuple[MatrixAction, MatrixAction]:
    return unipotent_action(), identity_action(1)


def order3_to_unipotent() -> tuple[MatrixAction, MatrixAction]:
    return order3_action(), unipotent_action()


FACTOR_THETA = IntegerMatrix(((0, 1),))


def orbit_fixture_actions() -> dict[str, MatrixAction]:
    """Five actions covering ergodic, unipotent, finite order, rank 2 and mixed blocks."""
    cat_plus_flip = IntegerMatrix(((2, 1, 0), (1, 1, 0), (0, 0, -1)))
    return {
        "cat": cat_action(),
        "unipotent": unipotent_action(),
        "order3": order3_action(),
        "unipotent_and_minus_identity": MatrixAction((UNIPOTENT, IntegerMatrix(((-1, 0), (0, -1))))),
        "cat_plus_flip": MatrixAction((cat_plus_flip,)),
    }


def example2_generators(n: int = 3) -> list[IntegerMatrix]:
    """Generators of the affine group {(A b; 0 1)} acting on T^n, n >= 3.

    GL(n-1, Z) is generated by the elementary transvection, the quarter
    rotation and a reflection; translations by the unit vectors complete it.
    The family does not commute, so it is outside the abelian decision.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    k = n - 1

    def embed(A, b):
        rows = [list(A[i]) + [b[i]] for i in range(k)]
        rows.append([0] * k + [1])
        return IntegerMatrix(tuple(map(tuple, rows)))

    eye = [[int(i == j) for j in range(k)] for i in range(k)]
    zero = [0] * k
    transvection = [row[:] for row in eye]
    transvection[0][1] = 1
    cycle = [[int(j == (i + 1) % k) for j in range(k)] for i in range(k)]
    if k == 2:
        cycle = [[0, -1], [1, 0]]
    reflection = [row[:] for row in eye]
    reflection[0][0] = -1
    gens = [embed(transvection, zero), embed(cycle, zero), embed(reflection, zero)]
    for i in range(k):
        gens.append(embed(eye, [int(j == i) for j in range(k)]))
    return gens
