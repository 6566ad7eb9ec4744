"""Seeded random unimodular matrices and commuting families."""

from __future__ import annotations

import random

from .action import MatrixAction
from .exact import IntegerMatrix, determinant, unimodular_inverse

# Small blocks with every kind of spectrum a toral automorphism can show.
BLOCKS = [
    ((1,),),
    ((-1,),),
    ((1, 1), (0, 1)),
    ((0, -1), (1, -1)),
    ((0, -1), (1, 0)),
    ((1, -1), (1, 0)),
    ((2, 1), (1, 1)),
    ((-1, 1), (0, -1)),
]


def random_unimodular(rng: random.Random, dim: int, entry_bound: int = 3,
                      steps: int = 12) -> IntegerMatrix:
    """Product of random elementary matrices, rejecting steps that exceed the bound."""
    rows = [[int(i == j) for j in range(dim)] for i in range(dim)]
    for _ in range(steps):
        op = rng.randrange(3) if dim > 1 else 2
        new = [r[:] for r in rows]
        if op == 0:
            i, j = rng.sample(range(dim), 2)
            s = rng.choice((-1, 1))
            new[i] = [a + s * b for a, b in zip(new[i], new[j])]
        elif op == 1:
            i, j = rng.sample(range(dim), 2)
            new[i], new[j] = new[j], new[i]
        else:
            i = rng.randrange(dim)
            new[i] = [-a for a in new[i]]
        if max(abs(a) for r in new for a in r) <= entry_bound:
            rows = new
    return IntegerMatrix(tuple(map(tuple, rows)))


def block_diagonal(blocks) -> IntegerMatrix:
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, r in enumerate(b):
            for j, a in enumerate(r):
                out[off + i][off + j] = a
        off += len(b)
    return IntegerMatrix(tuple(map(tuple, out)))


def _pick_blocks(rng: random.Random, dim: int):
    blocks, size = [], 0
    while size < dim:
        choices = [b for b in BLOCKS if len(b) <= dim - size]
        b = rng.choice(choices)
        blocks.append(b)
        size += len(b)
    return blocks


def random_commuting_family(rng: random.Random, max_dim: int = 4,
                            max_generators: int = 3) -> list[IntegerMatrix]:
    """Conjugates P diag(B_1^e_1, ..., B_k^e_k) P^-1 sharing one block structure.

    Powers of the blocks of a fixed block-diagonal matrix commute, and the
    shared conjugation keeps them commuting while hiding the structure.
    """
    dim = rng.randint(1, max_dim)
    blocks = _pick_blocks(rng, dim)
    P = random_unimodular(rng, dim, entry_bound=2, steps=6)
    Pinv = unimodular_inverse(P)
    family = []
    for _ in range(rng.randint(1, max_generators)):
        powered = [IntegerMatrix(b) ** rng.randint(-2, 2) for b in blocks]
        family.append(P @ block_diagonal([M.rows for M in powered]) @ Pinv)
    return family


def random_polynomial_family(rng: random.Random, max_dim: int = 4,
                             max_generators: int = 3,
                             unimodular: bool = False) -> list[IntegerMatrix]:
    """Integer polynomials in one random unimodular matrix; invertible members only.

    The polynomials are of the form 1 + (x - 1) q(x) half of the time, so that
    a fixed vector of the base matrix stays fixed and the oracles are not
    vacuous.  With ``unimodular`` only determinant +-1 members are kept, and
    plain powers of the base matrix are mixed in so the family fills up.
    """
    dim = rng.randint(1, max_dim)
    blocks = _pick_blocks(rng, dim)
    P = random_unimodular(rng, dim, entry_bound=2, steps=6)
    U = P @ block_diagonal(blocks) @ unimodular_inverse(P)
    eye = IntegerMatrix.identity(dim)
    family = []
    target = rng.randint(1, max_generators)
    for _ in range(50 * target):
        if len(family) == target:
            break
        if unimodular and rng.random() < 0.3:
            family.append(U ** rng.randint(-2, 2))
            continue
        q = [rng.randint(-2, 2) for _ in range(rng.randint(1, 3))]
        acc = IntegerMatrix.zeros(dim, dim)
        power = eye
        for a in q:
            acc = acc + power.scale(a)
            power = power @ U
        M = eye + (U - eye) @ acc if rng.random() < 0.5 else acc
        det = determinant(M)
        if det != 0 and (not unimodular or abs(det) == 1):
            family.append(M)
    return family or [eye]


def random_commuting_action(rng: random.Random, max_dim: int = 4,
                            max_generators: int = 3) -> MatrixAction:
    return MatrixAction(tuple(random_commuting_family(rng, max_dim, max_generators)))
