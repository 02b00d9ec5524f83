"""Seeded random generator sets shared by the property and acceptance tests."""

import random

from pglcent.cyclofield import CycNum
from pglcent.exactla import Matrix, diag, identity, mat_det
from pglcent.twistcent import GeneratorSet


def random_invertible_int(rng, n, order, lo=-2, hi=2):
    while True:
        A = Matrix([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)], order)
        if mat_det(A):
            return A


def random_monomial(rng, n, order):
    """Permutation times a diagonal of small rationals and roots of unity."""
    perm = list(range(n))
    rng.shuffle(perm)
    entries = []
    for _ in range(n):
        if rng.random() < 0.5:
            entries.append(CycNum.root(order, rng.randrange(order)))
        else:
            entries.append(CycNum.rational(order, rng.choice([-2, -1, 1, 2, 3])))
    z = CycNum.zero(order)
    return Matrix([[entries[i] if perm[i] == j else z for j in range(n)] for i in range(n)], order)


def random_unimodular(rng, n, order, steps=3):
    """Small-entry integer matrix with det 1, built from elementary shears."""
    g = identity(n, order)
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        t = rng.choice([-1, 1])
        rows = [list(r) for r in g.rows]
        rows[i] = [a + t * b for a, b in zip(rows[i], rows[j])]
        g = Matrix(rows, order)
    return g


def random_generator_set(rng):
    """A mix of dense integer, monomial and diagonal root-of-unity generators."""
    n = rng.choice([2, 3, 3, 3])
    order = n
    k = rng.choice([1, 2, 2])
    kind = rng.choice(["int", "monomial", "mixed"])
    gens = []
    for _ in range(k):
        if kind == "int" or (kind == "mixed" and rng.random() < 0.5):
            gens.append(random_invertible_int(rng, n, order))
        else:
            gens.append(random_monomial(rng, n, order))
    return GeneratorSet(tuple(gens), order)


def random_scalar(rng, order):
    if rng.random() < 0.5:
        return CycNum.root(order, rng.randrange(order)) * rng.choice([1, -1, 2, 3])
    return CycNum.rational(order, rng.choice([-3, -2, -1, 2, 3, 5]))


__all__ = [
    "random_invertible_int",
    "random_monomial",
    "random_unimodular",
    "random_generator_set",
    "random_scalar",
    "diag",
]
