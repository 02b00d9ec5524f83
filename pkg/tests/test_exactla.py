import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pglcent.cyclofield import CycNum
from pglcent.exactla import (
    LinearSpace,
    Matrix,
    SingularMatrixError,
    diag,
    elementary,
    identity,
    mat_det,
    mat_inv,
    mat_kernel,
    mat_mul,
    mat_rank,
    vec,
)

W = CycNum.root(3)
SYM2 = [[1, 1, 1], [2, 3, 4], [1, 2, 4]]


def laplace_det(rows):
    """Independent oracle: recursive cofactor expansion along the first row."""
    if not rows:
        return 1
    total = 0
    for j, a in enumerate(rows[0]):
        if a:
            minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
            total += (-1) ** j * a * laplace_det(minor)
    return total


def adjugate_inverse(rows):
    """Independent oracle: inverse = adj / det, over Fractions."""
    n = len(rows)
    d = Fraction(laplace_det(rows))
    cof = [
        [
            (-1) ** (i + j) * laplace_det([r[:j] + r[j + 1 :] for k, r in enumerate(rows) if k != i])
            for j in range(n)
        ]
        for i in range(n)
    ]
    return [[cof[j][i] / d for j in range(n)] for i in range(n)]


def test_mul_by_identity():
    A = diag([W, W * W, 1], 3)
    assert mat_mul(A, identity(3, 3)) == A


def test_mul_cyclic_permutation_hand_substitution():
    P = Matrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]], 3)
    A = diag([W, W * W, 1], 3)
    # (PA)_ij = P_ik A_kj: row 1 picks row 2 of A, and so on
    assert P @ A == Matrix([[0, W * W, 0], [0, 0, 1], [W, 0, 0]], 3)


def test_sym2_times_adjugate_inverse_is_identity():
    oracle = adjugate_inverse(SYM2)
    assert Matrix(SYM2, 3) @ Matrix(oracle, 3) == identity(3, 3)
    assert mat_inv(Matrix(SYM2, 3)) == Matrix(oracle, 3)


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        mat_mul(identity(2, 3), identity(3, 3))


def test_det_examples():
    assert mat_det(diag([W, W * W, 1], 3)).is_one()
    assert laplace_det(SYM2) == 1
    assert mat_det(Matrix(SYM2, 3)) == 1
    N = Matrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]], 3)
    assert mat_det(N).is_zero()


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_det_against_laplace_oracle(n):
    rng = random.Random(n)
    for _ in range(5):
        rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        assert mat_det(Matrix(rows, 3)) == laplace_det(rows)


def test_bareiss_path_with_cyclotomic_entries():
    rng = random.Random(7)
    rows = [[W ** rng.randrange(3) * rng.randint(-2, 2) for _ in range(5)] for _ in range(5)]
    # Leibniz formula as oracle
    expected = CycNum.zero(3)
    for p in permutations(range(5)):
        sign = 1
        for i in range(5):
            for j in range(i + 1, 5):
                if p[i] > p[j]:
                    sign = -sign
        term = CycNum.one(3)
        for i in range(5):
            term = term * rows[i][p[i]]
        expected = expected + term * sign
    assert mat_det(Matrix(rows, 3)) == expected


def test_kernel_examples():
    zero = [[CycNum.zero(3)] * 9 for _ in range(9)]
    assert len(mat_kernel(zero)) == 9
    assert mat_kernel(identity(9, 3)) == []


def test_kernel_basis_is_canonical():
    M = Matrix([[1, 2, 0, 3], [0, 0, 1, 4]], 3)
    basis = mat_kernel(M)
    assert [[str(x) for x in v] for v in basis] == [["-2", "1", "0", "0"], ["-3", "0", "-4", "1"]]


def test_rank_and_inverse_examples():
    assert mat_rank(identity(3, 3)) == 3
    assert mat_inv(diag([W, W * W, 1], 3)) == diag([W * W, W, 1], 3)
    units = [elementary(3, 0, 1, 3), elementary(3, 1, 2, 3), elementary(3, 2, 0, 3)]
    assert mat_rank([vec(E) for E in units]) == 3


def test_inverse_of_singular():
    with pytest.raises(SingularMatrixError):
        mat_inv(Matrix([[1, 1], [2, 2]], 2))


def test_linear_space_rejects_dependent_basis():
    E = elementary(3, 0, 1, 3)
    with pytest.raises(ValueError):
        LinearSpace(3, 3, [E, E.scale(2)])


entry = st.one_of(
    st.integers(-3, 3).map(lambda k: CycNum.rational(3, k)),
    st.tuples(st.integers(-2, 2), st.integers(0, 2)).map(lambda t: CycNum.root(3, t[1]) * t[0]),
)


def square(n):
    return st.lists(st.lists(entry, min_size=n, max_size=n), min_size=n, max_size=n).map(
        lambda rows: Matrix(rows, 3)
    )


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(square(n), square(n))))
def test_det_multiplicative(pair):
    A, B = pair
    assert mat_det(A @ B) == mat_det(A) * mat_det(B)


@settings(max_examples=60, deadline=None)
@given(
    st.tuples(st.integers(1, 5), st.integers(1, 6)).flatmap(
        lambda s: st.lists(
            st.lists(entry, min_size=s[1], max_size=s[1]), min_size=s[0], max_size=s[0]
        )
    )
)
def test_kernel_correct_and_rank_nullity(rows):
    basis = mat_kernel(rows)
    for v in basis:
        for r in rows:
            acc = CycNum.zero(3)
            for a, b in zip(r, v):
                acc = acc + a * b
            assert acc.is_zero()
    assert len(basis) + mat_rank(rows) == len(rows[0])


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(square))
def test_inverse_round_trip(A):
    if mat_det(A).is_zero():
        with pytest.raises(SingularMatrixError):
            mat_inv(A)
    else:
        assert mat_inv(A) @ A == identity(A.n, 3)
