from __future__ import annotations

import random

import pytest
from hypothesis import given

from fermdagger import linalg as la
from fermdagger.errors import NotInvertible
from fermdagger.exactnum import ONE, ZERO, Scalar
from conftest import seeds


def rand_square(rng, n, height=3):
    return la.mat([[rng.randint(-height, height) for _ in range(n)] for _ in range(n)])


@pytest.mark.parametrize("m,r", [
    ([[1, 2], [2, 4]], 1),
    ([[1, 0], [0, 1]], 2),
    ([[0, 0], [0, 0]], 0),
    ([[1, 2, 3], [4, 5, 6], [7, 8, 9]], 2),
])
def test_rank(m, r):
    assert la.rank(la.mat(m)) == r


def test_singular_inverse_raises():
    with pytest.raises(NotInvertible):
        la.inverse(la.mat([[1, 2], [2, 4]]))


def test_empty_matrices():
    assert la.matmul((), (), cols=0) == ()
    assert la.inverse(()) == ()


@given(seeds)
def test_inverse_round_trip(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 5)
    A = rand_square(rng, n)
    if la.rank(A) < n:
        assert not la.is_invertible(A)
        return
    assert la.matmul(A, la.inverse(A)) == la.identity(n)


@given(seeds)
def test_permutation_inverse_is_transpose(seed):
    rng = random.Random(seed)
    perm = list(range(rng.randint(1, 8)))
    rng.shuffle(perm)
    P = la.permutation_matrix(perm)
    assert la.inverse(P) == la.transpose(P)


@given(seeds)
def test_solve(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 4)
    A = rand_square(rng, n)
    x = la.mat([[rng.randint(-3, 3)] for _ in range(n)])
    b = la.matmul(A, x)
    sol = la.solve(A, b)
    assert sol is not None and la.matmul(A, sol) == b


def test_solve_inconsistent():
    assert la.solve(la.mat([[1, 1], [1, 1]]), la.mat([[1], [2]])) is None


def test_kron_identity():
    assert la.kron(la.identity(2), la.identity(3)) == la.identity(6)


def test_adjoint():
    A = la.mat([[Scalar(1, 2), ZERO], [ONE, Scalar(0, -1)]])
    assert la.adjoint(A) == la.mat([[Scalar(1, -2), ONE], [ZERO, Scalar(0, 1)]])
