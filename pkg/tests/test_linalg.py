import itertools
from fractions import Fraction

import pytest

from covariants.linalg import Matrix, kernel_basis, minor, rank, solve
from covariants.polynomial import Polynomial

from conftest import random_frac


def permutation_expansion_det(rows):
    """Independent determinant oracle: the full signed permutation sum."""
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        inv = sum(
            1
            for i in range(n)
            for j in range(i + 1, n)
            if perm[i] > perm[j]
        )
        term = 1 if inv % 2 == 0 else -1
        for i in range(n):
            term = term * rows[i][perm[i]]
        total = total + term
    return total


def row_reduce_rank(rows):
    """Independent rank oracle: plain Fraction Gaussian elimination."""
    work = [[Fraction(x) for x in row] for row in rows]
    rank_count = 0
    ncols = len(work[0]) if work else 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][c]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        work[r] = [x / work[r][c] for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        r += 1
        rank_count += 1
    return rank_count


def test_identity_determinant():
    assert Matrix.identity(3).det() == 1


def test_symbolic_2x2_determinant():
    n = 4
    x = [Polynomial.variable(n, i) for i in range(n)]
    m = Matrix([[x[0], x[1]], [x[2], x[3]]])
    assert m.det() == x[0] * x[3] - x[1] * x[2]


def test_determinant_against_permutation_oracle(rng):
    for _ in range(10):
        rows = [[random_frac(rng) for _ in range(4)] for _ in range(4)]
        assert Matrix(rows).det() == permutation_expansion_det(rows)


def test_symbolic_determinant_evaluates_to_numeric(rng):
    n = 9
    entries = [[Polynomial.variable(n, 3 * i + j) for j in range(3)] for i in range(3)]
    sym = Matrix(entries).det()
    for _ in range(5):
        point = [random_frac(rng) for _ in range(n)]
        numeric = [[point[3 * i + j] for j in range(3)] for i in range(3)]
        assert sym.evaluate(point) == permutation_expansion_det(numeric)


def test_determinant_alternating_symbolic():
    n = 9
    rows = [[Polynomial.variable(n, 3 * i + j) for j in range(3)] for i in range(3)]
    base = Matrix(rows).det()
    swapped = Matrix([rows[1], rows[0], rows[2]]).det()
    assert swapped == -base


def test_non_square_determinant_raises():
    with pytest.raises(ValueError):
        Matrix([[1, 2, 3], [4, 5, 6]]).det()


def test_minor_is_entry():
    n, l = 3, 2
    s_vars = n * l
    entries = [
        [Polynomial.variable(s_vars, j * n + i) for j in range(l)] for i in range(n)
    ]
    m = Matrix(entries)
    assert minor(m, [2], [1]) == entries[2][1]
    assert minor(m, [1, 2], [0, 1]) == entries[1][0] * entries[2][1] - entries[1][1] * entries[2][0]


def test_minor_validation():
    m = Matrix.identity(3)
    with pytest.raises(ValueError):
        minor(m, [0, 1], [0])
    with pytest.raises(ValueError):
        minor(m, [1, 0], [0, 1])
    with pytest.raises(ValueError):
        minor(m, [0, 5], [0, 1])


def test_kernel_of_identity_empty():
    assert kernel_basis([[1, 0], [0, 1]]) == []


def test_kernel_single_row():
    basis = kernel_basis([[1, 1]])
    assert len(basis) == 1
    v = basis[0]
    assert v[0] * 1 + v[1] * 1 == 0 and any(v)


def test_rank_plus_nullity(rng):
    for _ in range(10):
        rows = [[rng.randint(-4, 4) for _ in range(7)] for _ in range(4)]
        r = rank(rows)
        assert r == row_reduce_rank(rows)
        assert r + len(kernel_basis(rows, 7)) == 7
        for v in kernel_basis(rows, 7):
            for row in rows:
                assert sum(a * b for a, b in zip(row, v)) == 0


def test_solve_and_inverse(rng):
    for _ in range(10):
        rows = [[random_frac(rng) for _ in range(3)] for _ in range(3)]
        m = Matrix(rows)
        try:
            inv = m.inverse()
        except ValueError:
            continue
        assert m * inv == Matrix.identity(3)
        rhs = [random_frac(rng) for _ in range(3)]
        x = solve(rows, rhs)
        assert x is not None
        for row, b in zip(rows, rhs):
            assert sum(a * v for a, v in zip(row, x)) == b
    assert solve([[1, 1], [1, 1]], [0, 1]) is None


def test_matrix_json_round_trip():
    m = Matrix([[Fraction(1, 2), 3], [0, -2]])
    assert Matrix.from_json(m.to_json()) == m
