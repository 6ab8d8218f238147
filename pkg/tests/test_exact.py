"""Unit tests for the exact integer matrix kernel."""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from localhom.errors import DimensionMismatchError
from localhom.exact import (
    IntegerMatrix,
    clear_denominators,
    determinant,
    kernel_basis_over_rationals,
    multiply,
    rank_over_rationals,
    smith_normal_form,
)

# Boundary of the triangle a-b-c: rows a, b, c; columns ab, ac, bc.
TRIANGLE_D1 = IntegerMatrix(3, 3, [[-1, -1, 0], [1, 0, -1], [0, 1, 1]])


def test_zero_matrix_is_already_normal():
    a = IntegerMatrix.zeros(2, 3)
    res = smith_normal_form(a)
    assert res.d == a
    assert res.u == IntegerMatrix.identity(2)
    assert res.v == IntegerMatrix.identity(3)


def test_rank_one_matrix_with_content_two():
    # [[2,4],[4,8]] has rank 1 and gcd 2: one hand row/column reduction.
    a = IntegerMatrix(2, 2, [[2, 4], [4, 8]])
    res = smith_normal_form(a)
    assert res.diagonal == (2, 0)
    assert res.u @ a @ res.v == res.d


def test_triangle_boundary_diagonal():
    # Hand reduction: connected graph on 3 vertices, rank 2, no torsion.
    res = smith_normal_form(TRIANGLE_D1)
    assert res.diagonal == (1, 1, 0)
    assert res.u @ TRIANGLE_D1 @ res.v == res.d


def test_multiply_by_identity():
    a = IntegerMatrix(2, 3, [[1, -2, 3], [0, 5, 7]])
    assert multiply(IntegerMatrix.identity(2), a) == a
    assert multiply(a, IntegerMatrix.identity(3)) == a


def test_multiply_dimension_mismatch():
    a = IntegerMatrix.zeros(2, 3)
    with pytest.raises(DimensionMismatchError):
        multiply(a, a)


def test_rank_of_diagonal():
    assert rank_over_rationals(IntegerMatrix(2, 2, [[2, 0], [0, 0]])) == 1


def test_kernel_of_triangle_boundary():
    # Solving the 3x3 system by hand gives the alternating 3-cycle.
    basis = kernel_basis_over_rationals(TRIANGLE_D1)
    assert basis == [(1, -1, 1)]


def test_kernel_vectors_are_primitive_and_deterministic():
    a = IntegerMatrix(2, 4, [[2, 4, 6, 0], [0, 2, 2, 2]])
    basis = kernel_basis_over_rationals(a)
    assert basis == kernel_basis_over_rationals(a)
    for vec in basis:
        content = 0
        for x in vec:
            import math

            content = math.gcd(content, x)
        assert content == 1
        assert any(vec)
    for vec in basis:
        assert all(x == 0 for x in (sum(r * x for r, x in zip(row, vec)) for row in a.entries))


def test_clear_denominators():
    assert clear_denominators([Fraction(1, 2), Fraction(1, 3)]) == (3, 2)
    assert clear_denominators([Fraction(2), Fraction(4)]) == (1, 2)


def test_empty_shapes():
    for shape in [(0, 0), (0, 3), (3, 0)]:
        a = IntegerMatrix.zeros(*shape)
        res = smith_normal_form(a)
        assert res.d == a
        assert rank_over_rationals(a) == 0
    assert kernel_basis_over_rationals(IntegerMatrix.zeros(0, 2)) == [(1, 0), (0, 1)]


def test_determinant_matches_cofactor_expansion():
    rng = random.Random(7)

    def brute(a):
        n = a.rows
        if n == 0:
            return 1
        if n == 1:
            return a[0, 0]
        total = 0
        for j in range(n):
            minor = IntegerMatrix(
                n - 1,
                n - 1,
                [
                    [a[i, c] for c in range(n) if c != j]
                    for i in range(1, n)
                ],
            )
            total += (-1) ** j * a[0, j] * brute(minor)
        return total

    for _ in range(50):
        n = rng.randint(1, 4)
        a = IntegerMatrix(
            n, n, [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        )
        assert determinant(a) == brute(a)


def _random_matrix(rng, max_dim=6, bound=5):
    rows = rng.randint(1, max_dim)
    cols = rng.randint(1, max_dim)
    return IntegerMatrix(
        rows,
        cols,
        [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)],
    )


def test_snf_random_properties():
    rng = random.Random(99)
    for _ in range(300):
        a = _random_matrix(rng)
        res = smith_normal_form(a)
        assert res.u @ a @ res.v == res.d
        assert abs(determinant(res.u)) == 1
        assert abs(determinant(res.v)) == 1
        diag = res.diagonal
        assert all(x >= 0 for x in diag)
        nonzero = [x for x in diag if x]
        assert diag[: len(nonzero)] == tuple(nonzero), "zeros must come last"
        for x, y in zip(nonzero, nonzero[1:]):
            assert y % x == 0
        assert rank_over_rationals(a) == len(nonzero)
        t_nonzero = [x for x in smith_normal_form(a.transpose()).diagonal if x]
        assert t_nonzero == nonzero


def test_first_two_invariant_factors_match_minor_gcds():
    # d1 = gcd of entries and d1*d2 = gcd of all 2x2 minors.
    import math

    rng = random.Random(3)
    for _ in range(40):
        a = IntegerMatrix(
            4, 4, [[rng.randint(-5, 5) for _ in range(4)] for _ in range(4)]
        )
        diag = smith_normal_form(a).diagonal
        g1 = 0
        for row in a.entries:
            for x in row:
                g1 = math.gcd(g1, x)
        assert diag[0] == g1
        g2 = 0
        for r1, r2 in combinations(range(4), 2):
            for c1, c2 in combinations(range(4), 2):
                minor = a[r1, c1] * a[r2, c2] - a[r1, c2] * a[r2, c1]
                g2 = math.gcd(g2, minor)
        assert diag[0] * diag[1] == g2


def test_matrix_immutability_and_validation():
    a = IntegerMatrix.identity(2)
    with pytest.raises(AttributeError):
        a.rows = 3
    with pytest.raises(ValueError):
        IntegerMatrix(2, 2, [[1, 2], [3]])
    with pytest.raises(DimensionMismatchError):
        determinant(IntegerMatrix.zeros(2, 3))
