"""Exact Gaussian elimination over Q and F_p."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from altext.fields import PrimeField, QQ
from altext.linsolve import (
    affine_probe,
    all_vectors,
    enumerate_affine,
    invert_matrix,
    invertible_matrices,
    is_invertible,
    matrix_rank,
    solve_linear,
)

F5 = PrimeField(5)

scalars5 = st.integers(min_value=0, max_value=4)


def mat_strategy(rows, cols):
    return st.lists(
        st.tuples(*[scalars5] * cols), min_size=rows, max_size=rows).map(tuple)


@given(mat_strategy(3, 3), st.tuples(*[scalars5] * 3))
@settings(max_examples=60)
def test_solutions_actually_solve(mat, rhs):
    eqs = [(row, r) for row, r in zip(mat, rhs)]
    sol = solve_linear(F5, eqs)
    if sol is None:
        # inconsistent: rank of augmented matrix must exceed rank of mat
        aug = [row + (r,) for row, r in zip(mat, rhs)]
        assert matrix_rank(F5, aug) > matrix_rank(F5, mat)
        return
    for point in enumerate_affine(F5, sol):
        for row, r in eqs:
            acc = 0
            for c, x in zip(row, point):
                acc = (acc + c * x) % 5
            assert acc == r


@given(mat_strategy(3, 3))
@settings(max_examples=60)
def test_solution_count_is_p_pow_nullity(mat):
    eqs = [(row, 0) for row in mat]
    sol = solve_linear(F5, eqs)
    assert sol is not None
    points = list(enumerate_affine(F5, sol))
    assert len(points) == 5 ** sol.nullity
    assert len(set(points)) == len(points)
    assert sol.nullity == 3 - matrix_rank(F5, mat)


def test_inconsistent_system_returns_none():
    eqs = [((1, 1), 0), ((1, 1), 1)]
    assert solve_linear(F5, eqs) is None
    assert solve_linear(QQ, [((Fraction(1),), Fraction(0)),
                             ((Fraction(1),), Fraction(1))]) is None


def test_rational_solve_is_exact():
    # x + y/2 = 1/3, y = 1/7
    eqs = [((Fraction(1), Fraction(1, 2)), Fraction(1, 3)),
           ((Fraction(0), Fraction(1)), Fraction(1, 7))]
    sol = solve_linear(QQ, eqs)
    assert sol is not None and sol.nullity == 0
    assert sol.basepoint == (Fraction(11, 42), Fraction(1, 7))


@given(mat_strategy(3, 3))
@settings(max_examples=60)
def test_invertibility_matches_rank(mat):
    assert is_invertible(F5, mat) == (matrix_rank(F5, mat) == 3)
    if is_invertible(F5, mat):
        inv = invert_matrix(F5, mat)
        prod = tuple(
            tuple(sum(mat[i][k] * inv[k][j] for k in range(3)) % 5
                  for j in range(3)) for i in range(3))
        ident = tuple(tuple(1 if i == j else 0 for j in range(3))
                      for i in range(3))
        assert prod == ident


def test_invertible_matrix_count_gl2_f3():
    f3 = PrimeField(3)
    mats = list(invertible_matrices(f3, 2))
    # |GL_2(F_3)| = (9-1)(9-3)
    assert len(mats) == 48
    assert len(set(mats)) == 48


def test_affine_probe_recovers_affine_map():
    # defect(x) = (x0 + 2 x1 - 1, x2 - 3) over F5
    def defect(x):
        return ((x[0] + 2 * x[1] - 1) % 5, (x[2] - 3) % 5)

    sol = affine_probe(F5, 3, defect)
    assert sol is not None
    assert sol.nullity == 1
    for point in enumerate_affine(F5, sol):
        assert defect(point) == (0, 0)


def test_affine_probe_detects_infeasible():
    assert affine_probe(F5, 2, lambda x: (0, 1)) is None


def test_all_vectors_order():
    vecs = list(all_vectors(PrimeField(3), 2))
    assert vecs[:4] == [(0, 0), (0, 1), (0, 2), (1, 0)]
    assert len(vecs) == 9


def test_singular_matrix_inversion_rejected():
    with pytest.raises(Exception):
        invert_matrix(F5, ((1, 2), (2, 4)))
