import pytest

from model.exactlinalg import (DenseMatrix, charpoly, corank, determinant, inverse, left_nullspace,
                               maximal_minors, minors, nullspace_basis, rank, rref, solve,
                               symbolic_determinant)
from model.polyring import RATIONALS, FieldSpec, GradedRingSpec, parse_polynomial

F7 = FieldSpec.prime(7)


def matrix(rows, field=RATIONALS):
    return DenseMatrix.from_rows(field, rows)


def test_rank_of_specialized_twisted_cubic_matrix():
    # M_1 at T = (1,0,0,0)
    assert rank(matrix([[0, 0, 0], [1, 0, 0]])) == 1
    assert corank(matrix([[0, 0, 0], [1, 0, 0]])) == 1


def test_rank_depends_on_the_field():
    M = [[1, 2], [3, 6 + 7]]
    assert rank(matrix(M)) == 2
    assert rank(matrix(M, F7)) == 1


def test_rank_of_empty_matrices():
    assert rank(DenseMatrix.zeros(RATIONALS, 0, 3)) == 0
    assert corank(DenseMatrix.zeros(RATIONALS, 3, 0)) == 3


def test_rref_pivots_are_deterministic():
    R, pivots = rref(matrix([[0, 2, 4], [0, 1, 2], [1, 0, 1]]))
    assert pivots == (0, 1)
    assert R[0] == [1, 0, 1]
    assert R[1] == [0, 1, 2]


def test_nullspace_vectors_are_annihilated():
    M = matrix([[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 1, 1]])
    basis = nullspace_basis(M)
    assert len(basis) == M.cols - rank(M)
    for v in basis:
        assert not any(M.apply(v))


def test_left_nullspace():
    M = matrix([[1, 1], [2, 2], [0, 1]])
    (w,) = left_nullspace(M)
    assert not any(M.transpose().apply(w))


def test_solve_particular_and_inconsistent():
    M = matrix([[1, 1, 0], [0, 0, 1]])
    x = solve(M, [3, 5])
    assert M.apply(x) == (3, 5)
    assert x[1] == 0
    assert solve(matrix([[1, 1], [1, 1]]), [1, 2]) is None


def test_determinant_and_inverse():
    M = matrix([[2, 1], [5, 3]])
    assert determinant(M) == 1
    assert inverse(M).matmul(M) == DenseMatrix.identity(RATIONALS, 2)
    with pytest.raises(ValueError):
        determinant(matrix([[1, 2, 3]]))


def test_inverse_of_singular_matrix():
    with pytest.raises(ArithmeticError):
        inverse(matrix([[1, 2], [2, 4]]))


def test_charpoly():
    assert charpoly(matrix([[0, 1], [1, 0]])) == [1, 0, -1]


def test_maximal_minors_of_twisted_cubic_matrix():
    ring = GradedRingSpec((("T1", "T2", "T3", "T4"),), RATIONALS)
    P = lambda t: parse_polynomial(t, ring)
    M = [[P("-T2"), P("-T3"), P("-T4")], [P("T1"), P("T2"), P("T3")]]
    found = {m.monic() for m in maximal_minors(M)}
    expected = {P("T1*T3 - T2^2"), P("T1*T4 - T2*T3"), P("T2*T4 - T3^2")}
    assert found == expected


def test_minors_count_and_range():
    ring = GradedRingSpec((("x", "y"),), RATIONALS)
    x = parse_polynomial("x", ring)
    M = [[x, x, x], [x, x, x]]
    assert len(minors(M, 1)) == 6
    with pytest.raises(ValueError):
        minors(M, 3)


def test_symbolic_determinant_beyond_cofactor_size():
    ring = GradedRingSpec((("x", "y"),), RATIONALS)
    P = lambda t: parse_polynomial(t, ring)
    zero = P("0")
    n = 5
    rows = [[P("x") if i == j else (P("y") if j == i + 1 else zero) for j in range(n)]
            for i in range(n)]
    assert symbolic_determinant(rows) == P("x^5")
    rows[n - 1][0] = P("y")
    assert symbolic_determinant(rows) == P("x^5 + y^5")
