import random
from fractions import Fraction

import pytest

from moricone import DimensionMismatch, SingularMatrix
from moricone.arith import RatMatrix, add, determinant, dot, format_rational, inverse, is_zero, mat_vec, nullspace, \
    parse_rational, primitive, rank, rref, scale, solve, to_rational, vector

SEED = 20240612
CASES = 150


def random_matrices(seed: int, count: int = CASES):
    """Matrices up to 6x6 of every rank, built as products of two random factors."""
    rng = random.Random(seed)
    for _ in range(count):
        rows, cols, inner = rng.randint(1, 6), rng.randint(1, 6), rng.randint(1, 6)
        left = RatMatrix.from_rows([[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(inner)]
                                    for _ in range(rows)])
        right = RatMatrix.from_rows([[rng.randint(-3, 3) for _ in range(cols)] for _ in range(inner)])
        yield rng, left @ right


def test_parse_rational():
    assert parse_rational("3/6") == Fraction(1, 2)
    assert parse_rational(" -2 ") == -2
    assert parse_rational("+7/1") == 7

    for bad in ("1.5", "1/0", "", "a", "1/-2", "1e3"):
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_format_rational():
    assert format_rational(Fraction(-3, 6)) == "-1/2"
    assert format_rational(Fraction(4)) == "4"
    assert format_rational(0) == "0"


def test_to_rational():
    assert to_rational(3) == Fraction(3)
    assert to_rational("2/3") == Fraction(2, 3)

    with pytest.raises(TypeError):
        to_rational(1.5)

    with pytest.raises(TypeError):
        to_rational(True)


def test_vector_helpers():
    a = vector([1, "1/2", 0])
    b = vector([2, 2, 2])

    assert dot(a, b) == 3
    assert add(a, b) == (3, Fraction(5, 2), 2)
    assert scale("2", a) == (2, 1, 0)
    assert is_zero(vector([0, "0/5"]))
    assert not is_zero(a)

    with pytest.raises(DimensionMismatch):
        dot(a, vector([1, 2]))


def test_matrix_construction():
    m = RatMatrix.from_rows([[1, 2], [3, 4]])
    assert m.rows == 2 and m.cols == 2
    assert m[1, 0] == 3
    assert m.row(0) == (1, 2)
    assert m.column(1) == (2, 4)
    assert m.transpose().to_rows() == [(1, 3), (2, 4)]
    assert RatMatrix.identity(2) @ m == m
    assert str(m) == "[[1, 2], [3, 4]]"

    with pytest.raises(DimensionMismatch):
        RatMatrix.from_rows([[1, 2], [3]])

    with pytest.raises(DimensionMismatch):
        m @ RatMatrix.identity(3)

    assert RatMatrix.zeros(2, 3).entries == (0,) * 6
    assert RatMatrix.from_rows([], cols=3).rows == 0


def test_mat_vec():
    m = RatMatrix.from_rows([[1, 0, 2], [0, -1, 0]])
    assert mat_vec(m, vector([1, 1, 1])) == (3, -1)


def test_rank():
    assert rank(RatMatrix.from_rows([[1, 2], [2, 4]])) == 1
    assert rank(RatMatrix.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, 1]])) == 2
    assert rank(RatMatrix.identity(4)) == 4
    assert rank(RatMatrix.from_rows([["1/2", "1/3"], [3, 2]])) == 1
    assert rank(RatMatrix.from_rows([], cols=2)) == 0


def test_solve():
    assert solve(RatMatrix.from_rows([[1, 1], [1, -1]]), [3, 1]) == (2, 1)
    assert solve(RatMatrix.from_rows([[2, 0], [0, 3]]), [1, 1]) == (Fraction(1, 2), Fraction(1, 3))

    # free variables are zero
    assert solve(RatMatrix.from_rows([[1, 1]]), [2]) == (2, 0)

    # inconsistency is a value, not an error
    assert solve(RatMatrix.from_rows([[1, 1], [2, 2]]), [1, 3]) is None

    with pytest.raises(DimensionMismatch):
        solve(RatMatrix.identity(2), [1])


def test_primitive():
    assert primitive([2, 4, -6]) == (1, 2, -3)
    assert primitive([Fraction(1, 2), Fraction(1, 3)]) == (3, 2)
    assert primitive([0, -5]) == (0, -1)

    with pytest.raises(ValueError):
        primitive([0, 0])


def test_determinant():
    assert determinant(RatMatrix.from_rows([[2, 1], [1, 1]])) == 1
    assert determinant(RatMatrix.from_rows([[0, 1], [1, 0]])) == -1
    assert determinant(RatMatrix.from_rows([["1/2", 0], [0, 4]])) == 2
    assert determinant(RatMatrix.from_rows([[2, 0, 1], [1, 3, 2], [1, 1, 2]])) == 6
    assert determinant(RatMatrix.from_rows([[1, 2], [2, 4]])) == 0
    assert determinant(RatMatrix.diagonal([1, -1, -1])) == 1

    with pytest.raises(DimensionMismatch):
        determinant(RatMatrix.from_rows([[1, 2]]))


def test_inverse():
    m = RatMatrix.from_rows([[2, 1], [1, 1]])
    assert inverse(m) == RatMatrix.from_rows([[1, -1], [-1, 2]])
    assert inverse(m) @ m == RatMatrix.identity(2)

    with pytest.raises(SingularMatrix):
        inverse(RatMatrix.from_rows([[1, 2], [2, 4]]))


def test_rref():
    reduced, pivots = rref(RatMatrix.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, 1]]))
    assert reduced == RatMatrix.from_rows([[1, 0, 1], [0, 1, 1]])
    assert pivots == [0, 1]


def test_nullspace():
    assert nullspace(RatMatrix.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, 1]])) == [(-1, -1, 1)]
    assert nullspace(RatMatrix.identity(3)) == []

    m = RatMatrix.from_rows([[3, 2, 1]])
    basis = nullspace(m)
    assert len(basis) == 2
    assert all(is_zero(mat_vec(m, v)) for v in basis)


def test_rank_is_invariant_under_permutations_and_transposition():
    for rng, m in random_matrices(SEED):
        expected = rank(m)
        assert expected <= min(m.rows, m.cols)
        assert rank(m.transpose()) == expected

        rows = m.to_rows()
        rng.shuffle(rows)
        assert rank(RatMatrix.from_rows(rows, cols=m.cols)) == expected

        columns = m.to_columns()
        rng.shuffle(columns)
        assert rank(RatMatrix.from_rows(columns, cols=m.rows).transpose()) == expected


def test_solve_is_exact_on_consistent_systems():
    for rng, m in random_matrices(SEED + 1):
        x = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(m.cols)]
        b = mat_vec(m, x)

        solution = solve(m, b)
        assert solution is not None
        assert mat_vec(m, solution) == b


def test_solve_detects_inconsistent_systems():
    for _, m in random_matrices(SEED + 2):
        if rank(m) == m.rows:
            continue

        # a vector orthogonal to the column space is outside it
        y = nullspace(m.transpose())[0]
        assert solve(m, y) is None


def test_primitive_is_scale_invariant():
    rng = random.Random(SEED + 3)
    for _ in range(CASES):
        v = [Fraction(rng.randint(-6, 6), rng.randint(1, 5)) for _ in range(rng.randint(1, 5))]
        if is_zero(v):
            continue

        t = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        assert primitive(scale(t, v)) == primitive(v)
