import pytest

from moricone import BasePointError, DimensionMismatch, MonomialSystem, SYSTEMS, base_points, coordinate_points, \
    evaluate, generic_image_dimension, image_dimension, jacobian, normalize_point, sample_points, vanishes_to_order
from moricone.arith import rank

ALPHA = SYSTEMS["box3.alpha"]
BETA = SYSTEMS["box3.beta"]
PROJECTION = SYSTEMS["box3.projection"]

P = (1, 0, 0, 0)
Q = (0, 0, 0, 1)


def test_builtin_systems():
    assert ALPHA.degree == 2 and ALPHA.target_dim == 7
    assert BETA.degree == 3 and BETA.target_dim == 11
    assert PROJECTION.target_dim == 1
    assert ALPHA.monomials[0] == (1, 1, 0, 0)


@pytest.mark.parametrize("kwargs", [
    dict(source_dim=0, monomials=[(1,)]),
    dict(source_dim=1, monomials=[]),
    dict(source_dim=1, monomials=[(2, 0), (1, 0)]),
    dict(source_dim=1, monomials=[(1, 1), (1, 1)]),
    dict(source_dim=1, monomials=[(3, -1)]),
])
def test_system_validation(kwargs):
    with pytest.raises(ValueError):
        MonomialSystem(**kwargs)


def test_system_wrong_length():
    with pytest.raises(DimensionMismatch):
        MonomialSystem(2, [(1, 1)])


def test_normalize_point():
    assert normalize_point([0, -2, 4]) == (0, 1, -2)
    assert normalize_point(["1/2", "1/3"]) == (3, 2)

    with pytest.raises(ValueError):
        normalize_point([0, 0])


def test_evaluate():
    assert evaluate(ALPHA, [1, 1, 1, 1]) == (1,) * 8
    assert evaluate(ALPHA, P) is None
    assert evaluate(BETA, Q) is None
    assert evaluate(PROJECTION, [7, 2, 3, 9]) == (2, 3)

    with pytest.raises(ValueError):
        evaluate(ALPHA, [0, 0, 0, 0])

    with pytest.raises(DimensionMismatch):
        evaluate(ALPHA, [1, 1, 1])


@pytest.mark.parametrize("system", [ALPHA, BETA])
def test_evaluate_is_projective(system):
    for point in sample_points(system, 10, seed=7):
        scaled = [-3 * x for x in point]
        halved = [f"{x}/2" for x in point]
        assert evaluate(system, scaled) == evaluate(system, point)
        assert evaluate(system, halved) == evaluate(system, point)


@pytest.mark.parametrize("system", [ALPHA, BETA, PROJECTION])
def test_base_points(system):
    assert base_points(system, coordinate_points(3)) == [P, Q]


def test_jacobian():
    m = jacobian(ALPHA, [1, 1, 1, 1])
    assert m.rows == 8 and m.cols == 4
    assert m.row(0) == (1, 1, 0, 0)
    assert m.row(3) == (0, 2, 0, 0)
    assert rank(m) == 4


@pytest.mark.parametrize(("system", "dimension"), [(ALPHA, 3), (BETA, 3), (PROJECTION, 1)])
def test_image_dimension(system, dimension):
    assert image_dimension(system, [1, 2, 3, 5]) == dimension
    assert generic_image_dimension(system) == dimension

    for point in sample_points(system):
        assert image_dimension(system, point) == dimension


def test_image_dimension_of_a_point():
    assert image_dimension(MonomialSystem(1, [(2, 0)]), [1, 1]) == 0


def test_image_dimension_base_point():
    with pytest.raises(BasePointError):
        image_dimension(ALPHA, P)


def test_vanishes_to_order():
    assert vanishes_to_order(BETA, P, 2)
    assert vanishes_to_order(BETA, Q, 2)
    assert not vanishes_to_order(BETA, P, 3)

    assert vanishes_to_order(ALPHA, P, 1)
    assert not vanishes_to_order(ALPHA, P, 2)

    assert vanishes_to_order(ALPHA, [1, 1, 1, 1], 0)
    assert not vanishes_to_order(ALPHA, [1, 1, 1, 1], 1)


@pytest.mark.parametrize("system", [ALPHA, BETA])
def test_vanishing_is_monotone(system):
    for point in (P, Q, (0, 1, 0, 0)):
        orders = [vanishes_to_order(system, point, k) for k in range(4)]
        assert orders == sorted(orders, reverse=True)


def test_sample_points():
    points = sample_points(ALPHA, 5, seed=3)

    assert len(points) == 5
    assert points == sample_points(ALPHA, 5, seed=3)
    assert all(1 <= x <= 100 for point in points for x in point)
