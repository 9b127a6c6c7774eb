import random
from fractions import Fraction

import pytest

import fm_oracle
from moricone import Cone, DegeneratePairing, DimensionMismatch, LinealityError, Membership, MembershipStatus, \
    contains, dual, dual_under_pairing, equals, extremal_rays, faces, from_generators, from_inequalities, \
    interior_point, intersect, is_subcone, join, linear_image
from moricone.arith import RatMatrix, scale

SEED = 20240611
CASES = 120


def random_generators(rng: random.Random, dim: int):
    count = rng.randint(1, dim + 2)
    return [[rng.randint(-3, 3) for _ in range(dim)] for _ in range(count)]


def random_cones(seed: int, count: int = CASES):
    rng = random.Random(seed)
    for _ in range(count):
        dim = rng.randint(1, 4)
        yield rng, dim, random_generators(rng, dim)


def test_from_generators_quadrant():
    c = from_generators(2, [[1, 0], [0, 1], [1, 1], [2, 0]])

    assert c.generators == ((0, 1), (1, 0))
    assert c.facets == ((0, 1), (1, 0))
    assert c.lineality == ()
    assert c.equations == ()
    assert c.dimension == 2
    assert c.is_pointed and c.is_full_dimensional
    assert str(c) == "⟨(0, 1), (1, 0)⟩"


def test_from_generators_is_canonical():
    a = from_generators(3, [[0, 2, 0], ["1/2", 0, 0], [0, 0, 3]])
    b = from_generators(3, [[0, 0, 1], [1, 0, 0], [0, 1, 0], [1, 1, 1]])
    assert a == b


def test_from_generators_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        from_generators(3, [[1, 0]])


def test_zero_cone():
    c = from_generators(3, [])

    assert c.is_zero
    assert c.generators == ()
    assert c.facets == ()
    assert c.dimension == 0
    assert contains(c, [0, 0, 0]).status == MembershipStatus.INTERIOR
    assert not contains(c, [1, 0, 0])


def test_whole_space():
    c = from_inequalities(2, [])

    assert c.generators == ()
    assert c.lineality == ((1, 0), (0, 1))
    assert not c.is_pointed
    assert c.lineality_dim == 2
    assert contains(c, [-5, 7]).status == MembershipStatus.INTERIOR

    with pytest.raises(LinealityError) as exc_info:
        extremal_rays(c)
    assert exc_info.value.lineality_dim == 2


def test_half_plane():
    c = from_generators(2, [[1, 0], [-1, 0], [0, 1]])

    assert c.lineality == ((1, 0),)
    assert c.generators == ((0, 1),)
    assert c.facets == ((0, 1),)
    assert str(c) == "⟨(0, 1), ±(1, 0)⟩"
    assert equals(c, from_inequalities(2, [[0, 1]]))


def test_lower_dimensional_cone():
    c = from_generators(3, [[1, 0, 0], [0, 1, 0]])

    assert c.equations == ((0, 0, 1),)
    assert c.dimension == 2
    assert not c.is_full_dimensional
    assert c.facets == ((0, 1, 0), (1, 0, 0))

    assert contains(c, [1, 1, 0]).status == MembershipStatus.INTERIOR
    assert contains(c, [1, 0, 0]).status == MembershipStatus.BOUNDARY
    assert contains(c, [1, 1, 1]).status == MembershipStatus.OUTSIDE


def test_from_inequalities():
    c = from_inequalities(3, [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]])
    assert c == from_generators(3, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])

    with pytest.raises(DimensionMismatch):
        from_inequalities(3, [[1, 0]])


def test_contains():
    c = from_generators(2, [[1, 0], [0, 1]])

    assert contains(c, [1, 1]) == Membership(MembershipStatus.INTERIOR)
    assert contains(c, [1, 0]) == Membership(MembershipStatus.BOUNDARY, (0,))
    assert contains(c, [0, 0]) == Membership(MembershipStatus.BOUNDARY, (0, 1))
    assert contains(c, [-1, 0]) == Membership(MembershipStatus.OUTSIDE)
    assert str(contains(c, [-1, 0])) == "outside"

    assert [1, "1/2"] in c
    assert [-1, 0] not in c

    with pytest.raises(DimensionMismatch):
        contains(c, [1, 0, 0])


def test_dual():
    c = from_generators(2, [[1, 0], [1, 1]])
    assert dual(c) == from_generators(2, [[0, 1], [1, -1]])

    line = from_generators(2, [[1, 0], [-1, 0]])
    assert dual(line) == from_generators(2, [[0, 1], [0, -1]])

    assert dual(from_generators(2, [])) == from_inequalities(2, [])


def test_dual_under_pairing_blowup():
    ne = from_generators(3, [[0, 1, 0], [0, 0, 1], [1, -1, -1]])
    nef = dual_under_pairing(ne, RatMatrix.diagonal([1, -1, -1]))

    assert extremal_rays(nef) == [(1, -1, 0), (1, 0, -1), (1, 0, 0)]


def test_dual_under_pairing_errors():
    c = from_generators(2, [[1, 0]])

    with pytest.raises(DegeneratePairing):
        dual_under_pairing(c, RatMatrix.from_rows([[1, 0]]))

    with pytest.raises(DegeneratePairing):
        dual_under_pairing(c, RatMatrix.from_rows([[1, 2], [2, 4]]))

    with pytest.raises(DimensionMismatch):
        dual_under_pairing(c, RatMatrix.identity(3))


def test_intersect_and_join():
    a = from_generators(2, [[1, 0], [1, 1]])
    b = from_generators(2, [[0, 1], [1, 1]])

    meet = intersect(a, b)
    assert meet.generators == ((1, 1),)
    assert meet.dimension == 1

    assert join(a, b) == from_generators(2, [[1, 0], [0, 1]])

    with pytest.raises(DimensionMismatch):
        join(a, from_generators(3, []))


def test_linear_image():
    c = from_generators(2, [[1, 0], [0, 1]])
    projection = RatMatrix.from_rows([[1, 1]])

    assert linear_image(c, projection) == from_generators(1, [[1]])

    with pytest.raises(DimensionMismatch):
        linear_image(c, RatMatrix.identity(3))


def test_is_subcone_and_equals():
    quadrant = from_generators(2, [[1, 0], [0, 1]])
    wedge = from_generators(2, [[1, 1], [1, 2]])

    assert is_subcone(wedge, quadrant)
    assert not is_subcone(quadrant, wedge)
    assert equals(quadrant, from_inequalities(2, [[1, 0], [0, 1]]))
    assert not equals(quadrant, wedge)


def test_faces():
    c = from_generators(2, [[1, 0], [0, 1]])
    assert faces(c) == [from_generators(2, [[1, 0]]), from_generators(2, [[0, 1]])]


def test_interior_point():
    c = from_generators(3, [[1, 0, 0], [0, 1, 0], [1, 1, 1]])
    assert interior_point(c) == (2, 2, 1)
    assert contains(c, interior_point(c)).status == MembershipStatus.INTERIOR
    assert interior_point(from_generators(2, [])) == (0, 0)


def test_transform_roundtrip():
    from moricone.transform import MODEL_KEY_CASE, build_from_raw, convert_to_raw

    c = from_generators(3, [[1, 0, 0], [0, 1, 0]])
    raw = convert_to_raw(c, key_case=MODEL_KEY_CASE)

    assert raw == {
        "generators": [["0", "1", "0"], ["1", "0", "0"]],
        "facets": [["0", "1", "0"], ["1", "0", "0"]],
        "lineality": [],
        "equations": [["0", "0", "1"]],
    }
    assert build_from_raw(Cone, {**raw, "ambient_dim": 3}, key_case=MODEL_KEY_CASE) == c


def test_membership_agrees_with_fourier_motzkin():
    for rng, dim, generators in random_cones(SEED):
        c = from_generators(dim, generators)
        for _ in range(3):
            x = [rng.randint(-4, 4) for _ in range(dim)]
            assert bool(contains(c, x)) == fm_oracle.in_cone(generators, x), (generators, x)

        for g in generators:
            assert contains(c, g)


def test_generators_are_extremal():
    for _, dim, generators in random_cones(SEED + 1):
        c = from_generators(dim, generators)
        for i, ray in enumerate(c.generators):
            others = [g for j, g in enumerate(c.generators) if j != i]
            others.extend(c.lineality)
            others.extend(tuple(-x for x in line) for line in c.lineality)
            assert not fm_oracle.in_cone(others, ray), (generators, ray)


def test_biduality():
    for _, dim, generators in random_cones(SEED + 2):
        c = from_generators(dim, generators)
        assert equals(dual(dual(c)), c)
        assert dual(dual(c)) == c


def test_dual_of_join_is_intersection_of_duals():
    rng = random.Random(SEED + 3)
    for _ in range(CASES):
        dim = rng.randint(1, 4)
        a = from_generators(dim, random_generators(rng, dim))
        b = from_generators(dim, random_generators(rng, dim))
        assert equals(dual(join(a, b)), intersect(dual(a), dual(b)))


def test_scaling_and_order_invariance():
    for rng, dim, generators in random_cones(SEED + 4):
        scaled = [scale(Fraction(rng.randint(1, 9), rng.randint(1, 9)), g) for g in generators]
        rng.shuffle(scaled)
        assert from_generators(dim, scaled) == from_generators(dim, generators)
