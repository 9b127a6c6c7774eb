import random

import pytest

from moricone import Chamber, ChamberFan, CheckStatus, DimensionMismatch, FanError, LatticeMismatch, \
    MembershipStatus, blowup_pn_two_points, class_of, complete_collineations_3, from_generators, interior_point, \
    locate, lookup, verify_fan, walls

SEED = 20240615
CASES = 100

QUADRANT = from_generators(2, [[1, 0], [0, 1]])
LEFT = Chamber("left", from_generators(2, [[0, 1], [1, 1]]))
RIGHT = Chamber("right", from_generators(2, [[1, 0], [1, 1]]))

FAN_MODELS = [blowup_pn_two_points(3), blowup_pn_two_points(4), complete_collineations_3()]


def positive_combination(rng, rays):
    weights = [rng.randint(1, 9) for _ in rays]
    return [sum(w * ray[i] for w, ray in zip(weights, rays)) for i in range(len(rays[0]))]


@pytest.fixture()
def blowup():
    return blowup_pn_two_points(3)


def test_verify_split_quadrant():
    report = verify_fan(ChamberFan(QUADRANT, (LEFT, RIGHT)))

    assert report.passed
    assert report.details == []


@pytest.mark.parametrize("model", FAN_MODELS)
def test_verify_model_fans(model):
    assert verify_fan(model.mcd).passed


def test_verify_is_order_independent(blowup):
    f = blowup.mcd
    shuffled = ChamberFan(f.support, tuple(reversed(f.chambers)), f.lattice)
    assert verify_fan(shuffled).passed


def test_verify_missing_chamber(blowup):
    f = blowup.mcd
    report = verify_fan(ChamberFan(f.support, tuple(c for c in f.chambers if c.label != "X'"), f.lattice))

    assert not report.passed
    assert report.containment == CheckStatus.PASS
    assert report.disjointness == CheckStatus.PASS
    assert report.walls == CheckStatus.FAIL
    assert report.coverage == CheckStatus.SKIPPED
    assert any("chamber X " in detail for detail in report.details)


def test_verify_overlap(blowup):
    f = blowup.mcd
    copy = Chamber("Y", f.get("X").cone)
    report = verify_fan(ChamberFan(f.support, f.chambers + (copy,), f.lattice))

    assert report.disjointness == CheckStatus.FAIL
    assert "chambers X and Y overlap" in report.details


def test_verify_containment():
    outside = Chamber("outside", from_generators(2, [[-1, 1], [0, 1]]))
    report = verify_fan(ChamberFan(QUADRANT, (LEFT, RIGHT, outside)))

    assert report.containment == CheckStatus.FAIL
    assert report.coverage == CheckStatus.SKIPPED

    flat = Chamber("flat", from_generators(2, [[1, 1]]))
    assert verify_fan(ChamberFan(QUADRANT, (LEFT, RIGHT, flat))).containment == CheckStatus.FAIL


def test_verify_errors():
    with pytest.raises(FanError):
        verify_fan(ChamberFan(QUADRANT, ()))

    half_plane = from_generators(2, [[1, 0], [-1, 0], [0, 1]])
    with pytest.raises(FanError):
        verify_fan(ChamberFan(half_plane, (LEFT,)))


def test_locate_interior(blowup):
    locations = locate(blowup.mcd, class_of(blowup, "3H - 2E_p - 2E_q"))

    assert len(locations) == 1
    assert locations[0].label == "X'"
    assert locations[0].membership.status == MembershipStatus.INTERIOR


def test_locate_wall(blowup):
    locations = locate(blowup.mcd, class_of(blowup, "2H - E_p - E_q"))

    assert [location.label for location in locations] == ["X", "X'"]
    assert all(location.membership.status == MembershipStatus.BOUNDARY for location in locations)


def test_locate_non_face_to_face():
    m = complete_collineations_3()
    locations = locate(m.mcd, lookup(m, "H"))

    assert {location.label for location in locations} == {"<H,D_2,D_3>", "<H,D_3,D_M>", "<E_1,H,D_M>",
                                                          "<E_1,D_2,E_2>"}


def test_locate_outside_and_errors(blowup):
    assert locate(blowup.mcd, [-1, 0, 0]) == []

    with pytest.raises(DimensionMismatch):
        locate(blowup.mcd, [1, 0])

    with pytest.raises(LatticeMismatch):
        locate(blowup.mcd, lookup(blowup, "h"))


def test_walls_split_quadrant():
    result = walls(ChamberFan(QUADRANT, (RIGHT, LEFT)))

    assert len(result) == 1
    assert result[0].cone == from_generators(2, [[1, 1]])
    assert result[0].labels == ("left", "right")


def test_walls(blowup):
    result = walls(blowup.mcd)

    assert len(result) == 5
    flop = [wall for wall in result if wall.labels == ("X", "X'")]
    assert len(flop) == 1
    assert flop[0].cone == from_generators(3, [class_of(blowup, "H_p").coords, class_of(blowup, "H_q").coords])


def test_walls_of_invalid_fan():
    with pytest.raises(FanError):
        walls(ChamberFan(QUADRANT, (LEFT,)))


def test_verify_missing_corner_chamber(blowup):
    f = blowup.mcd
    report = verify_fan(ChamberFan(f.support, tuple(c for c in f.chambers if c.label != "P^3"), f.lattice))

    assert not report.passed
    assert report.containment == CheckStatus.PASS
    assert report.disjointness == CheckStatus.PASS
    assert report.walls == CheckStatus.FAIL
    assert report.coverage == CheckStatus.SKIPPED


@pytest.mark.parametrize("model", FAN_MODELS)
def test_support_interior_is_covered(model):
    rng = random.Random(SEED)
    rays = model.mcd.support.generators

    for _ in range(CASES):
        x = positive_combination(rng, rays)
        assert locate(model.mcd, x), x


@pytest.mark.parametrize("model", FAN_MODELS)
def test_chamber_interiors_are_located_once(model):
    rng = random.Random(SEED)

    for chamber in model.mcd.chambers:
        points = [interior_point(chamber.cone)]
        points += [positive_combination(rng, chamber.cone.generators) for _ in range(10)]

        for x in points:
            locations = locate(model.mcd, x)
            assert [location.label for location in locations] == [chamber.label], x
            assert locations[0].membership.status == MembershipStatus.INTERIOR


def test_walls_of_collineations():
    m = complete_collineations_3()
    result = [wall for wall in walls(m.mcd) if wall.labels == ("<H,D_2,D_3>", "<H,D_3,D_M>")]

    assert len(result) == 1
    assert result[0].cone == from_generators(3, [lookup(m, "H").coords, lookup(m, "D_3").coords])
