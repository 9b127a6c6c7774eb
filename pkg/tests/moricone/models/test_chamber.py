import pytest

from moricone import Chamber, ChamberFan, DimensionMismatch, FanError, Lattice, from_generators
from moricone.transform import MODEL_KEY_CASE, convert_to_raw

QUADRANT = from_generators(2, [[1, 0], [0, 1]])
LEFT = Chamber("left", from_generators(2, [[0, 1], [1, 1]]), "upper half")
RIGHT = Chamber("right", from_generators(2, [[1, 0], [1, 1]]))


def test_chamber():
    assert str(LEFT) == "left"

    with pytest.raises(FanError):
        Chamber("line", from_generators(2, [[1, 0], [-1, 0]]))


def test_chamber_fan():
    f = ChamberFan(QUADRANT, [LEFT, RIGHT])

    assert isinstance(f.chambers, tuple)
    assert len(f) == 2
    assert f.labels == ("left", "right")
    assert f.get("right") is RIGHT

    with pytest.raises(KeyError):
        f.get("middle")


def test_chamber_fan_validation():
    with pytest.raises(FanError):
        ChamberFan(QUADRANT, (LEFT, Chamber("left", RIGHT.cone)))

    with pytest.raises(DimensionMismatch):
        ChamberFan(QUADRANT, (Chamber("flat", from_generators(3, [[1, 0, 0]])),))

    with pytest.raises(DimensionMismatch):
        ChamberFan(QUADRANT, (LEFT,), Lattice("L", ("a",)))


def test_chamber_fan_to_raw():
    raw = convert_to_raw(ChamberFan(QUADRANT, (LEFT, RIGHT)), key_case=MODEL_KEY_CASE)

    assert raw == {
        "chambers": [
            {"label": "left", "generators": [["0", "1"], ["1", "1"]], "description": "upper half"},
            {"label": "right", "generators": [["1", "0"], ["1", "1"]]},
        ],
    }
