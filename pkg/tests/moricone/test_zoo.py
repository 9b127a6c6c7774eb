import pytest

from moricone import TWIN_PAIRS, ZOO, blowup_pn_two_points, check_model, complete_collineations_3, \
    complete_quadrics_3, dual_under_pairing, equals, extremal_rays, from_generators, intersection_number, \
    is_subcone, join, linear_section_twin, lookup, projective_space

BOX_PAIRING = {
    ("H", "h"): 1, ("H", "e_p"): 0, ("H", "e_q"): 0,
    ("E_p", "h"): 0, ("E_p", "e_p"): -1, ("E_p", "e_q"): 0,
    ("E_q", "h"): 0, ("E_q", "e_p"): 0, ("E_q", "e_q"): -1,
}


@pytest.mark.parametrize("name", sorted(ZOO))
def test_zoo_models_are_consistent(name):
    m = ZOO[name]()
    assert m.name == name
    assert check_model(m) == []


@pytest.mark.parametrize("names", sorted(TWIN_PAIRS))
def test_twin_pairs_registry(names):
    pair = TWIN_PAIRS[names]()
    assert (pair.ambient.name, pair.sub.name) == names
    assert pair.pullback.is_isomorphism


def test_projective_space():
    m = projective_space(3)

    ray = from_generators(1, [[1]])
    assert m.eff == m.nef == m.mov == m.ne == ray
    assert intersection_number(m, lookup(m, "H"), lookup(m, "h")) == 1
    assert len(m.mcd) == 1

    with pytest.raises(ValueError):
        projective_space(0)


@pytest.mark.parametrize(("d", "c"), sorted(BOX_PAIRING))
def test_blowup_pairing_table(d, c):
    m = blowup_pn_two_points(3)
    assert intersection_number(m, lookup(m, d), lookup(m, c)) == BOX_PAIRING[d, c]


def test_blowup_cones():
    m = blowup_pn_two_points(3)

    assert extremal_rays(m.ne) == [(0, 0, 1), (0, 1, 0), (1, -1, -1)]
    assert extremal_rays(m.eff) == [(0, 0, 1), (0, 1, 0), (1, -1, -1)]
    assert extremal_rays(m.nef) == [(1, -1, 0), (1, 0, -1), (1, 0, 0)]
    assert equals(dual_under_pairing(m.ne, m.pairing.matrix), m.nef)

    assert all(g in m.mov for g in m.nef.generators)
    assert all(g in m.eff for g in m.mov.generators)
    assert is_subcone(m.nef, m.mov) and is_subcone(m.mov, m.eff)


def test_blowup_chambers():
    m = blowup_pn_two_points(3)

    assert m.mcd.labels == ("X", "X'", "Bl_p P^3", "Bl_q P^3", "P^3")
    assert m.mcd.get("X").cone == m.nef
    assert m.mcd.get("Bl_q P^3").description == "contraction of E_p"


def test_blowup_surface_has_no_movable_data():
    m = blowup_pn_two_points(2)

    assert m.mov is None
    assert m.mcd is None

    with pytest.raises(ValueError):
        blowup_pn_two_points(1)


def test_blowup_is_independent_of_n():
    three, four = blowup_pn_two_points(3), blowup_pn_two_points(4)

    for key in ("eff", "nef", "mov", "ne"):
        assert three.cone(key) == four.cone(key)

    assert [c.cone for c in three.mcd.chambers] == [c.cone for c in four.mcd.chambers]


@pytest.mark.parametrize(("n", "k"), [(4, 1), (3, 3), (2, 3)])
def test_linear_section_twin_preconditions(n, k):
    with pytest.raises(ValueError):
        linear_section_twin(n, k)


def test_collineations():
    m = complete_collineations_3()

    assert extremal_rays(m.eff) == [(0, 0, 1), (0, 1, 0), (4, -3, -2)]
    assert extremal_rays(m.mov) == [(1, 0, 0), (2, -1, 0), (3, -2, -1), (6, -3, -2)]
    assert m.curve_lattice is None and m.pairing is None
    assert len(m.mcd) == 7

    chambers = m.mcd
    assert equals(m.mov, join(chambers.get("<H,D_2,D_3>").cone, chambers.get("<H,D_3,D_M>").cone))


def test_quadrics_relabel_collineations():
    collineations, quadrics = complete_collineations_3(), complete_quadrics_3()

    assert quadrics.divisor_lattice.basis_labels == ("H^+", "E_1^+", "E_2^+")
    assert lookup(quadrics, "D_M^+").coords == lookup(collineations, "D_M").coords
    assert quadrics.eff == collineations.eff
