"""Built-in models.

- `projective_space`: ℙⁿ, Picard rank one.
- `blowup_pn_two_points`: the blow-up of ℙⁿ at two points p, q.
- `complete_collineations_3` / `complete_quadrics_3`: the spaces of complete
  collineations of ℙ³ and complete quadrics of ℙ³, as divisor side data.

The chambers of the two rank three spaces of complete objects are read off
the cross-section of their effective cone spanned by E₁, E₂ and E₃. The
decomposition is not face to face: H lies on the facet ⟨E₁, D₂⟩ of the
chamber ⟨E₁, D₂, E₂⟩ and D₃ on its facet ⟨D₂, E₃⟩.

Every model is also shipped as a JSON file in the ``moricone/data`` directory.

Attributes:
    ZOO (Dict[str, Callable[[], VarietyModel]]): Model constructors by name.
    TWIN_PAIRS (Dict[Tuple[str, str], Callable[[], TwinPair]]): Constructors of
        the registered pairs by (ambient name, sub name).
"""

from functools import partial
from typing import Callable, Dict, Sequence, Tuple

from .arith import RatMatrix
from .cone import Cone, from_generators
from .models import Chamber, ChamberFan, ClassVector, Lattice, LatticeMap, Pairing, TwinPair, VarietyModel

__all__ = ["projective_space", "blowup_pn_two_points", "linear_section_twin",
           "complete_collineations_3", "complete_quadrics_3", "collineations_quadrics_pair",
           "ZOO", "TWIN_PAIRS"]


def _spanner(lattice: Lattice, classes: Dict[str, ClassVector]) -> Callable[..., Cone]:
    """Create a function building cones from labels of basis vectors and named classes."""

    def span(*labels: str) -> Cone:
        vectors = []
        for label in labels:
            x = classes[label] if label in classes else lattice.basis_vector(label)
            vectors.append(x.coords)

        return from_generators(lattice.rank, vectors)

    return span


def projective_space(n: int) -> VarietyModel:
    """Model of ℙⁿ.

    Raises:
        ValueError: If n < 1.
    """
    if n < 1:
        raise ValueError(f"projective space needs n >= 1, got {n}")

    name = f"projective-{n}"
    divisors = Lattice(f"N^1({name})", ("H",))
    curves = Lattice(f"N_1({name})", ("h",))
    ray = from_generators(1, [[1]])

    return VarietyModel(name, divisors, ray, ray, ray,
                        curve_lattice=curves,
                        pairing=Pairing(divisors, curves, RatMatrix.identity(1)),
                        ne=ray,
                        mcd=ChamberFan(ray, (Chamber(f"P^{n}", ray),), divisors))


def blowup_pn_two_points(n: int) -> VarietyModel:
    """Model of the blow-up of ℙⁿ at two points p and q.

    The movable cone and the Mori chamber decomposition are only recorded
    for n ≥ 3.

    Raises:
        ValueError: If n < 2.
    """
    if n < 2:
        raise ValueError(f"blow-up of P^n at two points needs n >= 2, got {n}")

    name = f"blowup-p{n}-2pts"
    divisors = Lattice(f"N^1({name})", ("H", "E_p", "E_q"))
    curves = Lattice(f"N_1({name})", ("h", "e_p", "e_q"))
    pairing = Pairing(divisors, curves, RatMatrix.diagonal([1, -1, -1]))

    H, E_p, E_q = (divisors.basis_vector(label) for label in divisors.basis_labels)
    h, e_p, e_q = (curves.basis_vector(label) for label in curves.basis_labels)

    divisor_classes = {"H_p": H - E_p, "H_q": H - E_q, "H_{p,q}": H - E_p - E_q}
    curve_classes = {"L": h - e_p - e_q}
    span = _spanner(divisors, divisor_classes)

    eff = span("E_p", "E_q", "H_{p,q}")
    nef = span("H", "H_p", "H_q")
    ne = _spanner(curves, curve_classes)("e_p", "e_q", "L")

    mov = None
    mcd = None
    if n >= 3:
        mov = span("H", "H_p", "H_q", "H_{p,q}")
        chambers = (
            Chamber("X", span("H", "H_p", "H_q"), f"the blow-up of P^{n} at p and q"),
            Chamber("X'", span("H_p", "H_q", "H_{p,q}"),
                    f"small modification, a (P^1 x P^1)-bundle over P^{n - 2}"),
            Chamber(f"Bl_p P^{n}", span("H", "H_p", "E_q"), "contraction of E_q"),
            Chamber(f"Bl_q P^{n}", span("H", "H_q", "E_p"), "contraction of E_p"),
            Chamber(f"P^{n}", span("H", "E_p", "E_q"), "contraction of E_p and E_q"),
        )
        mcd = ChamberFan(eff, chambers, divisors)

    return VarietyModel(name, divisors, eff, nef, mov,
                        curve_lattice=curves,
                        pairing=pairing,
                        named_classes={**divisor_classes, **curve_classes},
                        ne=ne,
                        mcd=mcd)


def linear_section_twin(n: int, k: int) -> TwinPair:
    """Strict transform of a linear ℙᵏ ⊂ ℙⁿ through p and q inside the blow-up.

    The pullback is the identity in the shared basis (H, E_p, E_q).

    Raises:
        ValueError: Unless n > k > 1.
    """
    if not n > k > 1:
        raise ValueError(f"linear section needs n > k > 1, got n={n}, k={k}")

    ambient = blowup_pn_two_points(n)
    sub = blowup_pn_two_points(k)
    return TwinPair(ambient, sub, LatticeMap.identity_on_labels(ambient.divisor_lattice, sub.divisor_lattice))


def _complete_space(name: str, suffix: str, description: str) -> VarietyModel:
    def label(base: str) -> str:
        return base + suffix

    divisors = Lattice(f"N^1({name})", (label("H"), label("E_1"), label("E_2")))
    H, E_1, E_2 = (divisors.basis_vector(basis_label) for basis_label in divisors.basis_labels)

    classes = {
        label("D_2"): 2 * H - E_1,
        label("D_3"): 3 * H - 2 * E_1 - E_2,
        label("D_M"): 6 * H - 3 * E_1 - 2 * E_2,
        label("E_3"): 4 * H - 3 * E_1 - 2 * E_2,
    }
    span = _spanner(divisors, classes)

    eff = span(label("E_1"), label("E_2"), label("E_3"))

    def chamber(labels: Sequence[str], chamber_description: str = None) -> Chamber:
        labels = [label(base) for base in labels]
        return Chamber("<" + ",".join(labels) + ">", span(*labels), chamber_description)

    chambers = (
        chamber(("H", "D_2", "D_3"), description),
        chamber(("H", "D_3", "D_M"), "small modification"),
        chamber(("E_1", "H", "D_M")),
        chamber(("E_3", "D_3", "D_M")),
        chamber(("E_1", "E_3", "D_M")),
        chamber(("E_1", "D_2", "E_2")),
        chamber(("E_2", "D_2", "E_3")),
    )

    return VarietyModel(name, divisors, eff,
                        nef=span(label("H"), label("D_2"), label("D_3")),
                        mov=span(label("H"), label("D_2"), label("D_3"), label("D_M")),
                        named_classes=classes,
                        mcd=ChamberFan(eff, chambers, divisors))


def complete_collineations_3() -> VarietyModel:
    """Divisor side model of the space of complete collineations of ℙ³, basis (H, E₁, E₂)."""
    return _complete_space("collineations-3", "", "complete collineations")


def complete_quadrics_3() -> VarietyModel:
    """Divisor side model of the space of complete quadrics of ℙ³, basis (H⁺, E₁⁺, E₂⁺)."""
    return _complete_space("quadrics-3", "^+", "complete quadrics")


def collineations_quadrics_pair() -> TwinPair:
    """Complete quadrics embedded in complete collineations.

    The pullback replaces H, E₁, E₂ by H⁺, E₁⁺, E₂⁺.
    """
    ambient = complete_collineations_3()
    sub = complete_quadrics_3()
    return TwinPair(ambient, sub, LatticeMap.substitution(ambient.divisor_lattice, sub.divisor_lattice))


ZOO: Dict[str, Callable[[], VarietyModel]] = {
    **{f"projective-{n}": partial(projective_space, n) for n in range(1, 5)},
    **{f"blowup-p{n}-2pts": partial(blowup_pn_two_points, n) for n in range(2, 5)},
    "collineations-3": complete_collineations_3,
    "quadrics-3": complete_quadrics_3,
}

TWIN_PAIRS: Dict[Tuple[str, str], Callable[[], TwinPair]] = {
    ("blowup-p3-2pts", "blowup-p2-2pts"): partial(linear_section_twin, 3, 2),
    ("blowup-p4-2pts", "blowup-p3-2pts"): partial(linear_section_twin, 4, 3),
    ("collineations-3", "quadrics-3"): collineations_quadrics_pair,
}
