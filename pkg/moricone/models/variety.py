"""Variety models.

A `VarietyModel` bundles the Néron–Severi data of a variety: the divisor and
curve lattices, the intersection pairing, named classes and the cones of
birational geometry. The functions in this module answer questions about a
single model. Comparing two models is done by `moricone.lefschetz`.

Model file schema (keys are kept as they are)::

    {
        "name": "...",
        "divisor_basis": ["H", "E_p", "E_q"],
        "curve_basis": ["h", "e_p", "e_q"],            (optional)
        "pairing": [["1", "0", "0"], ...],             (optional, needs curve_basis)
        "classes": {"H_p": ["1", "-1", "0"], ...},     (divisor classes)
        "curve_classes": {"L": ["1", "-1", "-1"]},     (optional)
        "cones": {"eff": {...}, "nef": {...}, "mov": {...}, "ne": {...}},
        "mcd": {"chambers": [{"label": "X", "generators": [...], "description": "..."}]}
    }

Only the "eff" and "nef" cones are required, "ne" needs the curve basis.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from moricone.arith import RatMatrix, primitive
from moricone.cone import Cone, MembershipStatus, contains, dual_under_pairing, equals, is_subcone
from moricone.errors import DimensionMismatch, LatticeMismatch, MissingData, ModelFormatError, UnknownLabel
from moricone.transform import MODEL_KEY_CASE, RawDataType, build_from_raw, map_filter_none, \
    rational_matrix_from_raw, rational_matrix_to_raw, rational_vector_from_raw
from .chamber import Chamber, ChamberFan
from .lattice import ClassVector, Lattice, LatticeMap, Pairing, apply_map, apply_map_to_cone, combine, \
    parse_expression

__all__ = ["VarietyModel", "TwinPair",
           "lookup", "class_of", "ray_label", "intersection_number", "is_ample", "check_model", "transport"]

log = logging.getLogger(__name__)

_MODEL_KEYS = {"name", "divisor_basis", "curve_basis", "pairing", "classes", "curve_classes", "cones", "mcd"}
_CONE_KEYS = ("eff", "nef", "mov", "ne")


def _require(data: RawDataType, key: str, path: str = None) -> Any:
    if not isinstance(data, dict):
        raise ModelFormatError("expected an object", path)

    try:
        return data[key]
    except KeyError:
        raise ModelFormatError(f"missing key {key!r}", path) from None


def _lattice_from_raw(name: str, labels: Any, path: str) -> Lattice:
    if not isinstance(labels, list) or not all(isinstance(label, str) for label in labels):
        raise ModelFormatError("expected a list of labels", path)

    try:
        return Lattice(name, tuple(labels))
    except ValueError as e:
        raise ModelFormatError(str(e), path) from e


def _classes_from_raw(lattice: Lattice, raw: Any, path: str) -> Dict[str, ClassVector]:
    if not isinstance(raw, dict):
        raise ModelFormatError("expected an object mapping labels to coordinates", path)

    classes = {}
    for label, coords in raw.items():
        try:
            classes[label] = ClassVector(lattice, rational_vector_from_raw(coords))
        except DimensionMismatch as e:
            raise ModelFormatError(str(e), f"{path}.{label}") from e

    return classes


def _cone_from_raw(ambient_dim: int, raw: Any, path: str) -> Cone:
    if not isinstance(raw, dict):
        raise ModelFormatError("expected a cone object", path)

    try:
        return build_from_raw(Cone, {**raw, "ambient_dim": ambient_dim}, key_case=MODEL_KEY_CASE)
    except ModelFormatError as e:
        raise ModelFormatError(e.reason, path) from e


@dataclass
class VarietyModel:
    """Néron–Severi data of a variety.

    Attributes:
        name (str): Name of the model
        divisor_lattice (Lattice): N¹(X)
        eff (Cone): Effective cone
        nef (Cone): Nef cone
        mov (Optional[Cone]): Movable cone. Omitted for surfaces.
        curve_lattice (Optional[Lattice]): N₁(X)
        pairing (Optional[Pairing]): Intersection pairing of N¹(X) and N₁(X)
        named_classes (Dict[str, ClassVector]): Named divisor and curve classes
            other than the basis vectors.
        ne (Optional[Cone]): Mori cone of curves, lives in the curve lattice
        mcd (Optional[ChamberFan]): Mori chamber decomposition of the effective cone
    """
    name: str
    divisor_lattice: Lattice
    eff: Cone
    nef: Cone
    mov: Optional[Cone] = None
    curve_lattice: Optional[Lattice] = None
    pairing: Optional[Pairing] = None
    named_classes: Dict[str, ClassVector] = field(default_factory=dict)
    ne: Optional[Cone] = None
    mcd: Optional[ChamberFan] = None

    def __post_init__(self) -> None:
        rank = self.divisor_lattice.rank
        for cone in (self.eff, self.nef, self.mov):
            if cone is not None and cone.ambient_dim != rank:
                raise DimensionMismatch(rank, cone.ambient_dim)

        if self.mcd is not None and self.mcd.support.ambient_dim != rank:
            raise DimensionMismatch(rank, self.mcd.support.ambient_dim)

        if self.ne is not None:
            if self.curve_lattice is None:
                raise MissingData(self.name, "curve lattice")

            if self.ne.ambient_dim != self.curve_lattice.rank:
                raise DimensionMismatch(self.curve_lattice.rank, self.ne.ambient_dim)

        if self.pairing is not None:
            if self.curve_lattice is None:
                raise MissingData(self.name, "curve lattice")

            if self.pairing.divisor_lattice != self.divisor_lattice:
                raise LatticeMismatch(self.divisor_lattice, self.pairing.divisor_lattice)

            if self.pairing.curve_lattice != self.curve_lattice:
                raise LatticeMismatch(self.curve_lattice, self.pairing.curve_lattice)

        basis_labels = set(self.divisor_lattice.basis_labels)
        if self.curve_lattice is not None:
            basis_labels.update(self.curve_lattice.basis_labels)

        for label, x in self.named_classes.items():
            if x.lattice not in (self.divisor_lattice, self.curve_lattice):
                raise LatticeMismatch(self.divisor_lattice, x.lattice)

            if label in basis_labels:
                raise ValueError(f"named class {label!r} shadows a basis label")

    def __str__(self) -> str:
        return self.name

    @property
    def rank(self) -> int:
        """Picard rank."""
        return self.divisor_lattice.rank

    def cone(self, key: str) -> Cone:
        """Get one of the cones "eff", "nef", "mov" or "ne".

        Raises:
            KeyError: For other keys.
            MissingData: If the model doesn't have the cone.
        """
        if key not in _CONE_KEYS:
            raise KeyError(key)

        cone = getattr(self, key)
        if cone is None:
            raise MissingData(self.name, key)

        return cone

    def classes_of(self, lattice: Lattice) -> Dict[str, ClassVector]:
        """Named classes of the given lattice."""
        return {label: x for label, x in self.named_classes.items() if x.lattice == lattice}

    @classmethod
    def __transform_input__(cls, data: RawDataType) -> RawDataType:
        unknown = set(data) - _MODEL_KEYS
        if unknown:
            raise ModelFormatError(f"unknown keys {sorted(unknown)}")

        name = _require(data, "name")
        if not isinstance(name, str):
            raise ModelFormatError("expected a string", "name")

        divisor_lattice = _lattice_from_raw(f"N^1({name})", _require(data, "divisor_basis"), "divisor_basis")
        curve_lattice = None
        if "curve_basis" in data:
            curve_lattice = _lattice_from_raw(f"N_1({name})", data["curve_basis"], "curve_basis")

        pairing = None
        if "pairing" in data:
            if curve_lattice is None:
                raise ModelFormatError("a pairing needs a curve basis", "pairing")

            try:
                pairing = Pairing(divisor_lattice, curve_lattice, rational_matrix_from_raw(data["pairing"]))
            except DimensionMismatch as e:
                raise ModelFormatError(str(e), "pairing") from e

        named_classes = _classes_from_raw(divisor_lattice, data.get("classes", {}), "classes")
        if "curve_classes" in data:
            if curve_lattice is None:
                raise ModelFormatError("curve classes need a curve basis", "curve_classes")

            named_classes.update(_classes_from_raw(curve_lattice, data["curve_classes"], "curve_classes"))

        raw_cones = _require(data, "cones")
        if not isinstance(raw_cones, dict) or set(raw_cones) - set(_CONE_KEYS):
            raise ModelFormatError(f"expected an object with keys from {_CONE_KEYS}", "cones")

        cones: Dict[str, Optional[Cone]] = {}
        for key in _CONE_KEYS:
            if key not in raw_cones:
                cones[key] = None
                continue

            if key == "ne":
                if curve_lattice is None:
                    raise ModelFormatError("the Mori cone needs a curve basis", "cones.ne")
                ambient_dim = curve_lattice.rank
            else:
                ambient_dim = divisor_lattice.rank

            cones[key] = _cone_from_raw(ambient_dim, raw_cones[key], f"cones.{key}")

        for key in ("eff", "nef"):
            if cones[key] is None:
                raise ModelFormatError(f"missing key {key!r}", "cones")

        mcd = None
        if "mcd" in data:
            raw_chambers = _require(data["mcd"], "chambers", "mcd")
            if not isinstance(raw_chambers, list):
                raise ModelFormatError("expected a list of chambers", "mcd.chambers")

            chambers = []
            for i, raw_chamber in enumerate(raw_chambers):
                path = f"mcd.chambers[{i}]"
                if not isinstance(raw_chamber, dict):
                    raise ModelFormatError("expected a chamber object", path)

                cone = _cone_from_raw(divisor_lattice.rank, {"generators": _require(raw_chamber, "generators", path)},
                                      path)
                chambers.append(Chamber(_require(raw_chamber, "label", path), cone, raw_chamber.get("description")))

            mcd = ChamberFan(cones["eff"], tuple(chambers), divisor_lattice)

        return dict(name=name, divisor_lattice=divisor_lattice, curve_lattice=curve_lattice, pairing=pairing,
                    named_classes=named_classes, mcd=mcd, **cones)

    @classmethod
    def __transform_output__(cls, data: RawDataType) -> RawDataType:
        divisor_lattice = data["divisor_lattice"]
        curve_lattice = data["curve_lattice"]

        raw: RawDataType = {
            "name": data["name"],
            "divisor_basis": divisor_lattice["basis_labels"],
            "curve_basis": curve_lattice["basis_labels"] if curve_lattice else None,
            "pairing": None,
            "classes": {label: x["coords"] for label, x in data["named_classes"].items()
                        if x["lattice"] == divisor_lattice},
            "curve_classes": {label: x["coords"] for label, x in data["named_classes"].items()
                              if x["lattice"] == curve_lattice} or None,
            "cones": {key: data[key] for key in _CONE_KEYS},
            "mcd": data["mcd"],
        }

        pairing = data["pairing"]
        if pairing:
            matrix = build_from_raw(RatMatrix, pairing["matrix"], key_case=MODEL_KEY_CASE)
            raw["pairing"] = rational_matrix_to_raw(matrix)

        map_filter_none(raw["cones"])
        map_filter_none(raw)
        return raw


@dataclass
class TwinPair:
    """Embedded pair Y ⊂ X together with the pullback i*: N¹(X) → N¹(Y).

    Attributes:
        ambient (VarietyModel): X
        sub (VarietyModel): Y
        pullback (LatticeMap): Map from the divisor lattice of X to the one of Y
    """
    ambient: VarietyModel
    sub: VarietyModel
    pullback: LatticeMap

    def __post_init__(self) -> None:
        if self.pullback.source != self.ambient.divisor_lattice:
            raise LatticeMismatch(self.ambient.divisor_lattice, self.pullback.source)

        if self.pullback.target != self.sub.divisor_lattice:
            raise LatticeMismatch(self.sub.divisor_lattice, self.pullback.target)

    def __str__(self) -> str:
        return f"{self.sub} -> {self.ambient}"

    def inverted(self) -> "TwinPair":
        """Pair with the roles swapped and the inverse pullback.

        Raises:
            DegeneratePairing: If the pullback isn't invertible.
        """
        return TwinPair(self.sub, self.ambient, self.pullback.inverse())


def lookup(m: VarietyModel, label: str) -> ClassVector:
    """Class of a basis label or named class.

    Raises:
        UnknownLabel: If the model has no such label.
    """
    for lattice in (m.divisor_lattice, m.curve_lattice):
        if lattice is not None and label in lattice.basis_labels:
            return lattice.basis_vector(label)

    try:
        return m.named_classes[label]
    except KeyError:
        raise UnknownLabel(label) from None


def class_of(m: VarietyModel, expression: str, lattice: Lattice = None) -> ClassVector:
    """Evaluate a class expression.

    Args:
        m: Model providing the labels
        expression: Expression like "H - E_p"
        lattice: Lattice the result must belong to. Defaults to the lattice
            of the labels used, or the divisor lattice for "0".

    Raises:
        ExpressionSyntaxError: If the expression is malformed.
        UnknownLabel: If a label doesn't exist.
        LatticeMismatch: If the expression mixes divisor and curve labels,
            or doesn't belong to lattice.
    """
    terms = [(coefficient, lookup(m, label)) for coefficient, label in parse_expression(expression)
             if label is not None]

    if lattice is None:
        lattice = terms[0][1].lattice if terms else m.divisor_lattice

    for _, x in terms:
        if x.lattice != lattice:
            raise LatticeMismatch(lattice, x.lattice)

    return combine(lattice, terms)


def ray_label(m: VarietyModel, ray: Sequence[Fraction], lattice: Lattice = None) -> Optional[str]:
    """Name of a ray: the basis label or named class spanning it.

    Basis labels take precedence over named classes.

    Returns:
        The label, or `None` if no label spans the ray.
    """
    lattice = lattice or m.divisor_lattice
    target = primitive(ray)

    candidates = [lattice.basis_vector(label) for label in lattice.basis_labels]
    candidates.extend(m.classes_of(lattice).values())
    names = list(lattice.basis_labels) + list(m.classes_of(lattice))

    for name, x in zip(names, candidates):
        if not x.is_zero and primitive(x.coords) == target:
            return name

    return None


def intersection_number(m: VarietyModel, d: ClassVector, c: ClassVector) -> Fraction:
    """Intersection number D·C.

    Raises:
        MissingData: If the model has no pairing.
        LatticeMismatch: If d isn't a divisor class or c isn't a curve class.
    """
    if m.pairing is None:
        raise MissingData(m.name, "pairing")

    return m.pairing.evaluate(d, c)


def is_ample(m: VarietyModel, d: ClassVector) -> bool:
    """Whether d lies in the interior of the nef cone.

    Raises:
        LatticeMismatch: If d isn't a divisor class.
    """
    if d.lattice != m.divisor_lattice:
        raise LatticeMismatch(m.divisor_lattice, d.lattice)

    return contains(m.nef, d.coords).status == MembershipStatus.INTERIOR


def check_model(m: VarietyModel) -> List[str]:
    """Check the consistency conditions of a model.

    Checked are the inclusions Nef ⊂ Mov ⊂ Eff, that the nef cone is dual
    to the Mori cone under the pairing and that the chamber decomposition
    covers the effective cone.

    Returns:
        Description of every violated condition, empty if the model is consistent.
    """
    problems = []

    chain = [("nef", m.nef), ("mov", m.mov), ("eff", m.eff)]
    chain = [(key, cone) for key, cone in chain if cone is not None]
    for (small_key, small), (big_key, big) in zip(chain, chain[1:]):
        if not is_subcone(small, big):
            problems.append(f"{small_key} is not contained in {big_key}")

    if m.pairing is not None and m.ne is not None:
        if not equals(m.nef, dual_under_pairing(m.ne, m.pairing.matrix)):
            problems.append("nef is not the dual of ne under the pairing")

    if m.mcd is not None and not equals(m.mcd.support, m.eff):
        problems.append("mcd support is not the effective cone")

    for problem in problems:
        log.warning(f"{m.name}: {problem}")

    return problems


def transport(m: VarietyModel, f: LatticeMap, name: str = None) -> VarietyModel:
    """Push the divisor side of a model through a lattice isomorphism.

    The curve lattice and the Mori cone stay as they are, the pairing is
    adjusted so that intersection numbers are preserved.

    Args:
        m: Model to transport
        f: Isomorphism from the divisor lattice of m
        name: Name of the new model, defaults to the name of m

    Raises:
        LatticeMismatch: If f doesn't start at the divisor lattice of m.
        DegeneratePairing: If f isn't an isomorphism.
    """
    if f.source != m.divisor_lattice:
        raise LatticeMismatch(m.divisor_lattice, f.source)

    inverse_map = f.inverse()

    def push(cone: Optional[Cone]) -> Optional[Cone]:
        return apply_map_to_cone(f, cone) if cone is not None else None

    eff = push(m.eff)

    mcd = None
    if m.mcd is not None:
        chambers = tuple(Chamber(chamber.label, push(chamber.cone), chamber.description)
                         for chamber in m.mcd.chambers)
        mcd = ChamberFan(eff, chambers, f.target)

    pairing = None
    if m.pairing is not None:
        pairing = Pairing(f.target, m.pairing.curve_lattice, inverse_map.matrix.transpose() @ m.pairing.matrix)

    named_classes = {label: apply_map(f, x) if x.lattice == m.divisor_lattice else x
                     for label, x in m.named_classes.items()}

    return VarietyModel(name or m.name, f.target, eff, push(m.nef), push(m.mov),
                        curve_lattice=m.curve_lattice,
                        pairing=pairing,
                        named_classes=named_classes,
                        ne=m.ne,
                        mcd=mcd)
