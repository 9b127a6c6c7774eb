"""Finitely generated rational convex cones.

A `Cone` always carries both of its representations:

- V-representation: extremal ray `generators` of the pointed part plus a basis
  of the `lineality` space.
- H-representation: `facets` (inequalities ⟨f, x⟩ ≥ 0) plus a basis of the
  implicit `equations` (⟨e, x⟩ = 0) cutting out the linear span of the cone.

Conversion between the two is done with the double description method. All
vectors are stored as primitive integer tuples in a canonical form, so two
cones describing the same set are equal as Python objects, and their
serialised form is stable.

Cones are only ever created through `from_generators` / `from_inequalities`
(or operations built on them). Creating a `Cone` by hand skips the
consistency guarantees.
"""

import dataclasses
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .arith import IntVector, RatMatrix, RationalLike, RationalVector, determinant, dot, is_zero, mat_vec, \
    primitive, rank, rref, solve, vector
from .errors import DegeneratePairing, DimensionMismatch, LinealityError, ModelFormatError
from .transform import RawDataType, map_convert_value, map_remove_keys, rational_vector_from_raw, \
    rational_vector_to_raw

__all__ = ["MembershipStatus", "Membership",
           "Cone",
           "from_generators", "from_inequalities",
           "dual", "dual_under_pairing",
           "intersect", "join", "linear_image",
           "contains", "extremal_rays", "is_subcone", "equals", "faces", "interior_point"]

log = logging.getLogger(__name__)


class MembershipStatus(Enum):
    """Location of a point relative to a cone."""
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class Membership:
    """Result of a membership test.

    Attributes:
        status (MembershipStatus): Where the point lies. For cones which aren't
            full-dimensional "interior" refers to the relative interior.
        tight_facets (Tuple[int, ...]): Indices into `Cone.facets` of the facets
            the point lies on. Only non-empty for `MembershipStatus.BOUNDARY`.
    """
    status: MembershipStatus
    tight_facets: Tuple[int, ...] = ()

    def __bool__(self) -> bool:
        """Whether the point lies in the (closed) cone."""
        return self.status != MembershipStatus.OUTSIDE

    def __str__(self) -> str:
        return self.status.value


@dataclass(frozen=True)
class Cone:
    """Finitely generated convex cone in ℚ^ambient_dim.

    Attributes:
        ambient_dim (int): Dimension of the ambient space
        generators (Tuple[IntVector, ...]): Extremal rays of the pointed part,
            taken orthogonal to the lineality space, sorted lexicographically.
        facets (Tuple[IntVector, ...]): Irredundant inequalities ⟨f, x⟩ ≥ 0,
            taken inside the linear span of the cone, sorted lexicographically.
        lineality (Tuple[IntVector, ...]): Basis of the largest linear subspace
            contained in the cone (reduced echelon form).
        equations (Tuple[IntVector, ...]): Basis of the orthogonal complement
            of the span of the cone (reduced echelon form).
            Empty for full-dimensional cones.
    """
    ambient_dim: int
    generators: Tuple[IntVector, ...]
    facets: Tuple[IntVector, ...]
    lineality: Tuple[IntVector, ...] = ()
    equations: Tuple[IntVector, ...] = ()

    def __str__(self) -> str:
        parts = [_format_vector(g) for g in self.generators]
        parts.extend(f"±{_format_vector(l)}" for l in self.lineality)
        return "⟨" + ", ".join(parts) + "⟩"

    def __contains__(self, x: Sequence[RationalLike]) -> bool:
        return bool(contains(self, x))

    @property
    def dimension(self) -> int:
        """Dimension of the linear span of the cone."""
        return self.ambient_dim - len(self.equations)

    @property
    def lineality_dim(self) -> int:
        return len(self.lineality)

    @property
    def is_pointed(self) -> bool:
        """Whether the cone contains no line."""
        return not self.lineality

    @property
    def is_full_dimensional(self) -> bool:
        return not self.equations

    @property
    def is_zero(self) -> bool:
        return not self.generators and not self.lineality

    @classmethod
    def __transform_input__(cls, data: RawDataType) -> RawDataType:
        # facets and equations in the data are ignored, they're recomputed
        try:
            ambient_dim = data["ambient_dim"]
            raw_generators = data["generators"]
        except KeyError as e:
            raise ModelFormatError(f"cone is missing {e.args[0]!r}") from None

        rays = [rational_vector_from_raw(g) for g in raw_generators]
        lines = [rational_vector_from_raw(line) for line in data.get("lineality", [])]

        try:
            c = from_generators(ambient_dim, _with_lines(rays, lines))
        except DimensionMismatch as e:
            raise ModelFormatError(f"cone generator has the wrong length: {e}") from e

        return {field.name: getattr(c, field.name) for field in dataclasses.fields(c)}

    @classmethod
    def __transform_output__(cls, data: RawDataType) -> None:
        map_remove_keys(data, "ambient_dim")
        if not data["equations"]:
            map_remove_keys(data, "equations")

        for key in ("generators", "facets", "lineality", "equations"):
            map_convert_value(data, key, lambda rows: [rational_vector_to_raw(row) for row in rows])


def _format_vector(v: Sequence[int]) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def _neg(v: Sequence[int]) -> IntVector:
    return tuple(-x for x in v)


def _with_lines(vectors: Iterable[IntVector], lines: Iterable[IntVector]) -> List[IntVector]:
    """Generators of a cone with lines added in both directions."""
    result = list(vectors)
    for line in lines:
        result.append(tuple(line))
        result.append(_neg(line))
    return result


def _adjacent(p: IntVector, n: IntVector, processed: Sequence[IntVector], target_rank: int) -> bool:
    """Algebraic adjacency test of the double description method.

    Two extremal rays are adjacent iff the inequalities tight at both have
    rank dim - lineality_dim - 2.
    """
    if target_rank < 0:
        return False

    tight = [a for a in processed if dot(a, p) == 0 and dot(a, n) == 0]
    if len(tight) < target_rank:
        return False

    if not tight:
        return target_rank == 0

    return rank(RatMatrix.from_rows(tight)) == target_rank


def _double_description(dim: int, inequalities: Sequence[IntVector]) -> Tuple[List[IntVector], List[IntVector]]:
    """Generators of {x : ⟨a, x⟩ ≥ 0 for all a}.

    The inequalities are inserted one at a time, starting from the whole
    space. While the current cone still has lines, an inequality which isn't
    constant on them only turns one line into a ray. Otherwise the rays are
    split by sign and every adjacent positive/negative pair contributes the
    ray on the new hyperplane.

    Returns:
        Ray representatives of the pointed part (not canonical) and a basis
        of the lineality space.
    """
    lineality: List[IntVector] = [tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim)]
    rays: List[IntVector] = []
    processed: List[IntVector] = []

    for a in inequalities:
        line_index = next((i for i, line in enumerate(lineality) if dot(a, line) != 0), None)

        if line_index is not None:
            pivot = lineality.pop(line_index)
            pivot_value = dot(a, pivot)

            def reduce_by_pivot(v: IntVector) -> IntVector:
                factor = dot(a, v) / pivot_value
                return primitive([x - factor * y for x, y in zip(v, pivot)])

            lineality = [reduce_by_pivot(line) for line in lineality]
            rays = [reduce_by_pivot(ray) for ray in rays]
            rays.append(pivot if pivot_value > 0 else _neg(pivot))
        else:
            values = [dot(a, ray) for ray in rays]
            positive = [(ray, value) for ray, value in zip(rays, values) if value > 0]
            negative = [(ray, value) for ray, value in zip(rays, values) if value < 0]

            new_rays = [ray for ray, value in zip(rays, values) if value >= 0]
            target_rank = dim - len(lineality) - 2

            for p, p_value in positive:
                for n, n_value in negative:
                    if _adjacent(p, n, processed, target_rank):
                        new_rays.append(primitive([p_value * y - n_value * x for x, y in zip(p, n)]))

            rays = new_rays

        processed.append(a)

    log.debug(f"double description: {len(inequalities)} inequalities in dim {dim} -> "
              f"{len(rays)} rays, lineality {len(lineality)}")
    return rays, lineality


def _canonical_subspace(vectors: Sequence[Sequence[int]], dim: int) -> Tuple[IntVector, ...]:
    """Canonical basis of a linear subspace: primitive rows of the reduced echelon form."""
    if not vectors:
        return ()

    reduced, _ = rref(RatMatrix.from_rows(vectors, cols=dim))
    return tuple(primitive(row) for row in reduced.to_rows())


def _project_away(v: Sequence[int], basis: Sequence[IntVector]) -> RationalVector:
    """Orthogonal projection of v onto the complement of span(basis)."""
    v = vector(v)
    if not basis:
        return v

    gram = RatMatrix.from_rows([[dot(b, c) for c in basis] for b in basis])
    coefficients = solve(gram, [dot(b, v) for b in basis])
    return tuple(x - sum((c * b[i] for c, b in zip(coefficients, basis)), Fraction(0)) for i, x in enumerate(v))


def _canonical_rays(rays: Iterable[Sequence[int]], subspace: Sequence[IntVector]) -> Tuple[IntVector, ...]:
    """Canonical ray representatives modulo a subspace."""
    result = set()
    for ray in rays:
        projected = _project_away(ray, subspace)
        if not is_zero(projected):
            result.add(primitive(projected))

    return tuple(sorted(result))


def _prepare(ambient_dim: int, raw: Iterable[Sequence[RationalLike]]) -> List[IntVector]:
    """Check lengths, drop zero vectors, make primitive, sort."""
    result = set()
    for v in raw:
        v = vector(v)
        if len(v) != ambient_dim:
            raise DimensionMismatch(ambient_dim, len(v))

        if not is_zero(v):
            result.add(primitive(v))

    return sorted(result)


def from_generators(ambient_dim: int, raw: Iterable[Sequence[RationalLike]]) -> Cone:
    """Create the cone generated by the given vectors.

    The generators are made primitive and sorted first, so the result doesn't
    depend on the input order. Redundant generators are dropped. An empty
    input yields the zero cone.

    Raises:
        DimensionMismatch: If a vector doesn't have ambient_dim entries.
    """
    generators = _prepare(ambient_dim, raw)

    # facets of the cone are the rays of its dual
    dual_rays, dual_lineality = _double_description(ambient_dim, generators)
    equations = _canonical_subspace(dual_lineality, ambient_dim)
    facets = _canonical_rays(dual_rays, equations)

    rays, lineality = _double_description(ambient_dim, list(facets) + _with_lines((), equations))
    lineality = _canonical_subspace(lineality, ambient_dim)
    extremal = _canonical_rays(rays, lineality)

    return Cone(ambient_dim, extremal, facets, lineality, equations)


def from_inequalities(ambient_dim: int, rows: Iterable[Sequence[RationalLike]]) -> Cone:
    """Create the cone {x : ⟨a, x⟩ ≥ 0 for every row a}.

    No rows means the whole space.

    Raises:
        DimensionMismatch: If a row doesn't have ambient_dim entries.
    """
    inequalities = _prepare(ambient_dim, rows)
    rays, lineality = _double_description(ambient_dim, inequalities)
    return from_generators(ambient_dim, _with_lines(rays, lineality))


def _all_generators(c: Cone) -> List[IntVector]:
    return _with_lines(c.generators, c.lineality)


def _check_dims(a: Cone, b: Cone) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(a.ambient_dim, b.ambient_dim)


def dual(c: Cone) -> Cone:
    """Dual cone {y : ⟨y, x⟩ ≥ 0 for all x in c} under the standard inner product.

    The generators of the dual are the facets of c and the lineality of the
    dual is spanned by the equations of c.
    """
    return from_generators(c.ambient_dim, _with_lines(c.facets, c.equations))


def linear_image(c: Cone, m: RatMatrix) -> Cone:
    """Image of a cone under the linear map x ↦ m·x.

    Raises:
        DimensionMismatch: If m.cols doesn't match the ambient dimension.
    """
    if m.cols != c.ambient_dim:
        raise DimensionMismatch(c.ambient_dim, m.cols)

    return from_generators(m.rows, (mat_vec(m, vector(g)) for g in _all_generators(c)))


def dual_under_pairing(c: Cone, p: RatMatrix) -> Cone:
    """Dual of c across a bilinear pairing.

    Computes {D : Dᵀ·p·C ≥ 0 for all C in c}. With c a cone of curve classes
    and p the intersection matrix this is a cone of divisor classes.

    Raises:
        DimensionMismatch: If p isn't square of size c.ambient_dim.
        DegeneratePairing: If p is singular.
    """
    if not p.is_square:
        raise DegeneratePairing(f"pairing matrix must be square, got {p.rows}x{p.cols}")

    if p.rows != c.ambient_dim:
        raise DimensionMismatch(c.ambient_dim, p.rows)

    if determinant(p) == 0:
        raise DegeneratePairing(f"pairing matrix {p} is singular")

    return dual(linear_image(c, p))


def intersect(a: Cone, b: Cone) -> Cone:
    """Intersection of two cones.

    Raises:
        DimensionMismatch: If the ambient dimensions differ.
    """
    _check_dims(a, b)
    rows = list(a.facets) + list(b.facets) + _with_lines((), a.equations + b.equations)
    return from_inequalities(a.ambient_dim, rows)


def join(a: Cone, b: Cone) -> Cone:
    """Join A * B, the cone generated by the generators of both cones.

    Raises:
        DimensionMismatch: If the ambient dimensions differ.
    """
    _check_dims(a, b)
    return from_generators(a.ambient_dim, _all_generators(a) + _all_generators(b))


def contains(c: Cone, x: Sequence[RationalLike]) -> Membership:
    """Locate a point relative to a cone.

    Raises:
        DimensionMismatch: If x doesn't have c.ambient_dim entries.
    """
    x = vector(x)
    if len(x) != c.ambient_dim:
        raise DimensionMismatch(c.ambient_dim, len(x))

    if any(dot(e, x) != 0 for e in c.equations):
        return Membership(MembershipStatus.OUTSIDE)

    values = [dot(f, x) for f in c.facets]
    if any(value < 0 for value in values):
        return Membership(MembershipStatus.OUTSIDE)

    tight = tuple(i for i, value in enumerate(values) if value == 0)
    if tight:
        return Membership(MembershipStatus.BOUNDARY, tight)

    return Membership(MembershipStatus.INTERIOR)


def extremal_rays(c: Cone) -> List[IntVector]:
    """Canonically sorted primitive extremal rays of a pointed cone.

    Raises:
        LinealityError: If the cone contains a line.
    """
    if c.lineality:
        raise LinealityError(len(c.lineality))

    return list(c.generators)


def is_subcone(a: Cone, b: Cone) -> bool:
    """Whether a is contained in b, decided on the generators of a.

    Raises:
        DimensionMismatch: If the ambient dimensions differ.
    """
    _check_dims(a, b)
    return all(contains(b, g) for g in _all_generators(a))


def equals(a: Cone, b: Cone) -> bool:
    """Whether two cones are the same point set.

    Raises:
        DimensionMismatch: If the ambient dimensions differ.
    """
    _check_dims(a, b)
    return is_subcone(a, b) and is_subcone(b, a)


def faces(c: Cone) -> List[Cone]:
    """Facet faces of a cone, in the order of `Cone.facets`."""
    result = []
    for f in c.facets:
        tight = [g for g in c.generators if dot(f, g) == 0]
        result.append(from_generators(c.ambient_dim, _with_lines(tight, c.lineality)))

    return result


def interior_point(c: Cone) -> IntVector:
    """A point of the relative interior: the sum of the extremal rays.

    Lines don't contribute, the point is a relative interior point regardless.
    """
    return tuple(sum(column) for column in zip(*c.generators)) if c.generators else (0,) * c.ambient_dim
