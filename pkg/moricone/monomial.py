"""Monomial linear systems on projective space.

A `MonomialSystem` is a rational map ℙⁿ ⇢ ℙᵐ given by monomials of equal
degree. Everything is evaluated exactly: images of points, Jacobians via the
monomial derivative rule, and vanishing orders at points.

Generic statements are tested on random points with coordinates drawn from
`SAMPLE_RANGE`. The rank of the Jacobian can only drop on a proper closed
subset, so the maximum over the samples is the generic rank.

Attributes:
    DEFAULT_SAMPLE_COUNT (int): Number of random points used for generic ranks.
    SAMPLE_RANGE (Tuple[int, int]): Inclusive range of the random coordinates.
    DEFAULT_SEED (int): Seed of the random points.
    SYSTEMS (Dict[str, MonomialSystem]): Built-in systems by name.
"""

import itertools
import logging
import operator
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Dict, List, Optional, Sequence, Tuple

from .arith import IntVector, RatMatrix, RationalLike, RationalVector, is_zero, primitive, rank, vector
from .errors import BasePointError, DimensionMismatch, ModelFormatError
from .transform import RawDataType, map_convert_values

__all__ = ["DEFAULT_SAMPLE_COUNT", "SAMPLE_RANGE", "DEFAULT_SEED",
           "MonomialSystem",
           "normalize_point", "coordinate_points", "evaluate", "jacobian", "image_dimension", "vanishes_to_order",
           "base_points", "sample_points", "generic_image_dimension",
           "SYSTEMS"]

log = logging.getLogger(__name__)

DEFAULT_SAMPLE_COUNT = 20
SAMPLE_RANGE = (1, 100)
DEFAULT_SEED = 0

Exponents = Tuple[int, ...]


@dataclass(frozen=True)
class MonomialSystem:
    """Linear system spanned by monomials of equal degree.

    Attributes:
        source_dim (int): n for the source ℙⁿ
        monomials (Tuple[Exponents, ...]): Exponent vectors with n + 1 entries each
    """
    source_dim: int
    monomials: Tuple[Exponents, ...]

    def __post_init__(self) -> None:
        monomials = tuple(tuple(exponents) for exponents in self.monomials)
        object.__setattr__(self, "monomials", monomials)

        if self.source_dim < 1:
            raise ValueError(f"source dimension must be positive, got {self.source_dim}")

        if not monomials:
            raise ValueError("a monomial system needs at least one monomial")

        for exponents in monomials:
            if len(exponents) != self.source_dim + 1:
                raise DimensionMismatch(self.source_dim + 1, len(exponents))

            if any(not isinstance(e, int) or isinstance(e, bool) or e < 0 for e in exponents):
                raise ValueError(f"exponents must be non-negative integers: {exponents}")

        if len({sum(exponents) for exponents in monomials}) != 1:
            raise ValueError("monomials must all have the same degree")

        if len(set(monomials)) != len(monomials):
            raise ValueError("monomials must be distinct")

    @property
    def degree(self) -> int:
        return sum(self.monomials[0])

    @property
    def target_dim(self) -> int:
        return len(self.monomials) - 1

    @classmethod
    def __transform_input__(cls, data: RawDataType) -> None:
        def exponents_from_raw(raw):
            if not isinstance(raw, list) or not all(isinstance(row, list) for row in raw):
                raise ModelFormatError("expected a list of exponent lists", "monomials")
            return tuple(tuple(row) for row in raw)

        map_convert_values(data, monomials=exponents_from_raw)


def normalize_point(values: Sequence[RationalLike]) -> IntVector:
    """Canonical representative of a projective point.

    Primitive integer coordinates whose first non-zero entry is positive.

    Raises:
        ValueError: For the zero vector.
    """
    point = primitive(values)
    first = next(x for x in point if x != 0)
    return point if first > 0 else tuple(-x for x in point)


def coordinate_points(n: int) -> List[IntVector]:
    """The n + 1 coordinate points of ℙⁿ."""
    return [tuple(1 if i == j else 0 for j in range(n + 1)) for i in range(n + 1)]


def _point(s: MonomialSystem, p: Sequence[RationalLike]) -> RationalVector:
    point = vector(p)
    if len(point) != s.source_dim + 1:
        raise DimensionMismatch(s.source_dim + 1, len(point))

    if is_zero(point):
        raise ValueError("the zero vector is not a projective point")

    return point


def _derivative(exponents: Exponents, orders: Sequence[int], point: RationalVector) -> Fraction:
    """Value of a partial derivative of a monomial at a point."""
    value = Fraction(1)
    for e, a, x in zip(exponents, orders, point):
        if a > e:
            return Fraction(0)

        # falling factorial e (e - 1) ... (e - a + 1)
        value *= reduce(operator.mul, range(e - a + 1, e + 1), 1) * x ** (e - a)

    return value


def evaluate(s: MonomialSystem, p: Sequence[RationalLike]) -> Optional[IntVector]:
    """Image of a point.

    Returns:
        The normalised image point, or `None` if p is a base point.

    Raises:
        ValueError: If p is the zero vector.
        DimensionMismatch: If p has the wrong number of coordinates.
    """
    point = _point(s, p)
    no_derivative = (0,) * len(point)
    values = [_derivative(exponents, no_derivative, point) for exponents in s.monomials]

    if is_zero(values):
        return None

    return normalize_point(values)


def jacobian(s: MonomialSystem, p: Sequence[RationalLike]) -> RatMatrix:
    """Matrix of the first partial derivatives, one row per monomial."""
    point = _point(s, p)
    n = len(point)
    units = coordinate_points(n - 1)
    return RatMatrix.from_rows(([_derivative(exponents, unit, point) for unit in units] for exponents in s.monomials),
                               cols=n)


def image_dimension(s: MonomialSystem, p: Sequence[RationalLike]) -> int:
    """Dimension of the image near the image of p.

    This is the rank of the Jacobian at p minus one.

    Raises:
        BasePointError: If p is a base point.
    """
    if evaluate(s, p) is None:
        raise BasePointError(tuple(p))

    return rank(jacobian(s, p)) - 1


def vanishes_to_order(s: MonomialSystem, p: Sequence[RationalLike], k: int) -> bool:
    """Whether every member of the system vanishes to order at least k at p.

    That is, every partial derivative of order less than k of every
    monomial vanishes at p. Always true for k = 0.
    """
    point = _point(s, p)
    if k <= 0:
        return True

    for orders in itertools.product(range(k), repeat=len(point)):
        if sum(orders) >= k:
            continue

        if any(_derivative(exponents, orders, point) != 0 for exponents in s.monomials):
            return False

    return True


def base_points(s: MonomialSystem, points: Sequence[Sequence[RationalLike]]) -> List[IntVector]:
    """The given points which are base points of the system, normalised."""
    return [normalize_point(p) for p in points if evaluate(s, p) is None]


def sample_points(s: MonomialSystem, count: int = DEFAULT_SAMPLE_COUNT, seed: int = DEFAULT_SEED) -> List[IntVector]:
    """Random points of the source which aren't base points.

    Args:
        s: System the points are for
        count: Number of points
        seed: Seed of the random generator, the same seed gives the same points
    """
    rng = random.Random(seed)
    low, high = SAMPLE_RANGE
    points = []
    while len(points) < count:
        point = tuple(rng.randint(low, high) for _ in range(s.source_dim + 1))
        if evaluate(s, point) is not None:
            points.append(point)

    return points


def generic_image_dimension(s: MonomialSystem, count: int = DEFAULT_SAMPLE_COUNT, seed: int = DEFAULT_SEED) -> int:
    """Dimension of the closure of the image.

    Computed as the maximum of `image_dimension` over random sample points.
    """
    dimensions = [image_dimension(s, p) for p in sample_points(s, count, seed)]
    log.debug(f"image dimensions at {count} sample points: {dimensions}")
    return max(dimensions)


def _system(*monomials: str) -> MonomialSystem:
    """Build a system on ℙ³ from monomials written in x, y, z, w, e.g. "xy^2"."""
    variables = "xyzw"
    exponents = []
    for monomial in monomials:
        e = [0] * 4
        i = 0
        while i < len(monomial):
            variable = variables.index(monomial[i])
            power = 1
            if monomial[i + 1:i + 2] == "^":
                power = int(monomial[i + 2])
                i += 2
            e[variable] += power
            i += 1
        exponents.append(tuple(e))

    return MonomialSystem(3, tuple(exponents))


SYSTEMS: Dict[str, MonomialSystem] = {
    # quadrics through p = [1:0:0:0] and q = [0:0:0:1]
    "box3.alpha": _system("xy", "xz", "xw", "y^2", "yz", "yw", "z^2", "zw"),
    # cubics singular at p and q
    "box3.beta": _system("xy^2", "xz^2", "xyz", "xyw", "xzw", "y^3", "y^2z", "y^2w", "yz^2", "yzw", "z^3", "z^2w"),
    # projection from the line through p and q
    "box3.projection": _system("y", "z"),
}
