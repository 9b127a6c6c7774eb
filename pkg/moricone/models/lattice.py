"""Lattices of divisor and curve classes.

Class expressions are signed sums of optionally scaled labels, for example
``"3H - 2E_p - 2E_q"``, ``"1/2 * H + E_1^+"`` or ``"0"``. Whitespace is
ignored. Labels start with a letter and may contain letters, digits,
underscores, primes, braced groups (``H_{p,q}``) and a ``^`` optionally
followed by a sign (``H^+``).

Attributes:
    LABEL_PATTERN (Pattern): Regular expression matching a single label.
    Term (Tuple[Fraction, Optional[str]]): (Type alias) Coefficient and label
        of one term of an expression. The label is `None` for the term "0".
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from moricone.arith import RatMatrix, RationalLike, RationalVector, determinant, dot, format_rational, inverse, \
    is_zero, mat_vec, to_rational, vector
from moricone.cone import Cone, linear_image
from moricone.errors import DegeneratePairing, DimensionMismatch, ExpressionSyntaxError, LatticeMismatch, UnknownLabel

__all__ = ["Lattice", "ClassVector", "Pairing", "LatticeMap",
           "Term", "parse_expression", "format_class",
           "apply_map", "apply_map_to_cone", "combine"]

LABEL_PATTERN = re.compile(r"[A-Za-z](?:[A-Za-z0-9_']|\^[+-]?|\{[^}]*\})*")

_TERM_PATTERN = re.compile(r"(?P<sign>[+-])?(?P<coefficient>\d+(?:/\d+)?)?(?P<star>\*)?(?P<label>" +
                           LABEL_PATTERN.pattern + r")?")

Term = Tuple[Fraction, Optional[str]]


@dataclass(frozen=True)
class Lattice:
    """Free lattice with a labelled basis.

    Attributes:
        name (str): Name of the lattice, e.g. "N^1(Bl_{p,q}P^3)"
        basis_labels (Tuple[str, ...]): Labels of the basis vectors
    """
    name: str
    basis_labels: Tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "basis_labels", tuple(self.basis_labels))

        if len(set(self.basis_labels)) != len(self.basis_labels):
            raise ValueError(f"basis labels of {self.name} aren't distinct: {self.basis_labels}")

        for label in self.basis_labels:
            if not LABEL_PATTERN.fullmatch(label):
                raise ValueError(f"invalid basis label: {label!r}")

    def __str__(self) -> str:
        return self.name

    @property
    def rank(self) -> int:
        return len(self.basis_labels)

    def index(self, label: str) -> int:
        """Position of a basis label.

        Raises:
            UnknownLabel: If the label isn't a basis label.
        """
        try:
            return self.basis_labels.index(label)
        except ValueError:
            raise UnknownLabel(label) from None

    def basis_vector(self, label: str) -> "ClassVector":
        i = self.index(label)
        return ClassVector(self, tuple(1 if j == i else 0 for j in range(self.rank)))

    def zero(self) -> "ClassVector":
        return ClassVector(self, (0,) * self.rank)


def format_class(coords: Sequence[Fraction], labels: Sequence[str]) -> str:
    """Format coordinates as a class expression, e.g. "3H - 2E_p".

    The result can be parsed by `parse_expression`.
    """
    parts: List[str] = []
    for value, label in zip(coords, labels):
        if value == 0:
            continue

        sign = "-" if value < 0 else "+"
        magnitude = abs(value)
        if magnitude == 1:
            term = label
        elif magnitude.denominator == 1:
            term = f"{magnitude}{label}"
        else:
            term = f"{format_rational(magnitude)}*{label}"

        if parts:
            parts.append(f"{sign} {term}")
        else:
            parts.append(term if sign == "+" else f"-{term}")

    return " ".join(parts) or "0"


@dataclass(frozen=True)
class ClassVector:
    """Element of a `Lattice` with rational coordinates.

    Supports addition, subtraction and scaling by rationals.

    Attributes:
        lattice (Lattice): Lattice the class belongs to
        coords (RationalVector): Coordinates in the basis of the lattice
    """
    lattice: Lattice
    coords: RationalVector

    def __post_init__(self) -> None:
        coords = vector(self.coords)
        if len(coords) != self.lattice.rank:
            raise DimensionMismatch(self.lattice.rank, len(coords))

        object.__setattr__(self, "coords", coords)

    def __str__(self) -> str:
        return format_class(self.coords, self.lattice.basis_labels)

    def _check_lattice(self, other: "ClassVector") -> None:
        if other.lattice != self.lattice:
            raise LatticeMismatch(self.lattice, other.lattice)

    def __add__(self, other: "ClassVector") -> "ClassVector":
        if not isinstance(other, ClassVector):
            return NotImplemented

        self._check_lattice(other)
        return ClassVector(self.lattice, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "ClassVector") -> "ClassVector":
        if not isinstance(other, ClassVector):
            return NotImplemented

        return self + (-other)

    def __neg__(self) -> "ClassVector":
        return ClassVector(self.lattice, tuple(-a for a in self.coords))

    def __mul__(self, scalar: RationalLike) -> "ClassVector":
        try:
            t = to_rational(scalar)
        except TypeError:
            return NotImplemented

        return ClassVector(self.lattice, tuple(t * a for a in self.coords))

    __rmul__ = __mul__

    @property
    def is_zero(self) -> bool:
        return is_zero(self.coords)


@dataclass(frozen=True)
class Pairing:
    """Non-degenerate intersection pairing between divisors and curves.

    The intersection number of a divisor d and a curve c is dᵀ·matrix·c.

    Attributes:
        divisor_lattice (Lattice): Lattice of divisor classes (rows)
        curve_lattice (Lattice): Lattice of curve classes (columns)
        matrix (RatMatrix): Intersection numbers of the basis elements
    """
    divisor_lattice: Lattice
    curve_lattice: Lattice
    matrix: RatMatrix

    def __post_init__(self) -> None:
        m = self.matrix
        if not m.is_square:
            raise DegeneratePairing(f"pairing matrix must be square, got {m.rows}x{m.cols}")

        if m.rows != self.divisor_lattice.rank:
            raise DimensionMismatch(self.divisor_lattice.rank, m.rows)

        if m.cols != self.curve_lattice.rank:
            raise DimensionMismatch(self.curve_lattice.rank, m.cols)

        if determinant(m) == 0:
            raise DegeneratePairing(f"pairing matrix {m} is singular")

    def evaluate(self, d: ClassVector, c: ClassVector) -> Fraction:
        """Intersection number d·c.

        Raises:
            LatticeMismatch: If d or c belong to the wrong lattice.
        """
        if d.lattice != self.divisor_lattice:
            raise LatticeMismatch(self.divisor_lattice, d.lattice)

        if c.lattice != self.curve_lattice:
            raise LatticeMismatch(self.curve_lattice, c.lattice)

        return dot(d.coords, mat_vec(self.matrix, c.coords))


@dataclass(frozen=True)
class LatticeMap:
    """Linear map between lattices, e.g. the pullback along an embedding.

    Attributes:
        source (Lattice): Domain
        target (Lattice): Codomain
        matrix (RatMatrix): target.rank × source.rank matrix acting on coordinates
    """
    source: Lattice
    target: Lattice
    matrix: RatMatrix

    def __post_init__(self) -> None:
        if self.matrix.cols != self.source.rank:
            raise DimensionMismatch(self.source.rank, self.matrix.cols)

        if self.matrix.rows != self.target.rank:
            raise DimensionMismatch(self.target.rank, self.matrix.rows)

    @classmethod
    def identity_on_labels(cls, source: Lattice, target: Lattice) -> "LatticeMap":
        """Map sending each basis vector to the basis vector with the same label.

        Basis vectors whose label doesn't exist in the target are sent to zero.
        """
        rows = [[1 if target_label == source_label else 0 for source_label in source.basis_labels]
                for target_label in target.basis_labels]
        return cls(source, target, RatMatrix.from_rows(rows, cols=source.rank))

    @classmethod
    def substitution(cls, source: Lattice, target: Lattice) -> "LatticeMap":
        """Map sending the i-th basis vector of source to the i-th basis vector of target.

        Raises:
            DimensionMismatch: If the ranks differ.
        """
        if source.rank != target.rank:
            raise DimensionMismatch(source.rank, target.rank)

        return cls(source, target, RatMatrix.identity(source.rank))

    @property
    def is_isomorphism(self) -> bool:
        """Whether the map is invertible over the rationals."""
        return self.matrix.is_square and determinant(self.matrix) != 0

    @property
    def is_unimodular(self) -> bool:
        """Whether the map is an isomorphism of the integral lattices."""
        if not self.matrix.is_square or any(entry.denominator != 1 for entry in self.matrix.entries):
            return False

        return abs(determinant(self.matrix)) == 1

    def inverse(self) -> "LatticeMap":
        """Inverse map.

        Raises:
            DegeneratePairing: If the map isn't an isomorphism.
        """
        if not self.is_isomorphism:
            raise DegeneratePairing(f"map {self.source} -> {self.target} is not invertible")

        return LatticeMap(self.target, self.source, inverse(self.matrix))


def apply_map(f: LatticeMap, x: ClassVector) -> ClassVector:
    """Transport a class along a lattice map.

    Raises:
        LatticeMismatch: If x doesn't belong to the source of f.
    """
    if x.lattice != f.source:
        raise LatticeMismatch(f.source, x.lattice)

    return ClassVector(f.target, mat_vec(f.matrix, x.coords))


def apply_map_to_cone(f: LatticeMap, c: Cone) -> Cone:
    """Image of a cone of source classes, computed generator-wise.

    Raises:
        DimensionMismatch: If the cone doesn't live in the source lattice.
    """
    return linear_image(c, f.matrix)


def parse_expression(expression: str) -> List[Term]:
    """Parse a class expression into its terms.

    Args:
        expression: The expression, e.g. "3H - 2E_p - 2E_q"

    Returns:
        Coefficient and label of every term, in order.
        "0" yields a single term without label.

    Raises:
        ExpressionSyntaxError: If the expression is malformed. The reported
            position refers to the expression with whitespace removed.
    """
    text = "".join(expression.split())
    if not text:
        raise ExpressionSyntaxError(expression, 0)

    terms: List[Term] = []
    pos = 0
    while pos < len(text):
        match = _TERM_PATTERN.match(text, pos)
        sign, coefficient, star, label = match.group("sign", "coefficient", "star", "label")

        if coefficient is None and label is None:
            raise ExpressionSyntaxError(expression, pos)

        if star and not (coefficient and label):
            raise ExpressionSyntaxError(expression, pos)

        if terms and sign is None:
            raise ExpressionSyntaxError(expression, pos)

        try:
            value = Fraction(coefficient) if coefficient else Fraction(1)
        except ZeroDivisionError:
            raise ExpressionSyntaxError(expression, pos) from None

        if label is None and value != 0:
            # constants other than 0 have no meaning as classes
            raise ExpressionSyntaxError(expression, pos)

        terms.append((-value if sign == "-" else value, label))
        pos = match.end()

    return terms


def combine(lattice: Lattice, terms: Iterable[Tuple[Fraction, ClassVector]]) -> ClassVector:
    """Linear combination of classes of a lattice."""
    result = lattice.zero()
    for coefficient, x in terms:
        result = result + coefficient * x

    return result
