"""Exceptions raised by moricone.

All exceptions derive from `MoriconeError`. Most of them also derive from
the builtin exception that best describes them (`ValueError`, `KeyError`,
`LookupError`) so that callers which don't care about moricone specifics
can still catch them the usual way.

Note that some outcomes are deliberately *not* exceptions: an inconsistent
linear system makes `moricone.arith.solve` return `None` and a point outside
of a cone is reported as `MembershipStatus.OUTSIDE`.
"""

from typing import Any, Optional

__all__ = ["MoriconeError",
           "DimensionMismatch", "LatticeMismatch", "DegeneratePairing",
           "LinealityError",
           "UnknownLabel", "ExpressionSyntaxError",
           "MissingData", "UnknownModel",
           "FanError", "BasePointError",
           "ModelFormatError", "SingularMatrix"]


class MoriconeError(Exception):
    """Base class for all moricone exceptions."""
    __slots__ = ()


class DimensionMismatch(MoriconeError, ValueError):
    """Raised when two objects live in spaces of different dimension.

    Attributes:
        expected (int): Dimension that was required.
        actual (int): Dimension that was provided.
    """
    __slots__ = ("expected", "actual")

    expected: int
    actual: int

    def __init__(self, expected: int, actual: int) -> None:
        super().__init__(expected, actual)
        self.expected = expected
        self.actual = actual

    def __str__(self) -> str:
        return f"dimension mismatch: expected {self.expected}, got {self.actual}"


class LatticeMismatch(MoriconeError, ValueError):
    """Raised when a class is used with a lattice it doesn't belong to.

    Attributes:
        expected (Any): Lattice that was required.
        actual (Any): Lattice of the provided class.
    """
    __slots__ = ("expected", "actual")

    expected: Any
    actual: Any

    def __init__(self, expected: Any, actual: Any) -> None:
        super().__init__(expected, actual)
        self.expected = expected
        self.actual = actual

    def __str__(self) -> str:
        return f"lattice mismatch: expected {self.expected}, got {self.actual}"


class DegeneratePairing(MoriconeError, ValueError):
    """Raised for pairings and lattice maps which aren't square and invertible."""
    __slots__ = ()


class LinealityError(MoriconeError, ValueError):
    """Raised when extremal rays are requested from a cone containing a line.

    Attributes:
        lineality_dim (int): Dimension of the lineality space of the cone.
    """
    __slots__ = ("lineality_dim",)

    lineality_dim: int

    def __init__(self, lineality_dim: int) -> None:
        super().__init__(lineality_dim)
        self.lineality_dim = lineality_dim

    def __str__(self) -> str:
        return f"cone has a lineality space of dimension {self.lineality_dim}, extremal rays aren't defined"


class UnknownLabel(MoriconeError, KeyError):
    """Raised when a class expression refers to a label the model doesn't know.

    Attributes:
        label (str): The unknown label.
    """
    __slots__ = ("label",)

    label: str

    def __init__(self, label: str) -> None:
        super().__init__(label)
        self.label = label

    def __str__(self) -> str:
        return f"unknown class label: {self.label!r}"


class ExpressionSyntaxError(MoriconeError, ValueError):
    """Raised when a class expression can't be parsed.

    Attributes:
        expression (str): The offending expression.
        position (int): Index of the first character which couldn't be parsed.
    """
    __slots__ = ("expression", "position")

    expression: str
    position: int

    def __init__(self, expression: str, position: int) -> None:
        super().__init__(expression, position)
        self.expression = expression
        self.position = position

    def __str__(self) -> str:
        return f"can't parse class expression {self.expression!r} at position {self.position}"


class MissingData(MoriconeError, LookupError):
    """Raised when a model lacks data an operation needs.

    Attributes:
        model (str): Name of the model.
        field (str): Name of the missing field.
    """
    __slots__ = ("model", "field")

    model: str
    field: str

    def __init__(self, model: str, field: str) -> None:
        super().__init__(model, field)
        self.model = model
        self.field = field

    def __str__(self) -> str:
        return f"model {self.model!r} has no {self.field} data"


class UnknownModel(MoriconeError, KeyError):
    """Raised when a model or monomial system name can't be resolved.

    Attributes:
        name (str): The name that was looked up.
    """
    __slots__ = ("name",)

    name: str

    def __init__(self, name: str) -> None:
        super().__init__(name)
        self.name = name

    def __str__(self) -> str:
        return f"no built-in or file named {self.name!r}"


class FanError(MoriconeError, ValueError):
    """Raised for chamber fans which can't be processed."""
    __slots__ = ()


class BasePointError(MoriconeError, ValueError):
    """Raised when a base point is passed where a regular point is required.

    Attributes:
        point (Any): The base point.
    """
    __slots__ = ("point",)

    point: Any

    def __init__(self, point: Any) -> None:
        super().__init__(point)
        self.point = point

    def __str__(self) -> str:
        return f"{self.point} is a base point of the linear system"


class ModelFormatError(MoriconeError, ValueError):
    """Raised when a JSON document doesn't follow the expected schema.

    Attributes:
        reason (str): What's wrong with the document.
        path (Optional[str]): Location of the problem inside the document.
    """
    __slots__ = ("reason", "path")

    reason: str
    path: Optional[str]

    def __init__(self, reason: str, path: Optional[str] = None) -> None:
        super().__init__(reason, path)
        self.reason = reason
        self.path = path

    def __str__(self) -> str:
        if self.path:
            return f"{self.path}: {self.reason}"

        return self.reason


class SingularMatrix(MoriconeError, ArithmeticError):
    """Raised when a matrix that has to be invertible isn't."""
    __slots__ = ()
