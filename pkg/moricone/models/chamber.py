"""Chamber decomposition models.

The algorithms working on these models live in `moricone.fan`.
"""

from dataclasses import dataclass
from typing import NamedTuple, Optional, Tuple

from moricone.cone import Cone, Membership
from moricone.errors import DimensionMismatch, FanError
from moricone.transform import RawDataType, map_filter_none, map_remove_keys
from .lattice import Lattice

__all__ = ["Chamber", "ChamberFan", "Location", "Wall"]


@dataclass(frozen=True)
class Chamber:
    """Maximal cone of a chamber decomposition.

    Attributes:
        label (str): Name of the chamber, e.g. the model it's the nef cone of
        cone (Cone): The chamber itself. Must be pointed.
        description (Optional[str]): Free-form note, e.g. the contraction
            corresponding to the chamber.
    """
    label: str
    cone: Cone
    description: Optional[str] = None

    def __post_init__(self) -> None:
        if not self.cone.is_pointed:
            raise FanError(f"chamber {self.label} isn't pointed")

    def __str__(self) -> str:
        return self.label

    @classmethod
    def __transform_output__(cls, data: RawDataType) -> None:
        data["generators"] = data.pop("cone")["generators"]
        description = data.pop("description")
        data["description"] = description
        map_filter_none(data)


@dataclass(frozen=True)
class ChamberFan:
    """Wall-and-chamber decomposition stored as its maximal cones.

    Attributes:
        support (Cone): Cone covered by the chambers
        chambers (Tuple[Chamber, ...]): The maximal chambers
        lattice (Optional[Lattice]): Lattice the fan lives in, if known
    """
    support: Cone
    chambers: Tuple[Chamber, ...]
    lattice: Optional[Lattice] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "chambers", tuple(self.chambers))

        labels = [chamber.label for chamber in self.chambers]
        if len(set(labels)) != len(labels):
            raise FanError(f"chamber labels aren't distinct: {labels}")

        for chamber in self.chambers:
            if chamber.cone.ambient_dim != self.support.ambient_dim:
                raise DimensionMismatch(self.support.ambient_dim, chamber.cone.ambient_dim)

        if self.lattice is not None and self.lattice.rank != self.support.ambient_dim:
            raise DimensionMismatch(self.lattice.rank, self.support.ambient_dim)

    def __len__(self) -> int:
        return len(self.chambers)

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(chamber.label for chamber in self.chambers)

    def get(self, label: str) -> Chamber:
        """Get a chamber by its label.

        Raises:
            KeyError: If there's no such chamber.
        """
        for chamber in self.chambers:
            if chamber.label == label:
                return chamber

        raise KeyError(label)

    @classmethod
    def __transform_output__(cls, data: RawDataType) -> None:
        # the support is the effective cone of the model, it isn't repeated
        map_remove_keys(data, "support", "lattice")


class Location(NamedTuple):
    """A chamber containing a point."""
    label: str
    membership: Membership


class Wall(NamedTuple):
    """Codimension one intersection of two chambers.

    Attributes:
        cone (Cone): The wall
        labels (Tuple[str, str]): The two chambers meeting along the wall, sorted
    """
    cone: Cone
    labels: Tuple[str, str]
