"""Reports produced by the fan verifier and the twin checks."""

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional

__all__ = ["CheckStatus", "Verdict", "ChamberMatch", "EquivalenceReport", "FanReport"]


class CheckStatus(Enum):
    """Outcome of a single check."""
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped-missing-data"

    def __str__(self) -> str:
        return self.value


class Verdict(Enum):
    """Overall outcome of a twin check.

    Attributes:
        BIRATIONAL_TWINS: Divisorially equivalent and the chamber decompositions correspond.
        DIVISORIALLY_EQUIVALENT: Effective, movable and nef cones correspond.
        PARTIAL: Nothing failed but some data was missing.
        FAIL: At least one check failed.
    """
    BIRATIONAL_TWINS = "birational_twins"
    DIVISORIALLY_EQUIVALENT = "divisorially_equivalent"
    PARTIAL = "partial"
    FAIL = "fail"

    def __str__(self) -> str:
        return self.value


@dataclass
class ChamberMatch:
    """Correspondence of one chamber under the pullback.

    Exactly one of the labels is `None` for unmatched chambers.

    Attributes:
        ambient_label (Optional[str]): Chamber of the ambient model
        sub_label (Optional[str]): Chamber of the sub model equal to the pullback
            of the ambient chamber
    """
    ambient_label: Optional[str]
    sub_label: Optional[str]

    def __str__(self) -> str:
        return f"{self.ambient_label or '-'} -> {self.sub_label or '-'}"

    @property
    def matched(self) -> bool:
        return self.ambient_label is not None and self.sub_label is not None


@dataclass
class EquivalenceReport:
    """Result of `check_divisorial_equivalence` or `check_birational_twins`.

    Attributes:
        ambient (str): Name of the ambient model
        sub (str): Name of the sub model
        map_is_isomorphism (bool): Whether the pullback is invertible over the rationals
        map_is_unimodular (bool): Whether the pullback is invertible over the integers
        eff_match (CheckStatus): Pullback of the effective cone
        mov_match (CheckStatus): Pullback of the movable cone
        nef_match (CheckStatus): Pullback of the nef cone
        mcd_match (CheckStatus): Pullback of the chamber decomposition.
            `CheckStatus.SKIPPED` for the divisorial check.
        chamber_matches (List[ChamberMatch]): Chamber correspondence, empty
            unless the chamber decompositions were compared
        verdict (Verdict): Overall outcome
    """
    ambient: str
    sub: str
    map_is_isomorphism: bool
    map_is_unimodular: bool
    eff_match: CheckStatus
    mov_match: CheckStatus
    nef_match: CheckStatus
    mcd_match: CheckStatus
    verdict: Verdict
    chamber_matches: List[ChamberMatch] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.verdict in (Verdict.BIRATIONAL_TWINS, Verdict.DIVISORIALLY_EQUIVALENT)


@dataclass
class FanReport:
    """Result of `moricone.fan.verify_fan`.

    Attributes:
        containment (CheckStatus): Every chamber lies in the support and has its dimension
        disjointness (CheckStatus): Chamber interiors are pairwise disjoint
        walls (CheckStatus): Every inner chamber facet is covered by neighbouring chambers
        coverage (CheckStatus): The chambers cover the support. Derived from the
            other checks and the connectivity of the wall adjacency graph,
            skipped if one of them failed.
        details (List[str]): Human readable description of every failure
    """
    containment: CheckStatus
    disjointness: CheckStatus
    walls: CheckStatus
    coverage: CheckStatus
    details: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(status == CheckStatus.PASS
                   for status in (self.containment, self.disjointness, self.walls, self.coverage))
