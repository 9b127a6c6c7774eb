"""Verification and queries of chamber decompositions.

`verify_fan` certifies that the chambers of a `ChamberFan` decompose its
support without computing volumes:

(a) containment: every chamber lies in the support and spans it.
(b) disjointness: chamber interiors are pairwise disjoint.
(c) walls: every chamber facet which doesn't lie in the boundary of the
    support is covered by the neighbouring chambers on its other side.
(d) coverage: follows from (a) to (c) once the wall adjacency graph is
    connected.

Neighbouring chambers don't have to meet face to face. A facet may be
covered by several smaller pieces, which is checked recursively one
dimension lower with the same argument.
"""

import logging
from itertools import combinations
from typing import List, Sequence, Union

import networkx as nx

from .arith import RationalLike, dot, vector
from .cone import Cone, MembershipStatus, contains, faces, intersect, interior_point, is_subcone
from .errors import DimensionMismatch, FanError, LatticeMismatch
from .models import ChamberFan, CheckStatus, ClassVector, FanReport, Location, Wall

__all__ = ["verify_fan", "locate", "walls"]

log = logging.getLogger(__name__)


def _lies_in_boundary(face: Cone, region: Cone) -> bool:
    """Whether a face of a subcone lies in a facet of region."""
    generators = list(face.generators) + list(face.lineality)
    return any(all(dot(f, g) == 0 for g in generators) for f in region.facets)


def _is_covered(region: Cone, pieces: Sequence[Cone]) -> bool:
    """Whether pieces with disjoint interiors cover a region of their dimension.

    Every facet of a piece that isn't part of the boundary of the region has
    to be covered by the other pieces.
    """
    if not pieces:
        return False

    if region.dimension <= 1:
        return True

    for piece in pieces:
        for face in faces(piece):
            if _lies_in_boundary(face, region):
                continue

            neighbours = [intersect(face, other) for other in pieces if other is not piece]
            neighbours = [n for n in neighbours if n.dimension == face.dimension]
            if not _is_covered(face, neighbours):
                return False

    return True


def _status(ok: bool) -> CheckStatus:
    return CheckStatus.PASS if ok else CheckStatus.FAIL


def verify_fan(f: ChamberFan) -> FanReport:
    """Check that the chambers of a fan decompose its support.

    The verdict doesn't depend on the order of the chambers.

    Raises:
        FanError: If the fan has no chambers or its support isn't pointed.
    """
    if not f.chambers:
        raise FanError("fan has no chambers")

    support = f.support
    if not support.is_pointed:
        raise FanError("support of the fan isn't pointed")

    details: List[str] = []

    containment = True
    for chamber in f.chambers:
        if not is_subcone(chamber.cone, support):
            details.append(f"chamber {chamber.label} is not contained in the support")
            containment = False
        elif chamber.cone.dimension != support.dimension:
            details.append(f"chamber {chamber.label} has dimension {chamber.cone.dimension}, "
                           f"the support has {support.dimension}")
            containment = False

    log.debug(f"fan containment: {containment}")

    disjointness = True
    for a, b in combinations(f.chambers, 2):
        sample_a = contains(b.cone, interior_point(a.cone)).status == MembershipStatus.INTERIOR
        sample_b = contains(a.cone, interior_point(b.cone)).status == MembershipStatus.INTERIOR
        if sample_a or sample_b or intersect(a.cone, b.cone).dimension >= support.dimension:
            details.append(f"chambers {a.label} and {b.label} overlap")
            disjointness = False

    log.debug(f"fan disjointness: {disjointness}")

    graph = nx.Graph()
    graph.add_nodes_from(f.labels)

    wall_condition = True
    for chamber in f.chambers:
        for facet in faces(chamber.cone):
            if _lies_in_boundary(facet, support):
                continue

            pieces = []
            for other in f.chambers:
                if other is chamber:
                    continue

                piece = intersect(facet, other.cone)
                if piece.dimension == facet.dimension:
                    pieces.append(piece)
                    graph.add_edge(chamber.label, other.label)

            if not _is_covered(facet, pieces):
                details.append(f"facet {facet} of chamber {chamber.label} is not covered by neighbouring chambers")
                wall_condition = False

    log.debug(f"fan wall condition: {wall_condition}")

    if containment and disjointness and wall_condition:
        connected = nx.is_connected(graph)
        if not connected:
            details.append("the wall adjacency graph is not connected")
        coverage = _status(connected)
    else:
        coverage = CheckStatus.SKIPPED

    report = FanReport(_status(containment), _status(disjointness), _status(wall_condition), coverage, details)
    log.info(f"verified fan with {len(f.chambers)} chambers: {'pass' if report.passed else 'fail'}")
    return report


def locate(f: ChamberFan, x: Union[ClassVector, Sequence[RationalLike]]) -> List[Location]:
    """Find the chambers containing a class.

    Args:
        f: Fan to search
        x: Class or coordinate vector

    Returns:
        The chambers containing x with the location of x in each, in fan
        order. Empty if x lies outside the support.

    Raises:
        LatticeMismatch: If x is a class of a lattice other than the one of the fan.
        DimensionMismatch: If the coordinate vector has the wrong length.
    """
    if isinstance(x, ClassVector):
        if f.lattice is not None and x.lattice != f.lattice:
            raise LatticeMismatch(f.lattice, x.lattice)
        coords = x.coords
    else:
        coords = vector(x)

    if len(coords) != f.support.ambient_dim:
        raise DimensionMismatch(f.support.ambient_dim, len(coords))

    if not contains(f.support, coords):
        return []

    locations = []
    for chamber in f.chambers:
        membership = contains(chamber.cone, coords)
        if membership:
            locations.append(Location(chamber.label, membership))

    return locations


def walls(f: ChamberFan) -> List[Wall]:
    """Codimension one intersections of chambers.

    Returns:
        Every wall with the two chambers it separates, sorted by the
        generators of the wall and then by the labels.

    Raises:
        FanError: If the fan doesn't pass `verify_fan`.
    """
    report = verify_fan(f)
    if not report.passed:
        raise FanError("can't compute the walls of an invalid fan: " + "; ".join(report.details))

    result = []
    for a, b in combinations(f.chambers, 2):
        wall = intersect(a.cone, b.cone)
        if wall.dimension == f.support.dimension - 1:
            result.append(Wall(wall, tuple(sorted((a.label, b.label)))))

    result.sort(key=lambda w: (w.cone.generators, w.labels))
    return result
