"""Lefschetz divisorial equivalence and birational twins.

Given an embedding i: Y ↪ X, the pullback i* carries divisor classes of X to
divisor classes of Y. The pair is

- Lefschetz divisorially equivalent if i* is an isomorphism carrying the
  effective, movable and nef cones of X onto those of Y.
- birational twins if in addition the pullback of every chamber of the Mori
  chamber decomposition of X is a chamber of the one of Y.

Both models are assumed to be Mori dream spaces whenever they carry a chamber
decomposition. That assumption isn't checkable from lattice data.
"""

import logging
from typing import List, Optional, Tuple

from .cone import Cone, equals
from .errors import MissingData
from .models import ChamberFan, ChamberMatch, CheckStatus, EquivalenceReport, LatticeMap, TwinPair, Verdict, \
    apply_map_to_cone

__all__ = ["check_divisorial_equivalence", "check_birational_twins", "match_chambers"]

log = logging.getLogger(__name__)


def _match_cone(f: LatticeMap, ambient: Optional[Cone], sub: Optional[Cone]) -> CheckStatus:
    if ambient is None or sub is None:
        return CheckStatus.SKIPPED

    return CheckStatus.PASS if equals(apply_map_to_cone(f, ambient), sub) else CheckStatus.FAIL


def match_chambers(f: LatticeMap, ambient: ChamberFan, sub: ChamberFan) -> Tuple[CheckStatus, List[ChamberMatch]]:
    """Match the chambers of two fans under a lattice map.

    Chambers are compared as cones, labels are ignored.

    Returns:
        `CheckStatus.PASS` if the pullback induces a bijection of the chambers,
        and the correspondence with unmatched chambers of either side.
    """
    unmatched = list(sub.chambers)
    matches = []

    for chamber in ambient.chambers:
        image = apply_map_to_cone(f, chamber.cone)
        partner = next((candidate for candidate in unmatched if equals(image, candidate.cone)), None)

        if partner is None:
            log.debug(f"chamber {chamber.label} has no counterpart")
            matches.append(ChamberMatch(chamber.label, None))
        else:
            unmatched.remove(partner)
            matches.append(ChamberMatch(chamber.label, partner.label))

    matches.extend(ChamberMatch(None, chamber.label) for chamber in unmatched)

    status = CheckStatus.PASS if all(match.matched for match in matches) else CheckStatus.FAIL
    return status, matches


def _verdict(statuses: List[CheckStatus], success: Verdict) -> Verdict:
    if CheckStatus.FAIL in statuses:
        return Verdict.FAIL
    elif CheckStatus.SKIPPED in statuses:
        return Verdict.PARTIAL
    else:
        return success


def check_divisorial_equivalence(pair: TwinPair) -> EquivalenceReport:
    """Check whether the pullback carries Eff, Mov and Nef onto each other.

    Cones missing on either side are skipped, which makes the verdict at
    most `Verdict.PARTIAL`. A pullback which isn't invertible fails the
    check without comparing any cones.
    """
    ambient, sub, f = pair.ambient, pair.sub, pair.pullback

    if not f.is_isomorphism:
        log.info(f"{pair}: pullback is not an isomorphism")
        return EquivalenceReport(ambient.name, sub.name, False, False,
                                 CheckStatus.FAIL, CheckStatus.FAIL, CheckStatus.FAIL, CheckStatus.SKIPPED,
                                 Verdict.FAIL)

    eff = _match_cone(f, ambient.eff, sub.eff)
    mov = _match_cone(f, ambient.mov, sub.mov)
    nef = _match_cone(f, ambient.nef, sub.nef)

    verdict = _verdict([eff, mov, nef], Verdict.DIVISORIALLY_EQUIVALENT)
    log.info(f"{pair}: {verdict}")

    return EquivalenceReport(ambient.name, sub.name, True, f.is_unimodular, eff, mov, nef, CheckStatus.SKIPPED,
                             verdict)


def check_birational_twins(pair: TwinPair) -> EquivalenceReport:
    """Check whether an embedded pair are birational twins.

    Runs the divisorial checks and additionally matches the chambers of the
    Mori chamber decompositions.

    Raises:
        MissingData: If either model has no chamber decomposition.
    """
    for model in (pair.ambient, pair.sub):
        if model.mcd is None:
            raise MissingData(model.name, "mcd")

    report = check_divisorial_equivalence(pair)
    if not report.map_is_isomorphism:
        return report

    mcd, matches = match_chambers(pair.pullback, pair.ambient.mcd, pair.sub.mcd)

    report.mcd_match = mcd
    report.chamber_matches = matches
    report.verdict = _verdict([report.eff_match, report.mov_match, report.nef_match, mcd], Verdict.BIRATIONAL_TWINS)

    log.info(f"{pair}: {report.verdict}")
    return report
