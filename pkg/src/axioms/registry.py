"""Entry points: one function per axiom family plus the check() dispatcher."""

import logging
from typing import Dict, Optional, Type

from ..election import Outcome, TemporalElection, VoterSet, RoundSet
from ..errors import ElectionError, ResourceLimits
from .base_checker import AxiomChecker, AxiomId, CheckReport, Variant
from .context import GuaranteeCache
from .core_family import CoreFamilyChecker
from .ejr_plus import EJRPlusBruteForceChecker, EJRPlusChecker
from .fjr_family import DroopFJRChecker, FJRFamilyChecker, FPJRFamilyChecker
from .jr_family import DroopEJRChecker, EJRFamilyChecker, JRFamilyChecker, PJRFamilyChecker

logger = logging.getLogger(__name__)

CHECKERS: Dict[str, Type[AxiomChecker]] = {
    "JR": JRFamilyChecker,
    "PJR": PJRFamilyChecker,
    "EJR": EJRFamilyChecker,
    "EJR+": EJRPlusChecker,
    "FJR": FJRFamilyChecker,
    "FPJR": FPJRFamilyChecker,
    "Core": CoreFamilyChecker,
    "Droop-EJR": DroopEJRChecker,
    "Droop-FJR": DroopFJRChecker,
}


def _cache_for(
    election: TemporalElection,
    cache: Optional[GuaranteeCache],
    limits: Optional[ResourceLimits],
) -> GuaranteeCache:
    if cache is None:
        return GuaranteeCache(election, limits)
    if cache.election is not election and cache.election != election:
        raise ValueError("cache belongs to a different election")
    return cache


def _run(checker_type, election, outcome, variant, cache, limits, **kwargs) -> CheckReport:
    election.validate_outcome(outcome)
    checker = checker_type(_cache_for(election, cache, limits), **kwargs)
    report = checker.check(outcome, Variant.parse(variant))
    logger.debug("%s -> %s", report.axiom.value, "holds" if report.holds else "violated")
    return report


def check(
    election: TemporalElection,
    outcome: Outcome,
    axiom: "AxiomId | str",
    cache: Optional[GuaranteeCache] = None,
    limits: Optional[ResourceLimits] = None,
) -> CheckReport:
    """
    Decides one axiom on one outcome.

    Args:
        election: The election
        outcome: A full outcome for it
        axiom: AxiomId or a name such as "EJR+" (case-insensitive)
        cache: Optional GuaranteeCache to reuse across calls on the same election
        limits: Resource caps, used when no cache is given

    Returns:
        CheckReport with the first violation in canonical order, if any
    """
    axiom = AxiomId.parse(axiom)
    return _run(CHECKERS[axiom.family], election, outcome, axiom.variant, cache, limits)


def check_jr_family(election, outcome, variant, cache=None, limits=None, bruteforce=False) -> CheckReport:
    return _run(JRFamilyChecker, election, outcome, variant, cache, limits, bruteforce=bruteforce)


def check_pjr_family(election, outcome, variant, cache=None, limits=None) -> CheckReport:
    return _run(PJRFamilyChecker, election, outcome, variant, cache, limits)


def check_ejr_family(election, outcome, variant, cache=None, limits=None) -> CheckReport:
    return _run(EJRFamilyChecker, election, outcome, variant, cache, limits)


def check_ejr_plus(election, outcome, variant, cache=None, limits=None) -> CheckReport:
    return _run(EJRPlusChecker, election, outcome, variant, cache, limits)


def check_ejr_plus_bruteforce(election, outcome, variant, cache=None, limits=None) -> CheckReport:
    return _run(EJRPlusBruteForceChecker, election, outcome, variant, cache, limits)


def check_fjr_family(election, outcome, variant, cache=None, limits=None) -> CheckReport:
    return _run(FJRFamilyChecker, election, outcome, variant, cache, limits)


def check_fpjr_family(election, outcome, variant, cache=None, limits=None) -> CheckReport:
    return _run(FPJRFamilyChecker, election, outcome, variant, cache, limits)


def check_core_family(election, outcome, variant, cache=None, limits=None) -> CheckReport:
    return _run(CoreFamilyChecker, election, outcome, variant, cache, limits)


def check_droop_ejr(election, outcome, cache=None, limits=None) -> CheckReport:
    return _run(DroopEJRChecker, election, outcome, Variant.STANDARD, cache, limits)


def check_droop_fjr(election, outcome, cache=None, limits=None) -> CheckReport:
    return _run(DroopFJRChecker, election, outcome, Variant.STANDARD, cache, limits)


# Guarantee values on public VoterSet/RoundSet types


def _guarantee_cache(election, group, rounds, cache) -> GuaranteeCache:
    election.validate_voters(group)
    if rounds is not None and rounds.universe != election.ell:
        raise ElectionError(f"round set is over {rounds.universe} rounds, election has {election.ell}")
    cache = _cache_for(election, cache, None)
    cache.limits.require_subsets("guarantee", election.n, election.ell)
    return cache


def guarantee_maxmin(election: TemporalElection, group: VoterSet, rounds: RoundSet,
                     cache: Optional[GuaranteeCache] = None) -> int:
    return _guarantee_cache(election, group, rounds, cache).guarantee_maxmin(group.mask, rounds.mask)


def mu(election: TemporalElection, group: VoterSet, scope: RoundSet,
       cache: Optional[GuaranteeCache] = None) -> int:
    return _guarantee_cache(election, group, scope, cache).mu(group.mask, scope.mask).value


def rho(election: TemporalElection, group: VoterSet, variant: "Variant | str",
        cache: Optional[GuaranteeCache] = None) -> int:
    return _guarantee_cache(election, group, None, cache).rho(group.mask, Variant.parse(variant).value).value
