"""
JR, PJR, EJR and Droop-EJR checkers.

All four families guarantee something to groups that agree on a common
candidate in some set of rounds:

- weak: the group agrees in all ell rounds, threshold floor(ell*|S|/n)
- standard: the group agrees in t rounds, threshold floor(t*|S|/n)
- strong: the group agrees in t >= 1 rounds, threshold min(t, floor(ell*|S|/n))
- Droop: as standard with ceil((t+1)*|S|/n) - 1

JR caps the threshold at 1 and asks for any representation, PJR asks it of
the group's collective satisfaction and EJR of a single member.
"""

import logging
from typing import List, Optional, Tuple

from ..bitset import popcount, submasks_ascending
from ..election import Outcome
from .base_checker import AxiomChecker, AxiomId, CheckReport, Variant, Witness
from .context import GuaranteeCache, OutcomeProfile, droop_share

logger = logging.getLogger(__name__)

# (group, agreement rounds, threshold) with threshold >= 1
Demand = Tuple[int, int, int]


def agreement_threshold(cache: GuaranteeCache, group: int, rule: str) -> Tuple[int, int]:
    """The agreement rounds of group and its threshold under rule (0 when vacuous)."""
    agree = cache.agreement_mask(group)
    t = popcount(agree)
    size = popcount(group)
    n, ell = cache.n, cache.ell
    if rule == "weak":
        if agree != cache.full_rounds:
            return agree, 0
        return agree, ell * size // n
    if t == 0:
        return agree, 0
    if rule == "standard":
        return agree, t * size // n
    if rule == "strong":
        return agree, min(t, ell * size // n)
    if rule == "droop":
        return agree, droop_share(t, size, n)
    raise ValueError(f"Unknown threshold rule: {rule}")


def demand_plan(cache: GuaranteeCache, rule: str) -> List[Demand]:
    """Every group with a positive threshold, ascending bitmask."""

    def build() -> List[Demand]:
        cache.require_exhaustive(f"{rule} agreement scan")
        plan = []
        for group in cache.groups():
            agree, threshold = agreement_threshold(cache, group, rule)
            if threshold > 0:
                plan.append((group, agree, threshold))
        return plan

    return cache.plan(("agreement", rule), build)


class JRFamilyChecker(AxiomChecker):
    """
    wJR, JR and sJR.

    A JR violation is a group with zero satisfaction, so only subsets of the
    unsatisfied voters are searched. For sJR the threshold does not depend on
    t, so the largest unsatisfied group approving a pivot (r, c) decides it.
    """

    def __init__(self, cache: GuaranteeCache, bruteforce: bool = False):
        super().__init__(cache)
        self.bruteforce = bruteforce

    def get_family_name(self) -> str:
        return "JR"

    def check(self, outcome: Outcome, variant: Variant) -> CheckReport:
        self._begin()
        axiom = AxiomId.of("JR", variant)
        profile = self.cache.profile(outcome)
        unsatisfied = self.cache.full_voters & ~profile.at_least[1]
        if self.bruteforce:
            witness = self._scan(self.cache.groups(), unsatisfied, variant)
        elif variant is Variant.STRONG:
            witness = self._pivots(unsatisfied)
        else:
            witness = self._scan(submasks_ascending(unsatisfied), unsatisfied, variant)
        return self._report(axiom, witness)

    def _pivots(self, unsatisfied: int) -> Optional[Witness]:
        cache = self.cache
        for r in range(cache.ell):
            for c in range(cache.m):
                cache.subsets_examined += 1
                group = cache.approvers[r][c] & unsatisfied
                if group and cache.ell * popcount(group) // cache.n >= 1:
                    return Witness(
                        self._voters(group),
                        self._rounds(cache.agreement_mask(group)),
                        1,
                        pivot=(r, c),
                    )
        return None

    def _scan(self, groups, unsatisfied: int, variant: Variant) -> Optional[Witness]:
        if self.bruteforce or variant is not Variant.STRONG:
            self.cache.require_exhaustive("JR group scan")
        for group in groups:
            self.cache.subsets_examined += 1
            if group & ~unsatisfied:
                continue
            agree, threshold = agreement_threshold(self.cache, group, variant.value)
            if threshold >= 1:
                return Witness(self._voters(group), self._rounds(agree), 1)
        return None


class _DemandChecker(AxiomChecker):
    """Shared scan for the PJR, EJR and Droop-EJR families."""

    family = ""

    def get_family_name(self) -> str:
        return self.family

    def _violated(self, profile: OutcomeProfile, group: int, threshold: int) -> bool:
        raise NotImplementedError

    def _scan(self, outcome: Outcome, axiom: AxiomId, rule: str) -> CheckReport:
        self._begin()
        profile = self.cache.profile(outcome)
        witness = None
        for group, agree, threshold in demand_plan(self.cache, rule):
            self.cache.subsets_examined += 1
            if self._violated(profile, group, threshold):
                witness = Witness(self._voters(group), self._rounds(agree), threshold)
                break
        return self._report(axiom, witness)


class PJRFamilyChecker(_DemandChecker):
    family = "PJR"

    def check(self, outcome: Outcome, variant: Variant) -> CheckReport:
        return self._scan(outcome, AxiomId.of("PJR", variant), variant.value)

    def _violated(self, profile: OutcomeProfile, group: int, threshold: int) -> bool:
        return profile.group_satisfaction(group) < threshold


class EJRFamilyChecker(_DemandChecker):
    family = "EJR"

    def check(self, outcome: Outcome, variant: Variant) -> CheckReport:
        return self._scan(outcome, AxiomId.of("EJR", variant), variant.value)

    def _violated(self, profile: OutcomeProfile, group: int, threshold: int) -> bool:
        # no member reaches the threshold
        return not group & profile.at_least[threshold]


class DroopEJRChecker(EJRFamilyChecker):
    family = "Droop-EJR"

    def check(self, outcome: Outcome, variant: Variant = Variant.STANDARD) -> CheckReport:
        return self._scan(outcome, AxiomId.DROOP_EJR, "droop")
