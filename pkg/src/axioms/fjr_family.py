"""
FJR, FPJR and Droop-FJR checkers.

A group's demand is the best compromise it could enforce on a proportional
share of rounds (see GuaranteeCache.rho). FJR wants some member to reach the
demand, FPJR wants the group's collective satisfaction to reach it.
"""

import logging

from ..election import Outcome, RoundSet
from .base_checker import AxiomChecker, AxiomId, CheckReport, Variant, Witness
from .context import Guarantee, OutcomeProfile

logger = logging.getLogger(__name__)


class _CompromiseChecker(AxiomChecker):
    family = ""

    def get_family_name(self) -> str:
        return self.family

    def _achieved(self, profile: OutcomeProfile, group: int) -> int:
        raise NotImplementedError

    def _demand(self, group: int, variant: Variant) -> Guarantee:
        return self.cache.rho(group, variant.value)

    def _tag(self, variant: Variant) -> str:
        return variant.value

    def _upper(self, group: int) -> int:
        return self.cache.proportional_size(self.cache.ell, group)

    def _scan(self, outcome: Outcome, axiom: AxiomId, variant: Variant) -> CheckReport:
        self._begin()
        cache = self.cache
        cache.require_exhaustive(f"{self.family} scan")
        profile = cache.profile(outcome)
        groups = cache.demanding_groups(self._tag(variant), lambda g: self._demand(g, variant))
        for group in groups:
            cache.subsets_examined += 1
            achieved = self._achieved(profile, group)
            if self._upper(group) <= achieved:
                continue
            demand = self._demand(group, variant)
            if demand.value > achieved:
                return self._report(axiom, self._witness(group, demand))
        return self._report(axiom, None)

    def _witness(self, group: int, demand: Guarantee) -> Witness:
        _, deviation = self.cache.best_suboutcome(group, demand.rounds)
        scope = None if demand.scope is None else RoundSet(demand.scope, self.cache.ell)
        return Witness(
            self._voters(group),
            deviation.rounds,
            demand.value,
            deviation=deviation,
            scope=scope,
        )


class FJRFamilyChecker(_CompromiseChecker):
    family = "FJR"

    def check(self, outcome: Outcome, variant: Variant) -> CheckReport:
        return self._scan(outcome, AxiomId.of("FJR", variant), variant)

    def _achieved(self, profile: OutcomeProfile, group: int) -> int:
        return profile.best_member(group)


class FPJRFamilyChecker(_CompromiseChecker):
    family = "FPJR"

    def check(self, outcome: Outcome, variant: Variant) -> CheckReport:
        return self._scan(outcome, AxiomId.of("FPJR", variant), variant)

    def _achieved(self, profile: OutcomeProfile, group: int) -> int:
        return profile.group_satisfaction(group)


class DroopFJRChecker(FJRFamilyChecker):
    """FJR with Droop-sized round shares: |R| = ceil((|T|+1)*|S|/n) - 1, at most |T|."""

    family = "Droop-FJR"

    def check(self, outcome: Outcome, variant: Variant = Variant.STANDARD) -> CheckReport:
        return self._scan(outcome, AxiomId.DROOP_FJR, Variant.STANDARD)

    def _demand(self, group: int, variant: Variant) -> Guarantee:
        return self.cache.droop_demand(group)

    def _tag(self, variant: Variant) -> str:
        return "droop"

    def _upper(self, group: int) -> int:
        return self.cache.droop_size(self.cache.ell, group)
