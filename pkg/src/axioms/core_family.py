"""
Core stability checkers (wCore, Core, sCore).

A deviation of group S on rounds R is profitable when every member of S
is strictly more satisfied by it on R alone than by the full outcome.

- strong: no S and R with |R| = floor(ell*|S|/n) admit a profitable deviation
- standard: for every S and T, some R inside T with |R| = floor(|T|*|S|/n)
  admits none
- weak: for every S, some R with |R| = floor(ell*|S|/n) admits none

Witness threshold is |R|, the share of rounds the group may claim.
"""

import logging
from typing import List, Optional

from ..bitset import bitset_to_indices, masks_of_size, popcount
from ..election import Outcome
from .base_checker import AxiomChecker, AxiomId, CheckReport, Variant, Witness
from .context import OutcomeProfile

logger = logging.getLogger(__name__)


class CoreFamilyChecker(AxiomChecker):
    def get_family_name(self) -> str:
        return "Core"

    def check(self, outcome: Outcome, variant: Variant) -> CheckReport:
        self._begin()
        cache = self.cache
        cache.require_exhaustive("core scan")
        axiom = AxiomId.of("Core", variant)
        profile = cache.profile(outcome)
        tag = variant.value
        for group in cache.demanding_groups(tag, lambda g: cache.rho(g, tag)):
            cache.subsets_examined += 1
            floor = profile.worst_member(group)
            # every profitable deviation gives each member more than the least satisfied one has
            if cache.rho(group, tag).value <= floor:
                continue
            demands = [profile.sats[i] + 1 for i in bitset_to_indices(group)]
            if variant is Variant.STANDARD:
                witness = self._standard(group, demands, floor)
            else:
                size = cache.proportional_size(cache.ell, group)
                witness = self._within(group, demands, cache.full_rounds, size, variant is Variant.STRONG)
            if witness is not None:
                return self._report(axiom, witness)
        return self._report(axiom, None)

    def _standard(self, group: int, demands: List[int], floor: int) -> Optional[Witness]:
        cache = self.cache
        for scope in range(1, cache.full_rounds + 1):
            size = cache.proportional_size(popcount(scope), group)
            if size == 0 or max(demands) > size:
                continue
            if cache.mu(group, scope).value <= floor:
                continue
            witness = self._within(group, demands, scope, size, False)
            if witness is not None:
                return Witness(
                    witness.group,
                    witness.rounds,
                    witness.threshold,
                    deviation=witness.deviation,
                    scope=self._rounds(scope),
                )
        return None

    def _within(self, group: int, demands: List[int], scope: int, size: int, any_share: bool) -> Optional[Witness]:
        """
        Look for profitable deviations on the size-subsets of scope.

        With any_share one profitable share suffices; otherwise every share
        must admit one, and the first share's deviation is reported.
        """
        if size == 0 or max(demands) > size:
            return None
        first = None
        for rounds in masks_of_size(scope, size):
            deviation = self.cache.deviation(group, rounds, demands)
            if deviation is None:
                if not any_share:
                    return None
                continue
            if first is None:
                first = deviation
            if any_share:
                break
        if first is None:
            return None
        return Witness(self._voters(group), first.rounds, size, deviation=first)
