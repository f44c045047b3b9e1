"""
Greedy Cohesive Rule

Stage 1 partitions the voters: it repeatedly takes, among the voters still
unassigned, the group with the largest compromise demand max_T mu_S(T)
together with the round set T that yields it. Stage 2 serves the groups in
order of increasing |T|: each gets floor(|T|*|S|/n) of its still-free rounds
inside T and fills them with its best max-min suboutcome. Rounds nobody
claims keep the filler candidate (index 0).
"""

import logging
from typing import List, Optional, Tuple

from ..axioms.context import GuaranteeCache
from ..bitset import bitset_from_indices, bitset_to_indices, popcount, submasks_ascending
from ..election import Outcome, RoundSet, TemporalElection, VoterSet
from ..errors import ResourceLimits, RuleError
from .base_rule import GroupStep, RuleConfig, RuleTrace, VotingRule

logger = logging.getLogger(__name__)

FILLER = 0


class GreedyCohesiveRule(VotingRule):
    def __init__(
        self,
        config: Optional[RuleConfig] = None,
        cache: Optional[GuaranteeCache] = None,
        limits: Optional[ResourceLimits] = None,
    ):
        super().__init__(config)
        self.cache = cache
        self.limits = limits

    def get_rule_name(self) -> str:
        return "gcr"

    def solve(self, election: TemporalElection) -> Tuple[Outcome, RuleTrace]:
        cache = self.cache or GuaranteeCache(election, self.limits)
        cache.limits.require_subsets("GCR", election.n, election.ell)
        cache.limits.require_work("GCR", election.n * 2 ** election.n * 3 ** election.ell)

        partition = self._partition(cache)
        steps, picks, order = self._serve(cache, partition)

        covered = 0
        for step in steps:
            if covered & step.group.mask:
                raise RuleError("GCR groups overlap")
            covered |= step.group.mask
        if covered != cache.full_voters:
            raise RuleError("GCR groups do not cover every voter")

        outcome = Outcome(tuple(picks))
        trace = RuleTrace("gcr", groups=tuple(steps), service_order=tuple(order), filler=FILLER)
        return outcome, trace

    def _partition(self, cache: GuaranteeCache) -> List[Tuple[int, int, int]]:
        remaining = cache.full_voters
        partition = []
        while remaining:
            best_key = None
            best = None
            for group in submasks_ascending(remaining):
                demand = cache.rho(group, "standard")
                key = (demand.value, popcount(group), -group)
                if best_key is None or key > best_key:
                    best_key, best = key, (group, demand.scope or 0, demand.value)
            group, scope, value = best
            logger.debug("group %s claims rounds %s with demand %d",
                         bitset_to_indices(group), bitset_to_indices(scope), value)
            partition.append(best)
            remaining &= ~group
        return partition

    def _serve(self, cache: GuaranteeCache, partition):
        picks = [FILLER] * cache.ell
        free = cache.full_rounds
        order = sorted(range(len(partition)), key=lambda i: (popcount(partition[i][1]), i))
        served = {}
        for i in order:
            group, scope, value = partition[i]
            size = cache.proportional_size(popcount(scope), group)
            available = bitset_to_indices(scope & free)
            if len(available) < size:
                raise RuleError(
                    f"GCR group {i + 1} needs {size} rounds but only {len(available)} are free"
                )
            rounds = bitset_from_indices(available[:size])
            suboutcome = None
            if size:
                _, suboutcome = cache.best_suboutcome(group, rounds)
                for r, c in suboutcome.items():
                    picks[r] = c
            free &= ~rounds
            served[i] = GroupStep(
                VoterSet(group, cache.n),
                RoundSet(scope, cache.ell),
                value,
                RoundSet(rounds, cache.ell),
                suboutcome,
            )
        steps = [served[i] for i in range(len(partition))]
        return steps, picks, order


def gcr(
    election: TemporalElection,
    cache: Optional[GuaranteeCache] = None,
    limits: Optional[ResourceLimits] = None,
) -> Tuple[Outcome, RuleTrace]:
    return GreedyCohesiveRule(cache=cache, limits=limits).solve(election)
