"""
Local-search PAV

An outcome is epsilon-locally optimal when no outcome differing from it in
exactly one round has a harmonic score more than epsilon higher. The search
starts from the most-approved candidate of every round and repeatedly makes
the best single-round swap while it gains more than epsilon.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from math import ceil, log
from typing import List, Optional, Sequence, Tuple

from ..bitset import popcount
from ..election import Outcome, TemporalElection, satisfaction_profile
from ..errors import RuleError
from .base_rule import RuleConfig, RuleTrace, SwapStep, VotingRule

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def harmonic(k: int) -> Fraction:
    """1 + 1/2 + ... + 1/k"""
    return sum((Fraction(1, j) for j in range(1, k + 1)), Fraction(0))


def harmonic_score(election: TemporalElection, outcome: Outcome) -> Fraction:
    """Sum over voters of the harmonic number of their satisfaction."""
    return sum((harmonic(s) for s in satisfaction_profile(election, outcome)), Fraction(0))


def most_approved_outcome(election: TemporalElection) -> Outcome:
    picks = []
    for r in range(election.ell):
        counts = [popcount(mask) for mask in election.approver_masks[r]]
        picks.append(counts.index(max(counts)))
    return Outcome(tuple(picks))


def swap_bound(election: TemporalElection, epsilon: Fraction) -> int:
    """Upper bound on accepted swaps: the score never exceeds n*(1 + ln ell)."""
    return ceil(election.n * (1 + log(election.ell)) / epsilon)


def is_local_optimum(election: TemporalElection, outcome: Outcome, epsilon: Fraction) -> bool:
    """Scans every single-round swap and compares harmonic scores directly."""
    base = harmonic_score(election, outcome)
    for r in range(election.ell):
        for c in range(election.m):
            if c == outcome.picks[r]:
                continue
            picks = list(outcome.picks)
            picks[r] = c
            if harmonic_score(election, Outcome(tuple(picks))) > base + epsilon:
                return False
    return True


def _swap_gain(election: TemporalElection, sats: Sequence[int], r: int, old: int, new: int) -> Fraction:
    gain = Fraction(0)
    for i, row in enumerate(election.approvals):
        cell = row[r]
        if new in cell and old not in cell:
            gain += Fraction(1, sats[i] + 1)
        elif old in cell and new not in cell:
            gain -= Fraction(1, sats[i])
    return gain


class LocalSearchPAV(VotingRule):
    """Steepest-ascent local search on the harmonic score."""

    def get_rule_name(self) -> str:
        return "lspav"

    def solve(self, election: TemporalElection) -> Tuple[Outcome, RuleTrace]:
        self.config.validate(election.ell)
        epsilon = self.config.epsilon_for(election.ell)
        initial = self.config.initial or most_approved_outcome(election)
        election.validate_outcome(initial)
        limit = self.config.max_iterations
        if limit is None:
            limit = swap_bound(election, epsilon)

        picks: List[int] = list(initial.picks)
        sats = list(satisfaction_profile(election, initial))
        steps: List[SwapStep] = []

        while True:
            best: Optional[Tuple[Fraction, int, int]] = None
            for r in range(election.ell):
                old = picks[r]
                for c in range(election.m):
                    if c == old:
                        continue
                    gain = _swap_gain(election, sats, r, old, c)
                    if best is None or gain > best[0]:
                        best = (gain, r, c)
            if best is None or best[0] <= epsilon:
                break
            if len(steps) >= limit:
                raise RuleError(f"lsPAV exceeded {limit} swaps")

            gain, r, new = best
            old = picks[r]
            for i, row in enumerate(election.approvals):
                cell = row[r]
                sats[i] += (new in cell) - (old in cell)
            picks[r] = new
            steps.append(SwapStep(r, old, new, gain))
            logger.debug("round %d: %s -> %s (gain %s)", r + 1, old, new, gain)

        outcome = Outcome(tuple(picks))
        if not is_local_optimum(election, outcome, epsilon):
            raise RuleError(f"lsPAV stopped at {outcome.picks}, which is not {epsilon}-locally optimal")
        logger.info("lsPAV finished after %d swaps", len(steps))
        return outcome, RuleTrace("lspav", initial=initial, steps=tuple(steps))


def lspav(election: TemporalElection, config: Optional[RuleConfig] = None) -> Tuple[Outcome, RuleTrace]:
    return LocalSearchPAV(config).solve(election)
