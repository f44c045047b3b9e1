"""
Guarantee cache

Election-scoped memo for the compromise values that the FJR, FPJR and core
checkers (and the Greedy Cohesive Rule) evaluate over nested subset loops.

Design:
- Groups S and round sets R, T are plain int bitmasks internally
- The max-min value of (S, R) is found by a memoized demand search over the
  rounds of R; each round only offers candidates approved by some member of S
  plus one filler (the lowest-indexed candidate nobody in S approves)
- Search order is ascending candidate index, so the first suboutcome found is
  the lexicographically smallest one meeting the demands
- Everything cached here depends on the election only, never on an outcome,
  so one cache can serve many check calls on the same election
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from ..bitset import all_bits_mask, bitset_to_indices, masks_of_size, popcount
from ..election import Outcome, RoundSet, Suboutcome, TemporalElection
from ..errors import ResourceLimits

logger = logging.getLogger(__name__)


def droop_share(scope_size: int, group_size: int, n: int) -> int:
    """ceil((scope_size + 1) * group_size / n) - 1 in exact integer arithmetic."""
    return -(-(scope_size + 1) * group_size // n) - 1


@dataclass(frozen=True)
class Guarantee:
    """A compromise value together with the round sets that certify it."""

    value: int
    rounds: int = 0
    scope: Optional[int] = None


@dataclass(frozen=True)
class OutcomeProfile:
    """Outcome-dependent data shared by the checkers for one outcome."""

    picks: Tuple[int, ...]
    hits: Tuple[int, ...]
    sats: Tuple[int, ...]
    # at_least[k] = voters with satisfaction >= k, for k in 0..ell+1
    at_least: Tuple[int, ...]

    def group_satisfaction(self, group: int) -> int:
        return sum(1 for hit in self.hits if hit & group)

    def best_member(self, group: int) -> int:
        """max_{i in group} sat_i"""
        k = len(self.at_least) - 1
        while k > 0 and not group & self.at_least[k]:
            k -= 1
        return k

    def worst_member(self, group: int) -> int:
        """min_{i in group} sat_i"""
        k = 0
        while k + 1 < len(self.at_least) and not group & ~self.at_least[k + 1]:
            k += 1
        return k


class _DemandSearch:
    """Memoized search for a suboutcome on fixed rounds meeting per-member demands."""

    def __init__(self, cache: "GuaranteeCache", group: int, rounds: int):
        self.cache = cache
        self.members = bitset_to_indices(group)
        self.rounds = bitset_to_indices(rounds)
        position = {voter: p for p, voter in enumerate(self.members)}

        self.choices: List[List[Tuple[int, int]]] = []
        for r in self.rounds:
            options = []
            filler_added = False
            for c in range(cache.m):
                restricted = cache.approvers[r][c] & group
                if restricted:
                    bits = 0
                    for voter in bitset_to_indices(restricted):
                        bits |= 1 << position[voter]
                    options.append((c, bits))
                elif not filler_added:
                    options.append((c, 0))
                    filler_added = True
            self.choices.append(options)

        # Suffix bounds used for pruning
        k = len(self.rounds)
        self.cover = [0] * (k + 1)
        self.avail = [[0] * len(self.members) for _ in range(k + 1)]
        for idx in range(k - 1, -1, -1):
            self.cover[idx] = self.cover[idx + 1] + max(popcount(b) for _, b in self.choices[idx])
            union = 0
            for _, bits in self.choices[idx]:
                union |= bits
            for p in range(len(self.members)):
                self.avail[idx][p] = self.avail[idx + 1][p] + (union >> p & 1)
        self._memo: Dict[Tuple[int, Tuple[int, ...]], bool] = {}

    def feasible(self, idx: int, need: Tuple[int, ...]) -> bool:
        if not any(need):
            return True
        if idx == len(self.rounds):
            return False
        if sum(need) > self.cover[idx]:
            return False
        avail = self.avail[idx]
        if any(d > avail[p] for p, d in enumerate(need)):
            return False
        key = (idx, need)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        result = False
        for _, bits in self.choices[idx]:
            self.cache.suboutcomes_examined += 1
            if self.feasible(idx + 1, self._reduce(need, bits)):
                result = True
                break
        self._memo[key] = result
        return result

    def solve(self, need: Tuple[int, ...]) -> Optional[Tuple[int, ...]]:
        """Lexicographically smallest picks meeting need, or None."""
        if not self.feasible(0, need):
            return None
        picks = []
        for idx in range(len(self.rounds)):
            for c, bits in self.choices[idx]:
                reduced = self._reduce(need, bits)
                if self.feasible(idx + 1, reduced):
                    picks.append(c)
                    need = reduced
                    break
        return tuple(picks)

    def max_uniform(self) -> int:
        """Largest h such that every member can reach satisfaction h."""
        h = 0
        width = len(self.members)
        while h < len(self.rounds) and self.feasible(0, (h + 1,) * width):
            h += 1
        return h

    @staticmethod
    def _reduce(need: Tuple[int, ...], bits: int) -> Tuple[int, ...]:
        return tuple(d - 1 if d and bits >> p & 1 else d for p, d in enumerate(need))


class GuaranteeCache:
    """
    Memo tables for one election.

    Args:
        election: The election every cached value refers to
        limits: Resource caps checked by exhaustive callers
    """

    def __init__(self, election: TemporalElection, limits: Optional[ResourceLimits] = None):
        self.election = election
        self.limits = limits or ResourceLimits()
        self.n = election.n
        self.ell = election.ell
        self.m = election.m
        self.full_voters = all_bits_mask(self.n)
        self.full_rounds = all_bits_mask(self.ell)
        self.approvers = election.approver_masks
        self.ballots = election.ballot_masks

        self._intersections: Dict[int, Tuple[int, ...]] = {}
        self._agreement: Dict[int, int] = {}
        self._maxmin: Dict[Tuple[int, int], int] = {}
        self._mu: Dict[Tuple[int, int, int], Guarantee] = {}
        self._rho: Dict[Tuple[int, str], Guarantee] = {}
        self._plans: Dict[object, object] = {}
        self._scope_order: Optional[List[int]] = None

        self.subsets_examined = 0
        self.suboutcomes_examined = 0

    # -- resource checks -------------------------------------------------

    def require_exhaustive(self, what: str) -> None:
        """Refuse a 2^n * 2^ell scan beyond the configured caps."""
        self.limits.require_subsets(what, self.n, self.ell)
        self.limits.require_work(what, 2 ** self.n * 2 ** self.ell)

    # -- outcome data ----------------------------------------------------

    def profile(self, outcome: Outcome) -> OutcomeProfile:
        hits = tuple(self.approvers[r][c] for r, c in enumerate(outcome.picks))
        sats = [0] * self.n
        for hit in hits:
            for i in bitset_to_indices(hit):
                sats[i] += 1
        at_least = []
        for k in range(self.ell + 2):
            mask = 0
            for i, s in enumerate(sats):
                if s >= k:
                    mask |= 1 << i
            at_least.append(mask)
        return OutcomeProfile(tuple(outcome.picks), hits, tuple(sats), tuple(at_least))

    # -- agreement -------------------------------------------------------

    def intersections(self, group: int) -> Tuple[int, ...]:
        """Per round, the candidate bitmask approved by every member of group."""
        cached = self._intersections.get(group)
        if cached is not None:
            return cached
        low = group & -group
        voter = low.bit_length() - 1
        rest = group ^ low
        if rest == 0:
            result = self.ballots[voter]
        else:
            result = tuple(a & b for a, b in zip(self.intersections(rest), self.ballots[voter]))
        self._intersections[group] = result
        return result

    def agreement_mask(self, group: int) -> int:
        cached = self._agreement.get(group)
        if cached is None:
            cached = 0
            for r, common in enumerate(self.intersections(group)):
                if common:
                    cached |= 1 << r
            self._agreement[group] = cached
        return cached

    def alphas(self, group: int) -> List[int]:
        """Per round, the largest number of members approving a common candidate."""
        return [
            max(popcount(self.approvers[q][c] & group) for c in range(self.m))
            for q in range(self.ell)
        ]

    # -- max-min and demand search ----------------------------------------

    def guarantee_maxmin(self, group: int, rounds: int) -> int:
        """max over suboutcomes on rounds of the minimum member satisfaction."""
        key = (group, rounds)
        cached = self._maxmin.get(key)
        if cached is not None:
            return cached
        value = 0 if rounds == 0 else _DemandSearch(self, group, rounds).max_uniform()
        self._maxmin[key] = value
        return value

    def best_suboutcome(self, group: int, rounds: int) -> Tuple[int, Suboutcome]:
        """The max-min value on rounds and the lexicographically first suboutcome reaching it."""
        value = self.guarantee_maxmin(group, rounds)
        search = _DemandSearch(self, group, rounds)
        picks = search.solve((value,) * popcount(group))
        return value, Suboutcome(RoundSet(rounds, self.ell), picks)

    def deviation(self, group: int, rounds: int, demands: Sequence[int]) -> Optional[Suboutcome]:
        """
        A suboutcome on rounds giving every member at least its demand.

        demands are aligned with the members of group in ascending order.
        """
        search = _DemandSearch(self, group, rounds)
        picks = search.solve(tuple(max(0, d) for d in demands))
        if picks is None:
            return None
        return Suboutcome(RoundSet(rounds, self.ell), picks)

    # -- mu and rho ------------------------------------------------------

    def proportional_size(self, scope_size: int, group: int) -> int:
        return scope_size * popcount(group) // self.n

    def droop_size(self, scope_size: int, group: int) -> int:
        return min(scope_size, droop_share(scope_size, popcount(group), self.n))

    def mu(self, group: int, scope: int, size: Optional[int] = None) -> Guarantee:
        """
        min over R of the given size inside scope of the max-min value.

        The certificate's rounds are the first R (lexicographic) attaining the
        minimum; size defaults to floor(|scope| * |group| / n).
        """
        if size is None:
            size = self.proportional_size(popcount(scope), group)
        key = (group, scope, size)
        cached = self._mu.get(key)
        if cached is not None:
            return cached
        if size <= 0:
            result = Guarantee(0, 0, scope)
        else:
            result = None
            for rounds in masks_of_size(scope, size):
                value = self.guarantee_maxmin(group, rounds)
                if result is None or value < result.value:
                    result = Guarantee(value, rounds, scope)
                    if value == 0:
                        break
        self._mu[key] = result
        return result

    def _scopes(self) -> Iterator[int]:
        """Round sets ordered by size, then ascending bitmask."""
        if self._scope_order is None:
            self._scope_order = sorted(range(self.full_rounds + 1), key=lambda t: (popcount(t), t))
        return iter(self._scope_order)

    def _best_scope(self, group: int, size_of: Callable[[int, int], int], upper: int, tag: str) -> Guarantee:
        key = (group, tag)
        cached = self._rho.get(key)
        if cached is not None:
            return cached
        self.subsets_examined += 1
        best = Guarantee(0, 0, 0)
        for scope in self._scopes():
            size = size_of(popcount(scope), group)
            if size <= best.value:
                continue
            candidate = self.mu(group, scope, size)
            if candidate.value > best.value:
                best = candidate
                if best.value >= upper:
                    break
        self._rho[key] = best
        return best

    def rho(self, group: int, variant: str) -> Guarantee:
        """
        Compromise demand of a group.

        strong: max over |R| = floor(ell*|S|/n) of the max-min value
        standard: max over T of mu(S, T)
        weak: min over |R| = floor(ell*|S|/n) of the max-min value
        """
        size = self.proportional_size(self.ell, group)
        if variant == "standard":
            return self._best_scope(group, self.proportional_size, size, "standard")
        key = (group, variant)
        cached = self._rho.get(key)
        if cached is not None:
            return cached
        self.subsets_examined += 1
        if size == 0:
            result = Guarantee(0, 0, None)
        elif variant == "weak":
            found = self.mu(group, self.full_rounds, size)
            result = Guarantee(found.value, found.rounds, None)
        elif variant == "strong":
            result = None
            for rounds in masks_of_size(self.full_rounds, size):
                value = self.guarantee_maxmin(group, rounds)
                if result is None or value > result.value:
                    result = Guarantee(value, rounds, None)
                    if value >= size:
                        break
        else:
            raise ValueError(f"Unknown variant: {variant}")
        self._rho[key] = result
        return result

    def droop_demand(self, group: int) -> Guarantee:
        """max over T of the Droop-sized mu."""
        upper = self.droop_size(self.ell, group)
        return self._best_scope(group, self.droop_size, upper, "droop")

    # -- outcome-independent plans ---------------------------------------

    def plan(self, key: object, build: Callable[[], object]) -> object:
        """Memoize an outcome-independent precomputation under key."""
        cached = self._plans.get(key)
        if cached is None:
            cached = build()
            self._plans[key] = cached
            logger.debug("built plan %s for election with n=%d ell=%d", key, self.n, self.ell)
        return cached

    def groups(self) -> range:
        """Every non-empty group, ascending bitmask."""
        return range(1, self.full_voters + 1)

    def demanding_groups(self, tag: str, demand: Callable[[int], Guarantee]) -> List[int]:
        """Groups with a positive demand, ascending bitmask; the rest can never complain."""
        return self.plan(
            ("demanding", tag),
            lambda: [group for group in self.groups() if demand(group).value > 0],
        )
