"""
EJR+ checkers (weak, standard and strong).

A violation consists of a group S, a pivot round r where every member of S
approves some candidate c but the outcome picks a candidate outside the
common approval set, and no member of S reaching the group's threshold.

The polynomial checker only looks at the groups
S(r, c, lam) = {i : c in a_{i,r}, sat_i < lam}; every violating group is
contained in one of them with the same pivot, and cohesion and thresholds
only grow with the group.
"""

import logging
from typing import Dict, List, Optional, Tuple

from ..bitset import bitset_to_indices, popcount
from ..election import Outcome
from .base_checker import AxiomChecker, AxiomId, CheckReport, Variant, Witness
from .context import GuaranteeCache, OutcomeProfile

logger = logging.getLogger(__name__)


def threshold_cap(cache: GuaranteeCache, variant: Variant) -> int:
    """Largest threshold any group can be owed; 0 makes the axiom vacuous."""

    def build() -> int:
        n, ell = cache.n, cache.ell
        if variant is Variant.STRONG:
            widest = max(popcount(mask) for row in cache.approvers for mask in row)
            return min(ell, ell * widest // n)
        alphas = cache.alphas(cache.full_voters)
        if variant is Variant.WEAK:
            return ell * min(alphas) // n
        ranked = sorted(alphas, reverse=True)
        return max((q + 1) * ranked[q] // n for q in range(ell))

    return cache.plan(("ejr+cap", variant), build)


class EJRPlusChecker(AxiomChecker):
    def get_family_name(self) -> str:
        return "EJR+"

    def check(self, outcome: Outcome, variant: Variant) -> CheckReport:
        self._begin()
        axiom = AxiomId.of("EJR+", variant)
        cache = self.cache
        profile = cache.profile(outcome)
        cap = threshold_cap(cache, variant)
        # below[lam] = voters with sat < lam
        below = [cache.full_voters & ~profile.at_least[lam] for lam in range(cache.ell + 1)]
        alpha_memo: Dict[int, List[int]] = {}

        for r, picked in enumerate(profile.picks):
            winners = cache.approvers[r][picked]
            for c in range(cache.m):
                if c == picked or not cache.approvers[r][c]:
                    continue
                for lam in range(1, cap + 1):
                    group = cache.approvers[r][c] & below[lam]
                    cache.subsets_examined += 1
                    if not group or not group & ~winners:
                        continue
                    found = self._evaluate(group, lam, variant, alpha_memo)
                    if found is not None:
                        rounds, threshold, cohesion = found
                        witness = Witness(
                            self._voters(group),
                            self._rounds(rounds or 1 << r),
                            threshold,
                            cohesion=cohesion,
                            pivot=(r, c),
                        )
                        return self._report(axiom, witness)
        return self._report(axiom, None)

    def _evaluate(
        self, group: int, lam: int, variant: Variant, memo: Dict[int, List[int]]
    ) -> Optional[Tuple[int, int, Optional[Tuple[int, int]]]]:
        cache = self.cache
        n, ell = cache.n, cache.ell
        if variant is Variant.STRONG:
            threshold = ell * popcount(group) // n
            if threshold >= lam:
                return 0, threshold, None
            return None

        alphas = memo.get(group)
        if alphas is None:
            alphas = memo[group] = cache.alphas(group)

        if variant is Variant.WEAK:
            sigma = min(alphas)
            threshold = ell * sigma // n
            if threshold >= lam:
                return cache.full_rounds, threshold, (sigma, ell)
            return None

        order = sorted(range(ell), key=lambda q: (-alphas[q], q))
        for tau in range(1, ell + 1):
            sigma = alphas[order[tau - 1]]
            threshold = tau * sigma // n
            if threshold >= lam:
                rounds = 0
                for q in order[:tau]:
                    rounds |= 1 << q
                return rounds, threshold, (sigma, tau)
        return None


class EJRPlusBruteForceChecker(AxiomChecker):
    """
    EJR+ by enumerating every group and pivot round.

    Thresholds are the maximum of floor(tau*sigma/n) over all (sigma, tau) for
    which the group is cohesive, taken over sigma in [n] and tau in [ell].
    """

    def get_family_name(self) -> str:
        return "EJR+"

    def check(self, outcome: Outcome, variant: Variant) -> CheckReport:
        self._begin()
        cache = self.cache
        cache.require_exhaustive("EJR+ brute force")
        axiom = AxiomId.of("EJR+", variant)
        profile = cache.profile(outcome)
        for group in cache.groups():
            cache.subsets_examined += 1
            common = cache.intersections(group)
            for r in range(cache.ell):
                if not common[r] or common[r] >> profile.picks[r] & 1:
                    continue
                rounds, threshold, cohesion = self._threshold(group, r, variant)
                if threshold >= 1 and not group & profile.at_least[threshold]:
                    c = bitset_to_indices(common[r])[0]
                    witness = Witness(
                        self._voters(group),
                        self._rounds(rounds),
                        threshold,
                        cohesion=cohesion,
                        pivot=(r, c),
                    )
                    return self._report(axiom, witness)
        return self._report(axiom, None)

    def _threshold(self, group: int, r: int, variant: Variant) -> Tuple[int, int, Optional[Tuple[int, int]]]:
        cache = self.cache
        n, ell = cache.n, cache.ell
        if variant is Variant.STRONG:
            return 1 << r, ell * popcount(group) // n, None
        alphas = cache.alphas(group)
        taus = range(ell, ell + 1) if variant is Variant.WEAK else range(1, ell + 1)
        best = (0, 0, None)
        for sigma in range(1, n + 1):
            qualifying = [q for q in range(ell) if alphas[q] >= sigma]
            for tau in taus:
                if len(qualifying) < tau:
                    continue
                value = tau * sigma // n
                if value > best[1]:
                    rounds = 0
                    for q in qualifying[:tau]:
                        rounds |= 1 << q
                    best = (rounds, value, (sigma, tau))
        return best
