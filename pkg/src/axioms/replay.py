"""
Witness replay

Re-evaluates a reported violation straight from the axiom definitions, by
literal enumeration over candidate tuples with itertools. Shares nothing
with the memoized search in GuaranteeCache, so it can serve as an oracle for
it on small elections.
"""

from functools import lru_cache
from itertools import combinations, product
from typing import Dict, Sequence, Tuple

from ..election import Outcome, TemporalElection, agreement_candidates
from .base_checker import AxiomId, CheckReport, Variant, Witness


def _sat_i(election: TemporalElection, voter: int, assignments: Dict[int, int]) -> int:
    return sum(1 for r, c in assignments.items() if c in election.approvals[voter][r])


def _sat_group(election: TemporalElection, group: Sequence[int], assignments: Dict[int, int]) -> int:
    return sum(
        1 for r, c in assignments.items() if any(c in election.approvals[i][r] for i in group)
    )


class _Literal:
    """Brute-force compromise values for one election and group."""

    def __init__(self, election: TemporalElection, group: Tuple[int, ...]):
        self.election = election
        self.group = group
        self.maxmin = lru_cache(maxsize=None)(self._maxmin)

    def _maxmin(self, rounds: Tuple[int, ...]) -> int:
        if not rounds:
            return 0
        best = 0
        for picks in product(range(self.election.m), repeat=len(rounds)):
            assignments = dict(zip(rounds, picks))
            best = max(best, min(_sat_i(self.election, i, assignments) for i in self.group))
        return best

    def mu(self, scope: Tuple[int, ...], size: int) -> int:
        if size <= 0:
            return 0
        return min(self.maxmin(rounds) for rounds in combinations(scope, size))

    def demand(self, variant: Variant, droop: bool = False) -> int:
        n, ell = self.election.n, self.election.ell
        size = ell * len(self.group) // n
        everything = tuple(range(ell))
        if droop or variant is Variant.STANDARD:
            best = 0
            for t in range(ell + 1):
                for scope in combinations(everything, t):
                    if droop:
                        k = min(t, -(-(t + 1) * len(self.group) // n) - 1)
                    else:
                        k = t * len(self.group) // n
                    best = max(best, self.mu(scope, k))
            return best
        if size == 0:
            return 0
        values = [self.maxmin(rounds) for rounds in combinations(everything, size)]
        return max(values) if variant is Variant.STRONG else min(values)

    def profitable(self, rounds: Tuple[int, ...], outcome: Outcome) -> bool:
        """Some suboutcome on rounds makes every member strictly better off."""
        full = dict(enumerate(outcome.picks))
        current = [_sat_i(self.election, i, full) for i in self.group]
        for picks in product(range(self.election.m), repeat=len(rounds)):
            assignments = dict(zip(rounds, picks))
            if all(_sat_i(self.election, i, assignments) > s for i, s in zip(self.group, current)):
                return True
        return False


def _replay_agreement(election, outcome, witness, axiom) -> bool:
    group = tuple(witness.group)
    rounds = tuple(witness.rounds)
    n, ell = election.n, election.ell
    if any(not agreement_candidates(election, witness.group, r) for r in rounds):
        return False
    t = len(rounds)
    size = len(group)
    if axiom is AxiomId.DROOP_EJR:
        base = -(-(t + 1) * size // n) - 1 if t else 0
    elif axiom.variant is Variant.WEAK:
        base = ell * size // n if t == ell else 0
    elif axiom.variant is Variant.STANDARD:
        base = t * size // n
    else:
        base = min(t, ell * size // n)
    threshold = min(1, base) if axiom.family == "JR" else base
    if threshold < 1 or witness.threshold != threshold:
        return False
    full = dict(enumerate(outcome.picks))
    if axiom.family == "JR":
        return _sat_group(election, group, full) == 0
    if axiom.family == "PJR":
        return _sat_group(election, group, full) < threshold
    return all(_sat_i(election, i, full) < threshold for i in group)


def _replay_ejr_plus(election, outcome, witness, axiom) -> bool:
    group = tuple(witness.group)
    n, ell = election.n, election.ell
    if witness.pivot is None:
        return False
    r, c = witness.pivot
    common = agreement_candidates(election, witness.group, r)
    if c not in common or outcome.picks[r] in common:
        return False
    if axiom.variant is Variant.STRONG:
        threshold = ell * len(group) // n
    else:
        if witness.cohesion is None:
            return False
        sigma, tau = witness.cohesion
        rounds = tuple(witness.rounds)
        if len(rounds) != tau or (axiom.variant is Variant.WEAK and tau != ell):
            return False
        for q in rounds:
            counts = [sum(1 for i in group if d in election.approvals[i][q]) for d in range(election.m)]
            if max(counts) < sigma:
                return False
        threshold = tau * sigma // n
    full = dict(enumerate(outcome.picks))
    return (
        threshold >= 1
        and witness.threshold == threshold
        and all(_sat_i(election, i, full) < threshold for i in group)
    )


def _replay_compromise(election, outcome, witness, axiom) -> bool:
    group = tuple(witness.group)
    literal = _Literal(election, group)
    droop = axiom is AxiomId.DROOP_FJR
    demand = literal.demand(axiom.variant, droop=droop)
    if demand < 1 or witness.threshold != demand:
        return False
    if witness.deviation is not None:
        offered = witness.deviation.assignments
        if min(_sat_i(election, i, offered) for i in group) < demand:
            return False
    full = dict(enumerate(outcome.picks))
    if axiom.family == "FPJR":
        return _sat_group(election, group, full) < demand
    return all(_sat_i(election, i, full) < demand for i in group)


def _replay_core(election, outcome, witness, axiom) -> bool:
    group = tuple(witness.group)
    literal = _Literal(election, group)
    n, ell = election.n, election.ell
    if witness.deviation is None:
        return False
    full = dict(enumerate(outcome.picks))
    offered = witness.deviation.assignments
    if not all(_sat_i(election, i, offered) > _sat_i(election, i, full) for i in group):
        return False
    if axiom.variant is Variant.STANDARD:
        if witness.scope is None:
            return False
        scope = tuple(witness.scope)
        size = len(scope) * len(group) // n
        if not set(witness.rounds) <= set(scope):
            return False
    else:
        scope = tuple(range(ell))
        size = ell * len(group) // n
    if len(witness.rounds) != size or witness.threshold != size:
        return False
    if axiom.variant is Variant.STRONG:
        return True
    return all(literal.profitable(rounds, outcome) for rounds in combinations(scope, size))


def replay_witness(election: TemporalElection, outcome: Outcome, report: CheckReport) -> bool:
    """True when the report's witness is a genuine violation of its axiom."""
    witness: Witness = report.witness
    if report.holds or witness is None:
        return False
    axiom = report.axiom
    family = axiom.family
    if family in ("JR", "PJR", "EJR", "Droop-EJR"):
        return _replay_agreement(election, outcome, witness, axiom)
    if family == "EJR+":
        return _replay_ejr_plus(election, outcome, witness, axiom)
    if family in ("FJR", "FPJR", "Droop-FJR"):
        return _replay_compromise(election, outcome, witness, axiom)
    return _replay_core(election, outcome, witness, axiom)
