from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from ..election import Outcome, RoundSet, Suboutcome, TemporalElection, VoterSet


@dataclass(frozen=True)
class RuleConfig:
    """
    Settings for the rules.

    epsilon defaults to 1/(2*ell^2). check_guarantee asks for the EJR+
    guarantee regime, which needs epsilon < 1/ell^2.
    """

    epsilon: Optional[Fraction] = None
    tie_break: str = "lexicographic"
    initial: Optional[Outcome] = None
    max_iterations: Optional[int] = None
    check_guarantee: bool = False

    def epsilon_for(self, ell: int) -> Fraction:
        if self.epsilon is None:
            return Fraction(1, 2 * ell * ell)
        return Fraction(self.epsilon)

    def validate(self, ell: int) -> None:
        epsilon = self.epsilon_for(ell)
        if epsilon <= 0:
            raise ValueError(f"epsilon must be positive, got {epsilon}")
        if self.tie_break != "lexicographic":
            raise ValueError(f"Unknown tie-break policy: {self.tie_break}")
        if self.check_guarantee and epsilon >= Fraction(1, ell * ell):
            raise ValueError(f"epsilon {epsilon} is not below 1/{ell * ell}")
        if self.max_iterations is not None and self.max_iterations < 0:
            raise ValueError("max_iterations must be non-negative")


@dataclass(frozen=True)
class SwapStep:
    round: int
    old: int
    new: int
    gain: Fraction


@dataclass(frozen=True)
class GroupStep:
    """One served group: S_p, its claimed T_p, the rounds R it got and their picks."""

    group: VoterSet
    scope: RoundSet
    demand: int
    rounds: Optional[RoundSet] = None
    suboutcome: Optional[Suboutcome] = None


@dataclass(frozen=True)
class RuleTrace:
    rule: str
    initial: Optional[Outcome] = None
    steps: Tuple[SwapStep, ...] = ()
    groups: Tuple[GroupStep, ...] = ()
    dictators: Tuple[int, ...] = ()
    service_order: Tuple[int, ...] = ()
    filler: int = 0

    def replay(self, election: TemporalElection) -> Outcome:
        """Rebuilds the final outcome from the recorded decisions."""
        if self.rule == "lspav":
            picks = list(self.initial.picks)
            for step in self.steps:
                picks[step.round] = step.new
            return Outcome(tuple(picks))
        if self.rule == "gcr":
            picks = [self.filler] * election.ell
            for group in self.groups:
                if group.suboutcome is not None:
                    for r, c in group.suboutcome.items():
                        picks[r] = c
            return Outcome(tuple(picks))
        picks = [min(election.approvals[d][r]) for r, d in enumerate(self.dictators)]
        return Outcome(tuple(picks))

    def to_dict(self, election: TemporalElection) -> dict:
        doc: dict = {"rule": self.rule}
        names = election.candidates
        if self.rule == "lspav":
            doc["initial"] = self.initial.names(election)
            doc["steps"] = [
                {
                    "round": s.round + 1,
                    "old": names[s.old],
                    "new": names[s.new],
                    "gain": f"{s.gain.numerator}/{s.gain.denominator}",
                }
                for s in self.steps
            ]
        elif self.rule == "gcr":
            doc["filler"] = names[self.filler]
            doc["groups"] = [
                {
                    "group": g.group.one_based(),
                    "scope": g.scope.one_based(),
                    "demand": g.demand,
                    "rounds": g.rounds.one_based() if g.rounds is not None else [],
                    "picks": [names[c] for c in g.suboutcome.picks] if g.suboutcome is not None else [],
                }
                for g in self.groups
            ]
            doc["service_order"] = [i + 1 for i in self.service_order]
        else:
            doc["dictators"] = [d + 1 for d in self.dictators]
        return doc


class VotingRule(ABC):
    """
    Abstract base class for the rules.
    Every rule is a deterministic function of the election and its config.
    """

    def __init__(self, config: Optional[RuleConfig] = None):
        self.config = config or RuleConfig()

    @abstractmethod
    def solve(self, election: TemporalElection) -> Tuple[Outcome, RuleTrace]:
        """
        Computes an outcome.

        Args:
            election: The election to decide

        Returns:
            Tuple of (outcome, trace of the decisions that produced it)
        """
        pass

    @abstractmethod
    def get_rule_name(self) -> str:
        """Returns the CLI name of the rule"""
        pass
