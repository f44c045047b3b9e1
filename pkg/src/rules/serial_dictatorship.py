import logging
from typing import Tuple

from ..election import Outcome, TemporalElection
from ..errors import PreconditionError
from .base_rule import RuleTrace, VotingRule

logger = logging.getLogger(__name__)


class SerialDictatorship(VotingRule):
    """Round r is decided by voter ((r-1) mod n) + 1, who takes their lowest-indexed approved candidate."""

    def get_rule_name(self) -> str:
        return "sdr"

    def solve(self, election: TemporalElection) -> Tuple[Outcome, RuleTrace]:
        picks = []
        dictators = []
        for r in range(election.ell):
            voter = r % election.n
            cell = election.approvals[voter][r]
            if not cell:
                raise PreconditionError(
                    f"voter {voter + 1} approves no candidate in round {r + 1}",
                    voter=voter + 1,
                    round=r + 1,
                )
            picks.append(min(cell))
            dictators.append(voter)
        return Outcome(tuple(picks)), RuleTrace("sdr", dictators=tuple(dictators))


def sdr(election: TemporalElection) -> Tuple[Outcome, RuleTrace]:
    return SerialDictatorship().solve(election)
