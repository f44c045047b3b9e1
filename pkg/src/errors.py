"""
Exception hierarchy for the toolkit.

Input problems subclass ValueError so callers that only know about ValueError
keep working; resource and rule failures are kept apart so the CLI can map
them to their own exit codes.
"""

from dataclasses import dataclass

from config import Config


class TemporalVotingError(Exception):
    """Root of every error raised by this package."""


class ElectionError(TemporalVotingError, ValueError):
    """An election, outcome or voter/round set violates its structural invariants."""


class ParseError(ElectionError):
    """A JSON document could not be turned into an election or outcome."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


class ResourceLimitError(TemporalVotingError):
    """Estimated work exceeds a configured cap; nothing was computed."""

    def __init__(self, what: str, estimate: int, limit: int):
        super().__init__(f"{what}: estimated work {estimate} exceeds cap {limit}")
        self.estimate = estimate
        self.limit = limit


@dataclass(frozen=True)
class ResourceLimits:
    """Caps for exhaustive search."""

    max_voters: int = Config.MAX_VOTERS
    max_rounds: int = Config.MAX_ROUNDS
    max_work: int = Config.MAX_WORK

    def require_subsets(self, what: str, n: int, ell: int) -> None:
        """Refuse 2^n x 2^ell scans beyond the caps."""
        if n > self.max_voters:
            raise ResourceLimitError(f"{what} (voters)", n, self.max_voters)
        if ell > self.max_rounds:
            raise ResourceLimitError(f"{what} (rounds)", ell, self.max_rounds)

    def require_work(self, what: str, estimate: int) -> None:
        if estimate > self.max_work:
            raise ResourceLimitError(what, estimate, self.max_work)


class PreconditionError(TemporalVotingError, ValueError):
    """A rule was applied to an election outside its domain."""

    def __init__(self, message: str, voter: int | None = None, round: int | None = None):
        super().__init__(message)
        self.voter = voter
        self.round = round


class RuleError(TemporalVotingError, RuntimeError):
    """A rule broke one of its own runtime invariants."""
