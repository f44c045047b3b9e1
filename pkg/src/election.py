"""
Temporal election data model

A temporal election has an ordered candidate list, n voters and ell rounds;
voter i submits an approval set a_{i,r} of candidate indices for every round r.
One candidate is selected per round.

Design:
- Candidates are identified by index; names only appear at the I/O boundary
- Voters and rounds are 0-based here, 1-based in documents and reports
- Voter and round subsets are integer bitmasks wrapped in VoterSet/RoundSet
- All values are frozen after construction
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence, Tuple, Union

from .bitset import all_bits_mask, bitset_from_indices, bitset_to_indices, popcount
from .errors import ElectionError


class ElectionClass(Enum):
    """Ballot shape of an election."""

    GENERAL = "General"
    AT_LEAST_ONE = "AtLeastOne"
    EXACTLY_ONE = "ExactlyOne"

    def belongs_to(self, other: "ElectionClass") -> bool:
        """True when an election of this class is also a member of `other`."""
        order = [ElectionClass.GENERAL, ElectionClass.AT_LEAST_ONE, ElectionClass.EXACTLY_ONE]
        return order.index(self) >= order.index(other)

    @classmethod
    def parse(cls, tag: str) -> "ElectionClass":
        for member in cls:
            if member.value.lower() == tag.lower() or member.name.lower() == tag.lower():
                return member
        raise ValueError(f"Unknown election class: {tag}")


@dataclass(frozen=True)
class _IndexSet:
    mask: int
    universe: int

    def __post_init__(self):
        if self.universe < 0:
            raise ElectionError(f"negative universe size {self.universe}")
        if self.mask < 0 or self.mask >> self.universe:
            raise ElectionError(
                f"{type(self).__name__} mask {self.mask:#x} has members outside 1..{self.universe}"
            )

    @classmethod
    def from_indices(cls, indices: Iterable[int], universe: int):
        indices = list(indices)
        for i in indices:
            if not 0 <= i < universe:
                raise ElectionError(f"{cls.__name__} index {i + 1} outside 1..{universe}")
        return cls(bitset_from_indices(indices), universe)

    @classmethod
    def from_one_based(cls, indices: Iterable[int], universe: int):
        return cls.from_indices([i - 1 for i in indices], universe)

    @classmethod
    def full(cls, universe: int):
        return cls(all_bits_mask(universe), universe)

    @classmethod
    def empty(cls, universe: int):
        return cls(0, universe)

    def __iter__(self) -> Iterator[int]:
        return iter(bitset_to_indices(self.mask))

    def __len__(self) -> int:
        return popcount(self.mask)

    def __contains__(self, index: int) -> bool:
        return 0 <= index < self.universe and bool(self.mask >> index & 1)

    def one_based(self) -> list[int]:
        return [i + 1 for i in self]

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.one_based()})"


class VoterSet(_IndexSet):
    """A subset S of the voters."""


class RoundSet(_IndexSet):
    """A subset R or T of the rounds."""


@dataclass(frozen=True)
class Outcome:
    """One selected candidate index per round."""

    picks: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "picks", tuple(int(c) for c in self.picks))

    def __len__(self) -> int:
        return len(self.picks)

    def __getitem__(self, r: int) -> int:
        return self.picks[r]

    def restrict(self, rounds: RoundSet) -> "Suboutcome":
        """The suboutcome of this outcome on the given rounds."""
        return Suboutcome(rounds, tuple(self.picks[r] for r in rounds))

    def as_suboutcome(self) -> "Suboutcome":
        return Suboutcome(RoundSet.full(len(self.picks)), self.picks)

    def names(self, election: "TemporalElection") -> list[str]:
        return [election.candidates[c] for c in self.picks]


@dataclass(frozen=True)
class Suboutcome:
    """
    A selection on a subset of rounds.

    `picks` is aligned with the rounds of `rounds` in ascending order.
    """

    rounds: RoundSet
    picks: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "picks", tuple(int(c) for c in self.picks))
        if len(self.picks) != len(self.rounds):
            raise ElectionError(
                f"suboutcome has {len(self.picks)} picks for {len(self.rounds)} rounds"
            )

    @classmethod
    def from_mapping(cls, assignments: Mapping[int, int], ell: int) -> "Suboutcome":
        rounds = RoundSet.from_indices(sorted(assignments), ell)
        return cls(rounds, tuple(assignments[r] for r in rounds))

    @property
    def assignments(self) -> dict[int, int]:
        return dict(zip(self.rounds, self.picks))

    def items(self) -> Iterator[Tuple[int, int]]:
        return iter(zip(self.rounds, self.picks))

    def __len__(self) -> int:
        return len(self.picks)


Selection = Union[Outcome, Suboutcome]


@dataclass(frozen=True)
class TemporalElection:
    """
    A temporal election (C, N, ell, A).

    `approvals[i][r]` is the frozenset of candidate indices voter i approves
    in round r.
    """

    candidates: Tuple[str, ...]
    n: int
    ell: int
    approvals: Tuple[Tuple[frozenset, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "candidates", tuple(self.candidates))
        object.__setattr__(
            self,
            "approvals",
            tuple(tuple(frozenset(int(c) for c in cell) for cell in row) for row in self.approvals),
        )
        if self.n < 1:
            raise ElectionError(f"voter count must be at least 1, got {self.n}")
        if self.ell < 1:
            raise ElectionError(f"round count must be at least 1, got {self.ell}")
        if not self.candidates:
            raise ElectionError("an election needs at least one candidate")
        if len(set(self.candidates)) != len(self.candidates):
            raise ElectionError("candidate identifiers must be pairwise distinct")
        if len(self.approvals) != self.n:
            raise ElectionError(f"expected approvals for {self.n} voters, got {len(self.approvals)}")
        for i, row in enumerate(self.approvals):
            if len(row) != self.ell:
                raise ElectionError(
                    f"voter {i + 1} has {len(row)} approval sets, expected {self.ell}"
                )
            for r, cell in enumerate(row):
                for c in cell:
                    if not 0 <= c < self.m:
                        raise ElectionError(
                            f"voter {i + 1}, round {r + 1}: candidate index {c} out of range"
                        )

    @property
    def m(self) -> int:
        return len(self.candidates)

    @property
    def all_voters(self) -> VoterSet:
        return VoterSet.full(self.n)

    @property
    def all_rounds(self) -> RoundSet:
        return RoundSet.full(self.ell)

    @cached_property
    def approver_masks(self) -> Tuple[Tuple[int, ...], ...]:
        """approver_masks[r][c] is the bitmask of voters approving c in round r."""
        table = [[0] * self.m for _ in range(self.ell)]
        for i, row in enumerate(self.approvals):
            for r, cell in enumerate(row):
                for c in cell:
                    table[r][c] |= 1 << i
        return tuple(tuple(per_round) for per_round in table)

    @cached_property
    def ballot_masks(self) -> Tuple[Tuple[int, ...], ...]:
        """ballot_masks[i][r] is a_{i,r} as a candidate bitmask."""
        return tuple(tuple(bitset_from_indices(cell) for cell in row) for row in self.approvals)

    def candidate_index(self, name: str) -> int:
        try:
            return self.candidates.index(name)
        except ValueError:
            raise ElectionError(f"unknown candidate name: {name!r}") from None

    def outcome_from_names(self, names: Sequence[str]) -> Outcome:
        outcome = Outcome(tuple(self.candidate_index(name) for name in names))
        self.validate_outcome(outcome)
        return outcome

    def validate_outcome(self, outcome: Selection) -> None:
        """Raise ElectionError unless the outcome or suboutcome fits this election."""
        if isinstance(outcome, Outcome):
            if len(outcome) != self.ell:
                raise ElectionError(f"outcome has {len(outcome)} picks, election has {self.ell} rounds")
        elif outcome.rounds.universe != self.ell:
            raise ElectionError(
                f"suboutcome is over {outcome.rounds.universe} rounds, election has {self.ell}"
            )
        for c in outcome.picks:
            if not 0 <= c < self.m:
                raise ElectionError(f"candidate index {c} out of range")

    def validate_voters(self, group: VoterSet) -> None:
        if group.universe != self.n:
            raise ElectionError(f"voter set is over {group.universe} voters, election has {self.n}")
        if not group.mask:
            raise ElectionError("voter group must be non-empty")

    def hit_masks(self, outcome: Outcome) -> Tuple[int, ...]:
        """Per round, the voters approving the selected candidate."""
        return tuple(self.approver_masks[r][c] for r, c in enumerate(outcome.picks))


def _as_suboutcome(sub: Selection) -> Suboutcome:
    return sub.as_suboutcome() if isinstance(sub, Outcome) else sub


def satisfaction(election: TemporalElection, group: VoterSet, sub: Selection) -> int:
    """
    Number of rounds of the (sub)outcome whose pick is approved by some member of group.

    A full Outcome counts as the suboutcome over all rounds.
    """
    election.validate_voters(group)
    election.validate_outcome(sub)
    sub = _as_suboutcome(sub)
    masks = election.approver_masks
    return sum(1 for r, c in sub.items() if masks[r][c] & group.mask)


def voter_satisfaction(election: TemporalElection, voter: int, sub: Selection) -> int:
    """sat_i for a single 0-based voter."""
    return satisfaction(election, VoterSet.from_indices([voter], election.n), sub)


def satisfaction_profile(election: TemporalElection, outcome: Outcome) -> Tuple[int, ...]:
    """sat_i(o) for every voter, in voter order."""
    election.validate_outcome(outcome)
    profile = [0] * election.n
    for hit in election.hit_masks(outcome):
        for i in bitset_to_indices(hit):
            profile[i] += 1
    return tuple(profile)


def agreement_candidates(election: TemporalElection, group: VoterSet, r: int) -> frozenset:
    """Candidates every member of group approves in round r."""
    election.validate_voters(group)
    if not 0 <= r < election.ell:
        raise ElectionError(f"round {r + 1} outside 1..{election.ell}")
    common = all_bits_mask(election.m)
    for i in group:
        common &= election.ballot_masks[i][r]
    return frozenset(bitset_to_indices(common))


def agreement_rounds(election: TemporalElection, group: VoterSet) -> RoundSet:
    """Rounds in which the members of group share an approved candidate."""
    election.validate_voters(group)
    rounds = [r for r in range(election.ell) if agreement_candidates(election, group, r)]
    return RoundSet.from_indices(rounds, election.ell)


def election_class(election: TemporalElection) -> ElectionClass:
    sizes = {len(cell) for row in election.approvals for cell in row}
    if 0 in sizes:
        return ElectionClass.GENERAL
    if sizes == {1}:
        return ElectionClass.EXACTLY_ONE
    return ElectionClass.AT_LEAST_ONE
