from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Tuple

from ..election import Outcome, RoundSet, Suboutcome, TemporalElection, VoterSet
from ..errors import ElectionError
from .context import GuaranteeCache


class Variant(Enum):
    WEAK = "weak"
    STANDARD = "standard"
    STRONG = "strong"

    @classmethod
    def parse(cls, value: "Variant | str") -> "Variant":
        if isinstance(value, Variant):
            return value
        try:
            return cls(value.lower())
        except ValueError:
            raise ValueError(f"Unknown variant: {value}") from None


class AxiomId(Enum):
    """The implemented proportionality axioms, valued by their display names."""

    W_JR = "wJR"
    JR = "JR"
    S_JR = "sJR"
    W_PJR = "wPJR"
    PJR = "PJR"
    S_PJR = "sPJR"
    W_EJR = "wEJR"
    EJR = "EJR"
    S_EJR = "sEJR"
    W_EJR_PLUS = "wEJR+"
    EJR_PLUS = "EJR+"
    S_EJR_PLUS = "sEJR+"
    W_FJR = "wFJR"
    FJR = "FJR"
    S_FJR = "sFJR"
    W_FPJR = "wFPJR"
    FPJR = "FPJR"
    S_FPJR = "sFPJR"
    W_CORE = "wCore"
    CORE = "Core"
    S_CORE = "sCore"
    DROOP_EJR = "Droop-EJR"
    DROOP_FJR = "Droop-FJR"

    @property
    def family(self) -> str:
        return _SHAPES[self][0]

    @property
    def variant(self) -> Variant:
        return _SHAPES[self][1]

    @classmethod
    def parse(cls, name: "AxiomId | str") -> "AxiomId":
        """Case-insensitive lookup; also accepts tag spellings like EJRplus or DroopEJR."""
        if isinstance(name, AxiomId):
            return name
        key = name.strip().lower()
        for member in cls:
            spellings = {
                member.value.lower(),
                member.value.lower().replace("+", "plus").replace("-", ""),
            }
            if key in spellings:
                return member
        raise ValueError(f"Unknown axiom: {name}")

    @classmethod
    def of(cls, family: str, variant: Variant) -> "AxiomId":
        for member, shape in _SHAPES.items():
            if shape == (family, variant):
                return member
        raise ValueError(f"No {variant.value} variant of {family}")


_SHAPES: Dict[AxiomId, Tuple[str, Variant]] = {
    AxiomId.W_JR: ("JR", Variant.WEAK),
    AxiomId.JR: ("JR", Variant.STANDARD),
    AxiomId.S_JR: ("JR", Variant.STRONG),
    AxiomId.W_PJR: ("PJR", Variant.WEAK),
    AxiomId.PJR: ("PJR", Variant.STANDARD),
    AxiomId.S_PJR: ("PJR", Variant.STRONG),
    AxiomId.W_EJR: ("EJR", Variant.WEAK),
    AxiomId.EJR: ("EJR", Variant.STANDARD),
    AxiomId.S_EJR: ("EJR", Variant.STRONG),
    AxiomId.W_EJR_PLUS: ("EJR+", Variant.WEAK),
    AxiomId.EJR_PLUS: ("EJR+", Variant.STANDARD),
    AxiomId.S_EJR_PLUS: ("EJR+", Variant.STRONG),
    AxiomId.W_FJR: ("FJR", Variant.WEAK),
    AxiomId.FJR: ("FJR", Variant.STANDARD),
    AxiomId.S_FJR: ("FJR", Variant.STRONG),
    AxiomId.W_FPJR: ("FPJR", Variant.WEAK),
    AxiomId.FPJR: ("FPJR", Variant.STANDARD),
    AxiomId.S_FPJR: ("FPJR", Variant.STRONG),
    AxiomId.W_CORE: ("Core", Variant.WEAK),
    AxiomId.CORE: ("Core", Variant.STANDARD),
    AxiomId.S_CORE: ("Core", Variant.STRONG),
    AxiomId.DROOP_EJR: ("Droop-EJR", Variant.STANDARD),
    AxiomId.DROOP_FJR: ("Droop-FJR", Variant.STANDARD),
}


@dataclass(frozen=True)
class Witness:
    """
    Certificate of a violation.

    group is S; rounds is the R or T the violated guarantee refers to. scope
    holds T when the deviation lives on a smaller R inside it. pivot is the
    (round, candidate) of per-round violations.
    """

    group: VoterSet
    rounds: RoundSet
    threshold: int
    deviation: Optional[Suboutcome] = None
    cohesion: Optional[Tuple[int, int]] = None
    pivot: Optional[Tuple[int, int]] = None
    scope: Optional[RoundSet] = None

    def __post_init__(self):
        if not self.group.mask:
            raise ElectionError("witness group must be non-empty")
        if self.deviation is not None and self.deviation.rounds != self.rounds:
            raise ElectionError("witness deviation must be defined on exactly its rounds")
        if self.threshold < 1:
            raise ElectionError(f"witness threshold must be positive, got {self.threshold}")

    def to_dict(self, election: TemporalElection) -> dict:
        doc = {
            "group": self.group.one_based(),
            "rounds": self.rounds.one_based(),
            "threshold": self.threshold,
        }
        if self.scope is not None:
            doc["scope"] = self.scope.one_based()
        if self.deviation is not None:
            doc["deviation"] = {
                str(r + 1): election.candidates[c] for r, c in self.deviation.items()
            }
        if self.cohesion is not None:
            doc["cohesion"] = {"sigma": self.cohesion[0], "tau": self.cohesion[1]}
        if self.pivot is not None:
            doc["pivot"] = {"round": self.pivot[0] + 1, "candidate": election.candidates[self.pivot[1]]}
        return doc


@dataclass(frozen=True)
class Work:
    subsets: int = 0
    suboutcomes: int = 0


@dataclass(frozen=True)
class CheckReport:
    axiom: AxiomId
    holds: bool
    witness: Optional[Witness] = None
    work: Work = field(default_factory=Work, compare=False)

    def __post_init__(self):
        if self.holds == (self.witness is not None):
            raise ElectionError("a report carries a witness exactly when the axiom fails")

    def to_dict(self, election: TemporalElection, include_witness: bool = True) -> dict:
        doc = {"axiom": self.axiom.value, "holds": self.holds}
        if include_witness and self.witness is not None:
            doc["witness"] = self.witness.to_dict(election)
        doc["work"] = {"subsets": self.work.subsets, "suboutcomes": self.work.suboutcomes}
        return doc


class AxiomChecker(ABC):
    """
    Abstract base class for one family of axioms.
    A checker is bound to a GuaranteeCache and so to a single election.
    """

    def __init__(self, cache: GuaranteeCache):
        self.cache = cache
        self.election = cache.election
        self._start = (0, 0)

    @abstractmethod
    def check(self, outcome: Outcome, variant: Variant) -> CheckReport:
        """
        Decides the family member given by variant on outcome.

        Args:
            outcome: A full outcome valid for the bound election
            variant: Which member of the family to decide

        Returns:
            CheckReport whose witness is the first violation in canonical order
        """
        pass

    @abstractmethod
    def get_family_name(self) -> str:
        """Returns the family name, e.g. "EJR+" """
        pass

    def _begin(self) -> None:
        self._start = (self.cache.subsets_examined, self.cache.suboutcomes_examined)

    def _report(self, axiom: AxiomId, witness: Optional[Witness]) -> CheckReport:
        work = Work(
            self.cache.subsets_examined - self._start[0],
            self.cache.suboutcomes_examined - self._start[1],
        )
        return CheckReport(axiom, witness is None, witness, work)

    def _voters(self, mask: int) -> VoterSet:
        return VoterSet(mask, self.cache.n)

    def _rounds(self, mask: int) -> RoundSet:
        return RoundSet(mask, self.cache.ell)
