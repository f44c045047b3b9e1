"""
Fixture corpus

Every counterexample election is stored as one JSON document under corpus/
together with its designated outcome (when it has one) and the verdicts it
is expected to produce. Expectations come in three modes:

- outcome: check(election, designated outcome, axiom).holds == holds
- exists: some outcome of the restricted space satisfies axiom == holds
- all_outcomes: every outcome of the restricted space satisfies axiom == holds;
  a sample of unrestricted outcomes is checked as well
"""

import json
import logging
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import List, Optional, Tuple

from config import Config

from .axioms.base_checker import AxiomId
from .axioms.context import GuaranteeCache
from .axioms.registry import CHECKERS, check
from .election import Outcome, TemporalElection
from .election_reader import ElectionReader
from .errors import ParseError, ResourceLimits
from .oracle import enumerate_outcomes, exists_satisfying, outcome_count, sample_unrestricted_outcomes

logger = logging.getLogger(__name__)

DEFAULT_CORPUS_DIR = Path(Config.CORPUS_DIR)

ENTRY_ORDER = (
    "prop_3_2", "prop_C1", "example_A1",
    "E1", "E3", "E4", "E5", "E6", "E7", "E8", "E9", "E0",
)

ENTRY_KEYS = ("name", "notes", "election", "outcome", "expectations")
EXPECTATION_KEYS = ("axiom", "holds", "mode")

SAMPLE_SIZE = 200
SAMPLE_SEED = 7


class ExpectationMode(Enum):
    OUTCOME = "outcome"
    EXISTS = "exists"
    ALL_OUTCOMES = "all_outcomes"


@dataclass(frozen=True)
class Expectation:
    axiom: AxiomId
    holds: bool
    mode: ExpectationMode = ExpectationMode.OUTCOME

    def to_dict(self) -> dict:
        return {"axiom": self.axiom.value, "holds": self.holds, "mode": self.mode.value}


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    election: TemporalElection
    expectations: Tuple[Expectation, ...]
    outcome: Optional[Outcome] = None
    notes: str = ""

    def __post_init__(self):
        if not self.expectations:
            raise ValueError(f"corpus entry {self.name} has no expectations")
        if self.outcome is not None:
            self.election.validate_outcome(self.outcome)
        for expectation in self.expectations:
            if expectation.mode is ExpectationMode.OUTCOME and self.outcome is None:
                raise ValueError(
                    f"corpus entry {self.name} expects {expectation.axiom.value} on an outcome but has none"
                )


@dataclass(frozen=True)
class ExpectationResult:
    entry: str
    expectation: Expectation
    observed: bool
    detail: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return self.observed == self.expectation.holds

    def to_dict(self) -> dict:
        doc = {"entry": self.entry, **self.expectation.to_dict(), "observed": self.observed, "passed": self.passed}
        if self.detail is not None:
            doc["detail"] = self.detail
        return doc


@dataclass(frozen=True)
class CorpusReport:
    results: Tuple[ExpectationResult, ...]

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    def failures(self) -> List[ExpectationResult]:
        return [result for result in self.results if not result.passed]

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "results": [result.to_dict() for result in self.results],
        }


# -- reading and writing --------------------------------------------------


def load_entry(source) -> CorpusEntry:
    """Parses one corpus document (bytes or str)."""
    doc = ElectionReader.decode(source)
    if not isinstance(doc, dict):
        raise ParseError("entry", "expected a JSON object")
    for key in doc:
        if key not in ENTRY_KEYS:
            raise ParseError(key, "unknown key in corpus entry")
    for key in ("name", "election", "expectations"):
        if key not in doc:
            raise ParseError(key, "missing from corpus entry")

    name = doc["name"]
    if not isinstance(name, str) or not name:
        raise ParseError("name", "expected a non-empty string")
    election = ElectionReader.from_document(doc["election"])
    outcome = None
    if "outcome" in doc:
        outcome = ElectionReader.outcome_from_document(doc["outcome"], election)

    raw = doc["expectations"]
    if not isinstance(raw, list) or not raw:
        raise ParseError("expectations", "expected a non-empty list")
    expectations = []
    for k, item in enumerate(raw):
        field = f"expectations[{k}]"
        if not isinstance(item, dict) or set(item) != set(EXPECTATION_KEYS):
            raise ParseError(field, f"expected an object with keys {', '.join(EXPECTATION_KEYS)}")
        if not isinstance(item["holds"], bool):
            raise ParseError(f"{field}.holds", "expected a boolean")
        try:
            expectations.append(
                Expectation(AxiomId.parse(item["axiom"]), item["holds"], ExpectationMode(item["mode"]))
            )
        except ValueError as e:
            raise ParseError(field, str(e)) from None

    notes = doc.get("notes", "")
    if not isinstance(notes, str):
        raise ParseError("notes", "expected a string")
    try:
        return CorpusEntry(name, election, tuple(expectations), outcome, notes)
    except ValueError as e:
        raise ParseError("entry", str(e)) from None


def _dumps(value) -> str:
    return json.dumps(value, ensure_ascii=False)


def dump_entry(entry: CorpusEntry) -> bytes:
    """Canonical bytes of a corpus document; committed fixtures equal this exactly."""
    lines = [
        "{",
        f'  "name": {_dumps(entry.name)},',
        f'  "notes": {_dumps(entry.notes)},',
        f'  "election": {ElectionReader.render(entry.election, indent="  ")},',
    ]
    if entry.outcome is not None:
        lines.append(f'  "outcome": {_dumps(ElectionReader.outcome_document(entry.outcome, entry.election))},')
    lines.append('  "expectations": [')
    lines.append(",\n".join("    " + _dumps(e.to_dict()) for e in entry.expectations))
    lines.append("  ]")
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def _order(path: Path) -> Tuple[int, str]:
    name = path.stem
    return (ENTRY_ORDER.index(name) if name in ENTRY_ORDER else len(ENTRY_ORDER), name)


def corpus_paths(corpus_dir: Optional[Path] = None) -> List[Path]:
    corpus_dir = Path(corpus_dir or DEFAULT_CORPUS_DIR)
    if not corpus_dir.is_dir():
        raise FileNotFoundError(f"Corpus directory not found: {corpus_dir}")
    return sorted(corpus_dir.glob("*.json"), key=_order)


def corpus_entries(corpus_dir: Optional[Path] = None) -> List[CorpusEntry]:
    return [load_entry(path.read_bytes()) for path in corpus_paths(corpus_dir)]


def corpus_entry(name: str, corpus_dir: Optional[Path] = None) -> CorpusEntry:
    for entry in corpus_entries(corpus_dir):
        if entry.name == name:
            return entry
    raise KeyError(f"No corpus entry named {name!r}")


# -- verification ---------------------------------------------------------


def _first_failure(entry: CorpusEntry, axiom: AxiomId, cache: GuaranteeCache) -> Optional[Outcome]:
    checker = CHECKERS[axiom.family](cache)
    count = 0
    for outcome in enumerate_outcomes(entry.election, restrict=True, limits=cache.limits):
        count += 1
        if not checker.check(outcome, axiom.variant).holds:
            return outcome
    logger.info("%s: %s holds on all %d restricted outcomes", entry.name, axiom.value, count)
    for outcome in sample_unrestricted_outcomes(entry.election, SAMPLE_SIZE, SAMPLE_SEED):
        if not checker.check(outcome, axiom.variant).holds:
            return outcome
    return None


def verify_entry(
    entry: CorpusEntry,
    threads: int = 1,
    limits: Optional[ResourceLimits] = None,
) -> List[ExpectationResult]:
    cache = GuaranteeCache(entry.election, limits)
    election = entry.election
    results = []
    for expectation in entry.expectations:
        axiom = expectation.axiom
        if expectation.mode is ExpectationMode.OUTCOME:
            report = check(election, entry.outcome, axiom, cache=cache)
            detail = report.to_dict(election) if report.witness is not None else None
            result = ExpectationResult(entry.name, expectation, report.holds, detail)
        elif expectation.mode is ExpectationMode.EXISTS:
            found = exists_satisfying(election, axiom, restrict=True, threads=threads, cache=cache)
            detail = ElectionReader.outcome_document(found, election) if found is not None else None
            result = ExpectationResult(entry.name, expectation, found is not None, detail)
        else:
            cache.limits.require_work(
                f"all_outcomes({axiom.value})",
                (outcome_count(election, True) + SAMPLE_SIZE) * 2 ** election.n,
            )
            failure = _first_failure(entry, axiom, cache)
            detail = ElectionReader.outcome_document(failure, election) if failure is not None else None
            result = ExpectationResult(entry.name, expectation, failure is None, detail)
        logger.info(
            "%s: %s (%s) %s", entry.name, axiom.value, expectation.mode.value,
            "pass" if result.passed else "FAIL",
        )
        results.append(result)
    return results


def verify_corpus(
    scope: Optional[str] = None,
    corpus_dir: Optional[Path] = None,
    threads: int = 1,
    limits: Optional[ResourceLimits] = None,
) -> CorpusReport:
    """
    Verifies every expectation of every entry, or of the entry named scope.

    Raises:
        KeyError: If scope names no entry
    """
    entries = corpus_entries(corpus_dir)
    if scope is not None:
        entries = [entry for entry in entries if entry.name == scope]
        if not entries:
            raise KeyError(f"No corpus entry named {scope!r}")
    results = []
    for entry in entries:
        results.extend(verify_entry(entry, threads, limits))
    return CorpusReport(tuple(results))
