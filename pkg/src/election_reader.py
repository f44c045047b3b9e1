"""
Election Reader Utility

Reads and writes the JSON documents for elections and outcomes.
"""

import json
from pathlib import Path
from typing import Any, Union

from .election import Outcome, TemporalElection
from .errors import ElectionError, ParseError

ELECTION_KEYS = ("candidates", "voters", "rounds", "approvals")
OUTCOME_KEYS = ("picks",)

Source = Union[bytes, str]


def _dumps(value: Any) -> str:
    return json.dumps(value, ensure_ascii=False)


class ElectionReader:
    """Parses and renders election and outcome documents."""

    @staticmethod
    def read_file(file_path: Path) -> TemporalElection:
        """
        Reads an election document from disk.

        Args:
            file_path: Path to the JSON document

        Returns:
            The parsed TemporalElection

        Raises:
            ParseError: If the document is malformed
        """
        return ElectionReader.loads(Path(file_path).read_bytes())

    @staticmethod
    def read_outcome_file(file_path: Path, election: TemporalElection) -> Outcome:
        return ElectionReader.loads_outcome(Path(file_path).read_bytes(), election)

    @staticmethod
    def loads(source: Source) -> TemporalElection:
        """Parses an election document; errors name the offending field."""
        doc = ElectionReader.decode(source)
        return ElectionReader.from_document(doc)

    @staticmethod
    def from_document(doc: Any) -> TemporalElection:
        ElectionReader._check_keys(doc, ELECTION_KEYS, "election")

        candidates = doc["candidates"]
        if not isinstance(candidates, list) or not all(isinstance(c, str) for c in candidates):
            raise ParseError("candidates", "expected a list of strings")
        if not candidates:
            raise ParseError("candidates", "at least one candidate is required")
        if len(set(candidates)) != len(candidates):
            raise ParseError("candidates", "candidate names must be distinct")

        n = ElectionReader._positive_int(doc["voters"], "voters")
        ell = ElectionReader._positive_int(doc["rounds"], "rounds")
        index = {name: j for j, name in enumerate(candidates)}

        approvals = doc["approvals"]
        if not isinstance(approvals, list) or len(approvals) != n:
            raise ParseError("approvals", f"expected a list of {n} voter rows")
        rows = []
        for i, row in enumerate(approvals):
            if not isinstance(row, list) or len(row) != ell:
                raise ParseError(f"approvals[{i}]", f"expected a list of {ell} approval sets")
            cells = []
            for r, cell in enumerate(row):
                if not isinstance(cell, list):
                    raise ParseError(f"approvals[{i}][{r}]", "expected a list of candidate names")
                try:
                    cells.append(frozenset(index[name] for name in cell))
                except (KeyError, TypeError):
                    raise ParseError(f"approvals[{i}][{r}]", f"unknown candidate in {cell!r}") from None
            rows.append(tuple(cells))

        try:
            return TemporalElection(tuple(candidates), n, ell, tuple(rows))
        except ElectionError as e:
            raise ParseError("election", str(e)) from e

    @staticmethod
    def loads_outcome(source: Source, election: TemporalElection) -> Outcome:
        doc = ElectionReader.decode(source)
        return ElectionReader.outcome_from_document(doc, election)

    @staticmethod
    def outcome_from_document(doc: Any, election: TemporalElection) -> Outcome:
        ElectionReader._check_keys(doc, OUTCOME_KEYS, "outcome")
        picks = doc["picks"]
        if not isinstance(picks, list) or len(picks) != election.ell:
            raise ParseError("picks", f"expected a list of {election.ell} candidate names")
        try:
            return election.outcome_from_names(picks)
        except (ElectionError, TypeError) as e:
            raise ParseError("picks", str(e)) from None

    @staticmethod
    def to_document(election: TemporalElection) -> dict:
        return {
            "candidates": list(election.candidates),
            "voters": election.n,
            "rounds": election.ell,
            "approvals": [
                [[election.candidates[c] for c in sorted(cell)] for cell in row]
                for row in election.approvals
            ],
        }

    @staticmethod
    def outcome_document(outcome: Outcome, election: TemporalElection) -> dict:
        return {"picks": outcome.names(election)}

    @staticmethod
    def render(election: TemporalElection, indent: str = "") -> str:
        """
        Canonical text of an election document, without trailing newline.

        One voter row per line; everything else on its own key line.
        """
        doc = ElectionReader.to_document(election)
        pad = indent + "  "
        rows = ",\n".join(pad + "  " + _dumps(row) for row in doc["approvals"])
        return "\n".join([
            "{",
            f'{pad}"candidates": {_dumps(doc["candidates"])},',
            f'{pad}"voters": {doc["voters"]},',
            f'{pad}"rounds": {doc["rounds"]},',
            f'{pad}"approvals": [',
            rows,
            f"{pad}]",
            indent + "}",
        ])

    @staticmethod
    def dumps(election: TemporalElection) -> bytes:
        return (ElectionReader.render(election) + "\n").encode("utf-8")

    @staticmethod
    def dumps_outcome(outcome: Outcome, election: TemporalElection) -> bytes:
        return (_dumps(ElectionReader.outcome_document(outcome, election)) + "\n").encode("utf-8")

    @staticmethod
    def write_file(election: TemporalElection, file_path: Path) -> Path:
        file_path = Path(file_path)
        file_path.write_bytes(ElectionReader.dumps(election))
        return file_path

    @staticmethod
    def decode(source: Source) -> Any:
        if isinstance(source, bytes):
            try:
                source = source.decode("utf-8")
            except UnicodeDecodeError as e:
                raise ParseError("document", f"not UTF-8: {e}") from None
        try:
            return json.loads(source)
        except json.JSONDecodeError as e:
            raise ParseError("document", f"malformed JSON: {e}") from None

    @staticmethod
    def _check_keys(doc: Any, expected: tuple, what: str) -> None:
        if not isinstance(doc, dict):
            raise ParseError(what, "expected a JSON object")
        for key in doc:
            if key not in expected:
                raise ParseError(key, f"unknown key in {what} document")
        for key in expected:
            if key not in doc:
                raise ParseError(key, f"missing from {what} document")

    @staticmethod
    def _positive_int(value: Any, field: str) -> int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ParseError(field, "expected an integer")
        if value < 1:
            raise ParseError(field, f"must be at least 1, got {value}")
        return value


def load_election(source: Source) -> TemporalElection:
    return ElectionReader.loads(source)


def save_election(election: TemporalElection) -> bytes:
    return ElectionReader.dumps(election)


def load_outcome(source: Source, election: TemporalElection) -> Outcome:
    return ElectionReader.loads_outcome(source, election)


def save_outcome(outcome: Outcome, election: TemporalElection) -> bytes:
    return ElectionReader.dumps_outcome(outcome, election)
