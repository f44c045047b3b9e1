import json

import pytest
from hypothesis import given

from strategies import elections
from src.election_reader import ElectionReader, load_election, load_outcome, save_election, save_outcome
from src.errors import ParseError

E1_DOCUMENT = {
    "candidates": ["a", "b", "c", "d"],
    "voters": 6,
    "rounds": 4,
    "approvals": [
        [["a"], ["a"], ["a"], ["a"]],
        [["a"], ["a"], ["a"], ["a"]],
        [["a"], ["a"], ["a"], ["a"]],
        [["b"], ["b"], ["b"], ["b"]],
        [["b"], ["b"], ["c"], ["c"]],
        [["b"], ["b"], ["d"], ["d"]],
    ],
}


def document(**overrides):
    doc = dict(E1_DOCUMENT)
    doc.update(overrides)
    return json.dumps(doc)


class TestLoadElection:
    def test_dimensions(self):
        election = load_election(document())
        assert (election.n, election.ell, election.m) == (6, 4, 4)
        assert election.approvals[4][2] == frozenset({2})

    def test_matches_corpus_fixture(self, e1):
        assert load_election(document()) == e1.election

    @pytest.mark.parametrize(
        "overrides, field",
        [
            ({"voters": 0}, "voters"),
            ({"voters": True}, "voters"),
            ({"rounds": "4"}, "rounds"),
            ({"candidates": []}, "candidates"),
            ({"candidates": ["a", "a", "c", "d"]}, "candidates"),
            ({"approvals": E1_DOCUMENT["approvals"][:5]}, "approvals"),
            ({"approvals": [[["a"]] * 3] + E1_DOCUMENT["approvals"][1:]}, "approvals[0]"),
            ({"approvals": [[["q"], ["a"], ["a"], ["a"]]] + E1_DOCUMENT["approvals"][1:]}, "approvals[0][0]"),
        ],
    )
    def test_errors_name_the_field(self, overrides, field):
        with pytest.raises(ParseError) as info:
            load_election(document(**overrides))
        assert info.value.field == field

    def test_unknown_key(self):
        with pytest.raises(ParseError) as info:
            load_election(document(weights=[1] * 6))
        assert info.value.field == "weights"

    def test_missing_key(self):
        doc = dict(E1_DOCUMENT)
        del doc["rounds"]
        with pytest.raises(ParseError, match="rounds"):
            load_election(json.dumps(doc))

    def test_malformed_json(self):
        with pytest.raises(ParseError, match="malformed JSON"):
            load_election(b"{not json")

    def test_not_utf8(self):
        with pytest.raises(ParseError, match="UTF-8"):
            load_election(b"\xff\xfe")

    def test_parse_error_is_a_value_error(self):
        with pytest.raises(ValueError):
            load_election("[]")


class TestSaveElection:
    def test_canonical_layout(self, e1):
        text = save_election(e1.election).decode("utf-8")
        assert text.endswith("}\n")
        assert '    [["b"], ["b"], ["c"], ["c"]],' in text
        assert json.loads(text) == E1_DOCUMENT

    def test_sorted_cells(self, corpus):
        text = save_election(corpus["E0"].election).decode("utf-8")
        assert '["b", "c", "d", "e"]' in text

    @given(elections(max_n=5, max_ell=4, max_m=4))
    def test_round_trip(self, election):
        assert load_election(save_election(election)) == election

    def test_write_and_read_file(self, tmp_path, e1):
        path = ElectionReader.write_file(e1.election, tmp_path / "e1.json")
        assert ElectionReader.read_file(path) == e1.election


class TestOutcomes:
    def test_round_trip(self, e1):
        data = save_outcome(e1.outcome, e1.election)
        assert data == b'{"picks": ["a", "a", "a", "a"]}\n'
        assert load_outcome(data, e1.election) == e1.outcome

    def test_wrong_length(self, e1):
        with pytest.raises(ParseError) as info:
            load_outcome('{"picks": ["a"]}', e1.election)
        assert info.value.field == "picks"

    def test_unknown_candidate(self, e1):
        with pytest.raises(ParseError, match="unknown candidate"):
            load_outcome('{"picks": ["a", "a", "a", "z"]}', e1.election)

    def test_unknown_key(self, e1):
        with pytest.raises(ParseError):
            load_outcome('{"picks": ["a", "a", "a", "a"], "rule": "sdr"}', e1.election)
