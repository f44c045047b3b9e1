import json
from pathlib import Path

import pytest

from config import Config
from helpers import build_election
from src.cli import run
from src.corpus import DEFAULT_CORPUS_DIR
from src.election_reader import ElectionReader
from src.errors import ResourceLimits
from src.oracle import GeneratorParams


@pytest.fixture
def election_file(tmp_path, corpus):
    def write(name):
        return str(ElectionReader.write_file(corpus[name].election, tmp_path / f"{name}.json"))

    return write


def output(capsys):
    return json.loads(capsys.readouterr().out)


class TestCheck:
    def test_violation_exits_one(self, election_file, capsys):
        code = run(["check", "--election", election_file("E1"), "--picks", "a,a,a,a", "--axiom", "JR"])
        assert code == 1
        doc = output(capsys)
        assert doc["holds"] is False
        assert doc["witness"]["group"] == [4, 5, 6]

    def test_holds_exits_zero(self, election_file, tmp_path, corpus, capsys):
        entry = corpus["E6"]
        outcome = tmp_path / "o6.json"
        outcome.write_bytes(ElectionReader.dumps_outcome(entry.outcome, entry.election))
        code = run(["check", "--election", election_file("E6"), "--outcome", str(outcome), "--axiom", "sCore"])
        assert code == 0
        assert output(capsys)["holds"] is True

    def test_unknown_axiom(self, election_file, capsys):
        code = run(["check", "--election", election_file("E1"), "--picks", "a,a,a,a", "--axiom", "XJR"])
        assert code == 2
        assert "Unknown axiom" in capsys.readouterr().err

    def test_wrong_pick_count(self, election_file):
        assert run(["check", "--election", election_file("E1"), "--picks", "a,a", "--axiom", "JR"]) == 2

    def test_missing_file(self, tmp_path):
        assert run(["check", "--election", str(tmp_path / "none.json"), "--picks", "a", "--axiom", "JR"]) == 2

    def test_witness_can_be_dropped(self, election_file, capsys):
        run(["check", "--election", election_file("E1"), "--picks", "a,a,a,a", "--axiom", "JR", "--no-witness"])
        assert "witness" not in output(capsys)

    def test_human_output(self, election_file, capsys):
        run(["check", "--election", election_file("E1"), "--picks", "a,a,a,a", "--axiom", "JR", "--human"])
        text = capsys.readouterr().out
        assert text.startswith("JR: violated")
        assert "group: [4, 5, 6]" in text

    def test_work_cap(self, election_file):
        args = ["check", "--election", election_file("E4"), "--picks", "x,x,x,x,y,y,y", "--axiom", "FJR"]
        assert run(args + ["--max-work", "10"]) == 3

    def test_witness_replays_through_check(self, election_file, capsys):
        run(["check", "--election", election_file("E7"), "--picks", "b,b,b", "--axiom", "wFJR"])
        deviation = output(capsys)["witness"]["deviation"]
        picks = ",".join(deviation[str(r)] for r in (1, 2, 3))
        assert run(["check", "--election", election_file("E7"), "--picks", picks, "--axiom", "wFJR"]) == 0


class TestSolve:
    def test_serial_dictatorship(self, election_file, capsys):
        assert run(["solve", "--election", election_file("E0"), "--rule", "sdr"]) == 0
        assert output(capsys)["outcome"]["picks"] == ["a", "a", "a", "b", "b", "b"]

    def test_local_search_with_trace(self, tmp_path, capsys):
        path = ElectionReader.write_file(build_election("ab", [[["a"]] * 3] * 2), tmp_path / "u.json")
        assert run(["solve", "--election", str(path), "--rule", "lspav", "--epsilon", "1/8", "--trace"]) == 0
        doc = output(capsys)
        assert doc["outcome"]["picks"] == ["a", "a"]
        assert doc["trace"]["steps"] == []

    def test_empty_ballot_is_a_usage_error(self, tmp_path, capsys):
        path = ElectionReader.write_file(build_election("ab", [[[], ["a"]]]), tmp_path / "g.json")
        assert run(["solve", "--election", str(path), "--rule", "sdr"]) == 2
        assert "voter 1" in capsys.readouterr().err

    def test_greedy_cohesive(self, election_file, capsys):
        assert run(["solve", "--election", election_file("example_A1"), "--rule", "gcr", "--trace"]) == 0
        doc = output(capsys)
        assert doc["outcome"]["picks"] == ["c1"]
        assert doc["trace"]["groups"][0]["group"] == [1, 2, 3]

    def test_unknown_rule(self, election_file):
        assert run(["solve", "--election", election_file("E0"), "--rule", "pav"]) == 2


class TestEnumerate:
    def test_none_found(self, election_file, capsys):
        assert run(["enumerate", "--election", election_file("prop_C1"), "--axiom", "sEJR"]) == 1
        doc = output(capsys)
        assert doc["found"] is None
        assert doc["outcomes"] == 11664

    def test_found(self, election_file, capsys):
        assert run(["enumerate", "--election", election_file("E7"), "--axiom", "wFJR", "--threads", "2"]) == 0
        assert output(capsys)["found"] == {"picks": ["a", "a", "a"]}

    @pytest.mark.slow
    def test_block_election_strong_jr(self, election_file, capsys):
        assert run(["enumerate", "--election", election_file("prop_3_2"), "--axiom", "sJR"]) == 1


class TestCorpus:
    def test_list(self, capsys):
        assert run(["corpus", "list"]) == 0
        assert output(capsys)["entries"][:3] == ["prop_3_2", "prop_C1", "example_A1"]

    def test_verify_one(self, capsys):
        assert run(["corpus", "verify", "E7", "--human"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines == [
            "PASS  E7  sFPJR  (outcome, expected holds)",
            "PASS  E7  wFJR  (outcome, expected fails)",
        ]

    def test_unknown_entry(self):
        assert run(["corpus", "verify", "E42"]) == 2

    @pytest.mark.slow
    def test_verify_all(self):
        assert run(["corpus", "verify"]) == 0


class TestProbe:
    def test_injected_pair(self, capsys):
        code = run(["probe", "--axiom", "wCore", "--axiom", "JR", "--inject", "E1", "--trials", "5"])
        assert code == 1
        doc = output(capsys)
        assert doc["counterexample"]["replayed"] is True
        assert doc["expected"] is False

    def test_short_run(self, capsys):
        code = run(["probe", "--axiom", "sFJR", "--axiom", "sEJR", "--trials", "20", "--n", "4", "--ell", "3"])
        assert code == 0
        assert output(capsys)["params"]["n"] == 4

    def test_needs_two_axioms(self):
        assert run(["probe", "--axiom", "sFJR"]) == 2

    def test_same_seed_same_bytes(self, capsys):
        args = ["probe", "--axiom", "EJR", "--axiom", "sEJR", "--trials", "50", "--seed", "9"]
        run(args)
        first = capsys.readouterr().out
        run(args)
        assert capsys.readouterr().out == first


class TestConfig:
    def test_defaults_validate(self):
        assert Config.validate()

    def test_bad_value(self, monkeypatch):
        monkeypatch.setattr(Config, "THREADS", 0)
        with pytest.raises(ValueError):
            Config.validate()
        assert run(["corpus", "list"], config=Config) == 2

    def test_limits(self):
        limits = Config.limits(max_work=5)
        assert limits.max_work == 5
        assert limits.max_voters == Config.MAX_VOTERS

    def test_corpus_dir_comes_from_config(self, tmp_path, monkeypatch, capsys):
        source = Path(Config.CORPUS_DIR) / "E1.json"
        (tmp_path / "E1.json").write_bytes(source.read_bytes())
        monkeypatch.setattr(Config, "CORPUS_DIR", str(tmp_path))
        assert run(["corpus", "list"]) == 0
        assert output(capsys) == {"entries": ["E1"]}

    def test_validation_runs_without_explicit_config(self, monkeypatch):
        monkeypatch.setattr(Config, "TRIALS", 0)
        assert run(["corpus", "list"]) == 2

    def test_library_defaults_follow_config(self):
        assert ResourceLimits() == Config.limits()
        assert GeneratorParams().seed == Config.SEED
        assert DEFAULT_CORPUS_DIR == Path(Config.CORPUS_DIR)

    def test_help_exits_zero(self):
        assert run(["--help"]) == 0
