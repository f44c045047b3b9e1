import pytest
from hypothesis import given, settings

from helpers import build_election
from strategies import elections
from src.axioms import AxiomId, check
from src.election import ElectionClass, election_class
from src.errors import ResourceLimitError, ResourceLimits
from src.oracle import (
    Counterexample,
    GeneratorParams,
    enumerate_outcomes,
    exists_satisfying,
    outcome_count,
    probe_implication,
    random_election,
    round_choices,
    sample_unrestricted_outcomes,
)


class TestEnumeration:
    def test_restricted_count_of_block_election(self, corpus):
        assert outcome_count(corpus["prop_3_2"].election, restrict=True) == 746496

    def test_restricted_count_of_pairs_election(self, corpus):
        assert outcome_count(corpus["prop_C1"].election, restrict=True) == 11664

    def test_unrestricted_single_round(self, example_a1):
        assert [o.picks for o in enumerate_outcomes(example_a1, restrict=False)] == [(0,), (1,)]

    def test_round_without_approvals_offers_first_candidate(self):
        election = build_election("abc", [[["b"], ["c"]], [[], []]])
        assert round_choices(election, restrict=True) == [[1, 2], [0]]

    def test_lexicographic_order(self, corpus):
        outcomes = [o.picks for o in enumerate_outcomes(corpus["E7"].election)]
        assert outcomes == sorted(outcomes)
        assert len(outcomes) == 8

    def test_refuses_oversized_space(self, corpus):
        with pytest.raises(ResourceLimitError):
            list(enumerate_outcomes(corpus["prop_3_2"].election, limits=ResourceLimits(max_work=1000)))


class TestExistsSatisfying:
    def test_pairs_election_has_no_strong_ejr_outcome(self, corpus):
        assert exists_satisfying(corpus["prop_C1"].election, AxiomId.S_EJR) is None

    @pytest.mark.slow
    def test_block_election_has_no_strong_jr_outcome(self, corpus):
        assert exists_satisfying(corpus["prop_3_2"].election, "sJR") is None

    def test_first_found_satisfies(self, corpus):
        election = corpus["E7"].election
        found = exists_satisfying(election, "wFJR")
        assert found is not None
        assert found.names(election) == ["a", "a", "a"]

    @settings(max_examples=40, deadline=None)
    @given(elections(max_n=4, max_ell=3, max_m=3))
    def test_ejr_plus_outcome_always_exists(self, election):
        found = exists_satisfying(election, "EJR+")
        assert found is not None
        assert check(election, found, "EJR+").holds

    @settings(max_examples=30, deadline=None)
    @given(elections(max_n=3, max_ell=2, max_m=3))
    def test_restriction_does_not_change_the_answer(self, election):
        for axiom in ("sJR", "sEJR", "FJR", "Core"):
            restricted = exists_satisfying(election, axiom, restrict=True)
            full = exists_satisfying(election, axiom, restrict=False)
            assert (restricted is None) == (full is None), axiom

    @settings(max_examples=30, deadline=None)
    @given(elections(max_n=4, max_ell=3, max_m=3))
    def test_threads_do_not_change_the_answer(self, election):
        for axiom in ("sJR", "sFPJR"):
            assert exists_satisfying(election, axiom, threads=3) == exists_satisfying(election, axiom)

    def test_work_estimate_checked_first(self, corpus):
        with pytest.raises(ResourceLimitError):
            exists_satisfying(corpus["prop_C1"].election, "sEJR", limits=ResourceLimits(max_work=10 ** 4))


class TestGenerator:
    def test_deterministic(self):
        params = GeneratorParams(seed=99)
        assert random_election(params) == random_election(params)
        assert random_election(params, params.rng(3)) == random_election(params, params.rng(3))

    def test_trials_differ(self):
        params = GeneratorParams(n=6, ell=5, m=4, seed=99, exact_sizes=True)
        assert random_election(params, params.rng(0)) != random_election(params, params.rng(1))

    def test_exact_sizes(self):
        election = random_election(GeneratorParams(n=4, ell=3, m=2, exact_sizes=True))
        assert (election.n, election.ell, election.m) == (4, 3, 2)

    def test_single_approvals(self):
        params = GeneratorParams(class_constraint=ElectionClass.EXACTLY_ONE, seed=5)
        for trial in range(20):
            assert election_class(random_election(params, params.rng(trial))) is ElectionClass.EXACTLY_ONE

    def test_at_least_one(self):
        params = GeneratorParams(class_constraint=ElectionClass.AT_LEAST_ONE, density=0.0, seed=5)
        for trial in range(20):
            assert election_class(random_election(params, params.rng(trial))).belongs_to(ElectionClass.AT_LEAST_ONE)

    def test_full_density(self):
        election = random_election(GeneratorParams(density=1.0, seed=11))
        everyone = frozenset(range(election.m))
        assert all(cell == everyone for row in election.approvals for cell in row)

    @pytest.mark.parametrize("kwargs", [{"density": 1.5}, {"n": 0}, {"m": -1}])
    def test_invalid_params(self, kwargs):
        with pytest.raises(ValueError):
            GeneratorParams(**kwargs)

    def test_unrestricted_sample_is_seeded(self, e1):
        first = sample_unrestricted_outcomes(e1.election, 10, seed=4)
        assert first == sample_unrestricted_outcomes(e1.election, 10, seed=4)
        assert all(len(o) == 4 for o in first)


class TestProbe:
    def test_injected_counterexample(self, e1):
        params = GeneratorParams(seed=3)
        report = probe_implication("wCore", "JR", params, trials=10, inject=[(e1.election, e1.outcome)])
        assert not report.expected
        assert report.counterexample is not None
        assert report.counterexample.trial is None
        assert report.counterexample.replayed
        assert report.consistent
        doc = report.to_dict()
        assert doc["arrow"] == ["wCore", "JR"]
        assert doc["counterexample"]["conclusion"]["witness"]["group"] == [4, 5, 6]

    def test_arrow_short_run(self):
        params = GeneratorParams(n=4, ell=3, m=3, seed=12)
        report = probe_implication(AxiomId.S_FJR, AxiomId.S_EJR, params, trials=40)
        assert report.expected
        assert report.counterexample is None
        assert report.to_dict()["params"]["seed"] == 12

    @pytest.mark.slow
    def test_strong_fjr_implies_strong_ejr(self):
        params = GeneratorParams(n=5, ell=4, m=3, seed=2024)
        report = probe_implication("sFJR", "sEJR", params, trials=500)
        assert report.counterexample is None

    @pytest.mark.slow
    def test_weak_pjr_implies_weak_ejr_on_single_approvals(self):
        params = GeneratorParams(n=5, ell=4, m=3, class_constraint=ElectionClass.EXACTLY_ONE, seed=2024)
        report = probe_implication("wPJR", "wEJR", params, trials=500)
        assert report.expected
        assert report.counterexample is None

    def test_counterexample_must_separate(self, e1):
        failing = check(e1.election, e1.outcome, "JR")
        with pytest.raises(ValueError):
            Counterexample(e1.election, e1.outcome, failing, failing, replayed=True)
