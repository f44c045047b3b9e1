import inspect
from fractions import Fraction

import pytest

from helpers import build_election
from src.axioms import check, check_ejr_plus, check_fjr_family, check_fpjr_family
from src.election import ElectionClass, Outcome, satisfaction_profile
from src.errors import PreconditionError, ResourceLimitError, ResourceLimits, RuleError
from src.oracle import GeneratorParams, random_election
from src.rules import local_search
from src.rules import (
    RULES,
    GreedyCohesiveRule,
    LocalSearchPAV,
    RuleConfig,
    SerialDictatorship,
    gcr,
    harmonic_score,
    is_local_optimum,
    lspav,
    sdr,
    swap_bound,
)


class TestHarmonicScore:
    def test_single_voter_twice(self):
        election = build_election("ab", [[["a"], [], []], [["a"], ["b"], []]])
        assert harmonic_score(election, Outcome((0, 0))) == Fraction(3, 2)

    def test_corpus_outcome(self, e1):
        assert harmonic_score(e1.election, e1.outcome) == Fraction(25, 4)

    def test_nobody_satisfied(self, unanimous):
        assert harmonic_score(unanimous, Outcome((1, 2, 1))) == 0

    def test_exact(self, unanimous):
        assert isinstance(harmonic_score(unanimous, Outcome((0, 0, 0))), Fraction)


class TestRuleConfig:
    def test_default_epsilon(self):
        assert RuleConfig().epsilon_for(4) == Fraction(1, 32)

    @pytest.mark.parametrize(
        "config",
        [
            RuleConfig(epsilon=Fraction(0)),
            RuleConfig(epsilon=Fraction(-1, 3)),
            RuleConfig(tie_break="random"),
            RuleConfig(epsilon=Fraction(1, 9), check_guarantee=True),
            RuleConfig(max_iterations=-1),
        ],
    )
    def test_invalid(self, config):
        with pytest.raises(ValueError):
            config.validate(3)

    def test_guarantee_regime(self):
        RuleConfig(epsilon=Fraction(1, 10), check_guarantee=True).validate(3)


class TestLocalSearchPAV:
    def test_unanimous(self, unanimous):
        outcome, trace = lspav(unanimous)
        assert outcome == Outcome((0, 0, 0))
        assert trace.steps == ()

    def test_swap_not_worth_it(self, example_a1):
        config = RuleConfig(epsilon=Fraction(1, 2), initial=Outcome((0,)))
        outcome, trace = lspav(example_a1, config)
        assert outcome == Outcome((0,))
        assert trace.steps == ()

    def test_improves_bad_start(self, unanimous):
        outcome, trace = lspav(unanimous, RuleConfig(initial=Outcome((1, 2, 1))))
        assert outcome == Outcome((0, 0, 0))
        assert [step.round for step in trace.steps] == [0, 1, 2]
        assert trace.replay(unanimous) == outcome
        doc = trace.to_dict(unanimous)
        assert doc["initial"] == ["b", "c", "b"]
        assert doc["steps"][0] == {"round": 1, "old": "b", "new": "a", "gain": "4/1"}

    def test_iteration_cap(self, unanimous):
        rule = LocalSearchPAV(RuleConfig(initial=Outcome((1, 1, 1)), max_iterations=0))
        with pytest.raises(RuleError):
            rule.solve(unanimous)

    def test_result_is_local_optimum(self, corpus):
        for name in ("E1", "E6", "E0"):
            election = corpus[name].election
            config = RuleConfig()
            outcome, trace = lspav(election, config)
            assert is_local_optimum(election, outcome, config.epsilon_for(election.ell))
            assert len(trace.steps) <= swap_bound(election, config.epsilon_for(election.ell))
            assert trace.replay(election) == outcome

    def test_rejects_output_that_is_not_locally_optimal(self, e1, monkeypatch):
        """solve re-scans its result and refuses to return a non-optimum."""
        monkeypatch.setattr(local_search, "is_local_optimum", lambda election, outcome, epsilon: False)
        with pytest.raises(RuleError, match="locally optimal"):
            LocalSearchPAV(RuleConfig()).solve(e1.election)

    def test_swap_bound(self, e1):
        # ceil(6 * (1 + ln 4) * 32)
        assert swap_bound(e1.election, Fraction(1, 32)) == 459

    @pytest.mark.slow
    @pytest.mark.parametrize("election_class", [None, ElectionClass.AT_LEAST_ONE, ElectionClass.EXACTLY_ONE])
    def test_outputs_provide_ejr_plus(self, election_class):
        params = GeneratorParams(n=6, ell=5, m=4, density=0.4, class_constraint=election_class, seed=37)
        for trial in range(100):
            election = random_election(params, params.rng(trial))
            outcome, trace = lspav(election)
            assert check_ejr_plus(election, outcome, "standard").holds, trial
            assert len(trace.steps) <= swap_bound(election, RuleConfig().epsilon_for(election.ell))


class TestRulesPackage:
    def test_submodules_stay_reachable(self):
        """The rule functions re-exported by the package do not hide its modules."""
        import src.rules as rules

        for name in ("local_search", "greedy_cohesive", "serial_dictatorship"):
            assert inspect.ismodule(getattr(rules, name))
        for rule in (rules.lspav, rules.gcr, rules.sdr):
            assert inspect.isfunction(rule)


class TestGreedyCohesiveRule:
    def test_nobody_can_claim_anything(self, example_a1):
        outcome, trace = gcr(example_a1)
        assert outcome == Outcome((0,))
        assert len(trace.groups) == 1
        group = trace.groups[0]
        assert group.group == example_a1.all_voters
        assert group.demand == 0
        assert len(group.scope) == 0

    def test_unanimous(self, unanimous):
        outcome, trace = gcr(unanimous)
        assert satisfaction_profile(unanimous, outcome) == (3, 3, 3, 3)
        assert trace.replay(unanimous) == outcome

    def test_trace_document(self, corpus):
        election = corpus["E7"].election
        outcome, trace = gcr(election)
        doc = trace.to_dict(election)
        assert doc["rule"] == "gcr"
        assert doc["filler"] == "a"
        assert sorted(v for g in doc["groups"] for v in g["group"]) == [1, 2, 3]
        assert check(election, outcome, "FJR").holds

    def test_resource_cap(self, corpus):
        with pytest.raises(ResourceLimitError):
            GreedyCohesiveRule(limits=ResourceLimits(max_work=1000)).solve(corpus["E4"].election)

    @pytest.mark.slow
    def test_outputs_provide_fjr(self):
        params = GeneratorParams(n=5, ell=4, m=3, density=0.4, seed=45)
        for trial in range(100):
            election = random_election(params, params.rng(trial))
            outcome, trace = gcr(election)
            covered = 0
            for step in trace.groups:
                assert not covered & step.group.mask
                covered |= step.group.mask
                assert step.rounds.mask & ~step.scope.mask == 0
            assert covered == election.all_voters.mask
            assert trace.replay(election) == outcome
            assert check_fjr_family(election, outcome, "standard").holds, trial


class TestSerialDictatorship:
    def test_lowest_candidate_of_each_dictator(self, corpus):
        election = corpus["E0"].election
        outcome, trace = sdr(election)
        assert outcome.names(election) == ["a", "a", "a", "b", "b", "b"]
        assert trace.dictators == (0, 1, 2, 3, 4, 5)
        assert trace.replay(election) == outcome

    def test_dictators_cycle(self, unanimous):
        outcome, trace = sdr(unanimous)
        assert outcome == Outcome((0, 0, 0))
        assert trace.to_dict(unanimous)["dictators"] == [1, 2, 3]

    def test_empty_cell(self):
        election = build_election("ab", [[["a"], ["b"]], [["a"], []]])
        with pytest.raises(PreconditionError) as info:
            SerialDictatorship().solve(election)
        assert (info.value.voter, info.value.round) == (2, 2)

    @pytest.mark.slow
    @pytest.mark.parametrize("n, ell", [(1, 4), (2, 4), (4, 4), (1, 8), (2, 8), (4, 8)])
    def test_outputs_provide_strong_fpjr(self, n, ell):
        params = GeneratorParams(
            n=n, ell=ell, m=3, density=0.4, class_constraint=ElectionClass.AT_LEAST_ONE,
            seed=53, exact_sizes=True,
        )
        for trial in range(100 // 6 + 1):
            election = random_election(params, params.rng(trial))
            outcome, trace = sdr(election)
            assert all(trace.dictators.count(i) == ell // n for i in range(n))
            assert check_fpjr_family(election, outcome, "strong").holds, trial

    @pytest.mark.parametrize("n, ell", [(2, 4), (3, 6)])
    def test_single_approvals_give_weak_ejr(self, n, ell):
        params = GeneratorParams(
            n=n, ell=ell, m=3, class_constraint=ElectionClass.EXACTLY_ONE, seed=8, exact_sizes=True,
        )
        for trial in range(20):
            election = random_election(params, params.rng(trial))
            outcome, _ = sdr(election)
            assert check(election, outcome, "wEJR").holds, trial


def test_rule_registry():
    assert set(RULES) == {"lspav", "gcr", "sdr"}
    assert all(rule().get_rule_name() == name for name, rule in RULES.items())
