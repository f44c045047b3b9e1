"""Implications between the axioms, checked on sampled elections."""

import pytest
from hypothesis import given, settings

from strategies import election_with_outcome
from src.axioms import DASHED_ARROWS, SOLID_ARROWS, AxiomId, GuaranteeCache, check, implies
from src.election import ElectionClass
from src.oracle import GeneratorParams, probe_implication, random_election, random_outcome

ALL_AXIOMS = list(AxiomId)


def verdicts(election, outcome):
    cache = GuaranteeCache(election)
    return {axiom: check(election, outcome, axiom, cache=cache).holds for axiom in ALL_AXIOMS}


class TestArrows:
    def test_arrow_count(self):
        assert len(SOLID_ARROWS) == 37
        assert len(set(SOLID_ARROWS)) == 37

    def test_transitive(self):
        assert implies(AxiomId.S_CORE, AxiomId.W_JR)
        assert implies(AxiomId.DROOP_FJR, AxiomId.PJR)
        assert implies(AxiomId.S_EJR_PLUS, AxiomId.W_EJR)

    def test_reflexive(self):
        assert all(implies(axiom, axiom) for axiom in ALL_AXIOMS)

    def test_separations_are_not_arrows(self):
        assert not implies(AxiomId.W_CORE, AxiomId.JR)
        assert not implies(AxiomId.S_FPJR, AxiomId.W_FJR)
        assert not implies(AxiomId.S_CORE, AxiomId.W_EJR_PLUS)
        assert not implies(AxiomId.EJR, AxiomId.DROOP_EJR)

    def test_dashed_arrow_needs_single_approvals(self):
        assert (AxiomId.W_PJR, AxiomId.W_EJR) in DASHED_ARROWS
        assert not implies(AxiomId.W_PJR, AxiomId.W_EJR)
        assert not implies(AxiomId.W_PJR, AxiomId.W_EJR, ElectionClass.AT_LEAST_ONE)
        assert implies(AxiomId.W_PJR, AxiomId.W_EJR, ElectionClass.EXACTLY_ONE)
        assert implies(AxiomId.S_FPJR, AxiomId.W_EJR, ElectionClass.EXACTLY_ONE)


class TestLatticeHolds:
    @settings(max_examples=80, deadline=None)
    @given(election_with_outcome(max_n=4, max_ell=3, max_m=3))
    def test_solid_arrows(self, pair):
        holds = verdicts(*pair)
        for a, b in SOLID_ARROWS:
            if holds[a]:
                assert holds[b], f"{a.value} holds but {b.value} fails"

    @settings(max_examples=80, deadline=None)
    @given(election_with_outcome(max_n=5, max_ell=4, exactly_one=True))
    def test_weak_pjr_equals_weak_ejr_on_single_approvals(self, pair):
        election, outcome = pair
        assert check(election, outcome, "wPJR").holds == check(election, outcome, "wEJR").holds

    @pytest.mark.slow
    def test_weak_pjr_equals_weak_ejr_seeded(self):
        params = GeneratorParams(n=6, ell=5, m=4, class_constraint=ElectionClass.EXACTLY_ONE, seed=54)
        mismatches = []
        for trial in range(500):
            rng = params.rng(trial)
            election = random_election(params, rng)
            outcome = random_outcome(election, rng)
            if check(election, outcome, "wPJR").holds != check(election, outcome, "wEJR").holds:
                mismatches.append(trial)
        assert mismatches == []

    @pytest.mark.slow
    @pytest.mark.parametrize("arrow", SOLID_ARROWS, ids=lambda arrow: f"{arrow[0].value}->{arrow[1].value}")
    def test_probe_every_arrow(self, arrow):
        params = GeneratorParams(n=5, ell=4, m=3, seed=2024)
        report = probe_implication(arrow[0], arrow[1], params, trials=500)
        assert report.expected
        assert report.counterexample is None
        assert report.consistent


class TestSeparations:
    @pytest.mark.parametrize(
        "name, premise, conclusion",
        [
            ("E1", "wCore", "JR"),
            ("E1", "wEJR+", "JR"),
            ("E3", "sJR", "wPJR"),
            ("E4", "sEJR+", "wFPJR"),
            ("E5", "sFJR", "wCore"),
            ("E6", "sCore", "wEJR+"),
            ("E7", "sFPJR", "wFJR"),
            ("E8", "sFPJR", "wEJR+"),
            ("E9", "sFPJR", "EJR"),
            ("E0", "sFPJR", "wEJR"),
        ],
    )
    def test_designated_outcome_separates(self, corpus, name, premise, conclusion):
        entry = corpus[name]
        params = GeneratorParams(seed=1)
        report = probe_implication(premise, conclusion, params, trials=0, inject=[(entry.election, entry.outcome)])
        assert not report.expected
        assert report.counterexample is not None
        assert report.counterexample.replayed
        assert report.consistent
