"""
Brute-force oracle

Outcome-space enumeration for satisfiability questions, a seeded random
election generator, and the implication probe that samples (election,
outcome) pairs looking for a case where one axiom holds and another fails.

Randomness comes from numpy's PCG64 bit generator; every trial derives its
own stream from SeedSequence([seed, trial]) so a reported counterexample can
be regenerated from the seed and the trial number alone.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product
from math import prod
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from config import Config

from .axioms.base_checker import AxiomId, CheckReport
from .axioms.context import GuaranteeCache
from .axioms.lattice import implies
from .axioms.registry import CHECKERS, check
from .axioms.replay import replay_witness
from .election import ElectionClass, Outcome, TemporalElection
from .election_reader import ElectionReader
from .errors import ResourceLimits

logger = logging.getLogger(__name__)

Pair = Tuple[TemporalElection, Outcome]


# -- enumeration ----------------------------------------------------------


def round_choices(election: TemporalElection, restrict: bool) -> List[List[int]]:
    """
    Per-round candidate lists for enumeration.

    Restricted rounds offer only candidates approved by some voter, or
    candidate 0 when nobody approves anything in that round.
    """
    if not restrict:
        return [list(range(election.m)) for _ in range(election.ell)]
    choices = []
    for per_round in election.approver_masks:
        approved = [c for c, mask in enumerate(per_round) if mask]
        choices.append(approved or [0])
    return choices


def outcome_count(election: TemporalElection, restrict: bool) -> int:
    return prod(len(options) for options in round_choices(election, restrict))


def enumerate_outcomes(
    election: TemporalElection,
    restrict: bool = True,
    limits: Optional[ResourceLimits] = None,
) -> Iterator[Outcome]:
    """Outcomes in lexicographic order of (round, candidate index)."""
    limits = limits or ResourceLimits()
    choices = round_choices(election, restrict)
    limits.require_work("enumerate_outcomes", prod(len(options) for options in choices))
    for picks in product(*choices):
        yield Outcome(picks)


def _first_satisfying(
    axiom: AxiomId,
    cache: GuaranteeCache,
    choices: Sequence[Sequence[int]],
) -> Optional[Outcome]:
    checker = CHECKERS[axiom.family](cache)
    examined = 0
    for picks in product(*choices):
        outcome = Outcome(picks)
        examined += 1
        if checker.check(outcome, axiom.variant).holds:
            logger.debug("%s holds on %s after %d outcomes", axiom.value, picks, examined)
            return outcome
    logger.debug("%s fails on all %d outcomes of shard", axiom.value, examined)
    return None


def exists_satisfying(
    election: TemporalElection,
    axiom: "AxiomId | str",
    restrict: bool = True,
    threads: int = 1,
    limits: Optional[ResourceLimits] = None,
    cache: Optional[GuaranteeCache] = None,
) -> Optional[Outcome]:
    """
    First outcome in enumeration order that satisfies axiom, or None.

    With threads > 1 the space is sharded by the first-round pick; shards
    share one GuaranteeCache and the earliest shard with a hit wins, so the
    answer does not depend on the thread count.
    """
    axiom = AxiomId.parse(axiom)
    cache = cache or GuaranteeCache(election, limits)
    choices = round_choices(election, restrict)
    count = prod(len(options) for options in choices)
    cache.limits.require_work(f"exists_satisfying({axiom.value})", count * 2 ** election.n)
    logger.info("searching %d outcomes for %s", count, axiom.value)

    if threads <= 1 or len(choices[0]) == 1:
        return _first_satisfying(axiom, cache, choices)

    shards = [[[c]] + choices[1:] for c in choices[0]]
    with ThreadPoolExecutor(max_workers=threads) as executor:
        futures = [executor.submit(_first_satisfying, axiom, cache, shard) for shard in shards]
        results = [future.result() for future in futures]
    found = [outcome for outcome in results if outcome is not None]
    return min(found, key=lambda outcome: outcome.picks) if found else None


# -- random generation ----------------------------------------------------


@dataclass(frozen=True)
class GeneratorParams:
    """
    Parameters of random_election.

    n, ell and m are upper bounds (each size is drawn from 1..bound) unless
    exact_sizes is set.
    """

    n: int = Config.DEFAULT_GENERATOR["n"]
    ell: int = Config.DEFAULT_GENERATOR["ell"]
    m: int = Config.DEFAULT_GENERATOR["m"]
    density: float = Config.DEFAULT_GENERATOR["density"]
    class_constraint: Optional[ElectionClass] = None
    seed: int = Config.SEED
    exact_sizes: bool = False

    def __post_init__(self):
        for name in ("n", "ell", "m"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1")
        if not 0.0 <= self.density <= 1.0:
            raise ValueError(f"density must be in [0, 1], got {self.density}")

    def rng(self, trial: Optional[int] = None) -> np.random.Generator:
        entropy = [self.seed] if trial is None else [self.seed, trial]
        return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy)))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "ell": self.ell,
            "m": self.m,
            "density": self.density,
            "class": self.class_constraint.value if self.class_constraint else None,
            "seed": self.seed,
            "exact_sizes": self.exact_sizes,
        }


def candidate_names(m: int) -> Tuple[str, ...]:
    if m <= 26:
        return tuple(chr(ord("a") + c) for c in range(m))
    return tuple(f"c{c + 1}" for c in range(m))


def random_election(params: GeneratorParams, rng: Optional[np.random.Generator] = None) -> TemporalElection:
    """Deterministic in params.seed when no generator is passed."""
    rng = rng if rng is not None else params.rng()
    if params.exact_sizes:
        n, ell, m = params.n, params.ell, params.m
    else:
        n = int(rng.integers(1, params.n, endpoint=True))
        ell = int(rng.integers(1, params.ell, endpoint=True))
        m = int(rng.integers(1, params.m, endpoint=True))

    constraint = params.class_constraint
    approvals = []
    for _ in range(n):
        row = []
        for _ in range(ell):
            if constraint is ElectionClass.EXACTLY_ONE:
                cell = {int(rng.integers(m))}
            else:
                approved = rng.random(m) < params.density
                cell = {c for c in range(m) if approved[c]}
                if constraint is ElectionClass.AT_LEAST_ONE:
                    cell.add(int(rng.integers(m)))
            row.append(frozenset(cell))
        approvals.append(tuple(row))
    return TemporalElection(candidate_names(m), n, ell, tuple(approvals))


def random_outcome(election: TemporalElection, rng: np.random.Generator, restrict: bool = False) -> Outcome:
    choices = round_choices(election, restrict)
    return Outcome(tuple(options[int(rng.integers(len(options)))] for options in choices))


def sample_unrestricted_outcomes(election: TemporalElection, k: int, seed: int) -> List[Outcome]:
    """k outcomes drawn uniformly from the full outcome space."""
    rng = np.random.Generator(np.random.PCG64(seed))
    return [random_outcome(election, rng) for _ in range(k)]


# -- implication probe ----------------------------------------------------


@dataclass(frozen=True)
class Counterexample:
    election: TemporalElection
    outcome: Outcome
    premise: CheckReport
    conclusion: CheckReport
    replayed: bool
    trial: Optional[int] = None

    def __post_init__(self):
        if not self.premise.holds or self.conclusion.holds:
            raise ValueError("a counterexample needs the premise to hold and the conclusion to fail")

    def to_dict(self) -> dict:
        return {
            "trial": self.trial,
            "election": ElectionReader.to_document(self.election),
            "outcome": ElectionReader.outcome_document(self.outcome, self.election),
            "premise": self.premise.to_dict(self.election),
            "conclusion": self.conclusion.to_dict(self.election),
            "replayed": self.replayed,
        }


@dataclass(frozen=True)
class ProbeReport:
    arrow: Tuple[AxiomId, AxiomId]
    trials: int
    counterexample: Optional[Counterexample]
    seed: int
    params: GeneratorParams
    expected: bool

    @property
    def consistent(self) -> bool:
        """An expected arrow has no counterexample; a non-arrow has a replayed one."""
        if self.expected:
            return self.counterexample is None
        return self.counterexample is not None and self.counterexample.replayed

    def to_dict(self) -> dict:
        return {
            "arrow": [self.arrow[0].value, self.arrow[1].value],
            "expected": self.expected,
            "trials": self.trials,
            "seed": self.seed,
            "params": self.params.to_dict(),
            "counterexample": self.counterexample.to_dict() if self.counterexample else None,
        }


def _try_pair(
    a: AxiomId,
    b: AxiomId,
    election: TemporalElection,
    outcome: Outcome,
    limits: Optional[ResourceLimits],
    trial: Optional[int],
) -> Optional[Counterexample]:
    cache = GuaranteeCache(election, limits)
    premise = check(election, outcome, a, cache=cache)
    if not premise.holds:
        return None
    conclusion = check(election, outcome, b, cache=cache)
    if conclusion.holds:
        return None
    replayed = replay_witness(election, outcome, conclusion)
    if not replayed:
        logger.warning("witness for %s did not replay on trial %s", b.value, trial)
    return Counterexample(election, outcome, premise, conclusion, replayed, trial)


def probe_implication(
    a: "AxiomId | str",
    b: "AxiomId | str",
    params: GeneratorParams,
    trials: int,
    inject: Iterable[Pair] = (),
    limits: Optional[ResourceLimits] = None,
) -> ProbeReport:
    """
    Looks for a pair on which a holds and b fails.

    Injected pairs are tried first; then trial t samples an election and an
    approved-candidates outcome from the stream seeded by (seed, t).
    """
    a, b = AxiomId.parse(a), AxiomId.parse(b)
    expected = implies(a, b, params.class_constraint)

    found = None
    for election, outcome in inject:
        found = _try_pair(a, b, election, outcome, limits, None)
        if found:
            break

    if found is None:
        for t in range(trials):
            rng = params.rng(t)
            election = random_election(params, rng)
            outcome = random_outcome(election, rng, restrict=True)
            found = _try_pair(a, b, election, outcome, limits, t)
            if found:
                break

    logger.info(
        "probe %s -> %s: %s after %d trials",
        a.value, b.value, "counterexample" if found else "no counterexample", trials,
    )
    return ProbeReport((a, b), trials, found, params.seed, params, expected)
