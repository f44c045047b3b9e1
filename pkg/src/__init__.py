from .election import (
    ElectionClass,
    Outcome,
    RoundSet,
    Suboutcome,
    TemporalElection,
    VoterSet,
    agreement_candidates,
    agreement_rounds,
    election_class,
    satisfaction,
    satisfaction_profile,
    voter_satisfaction,
)
from .election_reader import ElectionReader, load_election, load_outcome, save_election, save_outcome
from .errors import (
    ElectionError,
    ParseError,
    PreconditionError,
    ResourceLimitError,
    ResourceLimits,
    RuleError,
    TemporalVotingError,
)
from .axioms import AxiomId, CheckReport, GuaranteeCache, Variant, Witness, check, implies, replay_witness
from .rules import RuleConfig, RuleTrace, gcr, harmonic_score, is_local_optimum, lspav, sdr
from .oracle import (
    GeneratorParams,
    ProbeReport,
    enumerate_outcomes,
    exists_satisfying,
    probe_implication,
    random_election,
    sample_unrestricted_outcomes,
)
from .corpus import CorpusEntry, corpus_entries, dump_entry, load_entry, verify_corpus

__all__ = [
    'ElectionClass', 'Outcome', 'RoundSet', 'Suboutcome', 'TemporalElection', 'VoterSet',
    'agreement_candidates', 'agreement_rounds', 'election_class', 'satisfaction',
    'satisfaction_profile', 'voter_satisfaction',
    'ElectionReader', 'load_election', 'load_outcome', 'save_election', 'save_outcome',
    'ElectionError', 'ParseError', 'PreconditionError', 'ResourceLimitError', 'ResourceLimits',
    'RuleError', 'TemporalVotingError',
    'AxiomId', 'CheckReport', 'GuaranteeCache', 'Variant', 'Witness', 'check', 'implies', 'replay_witness',
    'RuleConfig', 'RuleTrace', 'gcr', 'harmonic_score', 'is_local_optimum', 'lspav', 'sdr',
    'GeneratorParams', 'ProbeReport', 'enumerate_outcomes', 'exists_satisfying', 'probe_implication',
    'random_election', 'sample_unrestricted_outcomes',
    'CorpusEntry', 'corpus_entries', 'dump_entry', 'load_entry', 'verify_corpus',
]
