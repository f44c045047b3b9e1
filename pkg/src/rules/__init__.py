from .base_rule import GroupStep, RuleConfig, RuleTrace, SwapStep, VotingRule
from .greedy_cohesive import GreedyCohesiveRule, gcr
from .local_search import LocalSearchPAV, harmonic_score, is_local_optimum, lspav, swap_bound
from .serial_dictatorship import SerialDictatorship, sdr

RULES = {
    "lspav": LocalSearchPAV,
    "gcr": GreedyCohesiveRule,
    "sdr": SerialDictatorship,
}

__all__ = [
    'GroupStep', 'RuleConfig', 'RuleTrace', 'SwapStep', 'VotingRule',
    'GreedyCohesiveRule', 'LocalSearchPAV', 'SerialDictatorship', 'RULES',
    'gcr', 'harmonic_score', 'is_local_optimum', 'lspav', 'sdr', 'swap_bound',
]
