from .base_checker import AxiomChecker, AxiomId, CheckReport, Variant, Witness, Work
from .context import GuaranteeCache
from .lattice import DASHED_ARROWS, SOLID_ARROWS, implies, lattice_arrows
from .registry import (
    check,
    check_core_family,
    check_droop_ejr,
    check_droop_fjr,
    check_ejr_family,
    check_ejr_plus,
    check_ejr_plus_bruteforce,
    check_fjr_family,
    check_fpjr_family,
    check_jr_family,
    check_pjr_family,
    guarantee_maxmin,
    mu,
    rho,
)
from .replay import replay_witness

__all__ = [
    'AxiomChecker', 'AxiomId', 'CheckReport', 'Variant', 'Witness', 'Work', 'GuaranteeCache',
    'DASHED_ARROWS', 'SOLID_ARROWS', 'implies', 'lattice_arrows',
    'check', 'check_core_family', 'check_droop_ejr', 'check_droop_fjr', 'check_ejr_family',
    'check_ejr_plus', 'check_ejr_plus_bruteforce', 'check_fjr_family', 'check_fpjr_family',
    'check_jr_family', 'check_pjr_family', 'guarantee_maxmin', 'mu', 'rho', 'replay_witness',
]
