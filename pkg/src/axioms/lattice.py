"""Implication arrows between the axioms."""

from functools import lru_cache
from typing import FrozenSet, List, Optional, Tuple

from ..election import ElectionClass
from .base_checker import AxiomId as A

Arrow = Tuple[A, A]

SOLID_ARROWS: Tuple[Arrow, ...] = (
    (A.S_EJR_PLUS, A.S_EJR),
    (A.S_EJR, A.S_PJR),
    (A.S_EJR, A.EJR),
    (A.S_PJR, A.S_JR),
    (A.S_PJR, A.PJR),
    (A.S_JR, A.JR),
    (A.S_EJR_PLUS, A.EJR_PLUS),
    (A.EJR_PLUS, A.EJR),
    (A.EJR_PLUS, A.W_EJR_PLUS),
    (A.W_EJR_PLUS, A.W_EJR),
    (A.S_CORE, A.S_FJR),
    (A.S_CORE, A.CORE),
    (A.S_FJR, A.S_EJR),
    (A.S_FJR, A.FJR),
    (A.S_FJR, A.S_FPJR),
    (A.CORE, A.FJR),
    (A.CORE, A.W_CORE),
    (A.FJR, A.EJR),
    (A.FJR, A.W_FJR),
    (A.FJR, A.FPJR),
    (A.W_CORE, A.W_FJR),
    (A.W_FJR, A.W_EJR),
    (A.W_FJR, A.W_FPJR),
    (A.S_FPJR, A.S_PJR),
    (A.S_FPJR, A.FPJR),
    (A.FPJR, A.PJR),
    (A.FPJR, A.W_FPJR),
    (A.W_FPJR, A.W_PJR),
    (A.EJR, A.PJR),
    (A.EJR, A.W_EJR),
    (A.PJR, A.JR),
    (A.PJR, A.W_PJR),
    (A.JR, A.W_JR),
    (A.W_EJR, A.W_PJR),
    (A.W_PJR, A.W_JR),
    (A.DROOP_EJR, A.EJR),
    (A.DROOP_FJR, A.FJR),
)

# Holds only on elections where every ballot is a single candidate
DASHED_ARROWS: Tuple[Arrow, ...] = (
    (A.W_PJR, A.W_EJR),
)


def lattice_arrows() -> List[Arrow]:
    return list(SOLID_ARROWS)


@lru_cache(maxsize=None)
def _reachable(source: A, exactly_one: bool) -> FrozenSet[A]:
    edges = list(SOLID_ARROWS)
    if exactly_one:
        edges += list(DASHED_ARROWS)
    seen = {source}
    frontier = [source]
    while frontier:
        current = frontier.pop()
        for a, b in edges:
            if a is current and b not in seen:
                seen.add(b)
                frontier.append(b)
    return frozenset(seen)


def implies(a: A, b: A, election_class: Optional[ElectionClass] = None) -> bool:
    """
    True when a implies b through a chain of arrows.

    The dashed wPJR -> wEJR arrow is only followed for ExactlyOne elections.
    """
    exactly_one = election_class is ElectionClass.EXACTLY_ONE
    return b in _reachable(a, exactly_one)
