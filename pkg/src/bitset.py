"""Integer-backed bitsets for voter and round subsets."""

from itertools import combinations
from typing import Iterable, Iterator, List


def popcount(x: int) -> int:
    """Count number of set bits in integer."""
    return x.bit_count()


def bitset_from_indices(indices: Iterable[int]) -> int:
    """Create bitset from 0-based indices."""
    result = 0
    for i in indices:
        result |= 1 << i
    return result


def bitset_to_indices(bitset: int) -> List[int]:
    """Convert bitset to ascending list of set bit indices."""
    indices = []
    while bitset:
        low = bitset & -bitset
        indices.append(low.bit_length() - 1)
        bitset ^= low
    return indices


def all_bits_mask(num_bits: int) -> int:
    """Create mask with all num_bits set."""
    return (1 << num_bits) - 1


def submasks_ascending(mask: int) -> Iterator[int]:
    """Yield every non-empty submask of mask in increasing numeric order."""
    sub = 0
    while True:
        sub = (sub - mask) & mask
        if sub == 0:
            return
        yield sub


def masks_of_size(mask: int, k: int) -> Iterator[int]:
    """
    Yield the size-k submasks of mask, lexicographic by member indices.

    Lexicographic order over sorted index tuples is the canonical order for
    round subsets R in witnesses: {1,2} before {1,3} before {2,3}.
    """
    members = bitset_to_indices(mask)
    for combo in combinations(members, k):
        yield bitset_from_indices(combo)
