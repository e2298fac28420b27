"""Shared brute-force oracles for the test suite.

The partition oracle below computes the block permutation distance straight
from its definition (cut into blocks, reorder by a minimal permutation) by
exhaustive search, independently of the set-difference formula the library
uses.  It is only feasible for very short permutations.
"""

from itertools import permutations

from permcode import is_minimal


def block_distance_partition_oracle(p1, p2):
    """Smallest d such that p2 is a minimal (d+1)-block reordering of p1."""
    n = len(p1)
    best = None
    for mask in range(2 ** (n - 1)):
        cuts = [i + 1 for i in range(n - 1) if (mask >> i) & 1]
        if best is not None and len(cuts) >= best:
            continue
        bounds = [0] + cuts + [n]
        blocks = [tuple(p1[a:b]) for a, b in zip(bounds, bounds[1:])]
        for order in permutations(range(len(blocks))):
            if not is_minimal([o + 1 for o in order]):
                continue
            if tuple(x for i in order for x in blocks[i]) == tuple(p2):
                best = len(cuts)
                break
    return best
