"""Exact VC dimension of zero-free sign-vector sets, and the two derived
matrix bounds: Radon rank (threshold side, minus one) and VC rank
(difference side).  Both lower-bound the monotone rank.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .errors import DomainError
from .signs import SignVectorSet
from .topes import difference_topes, threshold_topes


def _zero_free_patterns(vectors: SignVectorSet) -> list[int]:
    if not vectors.is_zero_free():
        bad = next(v for v in vectors if not v.is_zero_free())
        raise DomainError(f"VC dimension requires zero-free vectors, got {bad}")
    # zero-free vectors are determined by their positive mask
    return [v.pos for v in vectors]


def shatters(vectors: SignVectorSet, subset: Iterable[int]) -> bool:
    """True iff restricting to the given 1-based index set realizes all
    2^|subset| sign patterns.  The empty set is shattered by any nonempty
    family."""
    idx = sorted(set(subset))
    if idx and (idx[0] < 1 or idx[-1] > vectors.ground_size):
        raise IndexError(
            f"subset {idx} outside ground set [1..{vectors.ground_size}]"
        )
    patterns = _zero_free_patterns(vectors)
    if not patterns:
        return False
    mask = 0
    for i in idx:
        mask |= 1 << (i - 1)
    return len({p & mask for p in patterns}) == 1 << len(idx)


def vc_dimension(vectors: SignVectorSet, threads: int = 1) -> int:
    """Largest size of a shattered index set, found level by level.

    A k-set is only tested once all its (k-1)-subsets are known shattered,
    and only when the family has at least 2^k members; this Sauer-style
    pruning keeps the exact search feasible at desk-scale ground sets.
    An empty family has VC dimension 0 by convention.
    """
    patterns = _zero_free_patterns(vectors)
    if not patterns:
        return 0
    n = vectors.ground_size
    count = len(patterns)
    shattered: set[int] = {0}
    level = [0]
    dim = 0
    while True:
        candidates = []
        seen = set()
        for t in level:
            for i in range(n):
                bit = 1 << i
                if t & bit:
                    continue
                t2 = t | bit
                if t2 in seen:
                    continue
                seen.add(t2)
                if count < 1 << (dim + 1):
                    continue
                if all((t2 & ~b) in shattered for b in _bits(t2)):
                    candidates.append(t2)
        check = lambda t2: len({p & t2 for p in patterns}) == 1 << (dim + 1)
        if threads > 1 and len(candidates) > 1:
            from concurrent.futures import ThreadPoolExecutor

            with ThreadPoolExecutor(max_workers=threads) as pool:
                flags = list(pool.map(check, candidates))
            nxt = [t2 for t2, ok in zip(candidates, flags) if ok]
        else:
            nxt = [t2 for t2 in candidates if check(t2)]
        if not nxt:
            return dim
        shattered.update(nxt)
        dim += 1
        level = nxt


def _bits(mask: int):
    while mask:
        b = mask & -mask
        yield b
        mask ^= b


def radon_rank(matrix: np.ndarray, threads: int = 1) -> int:
    """VC dimension of the threshold topes, minus one."""
    return vc_dimension(threshold_topes(matrix), threads=threads) - 1


def vc_rank(matrix: np.ndarray, threads: int = 1) -> int:
    """VC dimension of the difference topes."""
    return vc_dimension(difference_topes(matrix), threads=threads)
