"""Brute-force reference computations kept independent of the residue-class
machinery in :mod:`nsring.semigroup`. Used by the direct N_s oracle and by the
verification sweeps."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from . import config
from .errors import TooLarge


def membership_sieve(generators: Sequence[int], bound: int) -> np.ndarray:
    """Boolean table ``reach[w]`` for ``0 <= w <= bound``."""
    gens = sorted(generators)
    reach = np.zeros(bound + 1, dtype=bool)
    reach[0] = True
    step = gens[0]
    lo = 1
    while lo <= bound:
        hi = min(lo + step, bound + 1)
        block = reach[lo:hi]
        for g in gens:
            if g >= hi:
                break
            start = max(lo - g, 0)
            block[start + g - lo :] |= reach[start : hi - g]
        lo = hi
    return reach


def frobenius_by_scan(generators: Sequence[int]) -> int:
    """Largest non-member found by sieving until ``min(generators)`` consecutive
    members appear."""
    gens = sorted(generators)
    m = gens[0]
    bound = max(2 * m * gens[-1], 16)
    while True:
        if bound > config.max_frobenius() + 2 * gens[-1]:
            raise TooLarge(f"gap scan bound {bound} exceeds cap")
        reach = membership_sieve(gens, bound)
        missing = np.flatnonzero(~reach)
        last = int(missing[-1]) if missing.size else -1
        if bound - last >= m:
            return last
        bound *= 2


def gaps_by_scan(generators: Sequence[int]) -> list[int]:
    f = frobenius_by_scan(generators)
    if f < 0:
        return []
    reach = membership_sieve(generators, f)
    return [int(w) for w in np.flatnonzero(~reach)]
