"""Seeded random instance generators for the verification sweeps."""

from __future__ import annotations

import math
import random

from .ci3 import structure_from_params
from .errors import InvalidStructure
from .family import GluingStep, glue
from .semigroup import NumericalSemigroup

DEFAULT_SEED = 20080101
SMALL_PRIMES = (2, 3, 5, 7, 11, 13)


def random_ci3_params(
    rng: random.Random, max_pxy: int = 30, max_a: int = 1000
) -> tuple[int, int, int, int]:
    """Rejection-sample ``(p, x, y, a)`` satisfying the edim-3 CI conditions."""
    while True:
        p = rng.randint(2, max_pxy)
        x, y = sorted(rng.sample(range(2, max_pxy + 1), 2))
        if math.gcd(x, y) != 1:
            continue
        a = rng.randint(x + 1, max_a)
        try:
            structure_from_params(p, x, y, a)
        except InvalidStructure:
            continue
        return p, x, y, a


def ci3_semigroup(p: int, x: int, y: int, a: int) -> NumericalSemigroup:
    return NumericalSemigroup([a, p * x, p * y])


def random_gluing_chain(
    rng: random.Random, max_depth: int = 3, max_frobenius: int = 10**5
) -> NumericalSemigroup:
    """Glue 1 to ``max_depth`` times starting from a random coprime pair <= 20.

    Each step picks ``a`` among elements of order >= 2 up to ``3 * f(base)`` and
    ``p`` a prime <= 13 coprime to ``a``; chains that run out of candidates or
    exceed ``max_frobenius`` are resampled.
    """
    while True:
        u, v = sorted(rng.sample(range(2, 21), 2))
        if math.gcd(u, v) != 1:
            continue
        H = NumericalSemigroup([u, v])
        for _ in range(rng.randint(1, max_depth)):
            f = H.frobenius
            table = H.order_table(max(3 * f, 0))
            candidates = [w for w in range(2, 3 * f + 1) if table[w] >= 2]
            if not candidates:
                break
            a = rng.choice(candidates)
            p = rng.choice([q for q in SMALL_PRIMES if a % q])
            if p * f + (p - 1) * a > max_frobenius:
                break
            H = glue(GluingStep(H, a, p))
        else:
            return H


def random_coprime_pair(rng: random.Random, max_b: int = 500) -> tuple[int, int]:
    while True:
        a, b = sorted(rng.sample(range(2, max_b + 1), 2))
        if math.gcd(a, b) == 1:
            return a, b
