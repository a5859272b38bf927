"""Numerical semigroups and their elementary invariants.

Membership and Apery sets come from a shortest-path relaxation over residue
classes; element orders come from a dense dynamic program that is filled in
blocks of length ``mult`` so each block only reads already-finished entries.
"""

from __future__ import annotations

import heapq
import math
import threading
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, Sequence

import numpy as np

from . import config
from .errors import GcdNotOne, NotAnElement, Overflow, SemigroupError, TooLarge

NOT_IN_H = -1


def residue_shortest_paths(generators: Sequence[int], modulus: int) -> list[float]:
    """Least element of <generators> in each residue class mod ``modulus``.

    Unreachable classes get ``math.inf`` (possible when the generators are not
    coprime, which happens while minimalizing).
    """
    dist: list[float] = [math.inf] * modulus
    dist[0] = 0
    heap = [(0, 0)]
    steps = [(g, g % modulus) for g in generators if g % modulus]
    while heap:
        d, r = heapq.heappop(heap)
        if d > dist[r]:
            continue
        for g, gr in steps:
            nr = r + gr
            if nr >= modulus:
                nr -= modulus
            nd = d + g
            if nd < dist[nr]:
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))
    return dist


def _order_dp(generators: Sequence[int], bound: int) -> np.ndarray:
    ords = np.full(bound + 1, NOT_IN_H, dtype=np.int64)
    ords[0] = 0
    step = generators[0]
    if step == 1:
        # only H = N is minimally generated by a set containing 1
        return np.arange(bound + 1, dtype=np.int64)
    lo = 1
    while lo <= bound:
        hi = min(lo + step, bound + 1)
        best = np.full(hi - lo, NOT_IN_H, dtype=np.int64)
        for g in generators:
            if g >= hi:
                break
            start = max(lo - g, 0)
            src = ords[start : hi - g]
            cand = np.where(src >= 0, src + 1, NOT_IN_H)
            seg = best[start + g - lo :]
            np.maximum(seg, cand, out=seg)
        ords[lo:hi] = best
        lo = hi
    return ords


@dataclass(frozen=True)
class AperyTable:
    """Apery set of ``modulus``: ``entries[r] = (w_r, ord(w_r))``."""

    modulus: int
    entries: tuple[tuple[int, int], ...]

    @property
    def elements(self) -> list[int]:
        return [w for w, _ in self.entries]

    def sorted_elements(self) -> list[int]:
        return sorted(self.elements)

    @property
    def max_element(self) -> int:
        return max(self.elements)

    def to_json(self) -> dict:
        return {
            "modulus": self.modulus,
            "elements": self.elements,
            "orders": [o for _, o in self.entries],
        }


@dataclass(frozen=True)
class OrderTable:
    bound: int
    ord: np.ndarray

    def __getitem__(self, w: int) -> int:
        return int(self.ord[w])

    def __contains__(self, w: int) -> bool:
        return 0 <= w <= self.bound and self.ord[w] >= 0


class NumericalSemigroup:
    """A numerical semigroup given by its minimal generating system.

    Redundant input generators are dropped and kept in ``redundant`` so callers
    can report them. Tables are computed lazily and cached; the instance is
    otherwise immutable.
    """

    def __init__(self, generators: Iterable[int], *, max_generator: int = config.MAX_GENERATOR):
        raw = list(generators)
        if not raw:
            raise SemigroupError("at least one generator is required")
        for g in raw:
            if isinstance(g, bool) or not isinstance(g, (int, np.integer)):
                raise SemigroupError(f"generator {g!r} is not an integer")
            if g <= 0:
                raise SemigroupError(f"generator {g} is not positive")
            if g > max_generator:
                raise Overflow(f"generator {g} exceeds cap {max_generator}")
        raw = [int(g) for g in raw]
        d = reduce(math.gcd, raw)
        if d != 1:
            raise GcdNotOne(d)

        minimal: list[int] = []
        redundant: list[int] = []
        for g in sorted(set(raw)):
            if minimal and _represented(minimal, g):
                redundant.append(g)
            else:
                minimal.append(g)
        self.generators: tuple[int, ...] = tuple(minimal)
        self.redundant: tuple[int, ...] = tuple(redundant)
        # set by family.glue; lets frobenius_glued use the recurrence
        self.gluing = None
        self._lock = threading.Lock()
        self._order_table: OrderTable | None = None
        self._apery: dict[int, AperyTable] = {}

    def __getstate__(self) -> dict:
        # caches and the lock stay behind; workers rebuild tables on demand
        return {"generators": self.generators, "redundant": self.redundant, "gluing": self.gluing}

    def __setstate__(self, state: dict) -> None:
        self.generators = state["generators"]
        self.redundant = state["redundant"]
        self.gluing = state["gluing"]
        self._lock = threading.Lock()
        self._order_table = None
        self._apery = {}

    def __repr__(self) -> str:
        return f"NumericalSemigroup(<{', '.join(map(str, self.generators))}>)"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def edim(self) -> int:
        return len(self.generators)

    @cached_property
    def _apery_mult(self) -> list[int]:
        if self.multiplicity > config.max_residues():
            raise TooLarge(f"multiplicity {self.multiplicity} exceeds residue cap")
        return [int(w) for w in residue_shortest_paths(self.generators, self.multiplicity)]

    def contains(self, w: int) -> bool:
        if w < 0:
            return False
        return w >= self._apery_mult[w % self.multiplicity]

    __contains__ = contains

    @cached_property
    def frobenius(self) -> int:
        """Largest integer not in H, or -1 for H = N."""
        return max(self._apery_mult) - self.multiplicity

    @cached_property
    def genus(self) -> int:
        m = self.multiplicity
        return (sum(self._apery_mult) - m * (m - 1) // 2) // m

    def is_symmetric(self) -> bool:
        # H is symmetric iff exactly half of [0, f] lies in H
        return 2 * self.genus == self.frobenius + 1

    def gaps(self) -> list[int]:
        f = self.frobenius
        if f > config.max_frobenius():
            raise TooLarge(f"Frobenius number {f} exceeds table cap")
        return [w for w in range(1, f + 1) if not self.contains(w)]

    def order_table(self, bound: int) -> OrderTable:
        """Orders of every element up to ``bound`` (-1 marks non-members)."""
        cap = config.max_frobenius() + 2 * self.generators[-1]
        if bound > cap:
            raise TooLarge(f"order table bound {bound} exceeds cap {cap}")
        with self._lock:
            table = self._order_table
            if table is None or table.bound < bound:
                if table is not None:
                    # grow geometrically so rising bounds cost O(final size) overall
                    bound = min(max(bound, 2 * table.bound), cap)
                table = OrderTable(bound, _order_dp(self.generators, bound))
                table.ord.setflags(write=False)
                self._order_table = table
            return table

    def order(self, w: int) -> int:
        """Maximal number of generators, with multiplicity, summing to ``w``."""
        if not self.contains(w):
            raise NotAnElement(f"{w} is not in {self!r}")
        return self.order_table(w)[w]

    def apery_set(self, s: int) -> AperyTable:
        if s <= 0 or not self.contains(s):
            raise NotAnElement(f"{s} is not a nonzero element of {self!r}")
        cached = self._apery.get(s)
        if cached is not None:
            return cached
        if s == self.multiplicity:
            ws = self._apery_mult
        else:
            if s > config.max_residues():
                raise TooLarge(f"Apery modulus {s} exceeds residue cap")
            ws = [int(w) for w in residue_shortest_paths(self.generators, s)]
        table = self.order_table(max(ws))
        result = AperyTable(s, tuple((w, table[w]) for w in ws))
        with self._lock:
            self._apery[s] = result
        return result

    def to_json(self) -> list[int]:
        return list(self.generators)

    @classmethod
    def from_json(cls, data) -> "NumericalSemigroup":
        if isinstance(data, dict):
            data = data.get("generators")
        if not isinstance(data, list):
            raise SemigroupError("expected a JSON array of generators")
        return cls(data)


def _represented(smaller: list[int], g: int) -> bool:
    m = smaller[0]
    if m > config.max_residues():
        raise TooLarge(f"generator {m} too large to minimalize")
    return residue_shortest_paths(smaller, m)[g % m] <= g


# Functional surface mirroring the method names.

def new_semigroup(raw_generators: Iterable[int]) -> NumericalSemigroup:
    return NumericalSemigroup(raw_generators)


def contains(H: NumericalSemigroup, w: int) -> bool:
    return H.contains(w)


def frobenius(H: NumericalSemigroup) -> int:
    return H.frobenius


def apery_set(H: NumericalSemigroup, s: int) -> AperyTable:
    return H.apery_set(s)


def order(H: NumericalSemigroup, w: int) -> int:
    return H.order(w)


def is_symmetric(H: NumericalSemigroup) -> bool:
    return H.is_symmetric()


def gaps(H: NumericalSemigroup) -> list[int]:
    return H.gaps()
