"""Auslander index of a numerical semigroup ring.

``N_s`` is the least ``i`` with ``m^i`` contained in the principal ideal
``(t^s)``; the index is the minimum of ``N_s`` over the minimal generators.
Three routes compute ``N_s``:

* ``n_value_apery``: one plus the largest order of a nonzero Apery element of
  ``s``. Valid for every semigroup.
* ``n_value_direct``: builds the monomial supports of ``m, m^2, ...`` with a
  boolean sieve and stops at the first power that lands inside ``s + H``.
  Shares no code with the Apery route and exists to cross-check it.
* ``n_value_ord_formula``: ``ord(f(H) + s) + 1``, valid for symmetric ``H`` only.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NotAnElement, NotGorenstein, SemigroupError
from .oracles import membership_sieve
from .semigroup import NumericalSemigroup

APERY = "apery-oracle"
DIRECT = "direct-oracle"
ORD_FORMULA = "ord-formula"
CI3 = "ci3-formula"
METHODS = (APERY, DIRECT, ORD_FORMULA, CI3)

METHOD_ALIASES = {
    "apery": APERY,
    "direct": DIRECT,
    "ord": ORD_FORMULA,
    "ci3": CI3,
    **{m: m for m in METHODS},
}

NON_GORENSTEIN_NOTE = "ding inequality guaranteed only for Gorenstein rings"


@dataclass
class IndexReport:
    semigroup: NumericalSemigroup
    n_values: dict[int, int]
    index: int
    mult: int
    edim: int
    codim: int
    ding_gap: int
    gorenstein: bool
    method: str
    notes: list[str] = field(default_factory=list)

    @property
    def loewy_length(self) -> int | None:
        # index = generalized Loewy length is only established for Gorenstein rings
        return self.index if self.gorenstein else None

    def to_json(self) -> dict:
        return {
            "generators": list(self.semigroup.generators),
            "n_values": {str(g): v for g, v in self.n_values.items()},
            "index": self.index,
            "mult": self.mult,
            "edim": self.edim,
            "codim": self.codim,
            "ding_gap": self.ding_gap,
            "gorenstein": self.gorenstein,
            "method": self.method,
            "loewy_length": self.loewy_length,
            "notes": list(self.notes),
        }


def _require_element(H: NumericalSemigroup, s: int) -> None:
    if s <= 0 or not H.contains(s):
        raise NotAnElement(f"{s} is not a nonzero element of {H!r}")


def n_value_apery(H: NumericalSemigroup, s: int) -> int:
    table = H.apery_set(s)
    return max((o for w, o in table.entries if w), default=0) + 1


def n_value_direct(H: NumericalSemigroup, s: int) -> int:
    _require_element(H, s)
    bound = H.frobenius + s
    reach = membership_sieve(H.generators, bound)
    # every w > f + s has w - s > f, hence lies in s + H
    in_ideal = np.zeros(bound + 1, dtype=bool)
    in_ideal[s:] = reach[: bound + 1 - s]

    power = reach.copy()
    power[0] = False
    i = 1
    while (power & ~in_ideal).any():
        nxt = np.zeros_like(power)
        for g in H.generators:
            if g <= bound:
                nxt[g:] |= power[: bound + 1 - g]
        power = nxt
        i += 1
    return i


def n_value_ord_formula(H: NumericalSemigroup, s: int) -> int:
    _require_element(H, s)
    if not H.is_symmetric():
        raise NotGorenstein(f"{H!r} is not symmetric; N_s = ord(f+s)+1 does not apply")
    return H.order(H.frobenius + s) + 1


_N_VALUE = {
    APERY: n_value_apery,
    DIRECT: n_value_direct,
    ORD_FORMULA: n_value_ord_formula,
}


def make_report(H: NumericalSemigroup, n_values: dict[int, int], method: str) -> IndexReport:
    idx = min(n_values.values())
    edim = H.edim
    codim = edim - 1
    gorenstein = H.is_symmetric()
    notes = []
    if edim == 1:
        notes.append("regular ring: index 1")
    elif edim == 2:
        notes.append("hypersurface: index equals multiplicity")
    if not gorenstein:
        notes.append(NON_GORENSTEIN_NOTE)
    return IndexReport(
        semigroup=H,
        n_values=dict(n_values),
        index=idx,
        mult=H.multiplicity,
        edim=edim,
        codim=codim,
        ding_gap=H.multiplicity - idx - codim + 1,
        gorenstein=gorenstein,
        method=method,
        notes=notes,
    )


def index(H: NumericalSemigroup, method: str = APERY) -> IndexReport:
    try:
        method = METHOD_ALIASES[method]
    except KeyError:
        raise SemigroupError(f"unknown method {method!r}") from None
    if method == CI3:
        from .ci3 import index_ci3

        return index_ci3(H)
    if method == ORD_FORMULA and not H.is_symmetric():
        raise NotGorenstein(f"{H!r} is not symmetric; the order formula does not apply")
    fn = _N_VALUE[method]
    return make_report(H, {g: fn(H, g) for g in H.generators}, method)


def ding_gap(report: IndexReport) -> int:
    return report.mult - report.index - report.codim + 1
