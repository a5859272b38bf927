"""Complete intersections of embedding dimension three.

In edim 3, Gorenstein and complete intersection coincide, and both hold
exactly when the generators can be labelled ``a, b = p*x, c = p*y`` with
``p, x, y >= 2``, ``gcd(x, y) = gcd(a, p) = 1`` and ``a`` in ``<x, y>`` but not
equal to ``x`` or ``y``. Under that labelling every ``N`` value has a closed
form in ``p, x, y`` and a decomposition ``a = a'x + a''y``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidStructure, NotCiEdim3, WrongEdim
from .index import CI3, IndexReport, make_report
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class CiEdim3Structure:
    """One labelling witnessing the complete-intersection form.

    Always normalized so that ``x < y`` and ``0 <= a_dprime < x``.
    """

    a: int
    b: int
    c: int
    p: int
    x: int
    y: int
    a_prime: int
    a_dprime: int

    @property
    def roles(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def to_json(self) -> dict:
        return {
            "roles": {"a": self.a, "b": self.b, "c": self.c},
            "p": self.p,
            "x": self.x,
            "y": self.y,
            "a_prime": self.a_prime,
            "a_dprime": self.a_dprime,
        }


def canonical_decomposition(a: int, x: int, y: int) -> tuple[int, int] | None:
    """``(a', a'')`` with ``a = a'x + a''y`` and ``0 <= a'' < x``, or None when
    ``a`` is not in ``<x, y>``. Requires ``gcd(x, y) = 1``."""
    a_dprime = (a * pow(y, -1, x)) % x if x > 1 else 0
    rest = a - a_dprime * y
    if rest < 0:
        return None
    return rest // x, a_dprime


def structure_from_params(p: int, x: int, y: int, a: int) -> CiEdim3Structure:
    if x > y:
        x, y = y, x
    if min(p, x, y) < 2:
        raise InvalidStructure("p, x, y must all be at least 2")
    if math.gcd(x, y) != 1 or math.gcd(a, p) != 1:
        raise InvalidStructure("need gcd(x, y) = gcd(a, p) = 1")
    if a in (x, y):
        raise InvalidStructure("a must differ from x and y")
    dec = canonical_decomposition(a, x, y)
    if dec is None:
        raise InvalidStructure(f"{a} is not in <{x}, {y}>")
    return CiEdim3Structure(a, p * x, p * y, p, x, y, *dec)


def detect_ci3(H: NumericalSemigroup) -> list[CiEdim3Structure]:
    if H.edim != 3:
        raise WrongEdim(f"{H!r} has embedding dimension {H.edim}, not 3")
    found = []
    for a, (u, v) in ((g, tuple(h for h in H.generators if h != g)) for g in H.generators):
        p = math.gcd(u, v)
        if p < 2:
            continue
        try:
            found.append(structure_from_params(p, u // p, v // p, a))
        except InvalidStructure:
            continue
    return found


def frobenius_ci3(S: CiEdim3Structure) -> int:
    return S.p * S.x * S.y + S.p * S.a - (S.a + S.b + S.c)


def n_formula_a(S: CiEdim3Structure, a_prime: int | None = None, a_dprime: int | None = None) -> int:
    """N_a; accepts any nonnegative decomposition ``a = a'x + a''y``."""
    if a_prime is None and a_dprime is None:
        a_prime, a_dprime = S.a_prime, S.a_dprime
    if a_prime is None or a_dprime is None:
        raise InvalidStructure("give both a_prime and a_dprime or neither")
    if a_prime < 0 or a_dprime < 0 or a_prime * S.x + a_dprime * S.y != S.a:
        raise InvalidStructure(f"({a_prime}, {a_dprime}) is not a decomposition of {S.a}")
    x, y = S.x, S.y
    q, r = divmod(a_dprime, x)
    if r == 0:
        return x + a_prime + y * q - 1
    return y + a_prime + a_dprime + (y - x) * q - 1


def _n_pair(p: int, x: int, own: int, other: int) -> int:
    # N for the generator p*x; ``own`` is the coefficient of x in a, ``other`` that of the partner
    if own != 0 or p < other:
        return p + x - 1
    if other == p:
        raise InvalidStructure("a' = 0 and a'' = p contradicts gcd(a, p) = 1")
    if x % other == 0:
        return other + p * (x // other) - 1
    return p + x - 1 + (p - other) * (x // other)


def n_formula_b(S: CiEdim3Structure) -> int:
    return _n_pair(S.p, S.x, S.a_prime, S.a_dprime)


def n_formula_c(S: CiEdim3Structure) -> int:
    return _n_pair(S.p, S.y, S.a_dprime, S.a_prime)


def n_values_ci3(S: CiEdim3Structure) -> dict[int, int]:
    return {S.a: n_formula_a(S), S.b: n_formula_b(S), S.c: n_formula_c(S)}


def shortcut_index(S: CiEdim3Structure) -> tuple[str, int] | None:
    """The special-case closed form for the index, when one applies."""
    p, x, y, a1, a2 = S.p, S.x, S.y, S.a_prime, S.a_dprime
    if a1 and a2:
        return "a", min(y + a1 + a2 - 1, p + x - 1)
    if a1 == 0 and p < a2:
        return "b", min(y + a2 - 1, p + x - 1)
    if a2 == 0:
        return "c", min(p + x - 1, x + a1 - 1)
    return None


def index_ci3(H: NumericalSemigroup) -> IndexReport:
    if H.edim != 3:
        raise NotCiEdim3(f"{H!r} has embedding dimension {H.edim}, not 3")
    structures = detect_ci3(H)
    if not structures:
        raise NotCiEdim3(f"{H!r} is not a complete intersection")
    S = structures[0]
    report = make_report(H, n_values_ci3(S), CI3)
    cor = shortcut_index(S)
    if cor is not None:
        branch, value = cor
        if value != report.index:
            raise RuntimeError(
                f"shortcut branch ({branch}) gives {value} but the N formulas give {report.index} for {H!r}"
            )
        report.notes.append(f"shortcut branch ({branch}) agrees")
    return report


def all_decompositions(a: int, x: int, y: int) -> list[tuple[int, int]]:
    """Every nonnegative ``(a', a'')`` with ``a = a'x + a''y``."""
    return [((a - v * y) // x, v) for v in range(a // y + 1) if (a - v * y) % x == 0]
