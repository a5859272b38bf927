"""Gluing constructions and the two families with unbounded Ding gap.

``glue`` builds ``<a, p*H>`` from a semigroup ``H``, an element ``a`` of order at
least two, and a multiplier ``p`` coprime to ``a``; the result is again a
complete intersection whenever ``H`` is, and its Frobenius number satisfies
``f(H') = p*f(H) + (p-1)*a``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import NamedTuple

from . import config
from .errors import InvalidFamily, InvalidGluing, Overflow, SemigroupError
from .semigroup import NumericalSemigroup

HNA = "watanabe-hna"
DING3 = "ding-gap-3gen"
FAMILY_KINDS = (HNA, DING3)


@dataclass(frozen=True)
class GluingStep:
    base: NumericalSemigroup
    a: int
    p: int

    def __post_init__(self):
        if self.p < 2:
            raise InvalidGluing(f"p = {self.p} must be at least 2")
        if math.gcd(self.a, self.p) != 1:
            raise InvalidGluing(f"gcd({self.a}, {self.p}) != 1")
        if self.a <= 0 or not self.base.contains(self.a):
            raise InvalidGluing(f"{self.a} is not a nonzero element of {self.base!r}")
        if self.base.order(self.a) <= 1:
            raise InvalidGluing(f"{self.a} has order 1 in {self.base!r}")

    def to_json(self) -> dict:
        return {"base": self.base.to_json(), "a": self.a, "p": self.p}

    @classmethod
    def from_json(cls, data: dict) -> "GluingStep":
        try:
            base, a, p = data["base"], data["a"], data["p"]
        except (KeyError, TypeError):
            raise SemigroupError("gluing step needs keys base, a, p") from None
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in (a, p)):
            raise SemigroupError("a and p must be integers")
        return cls(NumericalSemigroup.from_json(base), a, p)


def glue(step: GluingStep) -> NumericalSemigroup:
    glued = NumericalSemigroup([step.a, *(step.p * g for g in step.base.generators)])
    glued.gluing = step
    return glued


def gluing_chain(H: NumericalSemigroup) -> list[GluingStep]:
    """Recorded gluing steps that produced ``H``, innermost first."""
    chain = []
    while H.gluing is not None:
        chain.append(H.gluing)
        H = H.gluing.base
    return chain[::-1]


def frobenius_glued(step: GluingStep) -> int:
    base = step.base
    f_base = frobenius_glued(base.gluing) if base.gluing is not None else base.frobenius
    f = step.p * f_base + (step.p - 1) * step.a
    if f > config.INT64_MAX:
        raise Overflow(f"Frobenius number {f} exceeds 64-bit range")
    return f


class Expected(NamedTuple):
    index: int
    ding_gap: int


def _check_hna(n: int, a: int) -> None:
    if n < 1:
        raise InvalidFamily(f"n = {n} must be at least 1")
    if n > 62:
        raise Overflow(f"n = {n}: 2^n exceeds 64-bit range")
    if a < 1 or a % 2 == 0:
        raise InvalidFamily(f"a = {a} must be a positive odd integer")


def hna_generators(n: int, a: int) -> list[int]:
    _check_hna(n, a)
    return [2**n] + [2**n + 2**i * a for i in range(n)]


def build_hna(n: int, a: int) -> NumericalSemigroup:
    """``H_{n,a}`` assembled by repeated gluing from ``<2, 2 + a>``."""
    direct = hna_generators(n, a)
    if max(direct) > config.MAX_GENERATOR:
        raise Overflow(f"H_{{{n},{a}}} has a generator above {config.MAX_GENERATOR}")
    H = NumericalSemigroup([2, 2 + a])
    for k in range(2, n + 1):
        H = glue(GluingStep(H, 2**k + a, 2))
    if list(H.generators) != direct:
        redundant = sorted(set(direct) - set(H.generators))
        warnings.warn(f"H_{{{n},{a}}}: redundant generators {redundant}", stacklevel=2)
    return H


def frobenius_hna(n: int, a: int) -> int:
    _check_hna(n, a)
    f = (n - 1) * 2**n + (2**n - 1) * a
    if f > config.INT64_MAX:
        raise Overflow(f"Frobenius number of H_{{{n},{a}}} exceeds 64-bit range")
    return f


def expected_index_hna(n: int, a: int) -> Expected:
    _check_hna(n, a)
    return Expected(n + 1, 2**n - 2 * n)


def ding_family_generators(n: int) -> list[int]:
    if n < 2:
        raise InvalidFamily(f"n = {n} must be at least 2")
    return [4 * n, (4 * n + 1) * (2 * n - 1), (4 * n + 1) * (2 * n + 1)]


def build_ding_family_3gen(n: int) -> NumericalSemigroup:
    gens = ding_family_generators(n)
    if max(gens) > config.MAX_GENERATOR:
        raise Overflow(f"ding family n = {n} has a generator above {config.MAX_GENERATOR}")
    return NumericalSemigroup(gens)


def expected_ding_family(n: int) -> Expected:
    if n < 2:
        raise InvalidFamily(f"n = {n} must be at least 2")
    return Expected(2 * n + 2, 2 * n - 3)


def frobenius_ding_family(n: int) -> int:
    # labelling a = 4n, p = 4n + 1, x = 2n - 1, y = 2n + 1
    a, p, x, y = 4 * n, 4 * n + 1, 2 * n - 1, 2 * n + 1
    return p * x * y + p * a - (a + p * x + p * y)


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int
    a: int | None = None

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise InvalidFamily(f"unknown family kind {self.kind!r}")
        if self.kind == HNA:
            _check_hna(self.n, self.a if self.a is not None else 0)
        elif self.n < 2:
            raise InvalidFamily(f"n = {self.n} must be at least 2")

    def to_json(self) -> dict:
        out = {"kind": self.kind, "n": self.n}
        if self.kind == HNA:
            out["a"] = self.a
        return out

    @classmethod
    def from_json(cls, data: dict) -> "FamilySpec":
        if not isinstance(data, dict) or "kind" not in data or "n" not in data:
            raise SemigroupError("family spec needs keys kind and n")
        n, a = data["n"], data.get("a")
        if not isinstance(n, int) or (a is not None and not isinstance(a, int)):
            raise SemigroupError("n and a must be integers")
        return cls(data["kind"], n, a)


@dataclass(frozen=True)
class FamilyInstance:
    spec: FamilySpec
    semigroup: NumericalSemigroup
    expected: Expected
    expected_frobenius: int


def build_family(spec: FamilySpec) -> FamilyInstance:
    if spec.kind == HNA:
        return FamilyInstance(
            spec,
            build_hna(spec.n, spec.a),
            expected_index_hna(spec.n, spec.a),
            frobenius_hna(spec.n, spec.a),
        )
    return FamilyInstance(
        spec,
        build_ding_family_3gen(spec.n),
        expected_ding_family(spec.n),
        frobenius_ding_family(spec.n),
    )
