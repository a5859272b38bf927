"""Formula-versus-oracle sweeps.

Each sweep generates its instances up front from a seeded RNG, evaluates them
(optionally on a process pool) and keeps the first counterexample verbatim.
Results do not depend on the number of workers.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import ci3
from .corpus import (
    DEFAULT_SEED,
    ci3_semigroup,
    random_ci3_params,
    random_coprime_pair,
    random_gluing_chain,
)
from .family import (
    build_ding_family_3gen,
    build_hna,
    expected_ding_family,
    expected_index_hna,
    frobenius_glued,
    frobenius_hna,
    hna_generators,
)
from .index import index, n_value_apery, n_value_direct, n_value_ord_formula
from .oracles import frobenius_by_scan
from .semigroup import NumericalSemigroup


@dataclass
class CheckResult:
    name: str
    total: int = 0
    passed: int = 0
    counterexample: dict | None = None

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "total": self.total,
            "ok": self.ok,
            "counterexample": self.counterexample,
        }


@dataclass
class VerifyConfig:
    seed: int = DEFAULT_SEED
    ci3_count: int = 200
    chain_count: int = 100
    pair_count: int = 50
    hna_n_max: int = 8
    hna_a_values: tuple[int, ...] = (1, 3, 5, 7, 9)
    ding_n_values: tuple[int, ...] = (2, 3, 4, 5, 6)
    jobs: int = 1
    inject_fault: bool = False


@dataclass
class Summary:
    config: VerifyConfig
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json(self) -> dict:
        return {
            "seed": self.config.seed,
            "ok": self.ok,
            "checks": [c.to_json() for c in self.checks],
        }


def _faulty_b(S: ci3.CiEdim3Structure) -> int:
    return ci3.n_formula_b(S) + 1


def check_ci3_instance(args: tuple[tuple[int, int, int, int], bool]) -> dict | None:
    """None on success, otherwise a description of the first disagreement."""
    (p, x, y, a), inject_fault = args
    H = ci3_semigroup(p, x, y, a)
    structures = ci3.detect_ci3(H)
    if not structures:
        return {"params": [p, x, y, a], "generators": list(H.generators), "error": "no CI structure detected"}
    formula_b = _faulty_b if inject_fault else ci3.n_formula_b
    seen: dict[int, int] = {}
    for S in structures:
        formulas = {S.a: ci3.n_formula_a(S), S.b: formula_b(S), S.c: ci3.n_formula_c(S)}
        for s, value in formulas.items():
            apery = n_value_apery(H, s)
            direct = n_value_direct(H, s)
            if not value == apery == direct or seen.setdefault(s, value) != value:
                return {
                    "params": [p, x, y, a],
                    "generators": list(H.generators),
                    "structure": S.to_json(),
                    "generator": s,
                    "formula": value,
                    "apery": apery,
                    "direct": direct,
                }
        if ci3.frobenius_ci3(S) != H.frobenius:
            return {
                "params": [p, x, y, a],
                "structure": S.to_json(),
                "frobenius_formula": ci3.frobenius_ci3(S),
                "frobenius": H.frobenius,
            }
    return None


def check_hna_instance(args: tuple[int, int]) -> dict | None:
    n, a = args
    H = build_hna(n, a)
    expected = expected_index_hna(n, a)
    scan = frobenius_by_scan(H.generators)
    f = frobenius_hna(n, a)
    ord_report = index(H, "ord-formula")
    apery_report = index(H, "apery-oracle")
    problems = {}
    if list(H.generators) != hna_generators(n, a):
        problems["generators"] = list(H.generators)
    recurrence = frobenius_glued(H.gluing) if H.gluing else H.frobenius
    if not f == scan == recurrence:
        problems["frobenius"] = {"formula": f, "scan": scan, "recurrence": recurrence}
    if not ord_report.index == apery_report.index == expected.index:
        problems["index"] = {"ord": ord_report.index, "apery": apery_report.index, "expected": expected.index}
    if apery_report.ding_gap != expected.ding_gap:
        problems["ding_gap"] = {"computed": apery_report.ding_gap, "expected": expected.ding_gap}
    return {"n": n, "a": a, **problems} if problems else None


def check_chain_instance(H: NumericalSemigroup) -> dict | None:
    out = {"generators": list(H.generators), "chain": _chain_json(H)}
    if not H.is_symmetric():
        return {**out, "error": "glued semigroup is not symmetric"}
    recurrence = frobenius_glued(H.gluing)
    scan = frobenius_by_scan(H.generators)
    if not recurrence == scan == H.frobenius:
        return {**out, "frobenius": {"recurrence": recurrence, "scan": scan, "apery": H.frobenius}}
    for s in H.generators:
        apery = n_value_apery(H, s)
        formula = n_value_ord_formula(H, s)
        if apery != formula:
            return {**out, "generator": s, "apery": apery, "ord_formula": formula}
    report = index(H)
    if report.ding_gap < 0:
        return {**out, "ding_gap": report.ding_gap}
    return None


def check_ding_instance(n: int) -> dict | None:
    H = build_ding_family_3gen(n)
    expected = expected_ding_family(n)
    formula = ci3.index_ci3(H)
    oracle = index(H, "apery-oracle")
    if not formula.index == oracle.index == expected.index or not (
        formula.ding_gap == oracle.ding_gap == expected.ding_gap
    ):
        return {
            "n": n,
            "generators": list(H.generators),
            "formula": [formula.index, formula.ding_gap],
            "oracle": [oracle.index, oracle.ding_gap],
            "expected": list(expected),
        }
    return None


def check_pair_instance(pair: tuple[int, int]) -> dict | None:
    H = NumericalSemigroup(pair)
    report = index(H)
    if not report.index == pair[0] == report.mult or report.ding_gap != 0:
        return {"generators": list(pair), "index": report.index, "ding_gap": report.ding_gap}
    return None


def _chain_json(H: NumericalSemigroup) -> list:
    steps = []
    while H.gluing is not None:
        steps.append({"a": H.gluing.a, "p": H.gluing.p})
        H = H.gluing.base
    return [list(H.generators), steps[::-1]]


def _run(name: str, fn: Callable, items: Iterable, pool: ProcessPoolExecutor | None) -> CheckResult:
    items = list(items)
    results = pool.map(fn, items, chunksize=4) if pool else map(fn, items)
    check = CheckResult(name, total=len(items))
    for failure in results:
        if failure is None:
            check.passed += 1
        elif check.counterexample is None:
            check.counterexample = failure
    return check


def run_verify(cfg: VerifyConfig) -> Summary:
    rng = random.Random(cfg.seed)
    ci3_items = [(random_ci3_params(rng), cfg.inject_fault) for _ in range(cfg.ci3_count)]
    chains = [random_gluing_chain(rng) for _ in range(cfg.chain_count)]
    pairs = [random_coprime_pair(rng) for _ in range(cfg.pair_count)]
    hna_items = [(n, a) for n in range(1, cfg.hna_n_max + 1) for a in cfg.hna_a_values]

    summary = Summary(cfg)
    pool = ProcessPoolExecutor(cfg.jobs) if cfg.jobs > 1 else None
    try:
        summary.checks = [
            _run("ci3-formula-vs-oracles", check_ci3_instance, ci3_items, pool),
            _run("ding-family-index", check_ding_instance, cfg.ding_n_values, pool),
            _run("hna-frobenius-and-index", check_hna_instance, hna_items, pool),
            _run("gluing-chains-order-formula", check_chain_instance, chains, pool),
            _run("hypersurface-index", check_pair_instance, pairs, pool),
        ]
    finally:
        if pool:
            pool.shutdown()
    return summary
