"""Exit criteria. Each test records one PASS/FAIL line shown in the summary."""

import random
import time

import pytest

from nsring import ci3
from nsring.corpus import (
    DEFAULT_SEED,
    ci3_semigroup,
    random_ci3_params,
    random_coprime_pair,
    random_gluing_chain,
)
from nsring.family import (
    build_ding_family_3gen,
    build_hna,
    expected_ding_family,
    frobenius_hna,
)
from nsring.index import index, n_value_apery, n_value_direct, n_value_ord_formula
from nsring.oracles import frobenius_by_scan
from nsring.semigroup import NumericalSemigroup


@pytest.fixture(scope="module")
def symmetric_corpus():
    rng = random.Random(DEFAULT_SEED)
    corpus = [ci3_semigroup(*random_ci3_params(rng)) for _ in range(200)]
    corpus += [random_gluing_chain(rng) for _ in range(100)]
    corpus += [NumericalSemigroup(random_coprime_pair(rng)) for _ in range(50)]
    corpus += [build_hna(n, a) for n in range(1, 9) for a in range(1, 10, 2)]
    corpus += [build_ding_family_3gen(n) for n in range(2, 7)]
    assert all(H.is_symmetric() for H in corpus)
    return corpus


def test_ac1_ding_family(record):
    start = time.perf_counter()
    failures = []
    for n in range(2, 7):
        H = build_ding_family_3gen(n)
        formula = ci3.index_ci3(H)
        oracle = index(H, "apery-oracle")
        want = expected_ding_family(n)
        got = {(formula.index, formula.ding_gap), (oracle.index, oracle.ding_gap)}
        if got != {(2 * n + 2, 2 * n - 3)} or tuple(want) != (2 * n + 2, 2 * n - 3):
            failures.append((n, got))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 5
    record("AC1 ding family n=2..6 index 2n+2, gap 2n-3 (formula and Apery)", ok, f"{elapsed:.2f}s {failures or ''}")
    assert ok, failures


def test_ac2_hna_family(record):
    start = time.perf_counter()
    failures = []
    for n in range(1, 9):
        for a in range(1, 10, 2):
            H = build_hna(n, a)
            f_ok = frobenius_hna(n, a) == frobenius_by_scan(H.generators)
            ord_idx = index(H, "ord-formula").index
            ap_idx = index(H, "apery-oracle").index
            if not (f_ok and ord_idx == ap_idx == n + 1):
                failures.append((n, a, f_ok, ord_idx, ap_idx))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 30
    record("AC2 H_{n,a} n<=8, odd a<=9: Frobenius and index n+1", ok, f"{elapsed:.2f}s {failures or ''}")
    assert ok, failures


def test_ac3_closed_form_differential(record):
    start = time.perf_counter()
    rng = random.Random(DEFAULT_SEED)
    passed, first = 0, None
    for _ in range(200):
        p, x, y, a = random_ci3_params(rng, max_pxy=30, max_a=1000)
        H = ci3_semigroup(p, x, y, a)
        S = ci3.structure_from_params(p, x, y, a)
        formulas = ci3.n_values_ci3(S)
        good = all(formulas[s] == n_value_apery(H, s) == n_value_direct(H, s) for s in H.generators)
        passed += good
        if not good and first is None:
            first = (p, x, y, a)
    elapsed = time.perf_counter() - start
    ok = passed == 200 and elapsed < 60
    record("AC3 closed-form N values = Apery = direct", ok, f"{passed}/200 in {elapsed:.2f}s {first or ''}")
    assert ok


def test_ac4_order_formula(record):
    rng = random.Random(DEFAULT_SEED + 4)
    passed, first = 0, None
    for _ in range(100):
        H = random_gluing_chain(rng, max_depth=3, max_frobenius=10**5)
        good = H.frobenius <= 10**5 and all(
            n_value_apery(H, s) == H.order(H.frobenius + s) + 1 for s in H.generators
        )
        passed += good
        if not good and first is None:
            first = H
    counter = NumericalSemigroup([4, 5, 11])
    n4 = n_value_apery(counter, 4)
    ord_plus_one = counter.order(counter.frobenius + 4) + 1
    ok = passed == 100 and n4 == 3 and ord_plus_one == 2
    record("AC4 N_s = ord(f+s)+1 on 100 glued chains; <4,5,11> N_4 = 3 != 2", ok,
           f"{passed}/100, N_4={n4}, ord(11)+1={ord_plus_one}")
    assert ok, first


def test_ac5_structure_independence(record):
    H = NumericalSemigroup([4, 10, 15])
    structures = ci3.detect_ci3(H)
    per_structure = [ci3.n_values_ci3(S) for S in structures]
    direct = {s: n_value_direct(H, s) for s in H.generators}
    expected = {4: 3, 10: 6, 15: 10}
    ok = len(structures) == 2 and all(v == expected for v in per_structure) and direct == expected
    record("AC5 <4,10,15> both structures give {N4,N10,N15} = {3,6,10}", ok, str(per_structure))
    assert ok


def test_ac6_hypersurface_law(record):
    rng = random.Random(DEFAULT_SEED + 6)
    bad = []
    for _ in range(50):
        a, b = random_coprime_pair(rng, max_b=500)
        report = index(NumericalSemigroup([a, b]))
        if not (report.index == a == report.mult and report.ding_gap == 0):
            bad.append((a, b, report.index, report.ding_gap))
    record("AC6 hypersurface: index = mult, ding gap 0 on 50 pairs", not bad, str(bad or ""))
    assert not bad


def test_ac7_apery_symmetry(record, symmetric_corpus):
    bad = []
    for H in symmetric_corpus:
        for s in H.generators:
            w = H.apery_set(s).sorted_elements()
            if any(w[i] + w[s - 1 - i] != H.frobenius + s for i in range(s)):
                bad.append((H.generators, s))
    H = NumericalSemigroup([4, 5, 11])
    w = H.apery_set(4).sorted_elements()
    witness = next(
        ((i, w[i], w[3 - i]) for i in range(4) if w[i] + w[3 - i] != H.frobenius + 4), None
    )
    ok = not bad and witness is not None
    record(
        "AC7 sorted Apery pairs sum to f+s on symmetric corpus; fails for <4,5,11>",
        ok,
        f"{len(symmetric_corpus)} semigroups, witness i={witness[0]}: {witness[1]}+{witness[2]} != {H.frobenius + 4}"
        if witness else "no witness",
    )
    assert ok, bad[:3]


def test_ac8_ding_inequality(record, symmetric_corpus):
    violations = []
    checked = 0
    for H in symmetric_corpus:
        if H.generators == (1,):
            continue
        checked += 1
        report = index(H)
        if report.ding_gap < 0:
            violations.append((H.generators, report.ding_gap))
    record("AC8 ding gap >= 0 on symmetric non-regular corpus", not violations,
           f"{checked} instances {violations or ''}")
    assert not violations
