import json
import random

import pytest

from nsring.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, [json.loads(line) for line in out.splitlines() if line]


def test_analyze_non_gorenstein(capsys):
    code, [rec] = run_json(capsys, "analyze", "4,5,11")
    assert code == 0
    assert rec["frobenius"] == 7 and rec["gorenstein"] is False
    assert rec["apery"] == {"modulus": 4, "elements": [0, 5, 10, 11], "orders": [0, 1, 2, 1]}
    assert rec["gaps_count"] == 5


def test_analyze_reports_redundancy(capsys):
    code, [rec] = run_json(capsys, "analyze", "2,3,4")
    assert code == 0 and rec["generators"] == [2, 3] and rec["redundant"] == [4]


def test_analyze_gcd_error(capsys):
    code, out, err = run(capsys, "analyze", "6,10")
    assert code == 2 and out == ""
    assert json.loads(err)["message"] == "gcd is 2, not a numerical semigroup"


def test_index_auto_uses_ci3(capsys):
    code, [rec] = run_json(capsys, "index", "8,27,45")
    assert code == 0
    assert (rec["index"], rec["ding_gap"], rec["method"]) == (6, 1, "ci3-formula")


def test_index_ord_formula_not_gorenstein(capsys):
    code, out, err = run(capsys, "index", "4,5,11", "--method", "ord-formula")
    assert code == 3 and json.loads(err)["error"] == "NotGorenstein"


def test_index_hypersurface(capsys):
    code, [rec] = run_json(capsys, "index", "2,3")
    assert code == 0 and rec["index"] == 2 and rec["method"] == "apery-oracle"
    assert any("hypersurface" in n for n in rec["notes"])


@pytest.mark.parametrize("method", ["apery", "direct", "ord-formula", "ci3"])
def test_index_methods_agree(capsys, method):
    code, [rec] = run_json(capsys, "index", "4,10,15", "--method", method)
    assert code == 0 and rec["n_values"] == {"4": 3, "10": 6, "15": 10}


def test_index_csv(capsys):
    code, out, _ = run(capsys, "index", "8,27,45", "--format", "csv")
    header, row = out.strip().splitlines()
    assert header.startswith("generators,n_values,index")
    assert "8:6;27:11;45:13" in row


def test_file_input(capsys, tmp_path):
    path = tmp_path / "h.json"
    path.write_text("[8, 27, 45]")
    code, [rec] = run_json(capsys, "index", "--file", str(path))
    assert code == 0 and rec["index"] == 6
    step = tmp_path / "step.json"
    step.write_text(json.dumps({"base": [2, 3], "a": 4, "p": 5}))
    code, [rec] = run_json(capsys, "glue", "--file", str(step))
    assert rec["generators"] == [4, 10, 15] and rec["frobenius"] == 21 and rec["frobenius_check"]


def test_ci3_command(capsys):
    code, recs = run_json(capsys, "ci3", "4,10,15")
    assert code == 0 and len(recs) == 2
    assert {r["shortcut"]["index"] for r in recs} == {3}
    code, _, err = run(capsys, "ci3", "4,5,11")
    assert code == 3
    code, _, err = run(capsys, "ci3", "4,5,6,7")
    assert code == 2


def test_glue_invalid(capsys):
    code, _, err = run(capsys, "glue", "2,3", "--a", "2", "--p", "5")
    assert code == 2 and json.loads(err)["error"] == "InvalidGluing"


def test_family_lines(capsys):
    code, recs = run_json(capsys, "family", "ding", "--n", "2", "--n-max", "4")
    assert code == 0
    assert [r["report"]["index"] for r in recs] == [6, 8, 10]
    assert [r["report"]["ding_gap"] for r in recs] == [1, 3, 5]
    code, recs = run_json(capsys, "family", "hna", "--n", "3", "--a", "1,5")
    assert [r["report"]["ding_gap"] for r in recs] == [2, 2] and all(r["match"] for r in recs)


def test_family_file(capsys, tmp_path):
    path = tmp_path / "spec.json"
    path.write_text(json.dumps([{"kind": "watanabe-hna", "n": 2, "a": 1}, {"kind": "ding-gap-3gen", "n": 5}]))
    code, recs = run_json(capsys, "family", "--file", str(path))
    assert code == 0 and [r["generators"] for r in recs] == [[4, 5, 6], [20, 189, 231]]


def test_size_caps(capsys, monkeypatch):
    code, _, _ = run(capsys, "index", "3000000000,5")
    assert code == 4
    code, _, err = run(capsys, "--max-frobenius", "100", "index", "97,101")
    assert code == 4 and json.loads(err)["error"] == "TooLarge"


def test_paper_examples(capsys):
    code, out, _ = run(capsys, "paper-examples", "--format", "json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and all(r["match"] for r in rows)
    by_claim = {r["claim"]: r for r in rows}
    assert by_claim["<8,27,45> index (formula)"]["computed"] == 6
    assert by_claim["H_{3,1} ding gap 2^n-2n"]["computed"] == 2
    assert by_claim["<4,5,11> N_4 != ord(f+4)+1"]["computed"] == 3


def test_paper_examples_table(capsys):
    code, out, _ = run(capsys, "paper-examples")
    assert out.splitlines()[0].split() == ["claim", "expected", "computed", "match"]


SMALL = ["--ci3-count", "12", "--chains", "6", "--pairs", "6", "--hna-n-max", "4"]


def test_verify_default_small(capsys):
    code, out, _ = run(capsys, "verify", *SMALL, "--jobs", "1", "--format", "json")
    summary = json.loads(out)
    assert code == 0 and summary["ok"]


def test_verify_parallel_matches_serial(capsys):
    _, serial, _ = run(capsys, "verify", *SMALL, "--jobs", "1", "--format", "json")
    _, parallel, _ = run(capsys, "verify", *SMALL, "--jobs", "2", "--format", "json")
    assert serial == parallel


def test_verify_injected_fault(capsys):
    code, out, _ = run(capsys, "verify", *SMALL, "--jobs", "1", "--format", "json", "--inject-fault")
    summary = json.loads(out)
    ci3_check = summary["checks"][0]
    assert code == 1 and not summary["ok"]
    assert ci3_check["counterexample"]["formula"] == ci3_check["counterexample"]["apery"] + 1


def test_deterministic_output(capsys):
    outs = {run(capsys, "index", "8,27,45", "--method", m)[1] for m in ["ci3"] * 3}
    assert len(outs) == 1
    first = run(capsys, "verify", *SMALL, "--seed", "5", "--jobs", "1", "--format", "json")[1]
    second = run(capsys, "verify", *SMALL, "--seed", "5", "--jobs", "1", "--format", "json")[1]
    assert first == second


VOCAB = [
    "analyze", "index", "ci3", "glue", "family", "hna", "ding", "--method", "apery", "direct",
    "ord-formula", "ci3", "auto", "--format", "json", "csv", "human", "--a", "--p", "--n", "--n-max",
    "--file", "/nonexistent.json", "--max-frobenius", "--check-below", "4,5,11", "2,3", "8,27,45",
    "6,10", "0", "-1", "1", "3", "5", "7", "2147483649", "x", ",", ",,", "1,a", "99999999999999999999",
    "4,10,15", "12,65,91", "-5,3", "", "--", "--help-me", "7,9,11,13", "--bogus", "2,2", "1.5",
]


def test_fuzz_never_crashes(capsys):
    rng = random.Random(1234)
    for _ in range(10_000):
        argv = [rng.choice(VOCAB) for _ in range(rng.randint(0, 6))]
        try:
            code = main(argv)
        except SystemExit as exc:  # argparse --help style exits
            code = exc.code
        capsys.readouterr()
        assert code in (0, 1, 2, 3, 4), argv
