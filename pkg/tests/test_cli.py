import csv
import io
import json
import subprocess
import sys

import pytest

from freelog.cli import main
from freelog.words import parse_word


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--n", "2", "--max-len", "3", "--enumerate", "3")
    assert code == 0
    r = rows(out)
    assert [(x["m"], x["count"], x["formula_count"], x["trace_count"], x["enum_count"]) for x in r] == [
        ("1", "4", "4", "4", "4"),
        ("2", "12", "12", "12", "12"),
        ("3", "28", "28", "28", "28"),
    ]
    assert all(x["agree"] == "True" for x in r)


def test_count_rank3(capsys):
    _, out, _ = run(capsys, "count", "--n", "3", "--max-len", "2")
    assert [(x["m"], x["count"]) for x in rows(out)] == [("1", "6"), ("2", "30")]


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "--n", "1", "--max-len", "3"],
        ["count", "--n", "2"],
        ["powersum", "--n", "2", "--j", "3", "--k", "2", "--max-len", "3"],
        ["moments", "--precision", "3"],
        ["dist", "--l", "3", "--grid", "1,0"],
        ["bogus"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_powersum(capsys):
    for j in ("1", "2"):
        _, out, _ = run(capsys, "powersum", "--n", "2", "--j", j, "--k", "2", "--max-len", "3")
        assert [x["S"] for x in rows(out)] == ["2", "16", "78"]
        assert [x["histogram_S"] for x in rows(out)] == ["2", "16", "78"]
    code, out, err = run(capsys, "powersum", "--k", "3", "--max-len", "4")
    assert code == 0 and [x["S"] for x in rows(out)] == ["0"] * 4 and "odd" in err


def test_json_mirrors_csv(capsys):
    _, out_csv, _ = run(capsys, "powersum", "--k", "4", "--max-len", "5")
    _, out_json, _ = run(capsys, "powersum", "--k", "4", "--max-len", "5", "--format", "json")
    from_json = [{k: str(v) for k, v in row.items()} for row in json.loads(out_json)]
    assert from_json == rows(out_csv)


def test_gk(capsys):
    _, out, err = run(capsys, "gk", "--n", "2", "--k", "0", "--format", "json")
    data = json.loads(out)[0]
    # 2u^2/(1-u^2) + (4u-6u^2)/(1-4u+3u^2), common factor (1-u) cancelled, monic denominator
    assert data["numerator"] == ["0", "4/3", "0", "-4"]
    assert data["denominator"] == ["1/3", "-1", "-1/3", "1"]
    assert data["poles"] == {"1/3": 1, "1": 1, "-1": 1}
    assert "u=1/3" in err


def test_laurent(capsys):
    code, out, err = run(capsys, "laurent", "--n", "2", "--k", "2")
    assert code == 0
    assert "order=2 leading=-1/9 predicted=-1/9 match=true" in err
    r = rows(out)[0]
    assert (r["order"], r["leading"], r["match"]) == ("2", "-1/9", "True")


def test_tauberian(capsys):
    _, out, _ = run(capsys, "tauberian", "--k", "2", "--lens", "3,40")
    r = rows(out)
    assert r[0]["exact"] == "96" and r[0]["main_term"] == "243/2"
    assert r[1]["ratio"] == "0.987500000000"
    _, out, _ = run(capsys, "tauberian", "--k", "1", "--lens", "7", "--lemma", "--unweighted")
    assert rows(out)[0]["exact"] == "8"


def test_moments(capsys):
    _, out, _ = run(capsys, "moments", "--lens", "3", "--k-max", "2")
    r = rows(out)
    assert r[1]["value"] == "9/11" and r[1]["target"] == "1"
    assert r[1]["decimal"] == "0.818181818182"


def test_dist(capsys):
    _, out, err = run(capsys, "dist", "--l", "2", "--grid", "0,0")
    assert rows(out)[0]["probability"] == "1/4"
    assert "discrepancy" in err
    _, out, _ = run(capsys, "dist", "--l", "2", "--grid", "0,0", "--fixed-length")
    assert rows(out)[0]["probability"] == "1/6"


def test_sample_deterministic_and_parseable(capsys):
    _, a, _ = run(capsys, "sample", "--n", "3", "--m", "8", "--count", "5", "--seed", "4")
    _, b, _ = run(capsys, "sample", "--n", "3", "--m", "8", "--count", "5", "--seed", "4")
    assert a == b
    for r in rows(a):
        w = parse_word(r["word"], 3)
        assert len(w) == 8 and w.is_cyclically_reduced


def test_byte_determinism_subprocess():
    cmd = [sys.executable, "-m", "freelog", "moments", "--lens", "10,20", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a


def test_verify_quick(capsys):
    code, out, err = run(capsys, "verify", "--quick")
    assert code == 0
    r = rows(out)
    assert [x["criterion"] for x in r] == [str(i) for i in range(1, 10)]
    assert all(x["passed"] == "True" for x in r)
    assert err.count("[PASS]") == 9


def test_verify_failure_exit_code(monkeypatch, capsys):
    from freelog import verify

    def broken(quick=False):
        return verify.CheckResult(3, "forced failure", False, "x")

    monkeypatch.setattr(verify, "CHECKS", [broken])
    code, _, err = run(capsys, "verify")
    assert code == 1
    assert json.loads(err.strip().splitlines()[-1]) == {"failed": [3]}
