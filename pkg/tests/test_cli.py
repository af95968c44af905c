import json

import pytest

from swdom.cli import main
from swdom.law import R_STAR
from swdom.tnorms import dominance_gap, sugeno_weber


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check(capsys):
    assert run(capsys, "check", "2", "10")[:2] == (0, "dominates (iv)\n")
    assert run(capsys, "check", "20", "100")[:2] == (0, "does-not-dominate\n")
    assert run(capsys, "check", "0", "inf")[1] == "dominates (i)\n"


def test_falsify_witness_json(capsys):
    code, out, _ = run(capsys, "falsify", "20", "100")
    doc = json.loads(out)
    assert code == 0 and doc["outcome"] == "violation-found"
    w = doc["witness"]
    assert set(w) == {"x", "y", "u", "v", "gap"}
    assert w["gap"] == -0.00022470600273294394
    assert dominance_gap(sugeno_weber(20), sugeno_weber(100), w["x"], w["y"], w["u"], w["v"]) == w["gap"]


def test_falsify_clean(capsys):
    code, out, _ = run(capsys, "falsify", "2", "10", "--grid", "16", "--seed", "5", "--tol", "1e-10")
    doc = json.loads(out)
    assert code == 0 and doc["witness"] is None and doc["closed_form"] == "dominates (iv)"


def test_gap_exact(capsys):
    code, out, _ = run(capsys, "gap", "20", "100", "0.95", "0.96", "0.97", "0.98")
    want = dominance_gap(sugeno_weber(20), sugeno_weber(100), 0.95, 0.96, 0.97, 0.98)
    assert code == 0 and float(out) == want


def test_rstar_and_sets(capsys):
    out = run(capsys, "rstar")[1]
    assert abs(float(out) - 6.00914) <= 1e-4 and float(out) == pytest.approx(R_STAR, abs=1e-11)
    assert run(capsys, "dominated-set", "16")[1] == "[16, 121] U {inf}\n"
    assert run(capsys, "dominated-set", "5")[1] == "[5, inf]\n"
    assert run(capsys, "dominated-set", "50")[1] == "{50, inf}\n"


def test_region_and_boundary(capsys, tmp_path):
    out = tmp_path / "r.csv"
    code = run(capsys, "region", "1", "50", "1", "50", "-n", "2", "--scale", "linear", "--out", str(out))[0]
    assert code == 0 and len(out.read_text().splitlines()) == 5
    code, text, _ = run(capsys, "boundary", "40", "1000", "-n", "3", "--format", "json")
    assert code == 0 and len(json.loads(text)["records"]) == 3


def test_transitivity_and_verify(capsys):
    code, out, _ = run(capsys, "transitivity", "--count", "50", "--seed", "1")
    assert code == 0 and "transitive: yes" in out
    code, out, _ = run(capsys, "verify", "law")
    assert code == 0 and "FAIL" not in out


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "-1", "2"],
        ["check", "nan", "2"],
        ["check", "2"],
        ["gap", "2", "3", "0.5", "0.5", "0.5", "1.5"],
        ["region", "5", "1", "1", "2"],
        ["boundary", "10", "100"],
        ["falsify", "2", "10", "--grid", "1"],
        ["verify", "nothing"],
        ["transitivity", "--count", "0"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == ""
    assert len(err.strip().splitlines()) == 1 and err.startswith("swdom: error:")


def test_unwritable_output(capsys, tmp_path):
    code, _, err = run(capsys, "boundary", "40", "100", "--out", str(tmp_path / "missing" / "x.csv"))
    assert code == 2 and err.startswith("swdom: error:")
