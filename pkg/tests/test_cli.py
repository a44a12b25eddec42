import io
import json

import pytest

from paraboloid_lattice.cli import run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_formula_row():
    code, out = call("formula", "--n", "7")
    assert code == 0
    header, row = out.strip().splitlines()
    assert header.startswith("n,error,error_exact")
    assert row.startswith("7,-1.666667,-5/3,129")


def test_verify_pass():
    code, out = call("verify", "--max", "101")
    assert code == 0
    assert "mismatches,0" in out.splitlines()


def test_verify_failure_exit_code(monkeypatch):
    from paraboloid_lattice import formula

    monkeypatch.setattr(formula, "error_term_exact", lambda N: formula.brute_error(N) + (N == 5))
    code, out = call("verify", "--max", "9")
    assert code == 2
    assert "mismatches,1" in out
    assert "mismatch,5:-1" in out


def test_count():
    code, out = call("count", "--dim", "3", "--q", "1,0,1", "--c", "1", "--r", "2")
    assert code == 0
    assert out.strip().splitlines() == ["count", "33"]


def test_count_float_beta_reports_ambiguity_column():
    code, out = call("count", "--dim", "3", "--beta", "0.1,0.2", "--r", "5")
    assert code == 0
    assert out.splitlines()[0] == "count,ambiguous"
    code, exact = call("count", "--dim", "3", "--beta", "0.1,0.2", "--beta-exact", "--r", "5")
    assert exact.splitlines()[1] == out.splitlines()[1].split(",")[0]


def test_classnum_and_lfun():
    _, out = call("classnum", "--d", "3,7,23")
    assert out.splitlines()[3] == "23,3,1:1:6;2:-1:3;2:1:3"
    _, out = call("lfun", "--d", "3")
    assert out.splitlines()[1] == "3,0.604600,0.333333,1/3,-3,1"


def test_gauss_and_farey():
    _, out = call("gauss", "--m", "1", "--n", "3")
    assert out.splitlines()[1] == "1,3,0.000000,1.732051,1.732051,1,3"
    _, out = call("farey", "--x", "0.3", "--order", "3")
    assert out.splitlines()[1] == "3/10,3,1,3,0.250000,1/4,0.400000,2/5"


def test_json_mirrors_csv_columns():
    _, csv_out = call("formula", "--n", "1:9:2")
    code, js = call("--json", "formula", "--n", "1:9:2")
    rows = json.loads(js)
    assert code == 0
    assert list(rows[0]) == csv_out.splitlines()[0].split(",")
    assert [r["error_exact"] for r in rows] == ["7/3", "1", "7/3", "-5/3", "5"]


def test_global_flags_after_subcommand():
    a = call("--seed", "3", "hl", "--n", "64", "--samples", "5")
    b = call("hl", "--n", "64", "--samples", "5", "--seed", "3")
    assert a == b


def test_byte_deterministic_output():
    args = ("expsum", "--n", "64,128", "--samples", "10", "--seed", "9")
    assert call(*args) == call(*args)
    args = ("omega", "--mode", "minus", "--max", "301", "--top", "5")
    assert call(*args) == call(*args)


def test_omega_modes():
    _, out = call("omega", "--mode", "plus", "--max", "13")
    assert out.splitlines()[1:] == ["1,1,2.333333,7/3,2.333333", "25,5,10.333333,31/3,2.066667", "169,13,26.333333,79/3,2.025641"]
    _, out = call("omega", "--mode", "family", "--max", "1")
    assert len(out.splitlines()) == 5
    _, out = call("omega", "--mode", "growth", "--max", "4")
    assert out.splitlines()[2] == "4,22,5.500000"


def test_scan_and_fit():
    _, out = call("scan", "--r", "1,3,7")
    assert out.splitlines()[1:] == [
        "1,5,2.666667,2.333333,7/3,0",
        "3,25,24.000000,1.000000,1,0",
        "7,129,130.666667,-1.666667,-5/3,0",
    ]
    code, out = call("scan", "--r", "3:101:2", "--fit")
    assert code == 0 and out.startswith("slope,max_normalized")


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["count", "--r", "2", "--zzz"],
        [],
        ["formula", "--n", "4"],
        ["count", "--dim", "3", "--q", "1,2,1", "--r", "1"],
        ["classnum", "--d", "12"],
        ["farey", "--x", "abc", "--order", "3"],
    ],
)
def test_usage_errors_exit_1(argv, capsys):
    code, out = call(*argv)
    assert code == 1
    assert out == ""
    assert capsys.readouterr().err
