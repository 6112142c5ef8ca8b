"""End-to-end command tests driven through cli.main()."""

import json

import pytest

from polygen import cli, closedform
from polygen import genfun as gf
from polygen.exact import CPoly
from polygen.series import TruncSeries


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_table_text(capsys):
    code, out, err = run(capsys, "table", "--family", "chebyshev-t",
                         "--n", "0..2")
    assert code == 0 and err == ""
    assert out == "0\t1\n1\tx\n2\t2*x^2 - 1\n"


def test_table_u_shift(capsys):
    # row n of the second-kind table is the degree-n polynomial
    code, out, _ = run(capsys, "table", "--family", "chebyshev-u",
                       "--n", "0..2")
    assert code == 0
    assert out == "0\t1\n1\t2*x\n2\t4*x^2 - 1\n"


def test_table_single_n(capsys):
    code, out, _ = run(capsys, "table", "--family", "k2", "--r", "3",
                       "--n", "0")
    assert code == 0 and out == "0\t0\n"


def test_table_json_round_trip(capsys):
    code, out, _ = run(capsys, "table", "--family", "np", "--n", "0..3",
                       "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["family"] == "nw"
    rows = [CPoly.from_json_dict(r["value"]) for r in doc["rows"]]
    assert rows[2] == closedform.npoly(2)
    assert [r["n"] for r in doc["rows"]] == [0, 1, 2, 3]


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--family", "dickson-d",
                       "--alpha", "2", "--n", "0..2", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "n,value"
    assert out.splitlines()[1] == "0,2"


def test_series_text(capsys):
    code, out, _ = run(capsys, "series", "--family", "dickson-d",
                       "--order", "2")
    assert code == 0
    assert out == "0\t2\n1\tx\n2\tx^2 - 2\n"


def test_series_json_round_trip(capsys):
    code, out, _ = run(capsys, "series", "--family", "cos-c",
                       "--order", "4", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    ser = TruncSeries.from_json_dict(doc["series"])
    assert ser == gf.build(gf.CosC(), 4)


def test_series_default_order_env(capsys, monkeypatch):
    monkeypatch.setenv("POLYGEN_ORDER", "3")
    code, out, _ = run(capsys, "series", "--family", "cos-c")
    assert code == 0
    assert len(out.splitlines()) == 4


def test_expand(capsys):
    code, out, _ = run(capsys, "expand", "--family", "gould-hopper",
                       "--j", "2", "--n", "2")
    assert code == 0 and out == "x^2 + 2*y\n"
    code, out, _ = run(capsys, "expand", "--family", "hermite-gen",
                       "--r", "1", "--n", "5")
    assert code == 0 and out == "u1^5\n"
    code, out, _ = run(capsys, "expand", "--family", "np", "--n", "2")
    assert code == 0 and out == "(x^2 - y^2) + i*(2*x*y)\n"


def test_scalar_table(capsys):
    code, out, _ = run(capsys, "table", "--family", "r1", "--b", "0",
                       "--n", "0..2")
    assert code == 0
    assert out == "0\t1\n1\t-1/2\n2\t1/6\n"


def test_check_single(capsys):
    code, out, _ = run(capsys, "check", "--id", "lemma1", "--n-max", "4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "PASS lemma1"
    assert lines[-1] == "passed 1/1"


def test_check_kebab_id(capsys):
    code, out, _ = run(capsys, "check", "--id", "dickson-gf-discrepancy")
    assert code == 0
    assert out.splitlines()[0] == "PASS dickson_gf_discrepancy"


def test_check_suite_json(capsys):
    code, out, _ = run(capsys, "check", "--suite", "discrepancies",
                       "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert [r["id"] for r in doc] == list(
        cli.identities.SUITES["discrepancies"])
    assert all(r["passed"] for r in doc)


def test_check_suite_csv(capsys):
    code, out, _ = run(capsys, "check", "--suite", "section2",
                       "--n-max", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "id,passed,counterexample"


def test_exit_codes(capsys):
    # unknown family
    code, _, err = run(capsys, "table", "--family", "nope", "--n", "1")
    assert code == 2 and "error:" in err
    # foreign parameter for the family
    code, _, err = run(capsys, "table", "--family", "chebyshev-t",
                       "--r", "2", "--n", "1")
    assert code == 2
    # n out of range for check
    code, _, err = run(capsys, "check", "--id", "lemma1", "--n-max", "25")
    assert code == 2
    # singular parameter choice
    code, _, err = run(capsys, "series", "--family", "apostol-euler",
                       "--lambda", "-1", "--order", "2")
    assert code == 3
    # closed form only: p1 has no generating-series route
    code, _, err = run(capsys, "series", "--family", "p1", "--order", "2")
    assert code == 2 and "no generating-function route" in err
    # series only: r1 rows come from the series; expand works, but a
    # family with no closed route at all must refuse the table
    code, _, err = run(capsys, "check")
    assert code == 2  # neither --suite nor --id
    code, _, err = run(capsys, "check", "--suite", "section2", "--id",
                       "lemma1")
    assert code == 2  # both
    # malformed rational
    code, _, err = run(capsys, "table", "--family", "dickson-d",
                       "--alpha", "0.5", "--n", "1")
    assert code == 2
    # malformed range
    code, _, err = run(capsys, "table", "--family", "chebyshev-t",
                       "--n", "two")
    assert code == 2
    # argparse's own failure path keeps the same usage code
    code, _, err = run(capsys, "frobnicate")
    assert code == 2


def test_check_failure_exit_code(capsys, monkeypatch):
    from polygen import identities as ids
    from polygen.exact import MultiPoly

    @ids._register("cli_wrong", ids.Bounds(n_max=1, r_max=1))
    def cli_wrong(bounds):
        yield {"n": 0}, MultiPoly.const(0), MultiPoly.const(1)

    try:
        code, out, _ = run(capsys, "check", "--id", "cli_wrong")
        assert code == 1
        assert out.splitlines()[0].startswith("FAIL cli_wrong at ")
        assert "0 != 1" in out.splitlines()[0] or "!=" in out.splitlines()[0]
        assert out.splitlines()[-1] == "passed 0/1"
    finally:
        del ids.CHECKS["cli_wrong"]
        del ids.DEFAULTS["cli_wrong"]


def test_determinism(capsys):
    first = run(capsys, "table", "--family", "m1", "--n", "0..4",
                "--format", "json")
    second = run(capsys, "table", "--family", "m1", "--n", "0..4",
                 "--format", "json")
    assert first == second
