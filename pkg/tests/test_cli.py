import dataclasses
import io
import json
import subprocess
import sys

import jsonschema
import pytest

from descartes_signs import lemma
from descartes_signs.cli import JSON_SCHEMAS, run


def call(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err, stdin=io.StringIO(stdin))
    return code, out.getvalue(), err.getvalue()


def test_sc():
    assert call("sc", "6", "-11", "6", "-1") == (0, "3\n", "")


def test_lemma_verify():
    assert call("lemma-verify", "--c", "1", "--m", "1", "1", "1") == (0, "0\n", "")


def test_table_check():
    code, out, _ = call("table-check")
    assert code == 0
    assert out == "8 rows, 0 mismatches\n"


def test_table_check_verbose():
    code, out, _ = call("table-check", "--verbose")
    assert code == 0
    assert "row vi: table (2, 0)" in out


def test_bound():
    code, out, _ = call("bound", "6", "-11", "6", "-1")
    assert code == 0
    assert out.splitlines() == ["3", "parity: odd; positive roots with multiplicity: 3, 1"]


def test_isolate_and_pz():
    assert call("isolate", "6", "-11", "6", "-1")[1].splitlines() == [
        "exact 1 multiplicity 1",
        "exact 2 multiplicity 1",
        "exact 3 multiplicity 1",
    ]
    assert call("pz", "2", "-5", "4", "-1") == (0, "3\n", "")
    assert call("pz", "5") == (0, "0\n", "")
    assert call("isolate", "1", "0", "1")[1] == "no positive roots\n"


def test_negative_fractions_and_descending():
    assert call("sc", "1", "-1/2", "0", "3/4") == (0, "2\n", "")
    # -x^3 + 6x^2 - 11x + 6 given leading term first
    assert call("pz", "--descending", "-1", "6", "-11", "6") == (0, "3\n", "")


def test_stdin():
    assert call("sc", "-", stdin="6 -11\n6 -1\n") == (0, "3\n", "")


def test_lemma_trace():
    code, out, _ = call("lemma-verify", "--c", "2", "--m", "2", "--trace", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "0"
    assert "  a=[1, -2, 1] b=[1, -1] row=viii alpha=1 beta=1 delta=1" in lines


@pytest.mark.parametrize(
    "argv, token",
    [
        (("sc", "1", "abc"), "'abc'"),
        (("sc", "1/0"), "'1/0'"),
        (("pz", "1.5", "2"), "'1.5'"),
        (("lemma-verify", "--c", "x", "--m", "1", "1"), "'x'"),
    ],
)
def test_parse_errors_name_token(argv, token):
    code, out, err = call(*argv)
    assert code == 2 and out == ""
    assert token in err
    assert len(err.strip().splitlines()) == 1


@pytest.mark.parametrize(
    "argv",
    [
        ("pz",),
        ("isolate", "0"),
        ("bound",),
        ("lemma-verify", "--c", "-1", "--m", "1", "1"),
        ("lemma-verify", "--c", "1", "--m", "0", "1"),
        ("lemma-verify", "--c", "1", "--m", "1"),
        ("lemma-verify", "--m", "1", "1"),
        ("nonsense",),
        (),
        ("fuzz", "--trials", "-3"),
    ],
)
def test_precondition_and_usage_errors(argv):
    assert call(*argv)[0] == 2


def test_help_exits_zero(capsys):
    assert run(["--help"]) == 0
    assert "lemma-verify" in capsys.readouterr().out


def test_fuzz_deterministic():
    a = call("fuzz", "--trials", "15", "--seed", "7", "--max-degree", "5")
    b = call("fuzz", "--trials", "15", "--seed", "7", "--max-degree", "5")
    assert a == b
    assert a[0] == 0
    assert a[1] == "trials: 15, seed: 7, max-degree: 5, checks: 45, violations: 0\n"


def test_fuzz_reports_counterexample(monkeypatch):
    table = tuple(
        dataclasses.replace(r, alpha=0) if r.id == "viii" else r for r in lemma.CASE_TABLE
    )
    monkeypatch.setattr(lemma, "CASE_TABLE", table)
    code, out, _ = call("fuzz", "--trials", "50", "--seed", "1")
    assert code == 1
    assert "violations: 1" in out
    assert "counterexample in trial" in out
    assert "input a=" in out


def test_table_check_violation_exit(monkeypatch):
    table = tuple(dataclasses.replace(r, beta=0) if r.id == "v" else r for r in lemma.CASE_TABLE)
    monkeypatch.setattr(lemma, "CASE_TABLE", table)
    code, out, _ = call("table-check")
    assert code == 1
    assert out.startswith("8 rows, ")


JSON_CASES = [
    ("sc", ["sc", "6", "-11", "6", "-1"]),
    ("bound", ["bound", "1", "-1", "1"]),
    ("isolate", ["isolate", "-2", "0", "1"]),
    ("isolate", ["isolate", "2", "-5", "4", "-1"]),
    ("pz", ["pz", "6", "-11", "6", "-1"]),
    ("lemma-verify", ["lemma-verify", "--c", "3/2", "--m", "3", "1", "0", "1"]),
    ("lemma-verify", ["lemma-verify", "--trace", "--c", "1", "--m", "2", "1", "-1", "1"]),
    ("table-check", ["table-check"]),
    ("fuzz", ["fuzz", "--trials", "5", "--seed", "2"]),
]


@pytest.mark.parametrize("verb, argv", JSON_CASES)
def test_json_schema_round_trip(verb, argv):
    code, out, _ = call(*argv, "--json")
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, JSON_SCHEMAS[verb])
    assert json.loads(json.dumps(payload)) == payload
    # byte-stable
    assert call(*argv, "--json")[1] == out


def test_json_values():
    payload = json.loads(call("isolate", "--json", "2", "-5", "4", "-1")[1])
    assert payload["pz"] == 3
    assert [(r["lo"], r["kind"], r["multiplicity"]) for r in payload["roots"]] == [
        ("1", "exact", 2),
        ("2", "exact", 1),
    ]
    payload = json.loads(call("table-check", "--json")[1])
    assert (payload["rows"], payload["mismatches"]) == (8, 0)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "descartes_signs", "sc", "6", "-11", "6", "-1"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "3\n"
