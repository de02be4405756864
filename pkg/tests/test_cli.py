import csv
import io
import json
import subprocess
import sys

import pytest

from eulerseidel.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_seq_bell(capsys):
    code, out, _ = run(capsys, "seq", "bell", "--count", "5")
    assert code == 0
    assert out.split() == ["1", "1", "2", "5", "15"]


def test_seq_stirling_json(capsys):
    code, out, _ = run(capsys, "seq", "stirling2", "--m", "0", "--count", "3", "--json")
    assert code == 0
    assert json.loads(out) == ["1", "0", "0"]


def test_seq_stirling_needs_m(capsys):
    code, _, err = run(capsys, "seq", "stirling2", "--count", "3")
    assert code == 2 and "--m" in err


def test_seq_fubinipoly_json(capsys):
    code, out, _ = run(capsys, "seq", "fubinipoly", "--count", "4", "--json")
    assert json.loads(out)[-1] == ["0", "1", "6", "6"]


def test_poly_alias(capsys):
    _, out_seq, _ = run(capsys, "seq", "bellpoly", "--count", "5", "--json")
    _, out_poly, _ = run(capsys, "poly", "bellpoly", "--count", "5", "--json")
    assert out_seq == out_poly
    with pytest.raises(SystemExit) as exc:
        main(["poly", "bell"])
    assert exc.value.code == 2


def test_unknown_kind_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["seq", "nosuch"])
    assert exc.value.code == 2
    assert "usage" in capsys.readouterr().err


def test_seq_csv(capsys):
    code, out, _ = run(capsys, "seq", "fubini", "--count", "5", "--csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "value"]
    assert rows[1:] == [["0", "1"], ["1", "1"], ["2", "3"], ["3", "13"], ["4", "75"]]


def test_large_values_stay_exact(capsys):
    _, out, _ = run(capsys, "seq", "bell", "--count", "301", "--json")
    values = json.loads(out)
    assert all(isinstance(v, str) for v in values)
    assert len(values[300]) > 400


def test_esmatrix_bell(capsys):
    code, out, _ = run(capsys, "esmatrix", "bell", "--size", "6", "--json")
    doc = json.loads(out)
    assert code == 0
    rows = [[int(v) for v in r] for r in doc["rows"]]
    assert rows[0] == [1, 1, 2, 5, 15, 52]
    assert rows[1][:4] == [2, 3, 7, 20]
    assert rows[2][:3] == [5, 10, 27]
    assert rows[3][:2] == [15, 37]
    assert rows[4][0] == 52


def test_esmatrix_single(capsys):
    code, out, _ = run(capsys, "esmatrix", "bell", "--size", "1")
    assert code == 0 and out.strip() == "1"


def test_esmatrix_fubini_first_column(capsys):
    _, out, _ = run(capsys, "esmatrix", "fubini", "--size", "5", "--json")
    rows = json.loads(out)["rows"]
    assert [r[0] for r in rows] == ["1", "2", "6", "26", "150"]


def test_esmatrix_csv_indices(capsys):
    _, out, _ = run(capsys, "esmatrix", "bellpoly", "--size", "3", "--csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["k", "n", "value"]
    assert ["1", "0", "1;1"] in rows
    assert len(rows) == 1 + 6


def test_esmatrix_size_zero(capsys):
    code, _, _ = run(capsys, "esmatrix", "bell", "--size", "0")
    assert code == 2


def test_check_all_json(capsys):
    code, out, _ = run(capsys, "check", "all", "--max-n", "40", "--json")
    doc = json.loads(out)
    assert code == 0
    assert len(doc["results"]) == 15
    assert all(r["status"] == "pass" for r in doc["results"])
    assert list(doc["results"][0]) == ["name", "eq", "max_n", "status"]


def test_check_single(capsys):
    code, out, _ = run(capsys, "check", "bell_shift", "--max-n", "1")
    assert code == 0 and "PASS" in out


def test_check_unknown(capsys):
    code, _, err = run(capsys, "check", "nosuch", "--max-n", "5")
    assert code == 2
    assert "bell_shift" in err


def test_check_failure_exit_code(capsys, monkeypatch):
    from eulerseidel import identity_suite
    from eulerseidel.sequences import SequenceTables

    bad = SequenceTables.build(12).with_term("bell_numbers", 5, 53)
    monkeypatch.setattr(identity_suite, "default_tables", lambda size: bad)
    code, out, _ = run(capsys, "check", "bell_shift", "--max-n", "10", "--json")
    doc = json.loads(out)
    assert code == 1
    assert doc["results"][0]["counterexample"] == {"n": 4, "lhs": "53", "rhs": "52"}


def test_series_cli(capsys):
    code, out, _ = run(capsys, "series", "--order", "4")
    assert code == 0 and "FAIL" not in out
    code, _, _ = run(capsys, "series", "--order", "3")
    assert code == 2


def test_series_json(capsys):
    code, out, _ = run(capsys, "series", "--order", "12", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["order"] == 12
    assert {r["name"] for r in doc["results"]} >= {"S5", "S7", "S15", "S17pp", "S20p", "S22p", "S28p", "SEuler"}


def test_json_is_deterministic(capsys):
    outs = set()
    for _ in range(3):
        _, out, _ = run(capsys, "check", "all", "--max-n", "10", "--json")
        outs.add(out)
    assert len(outs) == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "eulerseidel", "seq", "bell", "--count", "5"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.split() == ["1", "1", "2", "5", "15"]
