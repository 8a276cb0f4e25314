import io
import json
import subprocess
import sys

import pytest

from cyclores.cli import main
from cyclores.records import FIELDS, OutputRecord, read_records, write_records


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_context():
    code, text = run("context", "--l", "3", "--p", "7")
    assert code == 0
    assert text.splitlines() == ["l,p,gamma,alpha", "3,7,3,2"]


def test_jacobi_default_and_json():
    code, text = run("jacobi", "--l", "3", "--p", "7")
    assert code == 0
    assert text.splitlines()[1] == "3,7,1,1,-2;1,2,0,true,true"
    code, text = run("--format", "json", "jacobi", "--l", "5", "--p", "11", "--i", "1", "--j", "2")
    (row,) = json.loads(text)
    assert row["abs2_is_p"] is True and row["jet_is_minus_one"] is True and len(row["coeffs"]) == 4


def test_classify_worked_example():
    code, text = run("classify", "--l", "3", "--p", "7", "--d", "2")
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == ",".join(FIELDS)
    assert lines[1] == "7,3,3,2,2,1,2,2,true"


def test_classify_d_list_json():
    code, text = run("classify", "--l", "5", "--p", "31", "--d-list", "2,3,7", "--format", "json")
    recs = read_records(text, "json")
    assert code == 0 and [r.D for r in recs] == [2, 3, 7] and all(r.match for r in recs)


@pytest.mark.parametrize("argv", [
    ("classify", "--l", "3", "--p", "5", "--d", "2"),
    ("classify", "--l", "3", "--p", "7", "--d", "6"),
    ("classify", "--l", "4", "--p", "13", "--d", "2"),
    ("classify", "--l", "3", "--p", "7"),
    ("table", "--l", "3", "--p-min", "50", "--p-max", "10", "--d-list", "2"),
    ("scan-conjecture", "--max", "2"),
])
def test_invalid_arguments_exit_2(argv, capsys):
    code, _ = run(*argv)
    assert code == 2
    assert "error:" in capsys.readouterr().err


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        run("classify", "--l", "x")
    assert exc.value.code == 2


def test_partition3():
    code, text = run("partition3", "--p", "7")
    assert code == 0
    rows = [line.split(",") for line in text.splitlines()[1:]]
    assert [(r[1], r[2], r[3], r[4]) for r in rows] == [("1", "1", "2", "4"), ("1", "1", "3", "2"), ("1", "1", "5", "4")]
    assert all(r[7] in ("1", "+", "-") for r in rows)


def test_verify():
    code, text = run("verify", "--l", "3", "--p", "7")
    assert code == 0
    assert all(line.split(",")[1] == "true" for line in text.splitlines()[1:])
    code, _ = run("verify", "--l", "13", "--p", "53")
    assert code == 0


def test_scan_conjecture():
    assert run("scan-conjecture", "--max", "100") == (0, "")
    assert run("scan-conjecture", "--max", "1100") == (0, "1093\n")
    code, text = run("scan-conjecture", "--max", "20", "--verbose")
    assert text.splitlines() == ["l,S", "3,1", "5,4", "7,3", "11,1", "13,7", "17,8", "19,13"]


def test_table_round_trip_and_determinism(tmp_path):
    paths = {}
    for fmt in ("csv", "json"):
        path = tmp_path / f"t.{fmt}"
        code, _ = run("table", "--l", "5", "--p-min", "11", "--p-max", "300",
                      "--d-list", "2,3,7,10", "--format", fmt, "--output", str(path), "--seed", "7")
        assert code == 0
        paths[fmt] = path
    from_csv = read_records(paths["csv"].read_text(), "csv")
    from_json = read_records(paths["json"].read_text(), "json")
    assert from_csv == from_json and len(from_csv) > 20
    assert [(r.p, r.D) for r in from_csv] == sorted((r.p, r.D) for r in from_csv)
    buf = io.StringIO()
    write_records(from_csv, "csv", buf)
    assert buf.getvalue() == paths["csv"].read_text()

    again = tmp_path / "again.csv"
    run("table", "--l", "5", "--p-min", "11", "--p-max", "300", "--d-list", "2,3,7,10",
        "--output", str(again), "--seed", "7")
    assert again.read_bytes() == paths["csv"].read_bytes()


def test_table_parallel_matches_serial(tmp_path):
    args = ("table", "--l", "7", "--p-min", "20", "--p-max", "400", "--d-list", "5,2,3")
    _, serial = run(*args)
    _, parallel = run(*args, "--jobs", "2")
    assert serial == parallel


def test_seed_does_not_change_output(monkeypatch):
    args = ("table", "--l", "11", "--p-min", "20", "--p-max", "200", "--d-list", "2,3,13")
    base = run(*args, "--seed", "1")
    assert run(*args, "--seed", "12345") == base
    monkeypatch.setenv("CYCLORES_SEED", "42")
    assert run(*args) == base
    monkeypatch.setenv("CYCLORES_SEED", "nope")
    assert run(*args)[0] == 2


def test_table_plot(tmp_path):
    png = tmp_path / "classes.png"
    code, _ = run("table", "--l", "3", "--p-min", "7", "--p-max", "200", "--d-list", "2,5,7,10",
                  "--plot", str(png))
    assert code == 0
    assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_records_none_ind_class_round_trip():
    rec = OutputRecord(2_131, 1093, 2, 5, 3, 0, None, 1, False)
    for fmt in ("csv", "json"):
        buf = io.StringIO()
        write_records([rec], fmt, buf)
        assert read_records(buf.getvalue(), fmt) == [rec]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "cyclores", "classify", "--l", "3", "--p", "7", "--d", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.splitlines()[1] == "7,3,3,2,2,1,2,2,true"
