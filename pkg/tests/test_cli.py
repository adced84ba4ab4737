import csv
import io
import json
import subprocess
import sys

import pytest

from lcderham import report
from lcderham.cli import RunConfig, main, run
from lcderham.errors import ParseError


def test_table_example(capsys):
    assert main(["--vars", "2", "--ideal", "x0,x1", "--format", "table"]) == 0
    out = capsys.readouterr().out
    assert "Koszul:  H_2=K^1" in out
    assert "de Rham: H_0=K^1" in out
    assert "chi = (1, 1)  main PASS" in out
    assert out.rstrip().endswith("VERIFIED 1/1")


def test_oracle_example(capsys):
    assert main(["--vars", "2", "--ideal", "x0*x1", "--oracle", "4", "--format", "json"]) == 0
    cap = capsys.readouterr()
    d = json.loads(cap.out)
    h1 = d["ideals"][0]["modules"][1]
    assert (h1["chi_koszul"], h1["chi_derham"]) == (-1, -1)
    assert h1["main_theorem"] == "PASS" and h1["oracle"]["status"] == "PASS"
    assert "VERIFIED 1/1" in cap.err


def test_zero_ideal(capsys):
    assert main(["--vars", "1", "--ideal", ""]) == 0
    assert "chi = (1, -1)  main PASS" in capsys.readouterr().out


def test_json_field_names():
    rep, code = run(RunConfig(vars=2, ideal="x0*x1"))
    d = json.loads(report.to_json(rep))
    block = d["ideals"][0]
    assert {"n", "ideal", "modules"} <= set(block)
    assert {"chambers", "koszul", "derham", "chi_koszul", "chi_derham", "main_theorem",
            "localized", "oracle"} <= set(block["modules"][0])
    assert block["modules"][1]["chambers"] == {"0": 0, "1": 1, "2": 1, "3": 1}


def test_json_roundtrip():
    rep, _ = run(RunConfig(vars=3, corpus=True, oracle=3))
    assert report.from_json(report.to_json(rep)) == rep


def test_summary_matches_blocks():
    rep, _ = run(RunConfig(vars=3, corpus=True))
    again = report.summarize(rep.ideals)
    assert again == rep.summary


def test_csv_schema():
    rep, _ = run(RunConfig(vars=2, ideal="x0*x1", format="csv"))
    rows = list(csv.reader(io.StringIO(report.to_csv(rep))))
    assert rows[0] == report.CSV_COLUMNS
    body = [r for r in rows[1:] if r[2] == "1" and r[3] == "derham"]
    assert [(r[4], r[5], r[6]) for r in body] == [("0", "1", "-2"), ("1", "2", "-1"), ("2", "0", "0")]


def test_localization_mode(capsys):
    assert main(["--vars", "2", "--localization", "0", "--oracle", "4", "--field", "1000003"]) == 0
    out = capsys.readouterr().out
    assert "x0:PASS" in out and "oracle PASS" in out and "F_p PASS" in out


def test_input_errors(capsys):
    assert main(["--vars", "2", "--ideal", "x5"]) == 2
    assert main(["--vars", "2", "--ideal", "x0^2", "--strict"]) == 2
    assert main(["--vars", "2", "--ideal", "1"]) == 2
    assert main(["--vars", "4", "--ideal", "x0", "--oracle", "4"]) == 2
    assert main(["--vars", "2", "--ideal", "x0", "--corpus"]) == 2
    assert main(["--vars", "2", "--ideal", "x0", "--module", "3"]) == 2
    with pytest.raises(SystemExit) as e:
        main(["--vars", "2", "--ideal", "x0", "--field", "4"])
    assert e.value.code == 2


def test_validate_requires_one_source():
    with pytest.raises(ParseError):
        RunConfig(vars=2).validate()


def test_ideal_file_and_output(tmp_path, capsys):
    src = tmp_path / "ideals.txt"
    src.write_text("# triangle and friends\nx0*x1,x1*x2,x0*x2\n\nx0^2,x1\n")
    out = tmp_path / "r.csv"
    assert main(["--vars", "3", "--ideal-file", str(src), "--format", "csv", "--output", str(out)]) == 0
    assert capsys.readouterr().out.strip() == "VERIFIED 2/2"
    assert out.read_text().startswith(",".join(report.CSV_COLUMNS))


def test_radicalized_note():
    rep, _ = run(RunConfig(vars=2, ideal="x0^2*x1"))
    assert rep.ideals[0].radicalized and rep.ideals[0].ideal == "x0*x1"


def test_fail_gives_exit_one(monkeypatch, capsys):
    from lcderham import homology
    real = homology.verify_main_theorem

    def broken(M, table=None):
        c = real(M, table)
        return homology.TheoremCheck(homology.FAIL, c.chi_koszul, c.chi_derham, c.n)

    monkeypatch.setattr(report, "verify_main_theorem", broken)
    assert main(["--vars", "2", "--ideal", "x0"]) == 1
    assert "VERIFIED 0/1" in capsys.readouterr().out


def test_single_module_selector():
    rep, _ = run(RunConfig(vars=2, ideal="x0,x1", modules=2))
    assert [m.j for m in rep.ideals[0].modules] == [2]
    assert rep.ideals[0].additivity is None


def test_worker_pool_preserves_order(monkeypatch):
    serial, _ = run(RunConfig(vars=3, corpus=True))
    monkeypatch.setenv("LCDR_WORKERS", "3")
    pooled, _ = run(RunConfig(vars=3, corpus=True))
    assert report.to_json(serial) == report.to_json(pooled)


def test_console_entry_point(tmp_path):
    out = subprocess.run([sys.executable, "-m", "lcderham", "--vars", "2", "--ideal", "x0*x1"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout.strip().splitlines()[-1] == "VERIFIED 1/1"
