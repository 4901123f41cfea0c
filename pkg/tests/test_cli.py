import json

import pytest

from cyclocode.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cosets_json(capsys):
    code, out, _ = run_cli(capsys, "cosets", "--q", "3", "--m", "3",
                           "--lambda", "2", "--format", "json")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 13
    assert rows[0]["leader"] == 0 and rows[0]["size"] == 1


def test_leaders_csv_header(capsys):
    code, out, _ = run_cli(capsys, "leaders", "--q", "5", "--m", "2",
                           "--lambda", "2", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("gamma,")
    assert len(lines) == 17  # header + 16 leaders


def test_leaders_statement_variant_single_gamma(capsys):
    code, out, _ = run_cli(capsys, "leaders", "--q", "5", "--m", "2",
                           "--lambda", "2", "--e-variant", "statement",
                           "--gamma", "11")
    assert code == 0
    row = json.loads(out.splitlines()[0])
    # brute says non-leader; the printed exclusion list misses it
    assert row["is_leader_brute"] is False
    assert row["is_leader_closed"] is True


def test_delta_agrees(capsys):
    code, out, _ = run_cli(capsys, "delta", "--q", "3", "--m", "3",
                           "--lambda", "2")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert {r["quantity"]: r["closed_form"] for r in rows} == \
        {"delta1": 35, "delta2": 29}


def test_delta_rejects_even_m(capsys):
    code, _, err = run_cli(capsys, "delta", "--q", "5", "--m", "2",
                           "--lambda", "2")
    assert code == 2


def test_spectrum(capsys):
    code, out, _ = run_cli(capsys, "spectrum", "--q", "3", "--m", "3",
                           "--lambda", "2")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert all(r["agree"] for r in rows)


def test_bch_with_distance(capsys):
    code, out, _ = run_cli(capsys, "bch", "--q", "3", "--m", "3",
                           "--lambda", "2", "--delta", "4",
                           "--min-distance-budget", "1000000")
    assert code == 0
    rec = json.loads(out)
    assert rec["dimension"] == 43
    assert rec["bose_distance"] == 5


def test_dually_bch(capsys):
    code, out, _ = run_cli(capsys, "dually-bch", "--q", "3", "--m", "3",
                           "--lambda", "2", "--delta", "31")
    assert code == 0
    rec = json.loads(out)
    assert rec["dually_bch_bruteforce"] is True and rec["agree"] is True


def test_lcd_count(capsys):
    code, out, _ = run_cli(capsys, "lcd-count", "--q", "3", "--m", "3",
                           "--lambda", "2")
    assert code == 0
    rec = json.loads(out)
    assert rec["count_decimal"] == "1023"


def test_usage_error_exit_2(capsys):
    code, _, err = run_cli(capsys, "cosets", "--q", "6", "--m", "2",
                           "--lambda", "1")
    assert code == 2
    assert "error" in err


def test_verify_grid_file(tmp_path, capsys):
    cfg = tmp_path / "grid.cfg"
    cfg.write_text("q_values = 3\nm_max = 2\nn_cap = 60\n"
                   "suites = leaders,spectrum,lcd\n")
    code, out, err = run_cli(capsys, "verify", "--grid-file", str(cfg))
    assert code == 0
    for line in out.splitlines():
        rec = json.loads(line)
        assert rec["severity"] in ("theorem_mismatch", "paper_variant_gap", "info")
    assert "No theorem mismatches" in err


def test_verify_rejects_unknown_suite(capsys):
    code, _, err = run_cli(capsys, "verify", "--default-grid",
                           "--suite", "nonsense")
    assert code == 2


def test_conjecture(capsys):
    code, out, _ = run_cli(capsys, "conjecture", "--family", "qp1-qm-minus",
                           "--q", "2", "--m", "3")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    verdicts = {r["check"]: r["witness"]["verdict"] for r in rows}
    assert verdicts == {"conjecture_delta1": "PASS", "conjecture_delta2": "PASS"}


def test_determinism(capsys):
    _, out1, _ = run_cli(capsys, "spectrum", "--q", "5", "--m", "2",
                         "--lambda", "4")
    _, out2, _ = run_cli(capsys, "spectrum", "--q", "5", "--m", "2",
                         "--lambda", "4")
    assert out1 == out2
