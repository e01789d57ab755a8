import json

import pytest

import birack.verify as verify_module
from birack import loads
from birack.cli import main
from birack.verify import GOLDEN_CELLS


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_pass(capsys):
    code, out, _ = run(capsys, "check", "--builtin", "R5_40", "--theory", "classical")
    assert code == 0
    assert "pass  fully_formed(s)" in out
    assert "dominance(s,s,s)" in out


def test_check_biquandle_fail(capsys):
    code, out, _ = run(capsys, "check", "--builtin", "R5_40", "--biquandle")
    assert code == 2
    assert "FAIL  biquandle(s)" in out
    assert "x=1" in out


def test_check_essential(capsys):
    code, out, _ = run(capsys, "check", "--builtin", "R6_114",
                       "--theory", "classical", "--essential")
    assert code == 0


def test_check_malformed_file(tmp_path, capsys):
    path = tmp_path / "bad.birack"
    path.write_text("size: 3\nU(s) = ((1 2), (1 2), (1 2 9))\nD(s) = id\n")
    code, _, err = run(capsys, "check", "--file", str(path))
    assert code == 1
    assert "line 2" in err


def test_check_missing_source(capsys):
    code, _, err = run(capsys, "check", "--theory", "classical")
    assert code == 1
    assert "birack source" in err


def test_poly_examples(capsys):
    code, out, _ = run(capsys, "poly", "--braid", "s1 s1 s1", "--builtin", "R5_40")
    assert code == 0 and out.strip() == "9t + 11"
    code, out, _ = run(capsys, "poly", "--braid-macro", "fig8",
                       "--builtin", "BR6_125", "--refined")
    assert code == 0 and out.strip() == "3t^2 + 3t + (3s^2+3)"
    code, out, _ = run(capsys, "poly", "--braid-macro", "bigelow2", "--builtin", "R5_40")
    assert code == 0 and out.strip() == "3567t + 7273"


def test_poly_oracle_flag(capsys):
    code, out, _ = run(capsys, "poly", "--braid", "s1 -s2 s1 -s2",
                       "--builtin", "R6_114", "--oracle")
    assert code == 0 and out.strip() == "16t + 18"


def test_poly_json_round_trip(capsys):
    code, out, _ = run(capsys, "poly", "--braid-macro", "trefoil",
                       "--builtin", "R5_40", "--refined", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["polynomial"] == "(6s^2+3)t + (6s^2+2s+3)"
    assert payload["period"] == 2
    assert payload["writhe"] == 3
    assert payload["coefficients"] == [11, 9]
    assert payload["refined"] == [[[1, 3], [2, 2], [3, 6]], [[1, 3], [3, 6]]]
    assert json.loads(json.dumps(payload)) == payload


def test_poly_budget_refusal(capsys):
    code, _, err = run(capsys, "poly", "--braid-macro", "bigelow2",
                       "--builtin", "R5_40", "--budget", "1000")
    assert code == 3
    assert "budget" in err


def test_poly_worker_determinism(capsys):
    results = []
    for workers in ("1", "3"):
        code, out, _ = run(capsys, "poly", "--braid-macro", "bigelow1",
                           "--builtin", "R5_40", "--refined", "--workers", workers)
        assert code == 0
        results.append(out)
    assert results[0] == results[1]


def test_poly_bad_braid(capsys):
    code, _, err = run(capsys, "poly", "--braid", "s1 xx", "--builtin", "R5_40")
    assert code == 1 and "position" in err


def test_verify_all_cells(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert f"{len(GOLDEN_CELLS)}/{len(GOLDEN_CELLS)} cells pass" in out


def test_verify_tampered_golden(monkeypatch, capsys):
    tampered = list(GOLDEN_CELLS)
    label = tampered[3]
    tampered[3] = label[:4] + ("999t + 999",)
    monkeypatch.setattr(verify_module, "GOLDEN_CELLS", tuple(tampered))
    code, out, _ = run(capsys, "verify")
    assert code == 2
    assert "FAIL" in out and "expected '999t + 999'" in out and "got '9t + 11'" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert len(payload["cells"]) == len(GOLDEN_CELLS)
    assert all(cell["ok"] for cell in payload["cells"])


def test_enumerate_to_file(tmp_path, capsys):
    out_path = tmp_path / "census.birack"
    code, out, _ = run(capsys, "enumerate", "-n", "2", "--mode", "rack", str(out_path))
    assert code == 0
    assert "2 structures" in out
    assert len(loads(out_path.read_text())) == 2


def test_enumerate_stdout_and_json(capsys):
    code, out, _ = run(capsys, "enumerate", "-n", "1", "--mode", "biquandle")
    assert code == 0 and "1 structures" in out
    code, out, _ = run(capsys, "enumerate", "-n", "2", "--mode", "rack", "--json")
    payload = json.loads(out)
    assert payload["count"] == 2
    assert len(loads(payload["structures"])) == 2


def test_info_reports_period(capsys):
    code, out, _ = run(capsys, "info", "--builtin", "R5_40")
    assert code == 0
    assert "period k = 2" in out
    assert "biquandle no" in out
    code, out, _ = run(capsys, "info", "--builtin", "BR6_125", "--json")
    payload = json.loads(out)
    assert payload["components"]["s"]["period"] == 3
    assert [1, 2, 5] in payload["sub_biracks"]


def test_usage_errors_exit_one(capsys):
    code, _, err = run(capsys, "poly", "--builtin", "R5_40", "--braid", "s1",
                       "--braid-macro", "trefoil")
    assert code == 1
    code, _, err = run(capsys, "nonsense-command")
    assert code == 1
    code, _, err = run(capsys, "poly", "--builtin", "R5_40", "--braid", "s1",
                       "--no-such-flag")
    assert code == 1


def test_workers_env_override(monkeypatch, capsys):
    monkeypatch.setenv("BIRACK_WORKERS", "2")
    code, out, _ = run(capsys, "poly", "--braid-macro", "trefoil", "--builtin", "R5_40")
    assert code == 0 and out.strip() == "9t + 11"
    monkeypatch.setenv("BIRACK_WORKERS", "zero")
    code, _, err = run(capsys, "poly", "--braid-macro", "trefoil", "--builtin", "R5_40")
    assert code == 1 and "BIRACK_WORKERS" in err
