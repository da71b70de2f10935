"""Command-line behavior: formats, outputs, config layering, exit codes."""

import json
import shutil
import subprocess
import sys
from fractions import Fraction

import pytest

from weylops.cli import main


def run_cli(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_verify_text_output(capsys):
    rc, out, _ = run_cli(capsys, "verify", "bender", "--max-n", "6")
    lines = out.strip().splitlines()
    assert rc == 0
    assert len(lines) == 7
    assert all(line.startswith("[PASS ] bender(") for line in lines)


def test_verify_json_output(capsys):
    rc, out, _ = run_cli(capsys, "verify", "bender", "--max-n", "2", "--format", "json")
    assert rc == 0
    records = json.loads(out)
    assert len(records) == 3
    for record in records:
        assert set(record) == {"suite", "params", "status", "witness", "elapsed_ms"}
        assert record["status"] == "pass"


def test_verify_json_keeps_rationals_exact(capsys):
    rc, out, _ = run_cli(capsys, "verify", "sequences", "--max-n", "16", "--format", "json")
    assert rc == 0
    (record,) = json.loads(out)
    assert record["params"]["kappa"][9] == "31/2"
    assert record["params"]["lambda"][4] == "5"


def test_output_goes_to_file(capsys, tmp_path):
    path = tmp_path / "report.json"
    rc, out, _ = run_cli(
        capsys, "verify", "figueira", "--format", "json", "--output", str(path)
    )
    assert rc == 0 and out == ""
    records = json.loads(path.read_text())
    assert len(records) == 4 and all(r["status"] == "pass" for r in records)


def test_tables_text(capsys):
    rc, out, _ = run_cli(capsys, "tables", "--max-n", "6")
    lines = out.strip().splitlines()
    assert rc == 0
    assert lines[0].split() == ["n", "E_n(0)", "B_n", "kappa_n", "lambda_n"]
    assert len(lines) == 8
    assert lines[-1].split() == ["6", "0", "1/42", "0", "-61"]


def test_tables_json(capsys):
    rc, out, _ = run_cli(capsys, "tables", "--max-n", "4", "--format", "json")
    assert rc == 0
    payload = json.loads(out)
    assert payload["N"] == 4
    assert payload["euler_at_zero"] == ["1", "-1/2", "0", "1/4", "0"]
    assert payload["bernoulli"] == ["1", "-1/2", "1/6", "0", "-1/30"]
    assert payload["kappa"] == ["0", "1/2", "0", "-1/4", "0"]
    assert payload["lambda"] == ["1", "0", "-1", "0", "5"]


def test_config_file_supplies_defaults(capsys, tmp_path, monkeypatch):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"max_n": 3}))
    monkeypatch.setenv("WEYLOPS_CONFIG", str(cfg))

    rc, out, _ = run_cli(capsys, "verify", "bender")
    assert rc == 0 and len(out.strip().splitlines()) == 4

    # an explicit flag beats the config value
    rc, out, _ = run_cli(capsys, "verify", "bender", "--max-n", "1")
    assert rc == 0 and len(out.strip().splitlines()) == 2


def test_config_flag_beats_environment(capsys, tmp_path, monkeypatch):
    env_cfg = tmp_path / "env.json"
    env_cfg.write_text(json.dumps({"max_n": 5}))
    flag_cfg = tmp_path / "flag.json"
    flag_cfg.write_text(json.dumps({"max_n": 2, "format": "json"}))
    monkeypatch.setenv("WEYLOPS_CONFIG", str(env_cfg))

    rc, out, _ = run_cli(capsys, "verify", "bender", "--config", str(flag_cfg))
    assert rc == 0
    assert len(json.loads(out)) == 3


@pytest.mark.parametrize(
    "payload",
    [
        '{"max_depth": 3}',  # unknown key
        "{not json",
        "[1, 2, 3]",  # not an object
        '{"max_n": "three"}',
        '{"tol": true}',
        '{"format": "yaml"}',
    ],
)
def test_bad_configs_exit_2(capsys, tmp_path, payload):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(payload)
    rc, out, err = run_cli(capsys, "verify", "bender", "--config", str(cfg))
    assert rc == 2 and out == ""
    assert err.startswith("error:")


def test_missing_config_file_exits_2(capsys, tmp_path):
    rc, _, err = run_cli(capsys, "verify", "bender", "--config", str(tmp_path / "no.json"))
    assert rc == 2 and "cannot read config" in err


def test_failures_exit_1(capsys, monkeypatch):
    import weylops.suites as suites_mod

    monkeypatch.setattr(suites_mod, "euler_zero", lambda k: Fraction(1, 7))
    rc, out, _ = run_cli(capsys, "verify", "pain", "--max-n", "2", "--max-m", "2")
    assert rc == 1
    assert "[FAIL ]" in out


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "no-such-suite"])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "weylops", "tables", "--max-n", "2"],
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert proc.returncode == 0
    assert "kappa_n" in proc.stdout


@pytest.mark.skipif(shutil.which("weylops") is None, reason="script not on PATH")
def test_console_script():
    proc = subprocess.run(
        ["weylops", "verify", "bender", "--max-n", "3"],
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert proc.returncode == 0
    assert proc.stdout.count("[PASS ]") == 4
