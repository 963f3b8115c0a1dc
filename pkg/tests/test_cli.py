"""Command line: flags, suite configs, report shape and exit codes."""
import json
import subprocess
import sys

import pytest

from qflag.cli import SCHEMA, ConfigError, main, run_suite, validate_job


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def strip_times(x):
    if isinstance(x, dict):
        return {k: strip_times(v) for k, v in x.items() if k != "seconds"}
    if isinstance(x, list):
        return [strip_times(v) for v in x]
    return x


def test_verify_covering_a1(capsys):
    code, out, _ = run(capsys, "verify", "covering", "--type", "A1", "--ell", "3", "--mu", "1", "--grid", "8")
    report = json.loads(out)
    assert code == 0 and report["schema"] == SCHEMA
    [rec] = report["results"]
    assert rec["passed"] and rec["data"]["thresholds"] == [[0]]
    assert len(rec["data"]["runs"]) == 9
    assert all(r["covered"] == (r["total"] == r["target"]) for r in rec["data"]["runs"])


def test_verify_covering_generic(capsys):
    code, out, _ = run(capsys, "verify", "covering", "--type", "A1", "--ell", "generic", "--mu", "2",
                       "--grid", "3")
    rec = json.loads(out)["results"][0]
    assert code == 0 and rec["job"]["ell"] == "generic" and rec["data"]["mode"] == "generic"


def test_verify_braid_a2_generic(capsys):
    code, out, _ = run(capsys, "verify", "braid", "--type", "A2", "--ell", "generic", "--grid", "1")
    summary = json.loads(out)["summary"]
    assert code == 0 and (summary["passed"], summary["failed"]) == (1, 0)


def test_text_format(capsys):
    code, out, _ = run(capsys, "verify", "sigma", "--type", "A1", "--lambda", "1", "--mu", "2",
                       "--format", "text")
    assert code == 0
    assert out.splitlines()[0].startswith("PASS sigma A1 generic")
    assert out.splitlines()[-1] == "1/1 jobs passed"


def test_failing_job_exit_code(capsys, tmp_path):
    cfg = tmp_path / "suite.json"
    # a pinned grid point below the threshold turns a finding into a failure
    cfg.write_text(json.dumps({"jobs": [{"check": "covering", "type": "A1", "ell": 1, "mu": 3, "grid": 4,
                                         "expect_covered": [[0]]}]}))
    code, out, _ = run(capsys, "suite", "--config", str(cfg))
    report = json.loads(out)
    assert code == 1 and report["summary"]["failed"] == 1
    assert report["results"][0]["failures"]


def test_empty_suite(capsys, tmp_path):
    cfg = tmp_path / "empty.json"
    cfg.write_text(json.dumps({"jobs": []}))
    code, out, _ = run(capsys, "suite", "--config", str(cfg))
    report = json.loads(out)
    assert code == 0 and report["results"] == []
    assert report["summary"]["jobs"] == 0


def test_suite_out_file_and_determinism(capsys, tmp_path):
    cfg = tmp_path / "suite.json"
    jobs = [{"check": "arithmetic", "seed": 3},
            {"check": "covering", "type": "A1", "ell": 2, "mu": [1], "grid": 3},
            {"check": "frobenius", "type": "A1", "ell": 3, "lambda": [3]},
            {"check": "pm1", "type": "A2", "ell": 2, "j_override": [0, 1]}]
    cfg.write_text(json.dumps({"jobs": jobs}))
    reports = []
    for k, workers in enumerate(("1", "2")):
        out = tmp_path / f"r{k}.json"
        assert main(["suite", "--config", str(cfg), "--out", str(out), "--jobs", workers]) == 0
        reports.append(json.loads(out.read_text()))
    assert capsys.readouterr().out == ""
    assert strip_times(reports[0]) == strip_times(reports[1])
    assert [r["job"]["check"] for r in reports[0]["results"]] == [j["check"] for j in jobs]
    assert list(reports[0]) == ["schema", "tool", "version", "config", "results", "summary"]


@pytest.mark.parametrize("argv", [
    ["verify", "pm1", "--type", "A2", "--ell", "3"],
    ["verify", "braid", "--type", "A2", "--j-override", "1,1"],
    ["verify", "covering", "--type", "A2"],
    ["verify", "covering", "--type", "A2", "--mu", "1,-1"],
    ["verify", "frobenius", "--type", "A1", "--ell", "3", "--lambda", "2"],
    ["verify", "covering", "--type", "A1", "--ell", "zero", "--mu", "1"],
])
def test_invalid_input_exits_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("qflag: error:")


@pytest.mark.parametrize("argv", [["verify", "nonsense"], ["verify", "braid", "--type", "G2"],
                                  ["verify", "braid", "--colour", "red"], []])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_bad_config(capsys, tmp_path):
    cfg = tmp_path / "bad.json"
    cfg.write_text("{not json")
    assert run(capsys, "suite", "--config", str(cfg))[0] == 2
    cfg.write_text(json.dumps({"jobs": [{"check": "braid", "type": "A2", "colour": 1}]}))
    assert run(capsys, "suite", "--config", str(cfg))[0] == 2
    assert run(capsys, "suite", "--config", str(tmp_path / "missing.json"))[0] == 2


def test_validate_job_defaults():
    assert validate_job({"check": "covering", "type": "B2", "mu": "0,1"}) == {
        "check": "covering", "type": "B2", "ell": "generic", "mu": [0, 1], "grid": 4}
    with pytest.raises(ConfigError):
        validate_job({"check": "sharp-surjectivity", "type": "B2", "ell": 4, "mu": [1, 1]})


def test_run_suite_records():
    report = run_suite([{"check": "w-mult", "type": "A1", "lambda": [1], "mu": [1]}])
    rec = report["results"][0]
    assert rec["passed"] and set(rec) == {"job", "name", "passed", "checks", "failures", "data", "seconds"}


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "qflag", "verify", "relations", "--type", "A1",
                           "--ell", "2", "--format", "text"], capture_output=True, text=True)
    assert proc.returncode == 0 and "1/1 jobs passed" in proc.stdout
