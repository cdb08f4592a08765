import json
import subprocess
import sys

import pytest

from hilbk3 import cli, report
from hilbk3.report import Config, Entry, VerificationReport, check, factored


def test_factored():
    assert factored(-(2**8) * 5**4) == {"value": str(-(2**8) * 5**4), "sign": -1, "factors": [[2, 8], [5, 4]]}
    assert factored(1)["factors"] == []
    assert factored(0)["sign"] == 0


def test_check_status():
    assert check("x", "loc", "s", 1, 1).status == "pass"
    assert check("x", "loc", "s", 1, 2).status == "fail"
    with pytest.raises(ValueError):
        Entry("x", "loc", "s", "maybe", 0, 0, "PAPER")


def test_exit_codes():
    cfg = Config()
    ok = VerificationReport(cfg, ["x"], [report.note("a", "l", "s", 1, 2), check("b", "l", "s", 1, 1)])
    assert ok.exit_code() == 0
    bad = VerificationReport(cfg, ["x"], [check("b", "l", "s", 1, 2)])
    assert bad.exit_code() == 1


def test_stage_filter_and_schema():
    rep = report.run(["enumerative"], Config())
    doc = json.loads(rep.to_json())
    assert set(doc) >= {"version", "config", "entries"}
    assert doc["config"] == {"scan_bound": 10, "padic_extra_precision": 2, "seed": 0}
    ids = [e["id"] for e in doc["entries"]]
    assert ids and all(i.startswith("enum.") for i in ids)
    for e in doc["entries"]:
        assert set(e) >= {"id", "paper_location", "status", "computed", "expected", "provenance"}
        assert e["status"] in report.STATUSES


def test_deterministic():
    a = report.run(["curve", "integral"], Config(scan_bound=4)).to_json()
    b = report.run(["curve", "integral"], Config(scan_bound=4)).to_json()
    assert a == b


def test_config_validation():
    with pytest.raises(ValueError):
        Config(scan_bound=0).validate()
    with pytest.raises(ValueError):
        Config(padic_extra_precision=-1).validate()


def test_cli_markdown(capsys):
    assert cli.main(["eliminate"]) == 0
    out = capsys.readouterr().out
    assert "eliminate.published" in out
    assert "audit-note" in out


def test_cli_json_out(tmp_path):
    target = tmp_path / "r.json"
    assert cli.main(["curve", "--format", "json", "--out", str(target)]) == 0
    doc = json.loads(target.read_text())
    assert all(e["status"] == "pass" for e in doc["entries"])


def test_cli_usage_errors():
    for argv in ([], ["bogus"], ["curve", "--scan-bound", "50"], ["curve", "--format", "xml"]):
        with pytest.raises(SystemExit) as exc:
            cli.main(argv)
        assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hilbk3", "enumerative", "--format", "json"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["entries"]
