"""Suite runner, report serialization, and the command-line interface."""

import json
import subprocess
import sys

import pytest

from csym.report import (
    CheckResult,
    RunConfig,
    VerificationReport,
    emit,
    report_to_dict,
    run,
)

KNOWN_FAILING = {"photon.gamma5-product"}


@pytest.fixture(scope="module")
def full_report():
    return run(RunConfig(samples=20))


class TestRunConfig:
    def test_defaults(self):
        cfg = RunConfig()
        assert cfg.selected_suites() == ("group", "maxwell", "photon", "electron", "kinematics")
        assert cfg.samples == 100 and cfg.seed == 0
        assert cfg.tolerance == 1e-12 and cfg.lam == "-i" and cfg.potential_rule == "both"

    def test_unknown_suite_named(self):
        with pytest.raises(ValueError, match="unknown suite 'plasma'"):
            RunConfig(suites=("plasma",))

    def test_bad_fields_named(self):
        with pytest.raises(ValueError, match="samples"):
            RunConfig(samples=0)
        with pytest.raises(ValueError, match="tolerance"):
            RunConfig(tolerance=-1.0)
        with pytest.raises(ValueError, match="lambda"):
            RunConfig(lam="2i")
        with pytest.raises(ValueError, match="potential_rule"):
            RunConfig(potential_rule="spiral")


class TestRunner:
    def test_suite_filtering(self):
        report = run(RunConfig(suites=("group",), samples=5))
        assert report.total > 0
        assert {c.suite for c in report.checks} == {"group"}
        assert report.all_passed

    def test_full_run_statuses(self, full_report):
        failing = {c.id for c in full_report.checks if c.status == "fail"}
        assert failing == KNOWN_FAILING
        assert full_report.failed == len(KNOWN_FAILING)

    def test_checks_sorted_by_id(self, full_report):
        ids = [c.id for c in full_report.checks]
        assert ids == sorted(ids)
        assert len(ids) == len(set(ids))

    def test_failing_checks_carry_details(self, full_report):
        for c in full_report.checks:
            if c.status == "fail":
                assert c.details

    def test_every_check_carries_reference(self, full_report):
        assert all(c.reference for c in full_report.checks)

    def test_deterministic(self):
        cfg = RunConfig(suites=("kinematics",), samples=10, seed=3)
        assert report_to_dict(run(cfg)) == report_to_dict(run(cfg))

    def test_corrupted_gamma_injection(self):
        report = run(RunConfig(suites=("photon",), samples=5), corrupt_gamma8=("g1", 0, 1))
        by_id = {c.id: c for c in report.checks}
        bad = by_id["photon.gamma-defining-identities"]
        assert bad.status == "fail"
        assert "anticommutation" in bad.details or "squared" in bad.details
        assert not report.all_passed


class TestEmit:
    def test_empty_summary(self):
        report = VerificationReport(config=RunConfig(), checks=())
        data = json.loads(emit(report, fmt="json"))
        assert data["summary"] == {"total": 0, "passed": 0, "failed": 0}

    def test_mixed_summary(self):
        checks = (
            CheckResult("a.x", "a", "first", "ref", "pass", None),
            CheckResult("a.y", "a", "second", "ref", "fail", "boom"),
        )
        report = VerificationReport(config=RunConfig(), checks=checks)
        data = json.loads(emit(report, fmt="json"))
        assert data["summary"] == {"total": 2, "passed": 1, "failed": 1}

    def test_fail_requires_details(self):
        with pytest.raises(ValueError, match="details"):
            CheckResult("a.x", "a", "first", "ref", "fail", None)

    def test_json_schema_shape(self, full_report):
        data = json.loads(emit(full_report, fmt="json"))
        assert set(data) == {"version", "config", "checks", "summary"}
        assert set(data["config"]) == {
            "suites", "samples", "seed", "tolerance", "lambda", "potential_rule",
        }
        for c in data["checks"]:
            assert set(c) == {"id", "suite", "description", "reference", "status", "details"}
            assert c["status"] in ("pass", "fail")

    def test_json_byte_stable(self):
        cfg = RunConfig(suites=("group", "kinematics"), samples=7, seed=11)
        assert emit(run(cfg), fmt="json") == emit(run(cfg), fmt="json")

    def test_text_byte_stable(self):
        cfg = RunConfig(suites=("kinematics",), samples=7, seed=11)
        assert emit(run(cfg), fmt="text") == emit(run(cfg), fmt="text")

    def test_unwritable_path(self, full_report):
        with pytest.raises(OSError):
            emit(full_report, fmt="json", path="/nonexistent-dir/report.json")

    def test_text_format(self, full_report):
        text = emit(full_report, fmt="text")
        lines = text.strip().splitlines()
        assert lines[-1].startswith("total ")
        assert sum(1 for ln in lines if ln.startswith(("PASS", "FAIL"))) == full_report.total

    def test_unknown_format(self, full_report):
        with pytest.raises(ValueError, match="format"):
            emit(full_report, fmt="yaml")

    def test_write_to_path(self, tmp_path, full_report):
        out = tmp_path / "report.json"
        emit(full_report, fmt="json", path=str(out))
        assert json.loads(out.read_text())["summary"]["total"] == full_report.total


class TestCli:
    def _run(self, *args):
        return subprocess.run(
            [sys.executable, "-m", "csym.cli", *args],
            capture_output=True,
            text=True,
        )

    def test_group_suite_exits_success(self, tmp_path):
        out = tmp_path / "r.json"
        result = self._run(
            "verify", "--suite", "group", "--samples", "5", "--json", str(out)
        )
        assert result.returncode == 0, result.stderr
        data = json.loads(out.read_text())
        assert data["summary"]["failed"] == 0
        assert {c["suite"] for c in data["checks"]} == {"group"}

    def test_full_run_reports_known_failure(self, tmp_path):
        out = tmp_path / "r.json"
        result = self._run("verify", "--samples", "5", "--quiet", "--json", str(out))
        data = json.loads(out.read_text())
        failing = {c["id"] for c in data["checks"] if c["status"] == "fail"}
        assert failing == KNOWN_FAILING
        assert result.returncode == 1  # exit mirrors the failed check

    def test_flag_validation(self):
        result = self._run("verify", "--suite", "warp")
        assert result.returncode == 2
        assert "invalid choice" in result.stderr

    def test_two_runs_byte_identical(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        for path in (a, b):
            r = self._run(
                "verify", "--suite", "kinematics", "--samples", "5",
                "--seed", "2", "--quiet", "--json", str(path),
            )
            assert r.returncode == 0
        assert a.read_bytes() == b.read_bytes()

    def test_lambda_and_potential_flags(self, tmp_path):
        out = tmp_path / "r.json"
        r = self._run(
            "verify", "--suite", "electron", "--samples", "5",
            "--lambda", "i", "--potential-rule", "fixed", "--quiet", "--json", str(out),
        )
        assert r.returncode == 0, r.stderr
        data = json.loads(out.read_text())
        ids = {c["id"] for c in data["checks"]}
        assert "electron.charged-equation-fixed-potential" in ids
        assert "electron.charged-equation-flipped-potential" not in ids
