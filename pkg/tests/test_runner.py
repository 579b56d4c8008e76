import json

import pytest

from heisenrep.cli import main
from heisenrep.errors import ConfigurationError
from heisenrep.runner import report_json, run_suite
from heisenrep.suites import SUITE_IDS, SuiteConfig


def test_suite_config_validation():
    with pytest.raises(ConfigurationError):
        SuiteConfig(suite="nope")
    with pytest.raises(ConfigurationError):
        SuiteConfig(suite="norms", tolerances={"seminorm-0": -1.0})


def test_report_schema_and_determinism():
    cfg = SuiteConfig(suite="group-axioms", seed=3)
    rep1 = run_suite(cfg)
    rep2 = run_suite(SuiteConfig(suite="group-axioms", seed=3))
    assert report_json(rep1) == report_json(rep2)
    assert rep1["suite"] == "group-axioms"
    assert set(rep1["environment"]) == {"half_width", "size", "seed", "max_moment",
                                        "epsilon", "tolerances", "version"}
    for check in rep1["checks"]:
        assert set(check) == {"check", "description", "claim", "measured",
                              "threshold", "pass"}
        assert check["claim"]  # nonempty anchor
    assert rep1["overall_pass"] == all(c["pass"] for c in rep1["checks"])


def test_seed_changes_draws_not_conclusions():
    rep_a = run_suite(SuiteConfig(suite="group-axioms", seed=1))
    rep_b = run_suite(SuiteConfig(suite="group-axioms", seed=2))
    assert rep_a["overall_pass"] and rep_b["overall_pass"]
    assert report_json(rep_a) != report_json(rep_b)


def test_tolerance_override_applies():
    rep = run_suite(SuiteConfig(suite="transforms",
                                tolerances={"pv-lorentzian": 1e-9}))
    failing = [c for c in rep["checks"] if c["check"] == "pv-lorentzian"]
    assert failing and not failing[0]["pass"]
    assert not rep["overall_pass"]


def test_cli_single_suite_pass(tmp_path, capsys):
    out = tmp_path / "reports"
    code = main(["--suite", "norms", "--out", str(out), "--emit-csv"])
    assert code == 0
    report = json.loads((out / "norms.json").read_text())
    assert report["overall_pass"]
    text = capsys.readouterr().out
    assert "[PASS] norms overall" in text


def test_cli_failing_check_exits_one():
    code = main(["--suite", "transforms", "--tolerance", "pv-lorentzian=1e-9"])
    assert code == 1


def test_cli_config_error_exits_two(capsys):
    assert main(["--tolerance", "nonsense"]) == 2
    assert "configuration error" in capsys.readouterr().err


def test_cli_config_file_and_override(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({
        "suite": "transforms",
        "grid": {"L": 32, "N": 2048},
        "seed": 7,
        "tolerances": {"pv-lorentzian": 0.02},
    }))
    assert main(["--config", str(cfg)]) == 0
    # flag overrides the file: shrink the tolerance so the check fails
    assert main(["--config", str(cfg), "--tolerance", "pv-lorentzian=1e-9"]) == 1
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["--config", str(bad)]) == 2


def test_cli_emit_csv_writes_curves(tmp_path):
    out = tmp_path / "reports"
    assert main(["--suite", "generators", "--out", str(out), "--emit-csv"]) == 0
    csvs = sorted(p.name for p in out.glob("*.csv"))
    assert "generators_convergence_M_n0.csv" in csvs
    first = (out / "generators_convergence_M_n0.csv").read_text().splitlines()
    assert first[0] == "parameter,value"
    assert len(first) > 2


def test_suite_registry_complete():
    assert len(SUITE_IDS) == 10
