"""Batch harness: run suites, assemble reports, write JSON/CSV artifacts.

Reports are deterministic for a fixed config: keys are sorted, floats keep
their shortest round-trip representation, and nothing environment-dependent
(timestamps, paths, host data) is recorded.  Running the same config twice
yields byte-identical files.
"""

from __future__ import annotations

import json
import os

from . import __version__
from .suites import SUITE_IDS, SUITES, Recorder, SuiteConfig


def build_report(config: SuiteConfig, recorder: Recorder) -> dict:
    return {
        "suite": config.suite,
        "environment": {
            "half_width": config.half_width,
            "size": config.size,
            "seed": config.seed,
            "max_moment": config.max_moment,
            "epsilon": config.epsilon,
            "tolerances": dict(sorted(config.tolerances.items())),
            "version": __version__,
        },
        "checks": recorder.checks,
        "overall_pass": all(c["pass"] for c in recorder.checks),
    }


def run_suite(config: SuiteConfig) -> dict:
    recorder = Recorder(config)
    SUITES[config.suite](config, recorder)
    report = build_report(config, recorder)
    if config.out:
        write_report(report, config.out)
        if config.emit_csv:
            write_curves(config.suite, recorder.curves, config.out)
    return report


def run_all(base_config: SuiteConfig) -> list[dict]:
    """Run every suite with the shared settings of base_config, in the
    canonical order (sequentially, so artifact bytes never depend on
    scheduling)."""
    reports = []
    for suite_id in SUITE_IDS:
        cfg = SuiteConfig(
            suite=suite_id,
            half_width=base_config.half_width,
            size=base_config.size,
            seed=base_config.seed,
            max_moment=base_config.max_moment,
            epsilon=base_config.epsilon,
            tolerances=base_config.tolerances,
            out=base_config.out,
            emit_csv=base_config.emit_csv,
        )
        reports.append(run_suite(cfg))
    return reports


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def write_report(report: dict, out_dir: str) -> str:
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, f"{report['suite']}.json")
    with open(path, "w") as fh:
        fh.write(report_json(report))
    return path


def write_curves(suite_id: str, curves: dict, out_dir: str) -> list[str]:
    os.makedirs(out_dir, exist_ok=True)
    paths = []
    for name, rows in sorted(curves.items()):
        path = os.path.join(out_dir, f"{suite_id}_{name}.csv")
        with open(path, "w") as fh:
            fh.write("parameter,value\n")
            for a, b in rows:
                fh.write(f"{a!r},{b!r}\n")
        paths.append(path)
    return paths


def summarize(reports: list[dict]) -> str:
    lines = []
    for rep in reports:
        for c in rep["checks"]:
            status = "PASS" if c["pass"] else "FAIL"
            lines.append(
                f"[{status}] {rep['suite']}/{c['check']}: "
                f"measured={c['measured']:.6g} threshold={c['threshold']:.6g}"
            )
        overall = "PASS" if rep["overall_pass"] else "FAIL"
        lines.append(f"[{overall}] {rep['suite']} overall")
    return "\n".join(lines)
