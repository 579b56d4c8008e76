"""Drive the verification harness from Python and inspect a report.

The same harness is exposed as a CLI:

    heisenrep --suite transforms
    heisenrep --out reports --emit-csv            # all ten suites
    heisenrep --config my.json --tolerance pv-lorentzian=0.02

Run with:  python3 demos/07_verification_harness.py
"""

from heisenrep.runner import report_json, run_suite
from heisenrep.suites import SUITE_IDS, SuiteConfig

print("available suites:", ", ".join(SUITE_IDS))

report = run_suite(SuiteConfig(suite="transforms", seed=0))
print("\nreport for the 'transforms' suite (deterministic JSON):\n")
print(report_json(report))

print("summary:")
for check in report["checks"]:
    flag = "PASS" if check["pass"] else "FAIL"
    print(f"  [{flag}] {check['check']}: measured {check['measured']:.3e} "
          f"vs threshold {check['threshold']:.3e}")
print(f"overall: {'PASS' if report['overall_pass'] else 'FAIL'}")
