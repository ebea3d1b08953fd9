"""
Mechanical verification, end to end
===================================

Each pipeline assembles certificate-backed checks: the core needs
exactly n + 1 colors, deleting any core vertex lowers that, no other
induced subgraph is critical, and the chromatic formula holds across a
range of ground sizes.  Re-running this script reproduces the reports
byte for byte.
"""
import sys

from shiftcrit import (
    SearchBudget,
    verify_chromatic_formula,
    verify_core_chromatic,
    verify_criticality,
    verify_uniqueness,
)

budget = SearchBudget(max_seconds=120)
failures = 0

for label, report in [
    ("uniqueness of the core (n=2)", verify_uniqueness(2, budget)),
    ("vertex criticality (n=3)", verify_criticality(3, budget)),
    ("core chromatic number (n=3)", verify_core_chromatic(3, budget)),
    ("chromatic formula (N <= 16)", verify_chromatic_formula(16, budget)),
]:
    passed = sum(1 for c in report.checks if c.status == "pass")
    print(f"{label}: {report.status} ({passed}/{len(report.checks)} checks)")
    for c in report.checks:
        if c.status != "pass":
            print(f"    {c.status}: {c.claim}")
    for entry in report.skipped:
        print(f"    skipped: {entry['claim']}")
    if report.status != "pass":
        failures += 1

sys.exit(1 if failures else 0)
