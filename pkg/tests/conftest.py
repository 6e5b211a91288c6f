"""Prints one pass/fail line per acceptance criterion after every run."""

CRITERIA = {
    "test_criterion_1": "diagnosis fixture exactness",
    "test_criterion_2": "formula-oracle equivalence on 1000 random matrices",
    "test_criterion_3": "binary consistency on 500 random 2x2 matrices",
    "test_criterion_4": "compare weighting algebra and dominance monotonicity",
    "test_criterion_5": "ranking flip under riparian class weights",
    "test_criterion_6": "curve AUC vs pairwise-ranking oracle",
    "test_criterion_7": "benchmark scale partition and monotonicity",
    "test_criterion_8": "CLI round-trip, determinism, and exit codes",
}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    outcomes = {}
    for status in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(status, []):
            name = getattr(report, "nodeid", "").rpartition("::")[2]
            for key in CRITERIA:
                if name.startswith(key):
                    outcomes[key] = status
    if not outcomes:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for i, (key, title) in enumerate(CRITERIA.items(), start=1):
        status = outcomes.get(key)
        if status is None:
            continue
        verdict = "PASS" if status == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {i}: {verdict} - {title}")
