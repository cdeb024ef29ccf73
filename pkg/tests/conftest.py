import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter):
    """One pass/fail line per acceptance criterion."""
    reports = []
    for key in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            if "test_acceptance.py" in getattr(rep, "nodeid", "") and rep.when == "call":
                reports.append((rep.nodeid.split("::")[-1], rep.outcome))
            elif "test_acceptance.py" in getattr(rep, "nodeid", "") and rep.failed:
                reports.append((rep.nodeid.split("::")[-1], "error"))
    if not reports:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(reports):
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
