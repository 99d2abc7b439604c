def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion after the run."""
    rows = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if ("test_acceptance" in rep.nodeid
                    and getattr(rep, "when", "call") == "call"):
                name = rep.nodeid.split("::")[-1]
                rows[name] = "PASS" if outcome == "passed" else "FAIL"
    if rows:
        terminalreporter.write_sep("-", "acceptance criteria")
        for name in sorted(rows):
            terminalreporter.write_line(f"{name}: {rows[name]}")
