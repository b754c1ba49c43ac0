def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        title, ok, elapsed, failures = RESULTS[number]
        line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'} {elapsed:6.2f}s  {title}"
        terminalreporter.write_line(line + (f"  {failures}" if failures else ""))
