from support import criteria


def pytest_terminal_summary(terminalreporter):
    if not criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, elapsed, note in criteria:
        line = f"{'PASS' if ok else 'FAIL'}  {label}  ({elapsed:.2f}s)"
        if note:
            line += f"  [{note}]"
        terminalreporter.write_line(line)
