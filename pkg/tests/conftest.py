"""Shared test infrastructure: acceptance criteria summary lines."""

ACCEPTANCE_RESULTS: dict = {}


def record_criterion(key, description, status, note=""):
    ACCEPTANCE_RESULTS[key] = (description, status, note)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=str):
        description, status, note = ACCEPTANCE_RESULTS[key]
        line = f"criterion {key} ({description}): {status}"
        if note:
            line += f" -- {note}"
        terminalreporter.write_line(line)
