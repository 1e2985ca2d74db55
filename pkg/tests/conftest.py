import sys


def pytest_terminal_summary(terminalreporter):
    """Echo the acceptance-gate verdict lines after the run.

    The gate's tests print one pass/fail line per criterion; capture
    normally swallows those on success, so replay them here.
    """
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "VERDICTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
