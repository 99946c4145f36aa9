import sys

import hypothesis

hypothesis.settings.register_profile(
    "det", derandomize=True, deadline=None, max_examples=150
)
hypothesis.settings.load_profile("det")


def pytest_terminal_summary(terminalreporter, exitstatus):
    # one line per acceptance criterion, collected by test_acceptance
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
