import pytest

# Verdict lines are collected here in execution order and replayed after
# the run, because capture hides anything a test writes while it passes.
_verdicts = []


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "verdict(label): print a [PASS]/[FAIL] line for this test"
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    out = yield
    rep = out.get_result()
    mark = item.get_closest_marker("verdict")
    if mark is not None and rep.when == "call":
        _verdicts.append((rep.passed, mark.args[0]))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _verdicts:
        return
    terminalreporter.section("pinned results")
    for passed, label in _verdicts:
        terminalreporter.write_line(("[PASS] " if passed else "[FAIL] ") + label)
