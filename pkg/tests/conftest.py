import pytest

_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: one acceptance criterion per test")


@pytest.hookimpl(tryfirst=True)
def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or report.failed:
        prev = _results.get(name, "PASS")
        _results[name] = "FAIL" if report.failed or prev == "FAIL" else "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_results):
        number, _, label = name[len("test_criterion_") :].partition("_")
        terminalreporter.write_line(f"{_results[name]}  criterion {int(number):>2}: {label.replace('_', ' ')}")
