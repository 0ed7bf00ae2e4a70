import re

_ACCEPTANCE: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    num, name = int(m.group(1)), m.group(2)
    if report.failed:
        _ACCEPTANCE[num] = (name, "FAIL")
    elif report.when == "call" and report.passed:
        _ACCEPTANCE.setdefault(num, (name, "PASS"))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE):
        name, status = _ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num:2d} {name}: {status}")
