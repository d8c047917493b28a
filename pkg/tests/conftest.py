import pytest

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion a test belongs to")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    name = report.user_properties and dict(report.user_properties).get("criterion")
    if not name:
        return
    ok = report.passed
    _CRITERIA.setdefault(name, []).append((report.nodeid.split("::")[-1], ok))


@pytest.fixture(autouse=True)
def _tag_criterion(request):
    marker = request.node.get_closest_marker("criterion")
    if marker:
        request.node.user_properties.append(("criterion", marker.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name, parts in _CRITERIA.items():
        status = "PASS" if all(ok for _, ok in parts) else "FAIL"
        failed = [test for test, ok in parts if not ok]
        detail = f"  (failing: {', '.join(failed)})" if failed else ""
        terminalreporter.write_line(f"{status}  {name}{detail}")
