import pytest

_RESULTS = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title, limit): acceptance criterion with a time limit in seconds")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when != "call" and not report.failed:
        return
    number, title, limit = mark.args
    entry = _RESULTS.setdefault(number, {"title": title, "limit": limit, "ok": True, "seconds": 0.0})
    entry["ok"] = entry["ok"] and report.passed
    if report.when == "call":
        entry["seconds"] += report.duration


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        e = _RESULTS[number]
        status = "PASS" if e["ok"] else "FAIL"
        terminalreporter.write_line(
            f"{status}  criterion {number}: {e['title']}  ({e['seconds']:.2f} s, limit {e['limit']} s)"
        )
