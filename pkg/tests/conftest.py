import pytest

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(id, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when not in ("setup", "call"):
        return
    key = marker.args[0]
    ok = rep.passed if rep.when == "call" else not rep.failed
    title, failed = _CRITERIA.setdefault(key, (marker.args[1], []))
    if not ok:
        failed.append(item.name)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_CRITERIA):
        title, failed = _CRITERIA[key]
        line = f"{'FAIL' if failed else 'PASS'}  criterion {key}: {title}"
        if failed:
            line += f"  [failing: {', '.join(failed)}]"
        terminalreporter.write_line(line)
