import pytest

_TITLES: dict[int, str] = {}
_OUTCOMES: dict[int, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion this test belongs to")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            num, title = mark.args
            _TITLES[num] = title
            item.user_properties.append(("criterion", num))


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    # a test counts once: its call phase, or the setup phase if that failed
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _OUTCOMES.setdefault(props["criterion"], []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _TITLES:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_TITLES):
        runs = _OUTCOMES.get(num, [])
        if not runs:
            status = "NOT RUN"
        else:
            status = "PASS" if all(runs) else "FAIL"
        terminalreporter.write_line(f"criterion {num}: {status} ({sum(runs)}/{len(runs)} tests) {_TITLES[num]}")


@pytest.fixture
def rng():
    import random

    return random.Random(20261018)
