import pytest

_OUTCOMES: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number n")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            item.user_properties.append(("criterion", mark.args))


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    n, title = props["criterion"]
    if report.when == "call" or report.outcome != "passed":
        state = "PASS" if report.outcome == "passed" else "FAIL"
        if _OUTCOMES.get(n, ("PASS",))[0] == "PASS":
            _OUTCOMES[n] = (state, f"{title} ({report.duration:.2f} s)")


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_OUTCOMES):
        state, text = _OUTCOMES[n]
        terminalreporter.write_line(f"[{state}] criterion {n}: {text}")


@pytest.fixture
def rng():
    import random

    return random.Random(20240601)
