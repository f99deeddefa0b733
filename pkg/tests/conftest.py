import time

import pytest
from hypothesis import strategies as st

even_entry = st.integers(min_value=1, max_value=6).map(lambda k: 2 * k) | st.integers(
    min_value=1, max_value=6
).map(lambda k: -2 * k)


def even_vectors(min_size=1, max_size=8):
    return st.lists(even_entry, min_size=min_size, max_size=max_size).map(tuple)


_criteria = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and report.when == "call":
        num, title = marker.args
        _criteria.append((num, title, report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, outcome, duration in sorted(_criteria):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"AC{num} {status} {title} ({duration:.2f}s)")


@pytest.fixture
def stopwatch():
    class Watch:
        def __enter__(self):
            self.start = time.perf_counter()
            return self

        def __exit__(self, *exc):
            self.elapsed = time.perf_counter() - self.start

    return Watch
