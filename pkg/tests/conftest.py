"""Per-criterion pass/fail summary for the acceptance suite.

Tests tagged ``@pytest.mark.criterion(n, "title")`` are grouped by ``n``; a
criterion passes only when every test in its group passes.  Measurements a
test wants shown go through the ``measure`` fixture.
"""

import pytest

_results = {}
_titles = {}
_notes = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion this test checks")


@pytest.fixture
def measure(request):
    mark = request.node.get_closest_marker("criterion")
    key = mark.args[0] if mark else None

    def add(text):
        _notes.setdefault(key, []).append(str(text))

    return add


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    num, title = mark.args[0], mark.args[1]
    _titles[num] = title
    if rep.when == "call" or rep.failed or rep.skipped:
        ok = rep.passed if rep.when == "call" else not (rep.failed or rep.skipped)
        _results[num] = _results.get(num, True) and ok


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(_results):
        tr.write_line(f"{'PASS' if _results[num] else 'FAIL'}  criterion {num:>2}: {_titles[num]}")
        for note in _notes.get(num, []):
            tr.write_line(f"        {note}")
