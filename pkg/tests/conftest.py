import re
from collections import OrderedDict

import pytest

_criteria: "OrderedDict[int, list]" = OrderedDict()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number n")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    marker = _markers.get(report.nodeid)
    if marker is None:
        return
    n, title = marker
    _criteria.setdefault(n, [title, []])[1].append((report.nodeid, report.outcome))


_markers: dict = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _markers[item.nodeid] = (m.args[0], m.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_criteria):
        title, runs = _criteria[n]
        ok = all(outcome == "passed" for _, outcome in runs)
        tr.write_line(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {title}")
        if len(runs) > 1:
            for nodeid, outcome in runs:
                param = re.search(r"\[(.*)\]$", nodeid)
                tr.write_line(f"               {outcome.upper():6} {param.group(1) if param else nodeid}")


@pytest.fixture
def small_states():
    from focklab.basis import states

    return states(4, (-1, 0, 2))
