import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

CRITERIA = {
    1: "principal series, generic parameters",
    2: "principal series, cube-root parameters",
    3: "Steinberg St3",
    4: "dihedral twisted by a character (c = 5, 7)",
    5: "tetrahedral/octahedral twisted by a character",
    6: "St2 twisted by a character",
    7: "property suite (>= 200 seeded cases each)",
    8: "brute-force oracle on 50 random 3x3 sets",
    9: "paper subcommand JSON golden at seed 0",
}

_outcomes: dict[int, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if call.when == "call" or call.excinfo is not None:
        _outcomes.setdefault(marker.args[0], []).append(call.excinfo is None)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n, title in CRITERIA.items():
        results = _outcomes.get(n)
        if results is None:
            status = "NOT RUN"
        else:
            status = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(f"criterion {n}: {status} - {title}")
