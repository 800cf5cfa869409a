import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from zinbiel import catalog  # noqa: E402

rationals = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 7))


def vectors(n):
    return st.tuples(*[rationals] * n)


def matrices(rows, cols):
    return st.tuples(*[vectors(cols)] * rows)


def catalog_instances():
    """Every catalog entry at every sampled admissible binding."""
    return [(id, b) for id in catalog.list_entries() for b in catalog.sample_bindings(id)]


def _ids(val):
    if isinstance(val, dict):
        return ",".join(f"{k}={v}" for k, v in val.items()) or "-"
    return None


INSTANCES = catalog_instances()


@pytest.fixture(params=INSTANCES, ids=[f"{i}[{_ids(b)}]" for i, b in INSTANCES])
def instance(request):
    id, b = request.param
    return catalog.instantiate(id, b)


# acceptance summary lines, filled by test_acceptance.py
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
