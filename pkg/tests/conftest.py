import pytest

from binops import PointSet, make_binop

AB = PointSet.from_labels(["a", "b"])

# acceptance criterion number -> (passed, description)
ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def phi1():
    return make_binop(2, [[1, 0], [1, 0]])


@pytest.fixture
def phi2():
    return make_binop(2, [[0, 1], [1, 0]])


@pytest.fixture
def ab():
    return AB


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        passed, desc = ACCEPTANCE_RESULTS[num]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] criterion {num}: {desc}")
