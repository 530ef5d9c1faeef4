import pytest

from cauchon.grid import GridShape

SMALL_SHAPES = [GridShape(m, p) for m in range(1, 4) for p in range(1, 4)]


def pytest_terminal_summary(terminalreporter):
    from tests import acceptance_log

    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_log.LINES:
            terminalreporter.write_line(line)


@pytest.fixture(params=SMALL_SHAPES, ids=str)
def small_shape(request):
    return request.param
