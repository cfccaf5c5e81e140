import pytest

from qdeformed import QParams

GRID = [QParams(q, a) for q in (0.3, 0.5, 0.8) for a in (-0.5, 0.0, 0.25) if a < q]


@pytest.fixture(params=GRID, ids=lambda p: f"q{p.q}-a{p.alpha}")
def params(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
