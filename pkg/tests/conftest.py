import numpy as np
import pytest

H_VALUES = [-0.5, 0.25, 1.0, 3.0]


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


@pytest.fixture(params=H_VALUES, ids=lambda h: f"h={h}")
def h(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    from tests import test_acceptance
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[n])
