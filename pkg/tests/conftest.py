import numpy as np
import pytest

import projkin as pk


@pytest.fixture
def unit():
    return pk.make_parameters(1.0, 1.0)


@pytest.fixture
def si():
    return pk.make_parameters(1.3e26, 2.99792458e8)


@pytest.fixture
def rng():
    return np.random.default_rng(20261015)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
