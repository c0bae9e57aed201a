import math
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from geomlab import EstimatorConfig, catalog, lp_space  # noqa: E402

CATALOG = catalog()


@pytest.fixture(params=sorted(CATALOG), scope="session")
def catalog_space(request):
    return CATALOG[request.param]


@pytest.fixture(scope="session")
def l2():
    return lp_space(2, 2)


@pytest.fixture(scope="session")
def linf():
    return lp_space(math.inf, 2)


@pytest.fixture(scope="session")
def l1():
    return lp_space(1, 2)


@pytest.fixture(scope="session")
def l3():
    return lp_space(3, 2)


@pytest.fixture(scope="session")
def fast_cfg():
    return EstimatorConfig(grid_resolution=64, refine_rounds=2, starts=8, local_iters=60)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.LINES:
        terminalreporter.write_line(line)
