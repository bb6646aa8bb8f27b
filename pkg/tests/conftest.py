import numpy as np
import pytest

from monomial_lab.weights import weight_sequence


def pytest_addoption(parser):
    """Add custom command line options for pytest.

    Args:
        parser: pytest argument parser

    Options:
        --run-optional: Flag to enable the acceptance-scale grids
    """
    parser.addoption("--run-optional", action="store_true", default=False, help="Run optional tests")


def pytest_configure(config):
    config.addinivalue_line("markers", "optional: acceptance-scale test, needs --run-optional")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-optional"):
        return
    skip = pytest.mark.skip(reason="acceptance-scale test (use --run-optional)")
    for item in items:
        if "optional" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def primes():
    """Shared prime weight sequence."""
    return weight_sequence("primes")


@pytest.fixture(params=[0.75, 1.0])
def klog(request):
    """``k (log(k+2))^theta`` sequences for the two thetas used by the envelope checks."""
    return weight_sequence(f"klog:{request.param}")


@pytest.fixture
def rng():
    return np.random.default_rng(42)
