import sys
from pathlib import Path

import pytest

# make the shared oracles importable from any test module
sys.path.insert(0, str(Path(__file__).parent))


def pytest_addoption(parser):
    parser.addoption(
        "--runslow", action="store_true", default=False, help="run slow-tier tests"
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: opt-in long-running verification")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="slow tier; pass --runslow to enable")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)
