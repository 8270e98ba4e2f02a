import os

import pytest


@pytest.fixture(scope="session", autouse=True)
def _cache_dir(tmp_path_factory):
    # keep structure constant caches out of the working tree
    if "SCHURKIT_CACHE" not in os.environ:
        os.environ["SCHURKIT_CACHE"] = str(tmp_path_factory.mktemp("schurkit-cache"))
    yield


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: larger instances; deselect with -m 'not slow'")
