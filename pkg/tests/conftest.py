import pytest

from hexaudit.hexagon import build_cached


@pytest.fixture(scope="session")
def h2():
    return build_cached(2)


@pytest.fixture(scope="session")
def h3():
    return build_cached(3)
