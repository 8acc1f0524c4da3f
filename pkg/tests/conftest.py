import pytest


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: Monte Carlo checks taking more than a few seconds")


@pytest.fixture
def rel():
    def _rel(a, b):
        return abs(a - b) / max(abs(b), 1e-300)

    return _rel
