import os
import random

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", derandomize=True, max_examples=200,
                          deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("random", derandomize=False, max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=20240607, help="seed for the random-point tests")


@pytest.fixture
def rng(request):
    return random.Random(request.config.getoption("--seed"))


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: minutes-long runs (still part of the default suite)")
