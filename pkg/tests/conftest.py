import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from wenobench import Scheme, scheme_config

settings.register_profile(
    "wenobench",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("wenobench")


ALL_SCHEMES = [scheme_config(s) for s in Scheme]


@pytest.fixture(params=ALL_SCHEMES, ids=[s.scheme.cli_name for s in ALL_SCHEMES])
def any_scheme(request):
    return request.param


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)
