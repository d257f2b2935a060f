import math

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from ordmix import Exponential, Laplace, TransformedDistribution, Uniform, Weibull

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

LN2 = math.log(2.0)

BASELINES = [Exponential(1.0), Exponential(2.5), Laplace(1.0), Laplace(0.3),
             Weibull(2.0, 1.0), Weibull(0.5, 1.0), Uniform(-1.0, 3.0)]


@pytest.fixture
def exp1():
    return Exponential(1.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


def transformed(base, lam):
    return TransformedDistribution(base, lam)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance as acc

    if not acc.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(acc.RESULTS):
        terminalreporter.write_line(acc.summary_line(number, acc.RESULTS[number]))
