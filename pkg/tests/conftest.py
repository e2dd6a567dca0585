import numpy as np
import pytest

from dissipcool import get_preset


@pytest.fixture(scope="session")
def fig2():
    return get_preset("fig2").params


@pytest.fixture(scope="session")
def fig3():
    return get_preset("fig3").params


@pytest.fixture(scope="session")
def fig4a():
    return get_preset("fig4a").params


@pytest.fixture(scope="session")
def fig4b():
    return get_preset("fig4b").params


@pytest.fixture(scope="session")
def fig5():
    return get_preset("fig5").params


@pytest.fixture(scope="session")
def fig6():
    return get_preset("fig6").params


@pytest.fixture
def rng():
    return np.random.default_rng(20260814)


def rel_err(got, want):
    return abs(got - want) / abs(want)
