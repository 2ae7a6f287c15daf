import pytest

from core.config import get_settings
from core.sampling import make_rng
from seqcore.schemas import ExplicitSpec, ExponentialSpec, GeometricSpec, PartialThetaSpec


@pytest.fixture
def ones():
    return GeometricSpec(c=1, beta=1)


@pytest.fixture
def exponential():
    return ExponentialSpec()


@pytest.fixture
def theta4():
    return PartialThetaSpec(a_squared=4)


@pytest.fixture
def bad_explicit():
    """(1, 1, 2): its 2x2 minor rows {0,1}, cols {1,2} is -1."""
    return ExplicitSpec(coeffs=[1, 1, 2])


@pytest.fixture
def rng():
    return make_rng(20240101)


@pytest.fixture(autouse=True)
def _fresh_settings(monkeypatch):
    """Tests never pick up a user's TPV_CONFIG."""
    monkeypatch.delenv("TPV_CONFIG", raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()
