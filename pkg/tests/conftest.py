import pytest

from constants import BUDGET_ENV_VAR
from models.dynkin import QuiverOrientation
from services.root_data import default_orientation, dynkin_diagram


@pytest.fixture(autouse=True)
def no_budget_override(monkeypatch):
    monkeypatch.delenv(BUDGET_ENV_VAR, raising=False)


@pytest.fixture
def a2():
    return default_orientation(dynkin_diagram("A", 2))


@pytest.fixture
def a3():
    return default_orientation(dynkin_diagram("A", 3))


@pytest.fixture
def a3_alternating():
    """1 <- 2 -> 3."""
    return QuiverOrientation(dynkin_diagram("A", 3), ((2, 1), (2, 3)))


@pytest.fixture
def d4():
    return default_orientation(dynkin_diagram("D", 4))


@pytest.fixture
def e6():
    return default_orientation(dynkin_diagram("E", 6))
