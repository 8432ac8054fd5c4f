import pytest

from perfdamp.comparison import builtin_dataset
from perfdamp.flow_regime import GasProperties


@pytest.fixture(scope="session")
def gas():
    return GasProperties()


@pytest.fixture(scope="session")
def dataset():
    return {rec.id: rec for rec in builtin_dataset()}
