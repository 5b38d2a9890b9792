import logging

import pytest
from hypothesis import HealthCheck, settings

from adders.builders import build_dcta2, build_dcta3, build_sequential
from config.hardware import reset_hardware_model

# autouse fixtures below only reset globals
settings.register_profile(
    "adders",
    deadline=None,
    suppress_health_check=[HealthCheck.function_scoped_fixture],
)
settings.load_profile("adders")


@pytest.fixture(autouse=True)
def fresh_hardware_model():
    reset_hardware_model()
    yield
    reset_hardware_model()


@pytest.fixture(autouse=True)
def restore_root_logger():
    # main() reconfigures the root logger against the captured stderr
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


@pytest.fixture(scope="session")
def sequential_4():
    return build_sequential(4)


@pytest.fixture(scope="session")
def dcta2_8():
    return build_dcta2(8)


@pytest.fixture(scope="session")
def dcta2_16():
    return build_dcta2(16)


@pytest.fixture(scope="session")
def dcta3_16():
    return build_dcta3(16)
