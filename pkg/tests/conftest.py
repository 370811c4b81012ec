import os
import sys
import tempfile
from pathlib import Path

# Settings are read at import time; point them at a scratch directory first.
os.environ["MIXEDBRAID_CONFIG_DIR"] = tempfile.mkdtemp(prefix="mixedbraid-tests-")
for _name in ("MIXEDBRAID_WORKERS", "MIXEDBRAID_LOG_LEVEL", "MIXEDBRAID_UNICODE", "MIXEDBRAID_JSON"):
    os.environ.pop(_name, None)

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

import pytest  # noqa: E402
from hypothesis import HealthCheck, settings  # noqa: E402

from services.mixed_braid import MixedContext  # noqa: E402

settings.register_profile(
    "mixedbraid",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
    derandomize=True,
)
settings.load_profile("mixedbraid")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full acceptance sweeps (deselect with -m 'not slow')")


@pytest.fixture
def ctx22() -> MixedContext:
    return MixedContext(2, 2)


@pytest.fixture
def ctx12() -> MixedContext:
    return MixedContext(1, 2)
