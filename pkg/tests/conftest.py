import os
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

# keep test runs from writing logs/edds.log
os.environ.setdefault("EDDS_LOG_DIR", "")


@pytest.fixture(autouse=True)
def _quiet_logging(monkeypatch):
    import edds.logging_utils

    monkeypatch.setattr(edds.logging_utils, "_CONFIGURED", True)


@pytest.fixture
def fresh_settings():
    from edds.config import get_settings

    get_settings.cache_clear()
    yield get_settings
    get_settings.cache_clear()
