import os
import tempfile

import pytest
from hypothesis import HealthCheck, settings

# Keep the on-disk basis cache out of the user's home during tests.
os.environ.setdefault("ARTIFACT_CACHE_DIR", tempfile.mkdtemp(prefix="artifact-cache-"))

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record_criterion():
    def record(line: str) -> None:
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
