import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "default", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

FIXTURES = Path(__file__).parent / "fixtures"

# Acceptance outcomes in run order: (criterion label, passed, one-line description).
_ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    doc = (item.function.__doc__ or "").strip().splitlines()
    _ACCEPTANCE[marker.args[0]] = (report.passed, doc[0] if doc else item.name)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_ACCEPTANCE, key=int):
        passed, text = _ACCEPTANCE[label]
        terminalreporter.write_line(f"criterion {int(label):2d}: {'PASS' if passed else 'FAIL'}  {text}")
