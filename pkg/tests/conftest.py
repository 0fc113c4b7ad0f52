import pytest
from hypothesis import HealthCheck, settings

from hhck.kernels import load_bundled

settings.register_profile(
    "suite",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

# one "N PASS/FAIL detail" line per acceptance criterion, printed after
# the run so the outcome is visible regardless of capture settings
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def unit():
    return load_bundled("unit")


@pytest.fixture(scope="session")
def mouse():
    return load_bundled("mouse")


@pytest.fixture(scope="session")
def frog():
    return load_bundled("frog")


@pytest.fixture
def acceptance_report():
    def report(criterion: int, status: str, detail: str) -> None:
        ACCEPTANCE_LINES.append(f"{criterion:>2} {status:<4} {detail}")

    return report


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)
