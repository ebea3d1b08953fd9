import sys
from pathlib import Path

from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

# solver-backed properties run uneven per-example times; wall-clock
# deadlines just make them flaky
settings.register_profile(
    "shiftcrit",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("shiftcrit")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import ACCEPTANCE_LINES
    except ImportError:
        return
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
