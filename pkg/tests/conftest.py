import pytest

VERDICTS_KEY = pytest.StashKey[list]()


@pytest.fixture
def criterion_report(request):
    """Collect one verdict line per acceptance criterion; the terminal
    summary prints them even under output capture."""
    def record(line: str) -> None:
        request.config.stash.setdefault(VERDICTS_KEY, []).append(line)
    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(VERDICTS_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
