import pytest

_KEY = pytest.StashKey[dict]()


@pytest.fixture
def acceptance_lines(request):
    return request.config.stash.setdefault(_KEY, {})


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_KEY, {})
    if lines:
        terminalreporter.section("acceptance criteria")
        for k in sorted(lines):
            terminalreporter.write_line(lines[k])
