import pytest

from regdet.ktheory import Signature

TEST_SIGNATURES = [
    Signature(1, 0),
    Signature(0, 1),
    Signature(2, 0),
    Signature(1, 1),
    Signature(0, 2),
    Signature(3, 1),
]

_acceptance_lines = []


def record_acceptance(line):
    _acceptance_lines.append(line)


@pytest.fixture(params=TEST_SIGNATURES, ids=str)
def sig(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
