import pytest

from tamecomb.cayley import F_GROUP, ball

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def f_ball_8():
    return ball(F_GROUP, 8)


@pytest.fixture(scope="session")
def f_ball_10():
    return ball(F_GROUP, 10)


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
