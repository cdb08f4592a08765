import pytest
from hypothesis import settings

from hilbk3 import descent

# exact big-integer arithmetic has uneven per-example cost
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")


@pytest.fixture(scope="session")
def ladders():
    return [descent.epsilon_ladder(d) for d in descent.LADDER_SEEDS]


@pytest.fixture(scope="session")
def survey(ladders):
    return descent.torsor_survey(extra=2, ladders=ladders)


@pytest.fixture(scope="session")
def saturation():
    return descent.saturation_check()


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
