import pytest

from sloggen.pipeline import DataPaths, load_resources
from sloggen.text import default_tagger

HOGWARTS = "We educate young minds in the practice of witchcraft and wizardry for the service of others."

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def tagger():
    return default_tagger()


@pytest.fixture(scope="session")
def resources():
    return load_resources(DataPaths.resolve())


@pytest.fixture
def record():
    def _record(criterion: str, passed: bool, detail: str = ""):
        line = f"criterion {criterion}: {'PASS' if passed else 'FAIL'}  {detail}".rstrip()
        ACCEPTANCE_LINES.append(line)
        print(line)
    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
