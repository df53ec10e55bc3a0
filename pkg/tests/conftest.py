import random
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"


@pytest.fixture
def rng():
    return random.Random(20261015)


@pytest.fixture
def data_dir():
    return DATA


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(mod.RESULTS, key=lambda k: int(k.split()[0][2:])):
        terminalreporter.write_line(mod.RESULTS[key])
