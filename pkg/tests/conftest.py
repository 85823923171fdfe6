import os
from pathlib import Path

import pytest

from semgraph.wordnet import load_database

FIXTURES = Path(__file__).parent / "fixtures"
DEFAULT_WN = "/root/wn/dict"


def wordnet_dir():
    path = os.environ.get("SEMGRAPH_WN_DIR") or DEFAULT_WN
    return path if Path(path, "data.noun").is_file() else None


@pytest.fixture(scope="session")
def wn():
    """The full WordNet 3.0 index; tests using it skip when no dictionary is installed."""
    path = wordnet_dir()
    if path is None:
        pytest.skip("WordNet 3.0 dict not found; set SEMGRAPH_WN_DIR")
    return load_database(path)


@pytest.fixture(scope="session")
def mini():
    return load_database(FIXTURES / "mini_dict")


@pytest.fixture
def syn(wn):
    return wn.lookup


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE):
            terminalreporter.write_line(line)


# filled by test_acceptance; echoed at the end of the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
