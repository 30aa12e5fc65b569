import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from berncert.families import corpus_names, load_corpus  # noqa: E402

ACCEPTANCE_LINES = []

CERTIFIED_CORPUS = [
    "vscpoly_t-1",
    "vscpoly_t+1",
    "vscpoly_t2-t",
    "kummer",
    "sun_s1_k3_b2",
    "sun_s2_k3_b2",
]


@pytest.fixture(scope="session")
def corpus():
    return {name: load_corpus(name) for name in corpus_names()}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
