from __future__ import annotations

import sys
from pathlib import Path

import pytest

from forcing_lab.codecs import from_graph6

FIXTURES = Path(__file__).parent / "fixtures"
sys.path.insert(0, str(Path(__file__).parent))


def load_corpus():
    lines = (FIXTURES / "clawfree_cubic_le14.g6").read_text().split()
    return [from_graph6(line) for line in lines]


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


@pytest.fixture(scope="session")
def corpus_no_k4(corpus):
    return [G for G in corpus if G.n != 4]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for num in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[num])
