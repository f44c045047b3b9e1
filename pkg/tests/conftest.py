import pytest

from src.corpus import corpus_entries
from helpers import build_election


@pytest.fixture(scope="session")
def corpus():
    return {entry.name: entry for entry in corpus_entries()}


@pytest.fixture
def unanimous():
    """Four voters approving only a in each of three rounds."""
    return build_election("abc", [[["a"]] * 4] * 3)


@pytest.fixture
def example_a1(corpus):
    return corpus["example_A1"].election


@pytest.fixture
def e1(corpus):
    return corpus["E1"]
