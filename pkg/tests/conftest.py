import pytest

from corpus_data import CORPUS, EXTRAS


@pytest.fixture(scope="session")
def corpus():
    return CORPUS


@pytest.fixture(scope="session")
def extras():
    return EXTRAS
