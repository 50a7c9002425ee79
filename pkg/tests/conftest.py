import pytest

import finring as fr


@pytest.fixture(scope="session")
def z4():
    return fr.make_cyclic(4)


@pytest.fixture(scope="session")
def z6():
    return fr.make_cyclic(6)


@pytest.fixture(scope="session")
def m2z2():
    return fr.elaborate("M(2,Z(2))")


@pytest.fixture(scope="session")
def t2z2():
    return fr.elaborate("T(2,Z(2))")


@pytest.fixture(scope="session")
def trivial():
    return fr.make_cyclic(1)


@pytest.fixture(scope="session")
def corpus_rings():
    """The default corpus, elaborated once per test session."""
    return [fr.elaborate(text) for text in fr.DEFAULT_CORPUS]
