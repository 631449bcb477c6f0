import pytest

from triblink import PACKS, TribracketContext, enumerate_horizontal


@pytest.fixture(scope="session")
def pack56():
    return PACKS["5.6"]


@pytest.fixture(scope="session")
def pack57():
    return PACKS["5.7"]


@pytest.fixture(scope="session")
def pack58():
    return PACKS["5.8"]


@pytest.fixture(scope="session")
def ctx56(pack56):
    return TribracketContext(pack56.tribracket)


@pytest.fixture(scope="session")
def ctx57(pack57):
    return TribracketContext(pack57.tribracket)


@pytest.fixture(scope="session")
def ctx58(pack58):
    return TribracketContext(pack58.tribracket)


@pytest.fixture(scope="session")
def all_small_tribrackets():
    """Every horizontal tribracket on at most three elements."""
    out = []
    for n in (1, 2, 3):
        out.extend(enumerate_horizontal(n))
    return out


@pytest.fixture(scope="session")
def small_contexts(all_small_tribrackets):
    return [TribracketContext(t, checked=False) for t in all_small_tribrackets]
