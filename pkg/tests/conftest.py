import pytest

from cyclechain import build_chain_graph


@pytest.fixture(scope="session")
def fig1():
    """The running example: two cycles of lengths 3 and 4 plus a 4-edge path."""
    return build_chain_graph(2, [3, 4], 4)


@pytest.fixture(scope="session")
def triangle():
    return build_chain_graph(1, [3], 0)


@pytest.fixture(scope="session")
def chain3():
    return build_chain_graph(3, [3, 3, 3], 0)


@pytest.fixture(scope="session")
def small_instances():
    """Every instance with r <= 3, cycle lengths <= 4, forest <= 1 edge."""
    import itertools

    out = []
    for r in (1, 2, 3):
        for m in itertools.product((3, 4), repeat=r):
            for t in (0, 1):
                out.append(build_chain_graph(r, list(m), t))
    return out
