import pytest

from setsign import _kernels
from setsign.graph import Sign, SignedGraph, build_graph

P, N = Sign.POSITIVE, Sign.NEGATIVE


def signed(n, triples):
    return SignedGraph.from_edges(n, triples)


@pytest.fixture
def triangle():
    return build_graph(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def k4():
    return build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def c4():
    return build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def bowtie():
    # two triangles sharing vertex 0
    return build_graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])


@pytest.fixture(params=sorted(_kernels.BACKENDS))
def backend(request, monkeypatch):
    impl = _kernels.BACKENDS[request.param]
    monkeypatch.setattr(_kernels, "ACTIVE", impl)
    return impl


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
