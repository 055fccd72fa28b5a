import sys

import pytest

from arbcount import constructions as C
from arbcount import kernels


def cycle3():
    return C.swirl(3)


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    """Run a test once per available kernel backend."""
    old = kernels.get_backend()
    kernels.set_backend(request.param)
    yield request.param
    kernels.set_backend(old)


def small_corpus():
    """Named instances plus seeded random digraphs and tournaments (n <= 7)."""
    named = [
        C.swirl(3),
        C.swirl(5),
        C.swirl(7),
        C.transitive(4),
        C.paley(7),
        C.bipartite_blowup_minimizer(2, 4),
        C.symmetric_orientation(C.double(C.complete_graph(3))),
    ]
    rand = [C.random_digraph(2 + s % 6, 0.5, s, max_mult=2) for s in range(40)]
    rand += [C.random_tournament(2 + s % 6, s) for s in range(40)]
    return named + rand


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
