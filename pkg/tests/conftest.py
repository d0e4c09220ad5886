import numpy as np
import pytest


@pytest.fixture
def rng(request):
    # per-test deterministic stream
    seed = sum(ord(ch) for ch in request.node.nodeid)
    return np.random.default_rng(seed)


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[n])
