import time
from types import SimpleNamespace

import pytest

from oracles import bilinear_1d

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def oracle_1d():
    return bilinear_1d


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


def run_cli(*argv):
    from pceplast.cli import main

    return main([str(a) for a in argv])


@pytest.fixture(scope="session")
def exp1_full(tmp_path_factory):
    """Experiment 1 with the full n = 1e6 reference, seed 42."""
    out = tmp_path_factory.mktemp("exp1_full")
    t0 = time.perf_counter()
    assert run_cli("run", "--experiment", "exp1", "--mc-samples", 1_000_000, "--seed", 42,
                   "--threads", 8, "--out", out) == 0
    return SimpleNamespace(out=out, seconds=time.perf_counter() - t0)


@pytest.fixture(scope="session")
def exp2_reduced(tmp_path_factory):
    """Experiment 2 with the reduced n = 1e5 reference, seed 42."""
    out = tmp_path_factory.mktemp("exp2_reduced")
    t0 = time.perf_counter()
    assert run_cli("run", "--experiment", "exp2", "--mc-samples", 100_000, "--seed", 42,
                   "--threads", 8, "--out", out) == 0
    return SimpleNamespace(out=out, seconds=time.perf_counter() - t0)
