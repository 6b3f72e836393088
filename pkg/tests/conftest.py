import time

import pytest

from designworld.costs import CostParams
from designworld.experiment import recost, run_batch

CHEAP_RETRIEVAL = CostParams(1, 1, 0)
COSTLY_RETRIEVAL = CostParams(1, 1, "0.01")
COSTLY_MESSAGES = CostParams(10, 0, 0)
COSTLY_BOTH = CostParams(10, 0, "0.01")


@pytest.fixture(scope="session")
def batch():
    """Explicit-Warrant vs All-Implicit, 100 runs at each AWM 1..16 (3200 dialogues).

    Agent behavior does not read the cost weights, so one batch serves every
    cost setting through ``recost``.
    """
    start = time.perf_counter()
    records = run_batch("explicit-warrant", "all-implicit", range(1, 17), CHEAP_RETRIEVAL, runs=100, master_seed=0)
    BATCH_SECONDS["batch"] = time.perf_counter() - start
    return records


@pytest.fixture(scope="session")
def batches(batch):
    return {"cheap_retrieval": batch, "costly_retrieval": recost(batch, COSTLY_RETRIEVAL), "costly_messages": recost(batch, COSTLY_MESSAGES),
            "costly_both": recost(batch, COSTLY_BOTH)}


BATCH_SECONDS = {}
ACCEPTANCE_LINES = {}


def report(number: int, title: str, ok: bool, detail: str) -> None:
    """Record one acceptance line; they are printed together after the run."""
    line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail}"
    ACCEPTANCE_LINES[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
