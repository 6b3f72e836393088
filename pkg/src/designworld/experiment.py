"""Batch runs, performance accounting and strategy comparison."""

from __future__ import annotations

import csv
import os
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

from ._seeds import derive
from .costs import CostParams, format_number, performance
from .dialogue import simulate
from .domain import Task, generate_task
from .planop import AccessibilityMatrix
from .stats import ks_two_sample
from .strategies import canonical

BENEFICIAL = "Beneficial"
DETRIMENTAL = "Detrimental"
NEITHER = "Neither"

RESULTS_HEADER = ("run", "awm", "strategy", "raw", "messages", "inferences", "retrievals", "performance")
SUMMARY_HEADER = ("awm", "mean_diff", "ks_d", "p")

ALPHA = 0.05


@dataclass(frozen=True)
class RunRecord:
    run: int
    awm: int
    strategy: str
    raw: int
    messages: int
    inferences: int
    retrievals: int
    performance: Fraction

    def recost(self, costs: CostParams) -> "RunRecord":
        return replace(self, performance=performance(self.raw, self.messages, self.inferences,
                                                     self.retrievals, costs))

    def row(self) -> list[str]:
        return [str(self.run), str(self.awm), self.strategy, str(self.raw), str(self.messages),
                str(self.inferences), str(self.retrievals), format_number(self.performance)]


@dataclass(frozen=True)
class AwmComparison:
    awm: int
    mean_diff: float
    ks_d: float
    p: float

    @property
    def significant(self) -> bool:
        return self.p < ALPHA and self.mean_diff != 0


@dataclass(frozen=True)
class ComparisonSummary:
    strategy1: str
    strategy2: str
    rows: tuple[AwmComparison, ...]

    def positive(self, alpha: float = ALPHA) -> list[int]:
        return [r.awm for r in self.rows if r.p < alpha and r.mean_diff > 0]

    def negative(self, alpha: float = ALPHA) -> list[int]:
        return [r.awm for r in self.rows if r.p < alpha and r.mean_diff < 0]

    def swapped(self) -> "ComparisonSummary":
        rows = tuple(AwmComparison(r.awm, -r.mean_diff, r.ks_d, r.p) for r in self.rows)
        return ComparisonSummary(self.strategy2, self.strategy1, rows)


def run_one(task: Task, awm: int, strategy: str, run: int, seed, costs: CostParams, *,
            matrix: AccessibilityMatrix | None = None, charge_salience: bool = True) -> RunRecord:
    t = simulate(task, awm, seed, strategy, costs=costs, matrix=matrix, charge_salience=charge_salience)
    messages, inferences, retrievals = t.totals()
    return RunRecord(run, awm, strategy, t.raw_score, messages, inferences, retrievals,
                     performance(t.raw_score, messages, inferences, retrievals, costs))


def run_seed(master_seed: int, awm: int, run: int) -> np.random.SeedSequence:
    """Seed of one run.  Both strategies share it, so they start from identical memories."""
    return derive(master_seed, awm, run)


def _job(args):
    task, awm, strategy, run, master, costs, matrix, charge = args
    return run_one(task, awm, strategy, run, run_seed(master, awm, run), costs,
                   matrix=matrix, charge_salience=charge)


def run_batch(strategy_a: str, strategy_b: str, awm_range, costs: CostParams, runs: int = 100,
              master_seed: int = 0, *, task: Task | None = None, task_seed: int = 0,
              matrix: AccessibilityMatrix | None = None, charge_salience: bool = True,
              workers: int | None = None) -> list[RunRecord]:
    """``runs`` dialogues per AWM setting for each strategy pairing.

    Each pairing has both agents use the same strategy.  Records come back
    ordered by (awm, strategy, run) whatever ``workers`` is.
    """
    if runs < 2:
        raise ValueError("runs must be at least 2")
    task = task if task is not None else generate_task(task_seed)
    strategies = [canonical(strategy_a), canonical(strategy_b)]
    jobs = [(task, awm, s, run, master_seed, costs, matrix, charge_salience)
            for awm in awm_range for s in strategies for run in range(runs)]
    workers = workers or os.cpu_count() or 1
    if workers == 1 or len(jobs) < 64:
        return [_job(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_job, jobs, chunksize=32))


def recost(records, costs: CostParams) -> list[RunRecord]:
    """Same runs under other cost weights (agent behavior does not read costs)."""
    return [r.recost(costs) for r in records]


def _by_awm(records, strategy: str) -> dict[int, list[Fraction]]:
    out: dict[int, list[Fraction]] = {}
    for r in records:
        if r.strategy == strategy:
            out.setdefault(r.awm, []).append(Fraction(r.performance))
    return out


def _mean_diff(a, b) -> float:
    return float(sum(a) / len(a) - sum(b) / len(b))


def mean_difference_series(records, strategy1: str, strategy2: str) -> list[tuple[int, float]]:
    """(awm, mean performance of strategy1 minus strategy2), by increasing AWM."""
    a, b = _by_awm(records, canonical(strategy1)), _by_awm(records, canonical(strategy2))
    return [(awm, _mean_diff(a[awm], b[awm])) for awm in sorted(set(a) & set(b))]


def compare(records, strategy1: str, strategy2: str) -> ComparisonSummary:
    s1, s2 = canonical(strategy1), canonical(strategy2)
    a, b = _by_awm(records, s1), _by_awm(records, s2)
    rows = []
    for awm in sorted(set(a) & set(b)):
        d, p = ks_two_sample([float(x) for x in a[awm]], [float(x) for x in b[awm]])
        rows.append(AwmComparison(awm, _mean_diff(a[awm], b[awm]), d, p))
    return ComparisonSummary(s1, s2, tuple(rows))


def classify(summary: ComparisonSummary, alpha: float = ALPHA) -> str:
    """Beneficial / Detrimental when two or more AWM settings differ significantly.

    If both directions reach two settings the direction with more significant
    settings wins and a tie is Neither, so swapping the pair swaps the verdict.
    """
    pos, neg = len(summary.positive(alpha)), len(summary.negative(alpha))
    if pos >= 2 and pos > neg:
        return BENEFICIAL
    if neg >= 2 and neg > pos:
        return DETRIMENTAL
    return NEITHER


def results_csv(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(RESULTS_HEADER)
    for r in records:
        w.writerow(r.row())
    return buf.getvalue()


def read_results_csv(text: str) -> list[RunRecord]:
    rows = csv.DictReader(io.StringIO(text))
    return [RunRecord(int(r["run"]), int(r["awm"]), r["strategy"], int(r["raw"]), int(r["messages"]),
                      int(r["inferences"]), int(r["retrievals"]), Fraction(r["performance"]))
            for r in rows]


def summary_csv(summary: ComparisonSummary) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SUMMARY_HEADER)
    for r in summary.rows:
        w.writerow([r.awm, repr(r.mean_diff), repr(r.ks_d), repr(r.p)])
    return buf.getvalue()
