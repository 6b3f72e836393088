"""Motivation plan operator and the Conditional-Warrant strategy.

The operator adds the warrant satellite ``(BEL ?hearer (UTILITY ?act
?utility-act))`` to a proposal nucleus only when NOT-ACCESSIBLE holds, i.e.
when the modelled hearer can neither reach the warrant in memory nor reach it
at a cost the accessibility matrix accepts.

The matrix is a boolean table indexed by (distance band, commcost, retcost);
``True`` means "say the warrant".  Distance bands are shared with the AWM
bands used to fit the table from batch results, so a cell fitted from
experiments at AWM 3-5 governs warrants lying 3-5 steps from the hearer's
pointer.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .acts import Propose, Reject
from .awm import SCORE, MemoryStore
from .costs import CostParams, as_fraction, format_number
from .domain import DesignState, Option
from .stats import ks_two_sample
from .strategies import ALL_IMPLICIT, EXPLICIT_WARRANT, warrant

# (name, lowest distance, highest distance or None for unbounded)
BANDS = (("near", 0, 2), ("mid", 3, 5), ("far", 6, None))
BAND_NAMES = tuple(b[0] for b in BANDS)


def band_of(distance: int | None) -> str:
    """Band for a memory distance (or AWM radius); ``None`` means absent."""
    if distance is None:
        return BAND_NAMES[-1]
    for name, lo, hi in BANDS:
        if distance >= lo and (hi is None or distance <= hi):
            return name
    raise ValueError(f"negative distance {distance}")


class CoverageError(ValueError):
    def __init__(self, missing):
        self.missing = list(missing)
        cells = ", ".join(f"({b}, {format_number(c)}, {format_number(r)})" for b, c, r in self.missing)
        super().__init__(f"no results for cells: {cells}")


@dataclass(frozen=True)
class AccessibilityMatrix:
    commcosts: tuple[Fraction, ...]
    retcosts: tuple[Fraction, ...]
    cells: np.ndarray  # bool, shape (len(BANDS), len(commcosts), len(retcosts))

    def __post_init__(self):
        object.__setattr__(self, "commcosts", tuple(as_fraction(c) for c in self.commcosts))
        object.__setattr__(self, "retcosts", tuple(as_fraction(r) for r in self.retcosts))
        cells = np.array(self.cells, dtype=bool)
        if cells.shape != (len(BANDS), len(self.commcosts), len(self.retcosts)):
            raise ValueError(f"cells must have shape {(len(BANDS), len(self.commcosts), len(self.retcosts))}")
        cells.setflags(write=False)
        object.__setattr__(self, "cells", cells)

    @classmethod
    def constant(cls, value: bool, commcosts=(0, 1, 10), retcosts=(0, "0.01")):
        shape = (len(BANDS), len(commcosts), len(retcosts))
        return cls(tuple(commcosts), tuple(retcosts), np.full(shape, value, dtype=bool))

    def lookup(self, band: str, commcost, retcost) -> bool:
        try:
            i = BAND_NAMES.index(band)
            j = self.commcosts.index(as_fraction(commcost))
            k = self.retcosts.index(as_fraction(retcost))
        except ValueError:
            raise KeyError(f"matrix has no cell ({band}, {commcost}, {retcost})") from None
        return bool(self.cells[i, j, k])

    def items(self):
        for (i, band), (j, c), (k, r) in itertools.product(
                enumerate(BAND_NAMES), enumerate(self.commcosts), enumerate(self.retcosts)):
            yield band, c, r, bool(self.cells[i, j, k])

    def to_text(self) -> str:
        lines = ["# band commcost retcost say-warrant"]
        lines += [f"{b} {format_number(c)} {format_number(r)} {str(v).lower()}" for b, c, r, v in self.items()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "AccessibilityMatrix":
        rows = []
        for n, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 4 or parts[0] not in BAND_NAMES or parts[3] not in ("true", "false"):
                raise ValueError(f"line {n}: expected '<band> <commcost> <retcost> true|false'")
            rows.append((parts[0], Fraction(parts[1]), Fraction(parts[2]), parts[3] == "true"))
        commcosts = tuple(sorted({r[1] for r in rows}))
        retcosts = tuple(sorted({r[2] for r in rows}))
        cells = np.zeros((len(BANDS), len(commcosts), len(retcosts)), dtype=bool)
        seen = set()
        for band, c, r, v in rows:
            key = (BAND_NAMES.index(band), commcosts.index(c), retcosts.index(r))
            seen.add(key)
            cells[key] = v
        if len(seen) != cells.size:
            raise ValueError("matrix table does not cover every cell")
        return cls(commcosts, retcosts, cells)


NAIVE_MATRIX = AccessibilityMatrix.constant(False)
"""Say the warrant only when the hearer cannot reach it at all."""


@dataclass(frozen=True)
class MotivationOperator:
    """Plan operator: nucleus = proposal, satellite = warrant."""

    speaker: str
    hearer: str
    option: Option
    utility: int

    def agent_ok(self, state: DesignState | None) -> bool:
        # a put-act proposes a step of the joint plan, which the hearer must adopt
        return state is None or self.hearer in state.task.agents

    def unrealized(self, state: DesignState | None) -> bool:
        return state is None or self.option.item not in state.placed

    def constraints_hold(self, hearer_model: MemoryStore, costs: CostParams,
                         matrix: AccessibilityMatrix, state: DesignState | None = None) -> bool:
        return (self.agent_ok(state) and self.unrealized(state)
                and not_accessible(hearer_model, self.option.item, costs, matrix))

    def nucleus(self, counter: bool = False):
        return (Reject if counter else Propose)(self.speaker, self.hearer, self.option)

    def satellite(self):
        return warrant(self.speaker, self.hearer, self.option, self.utility)


def not_accessible(hearer_model: MemoryStore, item: str, costs: CostParams,
                   matrix: AccessibilityMatrix) -> bool:
    """Whether the score of ``item`` is out of the modelled hearer's easy reach.

    Unreachable (absent, or beyond the hearer's radius) is always
    inaccessible; otherwise the matrix cell for the fact's distance band and
    the current costs decides.  Probing the model charges nothing.
    """
    _, d = hearer_model.nearest(SCORE, item)
    if d is None or d > hearer_model.reach:
        return True
    return matrix.lookup(band_of(d), costs.commcost, costs.retcost)


def instantiate_motivation(speaker: str, hearer: str, hearer_model: MemoryStore, option: Option,
                           utility: int, costs: CostParams, matrix: AccessibilityMatrix,
                           counter: bool = False, state: DesignState | None = None) -> list:
    op = MotivationOperator(speaker, hearer, option, utility)
    acts = [op.nucleus(counter)]
    if op.constraints_hold(hearer_model, costs, matrix, state):
        acts.insert(0, op.satellite())
    return acts


def fit_matrix(results, *, better: str = EXPLICIT_WARRANT, baseline: str = ALL_IMPLICIT,
               alpha: float = 0.05, margin: float = 0.0) -> AccessibilityMatrix:
    """Fit the matrix from batch results.

    ``results`` maps ``(commcost, retcost)`` to run records covering both
    strategies.  A cell is true iff, pooling the AWM settings of the band,
    ``better`` has the higher mean performance by more than ``margin`` and
    the two-sample KS test gives p < ``alpha``.
    """
    keyed = {(as_fraction(c), as_fraction(r)): recs for (c, r), recs in results.items()}
    commcosts = tuple(sorted({c for c, _ in keyed}))
    retcosts = tuple(sorted({r for _, r in keyed}))
    cells = np.zeros((len(BANDS), len(commcosts), len(retcosts)), dtype=bool)
    missing = []
    for (i, band), (j, c), (k, r) in itertools.product(
            enumerate(BAND_NAMES), enumerate(commcosts), enumerate(retcosts)):
        recs = keyed.get((c, r), [])
        a = [float(x.performance) for x in recs if x.strategy == better and band_of(x.awm) == band]
        b = [float(x.performance) for x in recs if x.strategy == baseline and band_of(x.awm) == band]
        if not a or not b:
            missing.append((band, c, r))
            continue
        _, p = ks_two_sample(a, b)
        cells[i, j, k] = (np.mean(a) - np.mean(b)) > margin and p < alpha
    if missing:
        raise CoverageError(missing)
    return AccessibilityMatrix(commcosts, retcosts, cells)
