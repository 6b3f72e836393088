"""Resource-bounded negotiating agent.

Beliefs live in a :class:`~designworld.awm.MemoryStore`; means-end
reasoning and deliberation see only the salient part of it.  The agent keeps
its own message and inference counters; retrievals are the memory's counter.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import planop
from ._seeds import derive
from .acts import Act, Close, Say, render_act
from .awm import ACT, INTEND, SCORE, GRID_SIZE, MemoryStore, Proposition
from .costs import CostParams
from .domain import ROOMS, DesignState, Option, Task, options_for
from .strategies import ALL_IMPLICIT, CONDITIONAL_WARRANT, canonical, expand_proposal


@dataclass(frozen=True)
class Accept:
    option: Option


@dataclass(frozen=True)
class RejectWith:
    option: Option
    counter: Option
    counter_value: int


class Agent:
    def __init__(self, name: str, radius: int, seed=None, strategy: str = ALL_IMPLICIT, *,
                 size: int = GRID_SIZE, charge_salience: bool = True,
                 costs: CostParams | None = None, matrix: planop.AccessibilityMatrix | None = None):
        self.name = name
        self.strategy = canonical(strategy)
        self.memory = MemoryStore(radius, derive(seed, 0), size=size, charge_salience=charge_salience)
        self._shuffle_rng = np.random.default_rng(derive(seed, 1))
        self.costs = costs or CostParams()
        self.matrix = matrix if matrix is not None else planop.NAIVE_MATRIX
        self.messages = 0
        self.inferences = 0

    def __repr__(self):
        return f"Agent({self.name!r}, radius={self.radius}, strategy={self.strategy!r})"

    @property
    def radius(self) -> int:
        return self.memory.radius

    @property
    def retrievals(self) -> int:
        return self.memory.retrieval_counter

    def counters(self) -> tuple[int, int, int]:
        return self.messages, self.inferences, self.retrievals

    def initialize_beliefs(self, task: Task) -> None:
        """Store the score of every item, in a seeded random order."""
        for i in self._shuffle_rng.permutation(len(task.items)).tolist():
            item = task.items[i]
            self.memory.store(Proposition(SCORE, item.id, item.value))

    def evaluate_proposal(self, option: Option) -> tuple[int | None, int]:
        found, searched = self.memory.retrieve(SCORE, option.item)
        return (found.value if found is not None else None), searched

    def salient_options(self, state: DesignState, room: str | None = None) -> list[tuple[Option, int]]:
        """Options from salient scores, with the believed utility of each."""
        salient = self.memory.salient_set()
        options = options_for(self.name, state, salient)
        self.inferences += len(options)
        believed = {p.key: p.value for p in salient if p.kind == SCORE}
        return [(o, believed[o.item]) for o in options if room is None or o.room == room]

    def deliberate(self, proposal: Option, state: DesignState):
        """Accept, or reject with a strictly better salient option for the same room."""
        utility, _ = self.evaluate_proposal(proposal)
        if utility is None:
            # the warrant is out of reach, so there is nothing to weigh it against
            return Accept(proposal)
        best, best_value = None, utility
        for option, value in self.salient_options(state, proposal.room):
            self.inferences += 1
            if value > best_value:
                best, best_value = option, value
        if best is None:
            return Accept(proposal)
        return RejectWith(proposal, best, best_value)

    def choose(self, state: DesignState) -> tuple[Option, int] | None:
        """Highest-utility salient option; ties go to the lowest option number."""
        candidates = self.salient_options(state)
        if not candidates:
            return None
        best = candidates[0]
        for cand in candidates[1:]:
            self.inferences += 1
            if cand[1] > best[1]:
                best = cand
        return best

    def expand(self, hearer: str, option: Option, value: int, counter: bool = False,
               state: DesignState | None = None) -> list[Act]:
        if self.strategy == CONDITIONAL_WARRANT:
            # the speaker's own attentional state stands in for the hearer's
            return planop.instantiate_motivation(self.name, hearer, self.memory, option, value,
                                                 self.costs, self.matrix, counter, state)
        return expand_proposal(self.strategy, self.name, hearer, option, value, counter)

    def next_move(self, hearer: str, state: DesignState) -> list[Act]:
        choice = self.choose(state)
        if choice is None:
            return [Close(self.name, hearer, state.current_room() or ROOMS[-1])]
        option, value = choice
        return self.expand(hearer, option, value, state=state)

    def perceive(self, act: Act) -> None:
        """Store what was heard; a warrant is stored as a score belief."""
        if isinstance(act, Say):
            self.memory.store(Proposition(SCORE, act.option.item, act.value))
        else:
            self.memory.store(Proposition(ACT, render_act(act)))

    def adopt(self, option: Option) -> None:
        self.memory.store(Proposition(INTEND, option.id))

    def infer_acceptance(self) -> None:
        self.inferences += 1

