"""Turn-taking negotiation protocol and transcripts.

Agents alternate at proposal granularity.  On its turn an agent first
responds to the other's pending proposal (accept silently, or reject with a
counter-proposal), then, if it accepted, makes its own proposal or closes.
Acceptance is never stated: a proposal counts as accepted once the next
proposal-level move is not a rejection of it.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field

from .acts import Act, Close, Open, Propose, Reject, parse_act, render_act
from .agent import Agent, RejectWith
from .costs import CostParams
from ._seeds import derive
from .domain import ROOM_CAPACITY, ROOMS, DesignState, Option, Task, apply_acceptance, empty_design, raw_score
from .planop import AccessibilityMatrix

log = logging.getLogger(__name__)

LIVELOCK_LIMIT = 3
MAX_TURNS = 1000


@dataclass
class Transcript:
    turns: list[tuple[int, Act]]
    state: DesignState
    counters: dict[str, tuple[int, int, int]] = field(default_factory=dict)

    @property
    def acts(self) -> list[Act]:
        return [act for _, act in self.turns]

    @property
    def raw_score(self) -> int:
        return raw_score(self.state)

    def totals(self) -> tuple[int, int, int]:
        """Messages, inferences and retrievals summed over both agents."""
        return tuple(sum(c[i] for c in self.counters.values()) for i in range(3))

    def lines(self) -> list[str]:
        return [f"{n}: {render_act(act)}" for n, act in self.turns]

    def to_text(self) -> str:
        return "".join(line + "\n" for line in self.lines())


def parse_transcript(text: str) -> list[tuple[int, Act]]:
    out = []
    for line in text.splitlines():
        if not line.strip():
            continue
        number, _, rest = line.partition(":")
        out.append((int(number), parse_act(rest)))
    return out


def infer_implicit_acceptance(history) -> tuple[list[Option], Option | None]:
    """Options accepted by the act sequence, and the one still pending.

    A proposal is accepted once the next proposal-level move (proposal,
    counter-proposal or close) is not a rejection of it.
    """
    accepted, pending = [], None
    for act in history:
        if isinstance(act, Reject):
            pending = act.option
        elif isinstance(act, Propose):
            if pending is not None:
                accepted.append(pending)
            pending = act.option
        elif isinstance(act, Close):
            if pending is not None:
                accepted.append(pending)
            pending = None
    return accepted, pending


def run_dialogue(first: Agent, second: Agent, task: Task, capacity: int = ROOM_CAPACITY) -> Transcript:
    """Negotiate a design between two initialized agents; ``first`` opens."""
    state = empty_design(task, capacity)
    turns: list[tuple[int, Act]] = []
    speaker, hearer = first, second
    pending: Option | None = None
    opened: set[str] = set()
    rejected = Counter()
    previous_closed = False

    for turn in range(1, MAX_TURNS + 1):
        acts: list[Act] = []
        accepted = None
        if pending is not None:
            if rejected[pending] >= LIVELOCK_LIMIT:
                log.warning("forcing acceptance of %s after %d rejections", pending.id, rejected[pending])
                decision = None
            else:
                decision = speaker.deliberate(pending, state)
            if isinstance(decision, RejectWith):
                rejected[pending] += 1
                acts = speaker.expand(hearer.name, decision.counter, decision.counter_value,
                                      counter=True, state=state)
                _send(turns, turn, speaker, hearer, acts)
                pending = decision.counter
                previous_closed = False
                speaker, hearer = hearer, speaker
                continue
            state = apply_acceptance(state, pending)
            speaker.adopt(pending)
            # only rejections with no acceptance in between count toward livelock
            rejected.clear()
            accepted, pending = pending, None

        if state.complete:
            acts = [Close(speaker.name, hearer.name, ROOMS[-1])]
            _send(turns, turn, speaker, hearer, acts, accepted)
            break

        move = speaker.next_move(hearer.name, state)
        closing = isinstance(move[-1], Close)
        if not closing:
            room = move[-1].option.room
            if room not in opened:
                opened.add(room)
                acts.append(Open(speaker.name, hearer.name, room))
            pending = move[-1].option
        acts.extend(move)
        _send(turns, turn, speaker, hearer, acts, accepted)
        if closing and previous_closed:
            break
        previous_closed = closing
        speaker, hearer = hearer, speaker
    else:
        raise RuntimeError(f"dialogue did not terminate within {MAX_TURNS} turns")

    counters = {a.name: a.counters() for a in (first, second)}
    return Transcript(turns, state, counters)


def _send(turns, turn, speaker: Agent, hearer: Agent, acts, accepted: Option | None = None):
    if accepted is not None:
        # the hearer reads its proposal's acceptance off this reply
        hearer.infer_acceptance()
        hearer.adopt(accepted)
    for act in acts:
        speaker.messages += 1
        turns.append((turn, act))
        hearer.perceive(act)


def simulate(task: Task, radius: int, seed, strategies=("all-implicit", "all-implicit"), *,
             costs: CostParams | None = None, matrix: AccessibilityMatrix | None = None,
             charge_salience: bool = True, capacity: int = ROOM_CAPACITY) -> Transcript:
    """Build both agents from ``seed``, load their beliefs and run one dialogue."""
    if isinstance(strategies, str):
        strategies = (strategies, strategies)
    agents = [Agent(name, radius, derive(seed, i), strat, costs=costs, matrix=matrix,
                    charge_salience=charge_salience)
              for i, (name, strat) in enumerate(zip(task.agents, strategies))]
    for a in agents:
        a.initialize_beliefs(task)
    return run_dialogue(agents[0], agents[1], task, capacity)
