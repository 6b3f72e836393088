"""The Standard floor-plan task: inventories, put-act options and scoring."""

from __future__ import annotations

import functools
from dataclasses import dataclass, replace

import numpy as np

from . import sexpr
from .awm import SCORE

MIN_VALUE = 10
MAX_VALUE = 56
ITEMS_PER_AGENT = 12
ROOMS = ("room-1", "room-2")
ROOM_CAPACITY = 4

COLORS = ("green", "purple", "red", "blue", "yellow", "orange", "white", "black")
KINDS = ("rug", "lamp", "couch", "chair", "table", "sofa", "desk", "stool")

DEFAULT_AGENTS = ("bill", "kim")


class ProtocolError(Exception):
    """An option was applied to a state in which it is not valid."""


@dataclass(frozen=True)
class FurnitureItem:
    number: int
    color: str
    kind: str
    value: int
    owner: str

    @property
    def id(self) -> str:
        return f"{self.color}-{self.kind}"


@dataclass(frozen=True, order=True)
class Option:
    """``put-act(agent, item, room)`` tagged with its option number."""

    number: int
    agent: str
    color: str
    kind: str
    room: str

    @property
    def id(self) -> str:
        return f"option-{self.number}"

    @property
    def item(self) -> str:
        return f"{self.color}-{self.kind}"


@dataclass(frozen=True)
class Task:
    seed: int | None
    agents: tuple[str, str]
    items: tuple[FurnitureItem, ...]

    def __post_init__(self):
        ids = [it.id for it in self.items]
        if len(set(ids)) != len(ids):
            raise ValueError("item ids must be unique")
        for it in self.items:
            if not MIN_VALUE <= it.value <= MAX_VALUE:
                raise ValueError(f"{it.id}: value {it.value} outside [{MIN_VALUE}, {MAX_VALUE}]")
            if it.owner not in self.agents:
                raise ValueError(f"{it.id}: unknown owner {it.owner}")

    @functools.cached_property
    def by_id(self) -> dict[str, FurnitureItem]:
        return {it.id: it for it in self.items}

    def owned_by(self, agent: str) -> list[FurnitureItem]:
        return [it for it in self.items if it.owner == agent]

    def value(self, item_id: str) -> int:
        return self.by_id[item_id].value

    def utility(self, option: Option) -> int:
        return self.value(option.item)

    def option(self, item_id: str, room: str) -> Option:
        it = self.by_id[item_id]
        number = it.number + len(self.items) * ROOMS.index(room)
        return Option(number, it.owner, it.color, it.kind, room)

    def to_text(self) -> str:
        lines = [f"(design-world-task (seed {self.seed}) (agents agent-{self.agents[0]} agent-{self.agents[1]})"]
        for it in self.items:
            lines.append(f"  (item {it.number} agent-{it.owner} {it.color} {it.kind} {it.value})")
        return "\n".join(lines) + ")\n"

    @classmethod
    def from_text(cls, text: str) -> "Task":
        expr = sexpr.loads(text)
        if not expr or expr[0] != "design-world-task":
            raise sexpr.ParseError("expected (design-world-task ...)", 0)
        seed, agents, items = None, None, []
        for entry in expr[1:]:
            head = entry[0]
            if head == "seed":
                seed = None if entry[1] == "None" else int(entry[1])
            elif head == "agents":
                agents = tuple(_strip_agent(a) for a in entry[1:])
            elif head == "item":
                _, number, owner, color, kind, value = entry
                items.append(FurnitureItem(int(number), color, kind, int(value), _strip_agent(owner)))
        return cls(seed, agents, tuple(items))


def _strip_agent(token: str) -> str:
    return token[len("agent-"):] if token.startswith("agent-") else token


def generate_task(seed=None, agents=DEFAULT_AGENTS, per_agent: int = ITEMS_PER_AGENT) -> Task:
    """Draw ``per_agent`` items for each agent, values uniform on [10, 56]."""
    rng = np.random.default_rng(seed)
    n = 2 * per_agent
    combos = [(c, k) for c in COLORS for k in KINDS]
    if n > len(combos):
        raise ValueError(f"at most {len(combos) // 2} items per agent")
    picks = rng.choice(len(combos), size=n, replace=False)
    values = rng.integers(MIN_VALUE, MAX_VALUE + 1, size=n)
    items = []
    for i, (pick, value) in enumerate(zip(picks.tolist(), values.tolist())):
        color, kind = combos[pick]
        items.append(FurnitureItem(i + 1, color, kind, int(value), agents[i // per_agent]))
    return Task(seed, tuple(agents), tuple(items))


@dataclass(frozen=True)
class DesignState:
    task: Task
    rooms: tuple[tuple[str, ...], ...] = ((), ())
    mutual_intentions: tuple[Option, ...] = ()
    capacity: int = ROOM_CAPACITY

    @property
    def placed(self) -> set[str]:
        return {item for room in self.rooms for item in room}

    @property
    def unplaced(self) -> list[FurnitureItem]:
        placed = self.placed
        return [it for it in self.task.items if it.id not in placed]

    def open_rooms(self) -> list[str]:
        return [name for name, room in zip(ROOMS, self.rooms) if len(room) < self.capacity]

    @property
    def complete(self) -> bool:
        return not self.open_rooms()

    def current_room(self) -> str | None:
        rooms = self.open_rooms()
        return rooms[0] if rooms else None

    def is_valid(self, option: Option) -> bool:
        return option.item not in self.placed and option.room in self.open_rooms()


def empty_design(task: Task, capacity: int = ROOM_CAPACITY) -> DesignState:
    return DesignState(task, tuple(() for _ in ROOMS), (), capacity)


def options_for(agent: str, state: DesignState, salient) -> list[Option]:
    """Put-acts for every salient-scored, owned, unplaced item into every open room."""
    scored = {p.key for p in salient if p.kind == SCORE}
    placed = state.placed
    rooms = state.open_rooms()
    out = [state.task.option(it.id, room)
           for it in state.task.owned_by(agent)
           if it.id in scored and it.id not in placed
           for room in rooms]
    return sorted(out)


def raw_score(state: DesignState) -> int:
    values = state.task.by_id
    return sum(values[item].value for room in state.rooms for item in room)


def apply_acceptance(state: DesignState, option: Option) -> DesignState:
    if option.item in state.placed:
        raise ProtocolError(f"{option.item} is already placed")
    if option.room not in ROOMS:
        raise ProtocolError(f"unknown room {option.room}")
    i = ROOMS.index(option.room)
    if len(state.rooms[i]) >= state.capacity:
        raise ProtocolError(f"{option.room} is full")
    rooms = list(state.rooms)
    rooms[i] = rooms[i] + (option.item,)
    return replace(state, rooms=tuple(rooms),
                   mutual_intentions=state.mutual_intentions + (option,))
