import itertools
from collections import Counter

import numpy as np
import pytest

from designworld.acts import Close, Open, Propose, Reject, Say
from designworld.agent import Agent
from designworld.costs import CostParams
from designworld.dialogue import infer_implicit_acceptance, parse_transcript, run_dialogue, simulate
from designworld.domain import FurnitureItem, Option, Task, generate_task

A = Option(10, "bill", "green", "rug", "room-1")
B = Option(15, "kim", "red", "lamp", "room-1")
C = Option(18, "kim", "purple", "couch", "room-1")


def test_next_proposal_accepts_previous():
    accepted, pending = infer_implicit_acceptance([Propose("bill", "kim", A), Propose("kim", "bill", B)])
    assert accepted == [A] and pending == B


def test_rejection_replaces_pending():
    accepted, pending = infer_implicit_acceptance([Propose("bill", "kim", A), Reject("kim", "bill", C)])
    assert accepted == [] and pending == C


def test_empty_history_accepts_nothing():
    assert infer_implicit_acceptance([]) == ([], None)


def test_close_accepts_pending_and_say_is_ignored():
    history = [Open("bill", "kim", "room-1"), Say("bill", "kim", 10, A, 56), Propose("bill", "kim", A),
               Close("kim", "bill", "room-1")]
    assert infer_implicit_acceptance(history) == ([A], None)


# -- toy optimality ---------------------------------------------------------

TOY = [("green", "rug"), ("purple", "couch"), ("red", "lamp"), ("blue", "chair")]


def toy_task(values):
    items = tuple(FurnitureItem(i + 1, c, k, v, "bill" if i < 2 else "kim")
                  for i, ((c, k), v) in enumerate(zip(TOY, values)))
    return Task(None, ("bill", "kim"), items)


def exhaustive_best(task, capacity=1):
    best = 0
    slots = 2 * capacity
    for n in range(slots + 1):
        for combo in itertools.permutations(range(len(task.items)), n):
            best = max(best, sum(task.items[i].value for i in combo))
    return best


@pytest.mark.parametrize("seed", range(40))
def test_toy_instance_reaches_exhaustive_optimum(seed):
    values = np.random.default_rng(seed).integers(10, 57, size=4).tolist()
    task = toy_task(values)
    t = simulate(task, 16, seed, costs=CostParams(), capacity=1)
    assert t.raw_score == exhaustive_best(task)
    top_two = sorted(values, reverse=True)[:2]
    assert sorted(task.utility(o) for o in t.state.mutual_intentions) == sorted(top_two)


def test_empty_inventories_close_immediately():
    task = Task(None, ("bill", "kim"), ())
    t = simulate(task, 16, 0)
    assert t.raw_score == 0
    assert [type(a) for a in t.acts] == [Close, Close]


# -- counters ---------------------------------------------------------------

def test_messages_equal_acts_for_two_proposal_dialogue():
    task = toy_task([50, 10, 20, 15])
    t = simulate(task, 16, 0, capacity=1)
    props = [a for a in t.acts if isinstance(a, Propose)]
    assert len(props) == 2
    assert t.totals()[0] == len(t.acts)


@pytest.mark.parametrize("strategy", ["all-implicit", "explicit-warrant", "conditional-warrant"])
@pytest.mark.parametrize("radius", [1, 4, 11])
def test_messages_per_speaker_match_transcript(strategy, radius):
    task = generate_task(2)
    t = simulate(task, radius, 5, strategy)
    spoken = Counter(a.speaker for a in t.acts)
    assert {name: c[0] for name, c in t.counters.items()} == dict(spoken)


@pytest.mark.parametrize("radius", [1, 3, 7, 16])
def test_say_counts_per_strategy(radius):
    task = generate_task(6)
    for seed in range(5):
        ai = simulate(task, radius, seed, "all-implicit")
        assert not any(isinstance(a, Say) for a in ai.acts)
        ew = simulate(task, radius, seed, "explicit-warrant")
        says = [a for a in ew.acts if isinstance(a, Say)]
        proposals = [a for a in ew.acts if isinstance(a, (Propose, Reject))]
        assert len(says) == len(proposals)
        # each say immediately precedes the proposal it warrants
        for i, act in enumerate(ew.acts):
            if isinstance(act, Say):
                assert ew.acts[i + 1].option == act.option


@pytest.mark.parametrize("radius", [2, 6, 16])
def test_accepted_options_read_off_the_transcript(radius):
    task = generate_task(1)
    for seed in range(5):
        t = simulate(task, radius, seed, "explicit-warrant")
        accepted, pending = infer_implicit_acceptance(t.acts)
        assert pending is None
        assert tuple(accepted) == t.state.mutual_intentions


def test_dialogue_completes_design_at_full_radius():
    task = generate_task(0)
    t = simulate(task, 16, 0)
    assert t.state.complete
    assert len(t.state.placed) == 8


# -- determinism and replay -------------------------------------------------

def test_same_seed_same_transcript():
    task = generate_task(4)
    a = simulate(task, 5, 123, "explicit-warrant")
    b = simulate(task, 5, 123, "explicit-warrant")
    assert a.to_text() == b.to_text()
    assert a.counters == b.counters


def test_transcript_parses_back():
    task = generate_task(4)
    t = simulate(task, 3, 8, "explicit-warrant")
    assert parse_transcript(t.to_text()) == t.turns


def test_replay_reconstructs_counters():
    task = generate_task(9)
    live = Agent("bill", 4, 1), Agent("kim", 4, 2)
    for a in live:
        a.initialize_beliefs(task)
    t = run_dialogue(*live, task)
    again = Agent("bill", 4, 1), Agent("kim", 4, 2)
    for a in again:
        a.initialize_beliefs(task)
    replayed = run_dialogue(*again, task)
    assert replayed.turns == t.turns
    assert [a.counters() for a in again] == [a.counters() for a in live]


def test_proposals_alternate_speakers():
    task = generate_task(7)
    t = simulate(task, 16, 3)
    speakers = [a.speaker for a in t.acts if isinstance(a, (Propose, Reject, Close))]
    assert all(x != y for x, y in zip(speakers, speakers[1:]))
