import itertools

import numpy as np
import pytest

from designworld.acts import Close, Propose, Say
from designworld.agent import Accept, Agent, RejectWith
from designworld.awm import SCORE, Proposition, sphere
from designworld.domain import FurnitureItem, Task, apply_acceptance, empty_design, generate_task

COMBOS = [("green", "couch"), ("purple", "couch"), ("red", "lamp"), ("blue", "chair"),
          ("yellow", "table"), ("orange", "sofa"), ("white", "desk"), ("black", "stool"),
          ("green", "rug"), ("purple", "lamp"), ("red", "chair"), ("blue", "rug")]


def make_task(bill_values, kim_values, agents=("bill", "kim")):
    items, n = [], 0
    for owner, values in zip(agents, (bill_values, kim_values)):
        for v in values:
            color, kind = COMBOS[n]
            n += 1
            items.append(FurnitureItem(n, color, kind, v, owner))
    return Task(None, tuple(agents), tuple(items))


def ready(name, task, radius=16, seed=0, strategy="all-implicit"):
    agent = Agent(name, radius, seed, strategy)
    agent.initialize_beliefs(task)
    return agent


# -- initialize_beliefs -----------------------------------------------------

def test_full_radius_sees_all_24_scores():
    task = generate_task(0)
    agent = ready("bill", task)
    facts = [p for p in agent.memory.salient_set() if p.kind == SCORE]
    assert len(facts) == 24
    assert {p.key for p in facts} == {it.id for it in task.items}


@pytest.mark.parametrize("seed", range(10))
def test_radius_one_salience_bounded_by_seven_loci(seed):
    task = generate_task(0)
    agent = ready("bill", task, radius=1, seed=seed)
    near = sphere(agent.memory.pointer, 1)
    in_sphere = sum(len(agent.memory.grid.get(loc, ())) for loc in near)
    salient = agent.memory.salient_set()
    assert len(salient) == in_sphere
    assert len(salient) < 24


def test_same_seed_same_storage_order():
    task = generate_task(1)
    a, b = ready("bill", task, 4, seed=9), ready("bill", task, 4, seed=9)
    assert a.memory.snapshot() == b.memory.snapshot()
    c = ready("bill", task, 4, seed=10)
    assert [p.key for p in a.memory.propositions] != [p.key for p in c.memory.propositions]


# -- evaluate_proposal ------------------------------------------------------

def test_evaluate_newest_fact_costs_one():
    task = make_task([52], [56])
    agent = Agent("kim", 3, 0)
    agent.memory.store(Proposition(SCORE, "green-couch", 52))
    value, cost = agent.evaluate_proposal(task.option("green-couch", "room-1"))
    assert (value, cost) == (52, 1)


def test_evaluate_unreachable_is_none():
    task = make_task([52], [56])
    agent = Agent("kim", 2, 0)
    value, cost = agent.evaluate_proposal(task.option("green-couch", "room-1"))
    assert value is None
    assert cost == len(sphere(agent.memory.pointer, 2))


# -- deliberate -------------------------------------------------------------

def test_better_salient_option_becomes_counter_proposal():
    # bill proposes the green couch; kim knows her purple couch is worth more
    task = make_task([52], [56])
    kim = ready("kim", task)
    proposal = task.option("green-couch", "room-1")
    decision = kim.deliberate(proposal, empty_design(task))
    assert decision == RejectWith(proposal, task.option("purple-couch", "room-1"), 56)


def test_tie_is_accepted():
    task = make_task([52], [52])
    kim = ready("kim", task)
    proposal = task.option("green-couch", "room-1")
    assert kim.deliberate(proposal, empty_design(task)) == Accept(proposal)


def test_no_alternative_is_accepted():
    task = make_task([52], [])
    kim = ready("kim", task)
    proposal = task.option("green-couch", "room-1")
    assert kim.deliberate(proposal, empty_design(task)) == Accept(proposal)


def test_unretrievable_proposal_is_accepted():
    task = make_task([52], [56])
    kim = Agent("kim", 0, 0)
    kim.memory.store(Proposition(SCORE, "purple-couch", 56))
    proposal = task.option("green-couch", "room-1")
    assert kim.deliberate(proposal, empty_design(task)) == Accept(proposal)


def test_counter_is_for_the_same_room():
    task = make_task([52, 10, 10, 10, 10], [56])
    kim = ready("kim", task)
    ids = [it.id for it in task.items]
    state = empty_design(task)
    for i in ids[1:5]:
        state = apply_acceptance(state, task.option(i, "room-1"))
    decision = kim.deliberate(task.option("green-couch", "room-2"), state)
    assert decision.counter.room == "room-2"


@pytest.mark.parametrize("seed", range(6))
def test_scaling_utilities_keeps_decisions(seed):
    rng = np.random.default_rng(seed)
    base = rng.integers(10, 29, size=8).tolist()
    low = make_task(base[:4], base[4:])
    high = make_task([2 * v for v in base[:4]], [2 * v for v in base[4:]])
    for bill_item in low.owned_by("bill"):
        proposal = low.option(bill_item.id, "room-1")
        a = ready("kim", low, 16, seed).deliberate(proposal, empty_design(low))
        b = ready("kim", high, 16, seed).deliberate(proposal, empty_design(high))
        assert type(a) is type(b)
        if isinstance(a, RejectWith):
            assert a.counter == b.counter
            assert b.counter_value == 2 * a.counter_value


@pytest.mark.parametrize("seed", range(15))
def test_full_radius_never_accepts_worse(seed):
    rng = np.random.default_rng(100 + seed)
    task = make_task(rng.integers(10, 57, size=3).tolist(), rng.integers(10, 57, size=3).tolist())
    state = empty_design(task, capacity=2)
    placed = rng.choice([it.id for it in task.items], size=int(rng.integers(0, 3)), replace=False)
    for i, item in enumerate(placed.tolist()):
        state = apply_acceptance(state, task.option(item, "room-1" if i < 2 else "room-2"))
    kim = ready("kim", task, 16, seed)
    for item in task.owned_by("bill"):
        for room in state.open_rooms():
            if item.id in state.placed:
                continue
            proposal = task.option(item.id, room)
            better = [it for it in task.owned_by("kim")
                      if it.id not in state.placed and it.value > item.value]
            decision = kim.deliberate(proposal, state)
            assert isinstance(decision, RejectWith) == bool(better)
            if better:
                assert decision.counter_value == max(it.value for it in better)


def test_deliberation_inference_count():
    task = make_task([30], [40, 20, 50])
    kim = ready("kim", task)
    kim.deliberate(task.option("green-couch", "room-1"), empty_design(task))
    # 3 items x 2 rooms options generated, then 3 same-room comparisons
    assert kim.inferences == 6 + 3


# -- next_move --------------------------------------------------------------

def test_next_move_picks_highest_value():
    task = make_task([54, 56], [])
    bill = ready("bill", task)
    acts = bill.next_move("kim", empty_design(task))
    assert acts == [Propose("bill", "kim", task.option("purple-couch", "room-1"))]


def test_next_move_tie_goes_to_lowest_option():
    task = make_task([40, 40], [])
    acts = ready("bill", task).next_move("kim", empty_design(task))
    assert acts[-1].option.number == 1


def test_next_move_without_options_closes():
    task = make_task([], [30])
    acts = ready("bill", task).next_move("kim", empty_design(task))
    assert len(acts) == 1 and isinstance(acts[0], Close)


def test_explicit_warrant_move_is_two_acts():
    task = make_task([54, 56], [])
    bill = ready("bill", task, strategy="explicit-warrant")
    say, prop = bill.next_move("kim", empty_design(task))
    assert isinstance(say, Say) and isinstance(prop, Propose)
    assert say.option == prop.option and say.value == 56


def test_choose_inference_count():
    task = make_task([54, 56, 20], [])
    bill = ready("bill", task)
    bill.choose(empty_design(task))
    # 6 options generated, 5 comparisons against the running best
    assert bill.inferences == 6 + 5


# -- perceive ---------------------------------------------------------------

def test_heard_warrant_becomes_score_fact():
    task = make_task([52], [56])
    kim = Agent("kim", 2, 0)
    opt = task.option("green-couch", "room-1")
    kim.perceive(Say("bill", "kim", opt.number, opt, 52))
    found, cost = kim.memory.retrieve(SCORE, "green-couch")
    assert found.value == 52 and cost == 1


def test_counters_are_monotone_through_a_dialogue():
    from designworld.dialogue import run_dialogue
    task = generate_task(3)
    a, b = ready("bill", task, 5, 1), ready("kim", task, 5, 2)
    run_dialogue(a, b, task)
    for agent in (a, b):
        assert all(c >= 0 for c in agent.counters())
        assert agent.retrievals == agent.memory.retrieval_counter


def test_brute_force_best_counter_matches_for_every_pair():
    task = make_task([15, 30, 45], [20, 40, 50])
    kim = ready("kim", task)
    for bill_item, room in itertools.product(task.owned_by("bill"), ("room-1", "room-2")):
        decision = kim.deliberate(task.option(bill_item.id, room), empty_design(task))
        best = max(task.owned_by("kim"), key=lambda it: it.value)
        if best.value > bill_item.value:
            assert decision.counter == task.option(best.id, room)
        else:
            assert isinstance(decision, Accept)
