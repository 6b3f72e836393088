"""One negotiation, printed turn by turn.

Two agents with the same memory seed negotiate the same floor plan, first
without warrants and then stating every warrant.  At a small radius the
second dialogue is longer but the agents can weigh proposals they would
otherwise accept blindly.

    python3 demos/single_dialogue.py [radius] [seed]
"""

import sys

from designworld import CostParams, generate_task, simulate


def show(title, transcript, costs):
    messages, inferences, retrievals = transcript.totals()
    print(f"== {title}")
    print(transcript.to_text(), end="")
    print(f"raw score {transcript.raw_score}; messages {messages}, inferences {inferences}, "
          f"loci searched {retrievals}")
    for room, items in zip(("room-1", "room-2"), transcript.state.rooms):
        print(f"  {room}: {', '.join(items) or '-'}")
    print()


def main(argv):
    radius = int(argv[0]) if argv else 3
    seed = int(argv[1]) if len(argv) > 1 else 7
    task = generate_task(0)
    costs = CostParams(1, 1, "0.01")
    print(f"task seed 0, radius {radius}, dialogue seed {seed}\n")
    for strategy in ("all-implicit", "explicit-warrant"):
        show(strategy, simulate(task, radius, seed, strategy, costs=costs), costs)


if __name__ == "__main__":
    main(sys.argv[1:])
