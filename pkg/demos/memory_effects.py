"""How a bounded attention radius shapes what an agent can recall.

Stores facts while the pointer wanders, then shows recency (new facts are
cheap to find), frequency (repeated facts are found more often) and the
all-or-nothing cost of a failed search.

    python3 demos/memory_effects.py
"""

from designworld.awm import SCORE, MemoryStore, Proposition, sphere


def store_sequence(radius, seed, keys):
    m = MemoryStore(radius, seed)
    for key in keys:
        m.store(Proposition(SCORE, key, 30))
    return m


def main():
    print("Loci inside the attention sphere by radius:")
    for r in (0, 1, 2, 3, 5, 8, 16):
        print(f"  radius {r:2d}: {len(sphere((0, 0, 0), r)):5d} loci")

    trials = 1000
    facts = [f"fact-{i}" for i in range(20)]
    newest = oldest = 0
    for seed in range(trials):
        m = store_sequence(3, seed, facts)
        newest += m.retrieve(SCORE, "fact-19")[0] is not None
        oldest += m.retrieve(SCORE, "fact-0")[0] is not None
    print(f"\nRecency at radius 3, 20 facts stored, {trials} walks:")
    print(f"  newest fact recalled {newest} times, oldest {oldest} times")

    once = thrice = 0
    for seed in range(trials):
        seq1 = [("x" if i == 9 else f"fact-{i}") for i in range(20)]
        seq3 = [("x" if i in (4, 9, 14) else f"fact-{i}") for i in range(20)]
        once += store_sequence(3, seed, seq1).retrieve(SCORE, "x")[0] is not None
        thrice += store_sequence(3, seed, seq3).retrieve(SCORE, "x")[0] is not None
    print("\nFrequency on the same walks:")
    print(f"  stored once: {once}, stored three times: {thrice}")

    m = store_sequence(3, 0, facts)
    hit, cost_hit = m.retrieve(SCORE, "fact-19")
    miss, cost_miss = m.retrieve(SCORE, "never-stored")
    print("\nSearch cost in loci:")
    print(f"  newest fact: {cost_hit}; missing fact: {cost_miss} (the whole radius-3 sphere)")


if __name__ == "__main__":
    main()
