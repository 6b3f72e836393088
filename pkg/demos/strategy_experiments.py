"""Explicit-Warrant vs All-Implicit under three cost regimes.

Runs one 3200-dialogue batch (100 per strategy and AWM 1..16) and re-costs
it three ways: cheap retrieval, retrieval at .01 per locus, and expensive
messages.  Prints the mean difference and KS test per AWM and the verdict.
Takes about ten seconds on one core.

    python3 demos/strategy_experiments.py
"""

from designworld import CostParams, classify, compare, recost, run_batch

SETTINGS = [
    ("commcost 1, infcost 1, retcost 0", CostParams(1, 1, 0)),
    ("commcost 1, infcost 1, retcost .01", CostParams(1, 1, "0.01")),
    ("commcost 10, infcost 0, retcost 0", CostParams(10, 0, 0)),
]


def main():
    records = run_batch("explicit-warrant", "all-implicit", range(1, 17), SETTINGS[0][1], runs=100)
    for title, costs in SETTINGS:
        summary = compare(recost(records, costs), "explicit-warrant", "all-implicit")
        print(f"== {title}")
        print("  awm  mean diff     D      p")
        for r in summary.rows:
            mark = "*" if r.p < 0.05 else " "
            print(f"  {r.awm:3d} {r.mean_diff:10.1f} {r.ks_d:6.2f} {r.p:8.4f} {mark}")
        print(f"  verdict for explicit-warrant: {classify(summary)}\n")


if __name__ == "__main__":
    main()
