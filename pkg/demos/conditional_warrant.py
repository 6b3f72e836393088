"""Fit an accessibility table from experiments and use it to decide warrants.

The Conditional-Warrant speaker includes a warrant only when, judging by its
own memory, the hearer could not reach the score or could only reach it
from a distance band where the fitted table says stating it pays off.

    python3 demos/conditional_warrant.py
"""

import numpy as np

from designworld import CostParams, recost, run_batch
from designworld.planop import BAND_NAMES, band_of, fit_matrix


def band_means(records, strategy):
    return {b: np.mean([float(r.performance) for r in records if r.strategy == strategy and band_of(r.awm) == b])
            for b in BAND_NAMES}


def main():
    base = run_batch("explicit-warrant", "all-implicit", range(1, 17), CostParams(1, 1, 0), runs=100)
    fits = {(1, 0): base, (1, "0.01"): recost(base, CostParams(1, 1, "0.01"))}
    matrix = fit_matrix(fits)
    print("Fitted table (True = say the warrant):")
    print(matrix.to_text())
    for (c, r), records in fits.items():
        costs = CostParams(c, 1, r)
        cw = run_batch("conditional-warrant", "all-implicit", range(1, 17), costs, runs=100, matrix=matrix)
        means = {"explicit-warrant": band_means(records, "explicit-warrant"),
                 "all-implicit": band_means(records, "all-implicit"),
                 "conditional-warrant": band_means(cw, "conditional-warrant")}
        print(f"== {costs}")
        print("  band  " + "  ".join(f"{s:>20s}" for s in means))
        for b in BAND_NAMES:
            print(f"  {b:5s} " + "  ".join(f"{means[s][b]:20.1f}" for s in means))
        print()


if __name__ == "__main__":
    main()
