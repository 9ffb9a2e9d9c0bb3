"""Tally, per ground-set size, how many subsets land in each set class.

The SC*-closed column always equals the total: every c*-open set is also
semi-closed, so the defining test of SC*-closedness never fails.
"""

from __future__ import annotations

import argparse

import numpy as np

from fintopo.claims import subset_table
from fintopo.operators import CLASS_FIELDS


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=4)
    args = ap.parse_args()
    cols = ["n", "pairs"] + list(CLASS_FIELDS)
    print(",".join(cols))
    for n in range(1, args.max_n + 1):
        tab = subset_table(n)
        total = tab["open"].size
        row = [n, total] + [int(np.sum(tab[k])) for k in CLASS_FIELDS]
        print(",".join(map(str, row)))


if __name__ == "__main__":
    main()
