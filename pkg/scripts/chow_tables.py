"""Print Chow-group tables for a range of symbols, cross-checking the
closed form against the triangle recurrence.

    python3 scripts/chow_tables.py --primes 2 3 5 --max-n 3
"""

import argparse

from rostcalc.rostchow import closed_form, compare
from rostcalc.splitring import make_params


def show(p, n):
    params = make_params(p, n)
    agree, diffs = compare(params)
    table = closed_form(params)
    tag = "ok" if agree else f"MISMATCH ({len(diffs)})"
    print(f"p={p} n={n}  b={params.b} d={params.d}  [{tag}]")
    for j in table.nonzero():
        desc = table.entries[j]
        extra = ""
        if desc.kind == "p_free":
            extra = f"  (k={desc.k})"
        elif desc.kind == "cyclic_p":
            extra = f"  (k={desc.k}, i={desc.i})"
        print(f"  CH^{j}: {desc.kind}{extra}")
    print()


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--primes", type=int, nargs="+", default=[2, 3, 5, 7])
    ap.add_argument("--max-n", type=int, default=3)
    args = ap.parse_args()
    for p in args.primes:
        for n in range(1, args.max_n + 1):
            show(p, n)


if __name__ == "__main__":
    main()
