"""Compare the closed forms against the brute-force oracle over a range of family data.

Example: python scripts/oracle_sweep.py --g 0 --h 0 1 2 --kmax 6
"""

import argparse
import sys
import time

from hurwitz_dessins.branch_data import expand, family_data
from hurwitz_dessins.closed_form import nu
from hurwitz_dessins.oracle import BOTH, OracleCache, oracle_counts


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--g", type=int, default=0)
    ap.add_argument("--h", type=int, nargs="+", default=[0, 1, 2])
    ap.add_argument("--kmin", type=int, default=1)
    ap.add_argument("--kmax", type=int, default=6)
    ap.add_argument("--cache", default=None)
    args = ap.parse_args()

    cache = OracleCache(args.cache) if args.cache else None
    mismatches = 0
    for h in args.h:
        for k in range(args.kmin, args.kmax + 1):
            for fd in family_data(args.g, h, k):
                b = expand(fd)
                t0 = time.perf_counter()
                counts = cache.get(b, BOTH) if cache is not None else None
                if counts is None:
                    counts = oracle_counts(b, BOTH)
                    if cache is not None:
                        cache.put(b, BOTH, counts)
                f = nu(fd)
                mark = "" if f == counts.weak else "  <-- mismatch"
                mismatches += f != counts.weak
                print(
                    f"{fd}  formula={f} weak={counts.weak} conj={counts.conj_orbits}"
                    f" {time.perf_counter() - t0:.2f}s{mark}"
                )
    print(f"{mismatches} mismatches")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
