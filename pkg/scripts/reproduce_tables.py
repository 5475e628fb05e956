"""Recompute the k=6 and k=7 tables and compare them cell by cell with the golden copies."""

import argparse
import sys

from hurwitz_dessins.tables import GOLDEN_KS, check_table, render_table, table_rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--format", choices=["text", "md"], default="md")
    args = ap.parse_args()
    ok = True
    for k in GOLDEN_KS:
        print(f"## k = {k}\n")
        print(render_table(table_rows(k), args.format))
        chk = check_table(k)
        print(chk.summary() + "\n")
        ok &= chk.passed
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
