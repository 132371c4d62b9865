"""Run every acceptance criterion and print one pass/fail line each.

Usage: python scripts/run_acceptance.py [--seed N] [--criterion K ...]
Exit status is 0 iff every selected criterion passes.
"""

import argparse
import sys

from oligohilb.checks import CRITERIA


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--criterion", type=int, action="append", choices=sorted(CRITERIA))
    a = p.parse_args()
    ok = True
    for k in a.criterion or sorted(CRITERIA):
        r = CRITERIA[k](a.seed)
        print(r.line(), flush=True)
        ok &= r.passed
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
