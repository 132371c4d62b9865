"""Double-coset counts for initial segments A, B of each builtin.

Usage: python scripts/double_coset_table.py [max_size]
Entry (i, j) is the number of double cosets for the first i and the first j
elements of the enumeration; every entry is finite.
"""

import sys

from oligohilb.cosets import double_cosets
from oligohilb.structure import build


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    for name in ("pure_set", "dlo", "rado", "vec2", "vec3"):
        M = build(name)
        pool = M.enumerate_elements(n)
        print(name)
        for i in range(n + 1):
            row = [double_cosets(M, M.acl(pool[:i]), M.acl(pool[:j])).count for j in range(n + 1)]
            print("  " + " ".join(f"{c:>6}" for c in row))


if __name__ == "__main__":
    main()
