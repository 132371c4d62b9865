"""Tabulate truncated spectrum sizes against the brute-force functional oracle.

Usage: python scripts/spectrum_counts.py
Prints structure, bound, point count, functional count and whether the
restriction map is a bijection.
"""

from oligohilb.errors import LimitExceeded
from oligohilb.spectrum import spectrum_oracle
from oligohilb.structure import build

CASES = [("pure_set", range(0, 4)), ("dlo", range(0, 4)), ("rado", range(0, 4)), ("vec2", (1, 2, 4)), ("vec3", (1, 3))]


def main():
    print(f"{'structure':10} {'bound':>5} {'points':>7} {'functionals':>11}  bijection")
    for name, bounds in CASES:
        M = build(name)
        for b in bounds:
            try:
                r = spectrum_oracle(M, b)
            except LimitExceeded as exc:
                print(f"{name:10} {b:>5}  skipped: {exc.detail}")
                continue
            print(f"{name:10} {b:>5} {r['points']:>7} {r['functionals']:>11}  {r['bijection_ok']}")


if __name__ == "__main__":
    main()
