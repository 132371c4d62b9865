"""Arithmetic in GF(q) for small prime powers q.

Field elements are the integers 0..q-1; the base-p digits of an integer are
the coefficients of a polynomial reduced modulo a fixed irreducible of degree k.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, k) with q == p**k, or None if q is not a prime power."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, r = 0, q
    while r % p == 0:
        r //= p
        k += 1
    return (p, k) if r == 1 else None


def _poly_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    k = len(mod) - 1
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    # mod is monic of degree k
    for d in range(len(out) - 1, k - 1, -1):
        c = out[d]
        if c:
            for j in range(k + 1):
                out[d - k + j] = (out[d - k + j] - c * mod[j]) % p
    return (out + [0] * k)[:k]


def _is_irreducible(poly: list[int], p: int) -> bool:
    k = len(poly) - 1
    for d in range(1, k // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            div = list(tail) + [1]
            rem = poly[:]
            for i in range(len(rem) - 1, d - 1, -1):
                c = rem[i]
                if c:
                    for j in range(d + 1):
                        rem[i - d + j] = (rem[i - d + j] - c * div[j]) % p
            if not any(rem[:d]):
                return False
    return True


class GF:
    """Addition and multiplication tables for GF(q)."""

    def __init__(self, q: int):
        pk = prime_power(q)
        if pk is None:
            raise ValueError(f"q={q} is not a prime power")
        self.q = q
        self.p, self.k = p, k = pk
        digits = [self._digits(a) for a in range(q)]
        if k == 1:
            self.add = [[(a + b) % p for b in range(q)] for a in range(q)]
            self.mul = [[(a * b) % p for b in range(q)] for a in range(q)]
        else:
            mod = next(
                list(t) + [1]
                for t in itertools.product(range(p), repeat=k)
                if t[0] and _is_irreducible(list(t) + [1], p)
            )
            self.add = [
                [self._number([(x + y) % p for x, y in zip(digits[a], digits[b])]) for b in range(q)]
                for a in range(q)
            ]
            self.mul = [
                [self._number(_poly_mulmod(digits[a], digits[b], mod, p)) for b in range(q)]
                for a in range(q)
            ]
        self.neg = [self.add[a].index(0) for a in range(q)]
        self.inv = [0] + [self.mul[a].index(1) for a in range(1, q)]

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def _number(self, digits: list[int]) -> int:
        return sum(d * self.p**i for i, d in enumerate(digits))

    def sub(self, a: int, b: int) -> int:
        return self.add[a][self.neg[b]]


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    return GF(q)


def rref(rows: list[list[int]], F: GF) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over F; returns (nonzero rows, pivot columns)."""
    m = [r[:] for r in rows]
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = F.inv[m[r][c]]
        m[r] = [F.mul[inv][x] for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [F.sub(x, F.mul[f][y]) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(matrix: list[list[int]], ncols: int, F: GF) -> list[tuple[int, ...]]:
    """Canonical basis (in reduced echelon form) of {c : matrix @ c == 0}."""
    red, pivots = rref(matrix, F) if matrix else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(red, pivots):
            v[pc] = F.neg[row[f]]
        basis.append(v)
    if not basis:
        return []
    red_basis, _ = rref(basis, F)
    return [tuple(r) for r in red_basis]
