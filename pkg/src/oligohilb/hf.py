"""Sparse naturals for the BIT graph.

A natural n is identified with the set of positions of its 1-bits, so i ~ j
in the BIT graph iff one is a member of the other. Vertices built by chained
extension grow like towers of exponentials, so past a size threshold a vertex
is stored as the frozenset of its members instead of as an int. The
representation is canonical: ints below 2**HUGE_BITS, HugeVertex otherwise.
"""

from __future__ import annotations

import math
from functools import total_ordering
from typing import Iterable

HUGE_BITS = 256


@total_ordering
class HugeVertex:
    """A natural >= 2**HUGE_BITS, given by its 1-bit positions."""

    __slots__ = ("members", "_desc", "_hash")

    def __init__(self, members: Iterable):
        ms = frozenset(members)
        self.members = ms
        self._desc = sorted(ms, key=_Key, reverse=True)
        self._hash = hash(("HugeVertex", ms))

    def __eq__(self, other):
        return isinstance(other, HugeVertex) and self.members == other.members

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        if isinstance(other, bool):
            return NotImplemented
        if isinstance(other, int):
            return False
        if not isinstance(other, HugeVertex):
            return NotImplemented
        return compare(self, other) < 0

    def __repr__(self):
        return format_vertex(self)


class _Key:
    __slots__ = ("v",)

    def __init__(self, v):
        self.v = v

    def __lt__(self, other):
        return compare(self.v, other.v) < 0


def is_vertex(v) -> bool:
    return (isinstance(v, int) and not isinstance(v, bool) and v >= 0) or isinstance(v, HugeVertex)


def compare(a, b) -> int:
    """Numeric comparison of two vertices."""
    ai, bi = isinstance(a, int), isinstance(b, int)
    if ai and bi:
        return (a > b) - (a < b)
    if ai:
        return -1
    if bi:
        return 1
    for x, y in zip(a._desc, b._desc):
        c = compare(x, y)
        if c:
            return c
    return (len(a._desc) > len(b._desc)) - (len(a._desc) < len(b._desc))


def member(a, b) -> bool:
    """Whether bit a of b is set."""
    if isinstance(b, int):
        return isinstance(a, int) and bool((b >> a) & 1)
    return a in b.members


def from_members(ms: Iterable):
    """The vertex whose 1-bits sit at the given positions (canonical form)."""
    ms = set(ms)
    if all(isinstance(m, int) and m < HUGE_BITS for m in ms):
        return sum(1 << m for m in ms)
    return HugeVertex(ms)


def canon(n: int):
    """Canonical form of a plain int."""
    if n.bit_length() <= HUGE_BITS:
        return n
    return HugeVertex(i for i in range(n.bit_length()) if (n >> i) & 1)


def index(v):
    """Position in the natural enumeration; math.inf for huge vertices."""
    return v if isinstance(v, int) else math.inf


def format_vertex(v) -> str:
    if isinstance(v, int):
        return str(v)
    return "{" + ",".join(format_vertex(m) for m in reversed(v._desc)) + "}"
