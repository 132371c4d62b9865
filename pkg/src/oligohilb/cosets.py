"""Open cosets in canonical form, double cosets and tensor bookkeeping.

With weak elimination of imaginaries every open subgroup U sits between the
pointwise stabilizer G_A and the setwise stabilizer G_(A) of a unique finite
algebraically closed A, so it is recorded as (A, H) with H <= Aut(A): U is the
set of g whose restriction to A lies in H.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable

from .algebra import AlgebraElement
from .elements import as_set
from .errors import NotAclClosed, NotPartialIso
from .partials import PartialAuto, algebraic_extensions, compose, join

if TYPE_CHECKING:
    from .structure import Structure


@dataclass(frozen=True)
class OpenSubgroup:
    base: tuple
    local_group: tuple[PartialAuto, ...]

    @property
    def is_stabilizer(self) -> bool:
        return len(self.local_group) == 1


@dataclass(frozen=True)
class OpenCoset:
    translate: PartialAuto
    subgroup: OpenSubgroup

    def __post_init__(self):
        if self.translate.domain != self.subgroup.base:
            raise ValueError("translate must be defined exactly on the subgroup base")


@dataclass(frozen=True)
class DoubleCosetTable:
    left: tuple
    right: tuple
    representatives: tuple[PartialAuto, ...]

    @property
    def count(self) -> int:
        return len(self.representatives)


def aut_of(M: "Structure", A: Iterable) -> list[PartialAuto]:
    """Aut(A): all bijections of A that preserve types, by backtracking."""
    A = as_set(A)
    out = []

    def rec(t: PartialAuto):
        if len(t) == len(A):
            out.append(t)
            return
        x = A[len(t)]
        for y in A:
            if y in t.images:
                continue
            u = t.add(x, y)
            if M.same_type(u.domain, u.images):
                rec(u)

    rec(PartialAuto())
    return sorted(out, key=PartialAuto.sort_key)


def canonical_subgroup(M: "Structure", A: Iterable) -> OpenSubgroup:
    """Canonical (base, H) form of the pointwise stabilizer G_A."""
    A = as_set(A)
    base = M.acl(A)
    fixed = set(A)
    local = [s for s in aut_of(M, base) if all(s(a) == a for a in fixed)]
    return OpenSubgroup(base, tuple(local))


def stabilizer_coset(M: "Structure", s: PartialAuto) -> OpenCoset:
    """The coset of all g extending s; dom(s) must be acl-closed."""
    if M.acl(s.domain) != s.domain:
        raise NotAclClosed(f"{s.domain!r} is not algebraically closed")
    return OpenCoset(s, canonical_subgroup(M, s.domain))


def coset_intersect(M: "Structure", c1: OpenCoset, c2: OpenCoset) -> OpenCoset | None:
    """Intersection of two stabilizer cosets, or None when empty."""
    if not (c1.subgroup.is_stabilizer and c2.subgroup.is_stabilizer):
        raise ValueError("coset_intersect takes stabilizer cosets; expand others with coset_indicator")
    j = join(M, c1.translate, c2.translate)
    if j is None:
        return None
    sub = canonical_subgroup(M, c1.subgroup.base + c2.subgroup.base)
    # every extension of j to the closure differs by an element of sub.local_group
    translate = algebraic_extensions(M, j, sub.base)[0]
    return OpenCoset(translate, sub)


def coset_indicator(c: OpenCoset) -> AlgebraElement:
    """Indicator of sU as the sum of e_(s o sigma) over sigma in H."""
    return AlgebraElement([(compose(c.translate, sigma), 1) for sigma in c.subgroup.local_group])


def _joint_configurations(M: "Structure", A: tuple, B: tuple) -> list[tuple]:
    """Tuples c with type(c) = type(B), one for each type of A + c.

    Each point is chosen among ``one_point_candidates``, which realize every
    1-type over the current parameters; by homogeneity every joint type of
    A + g(B) is therefore reached.
    """
    frontier: list[tuple] = [()]
    for i in range(len(B)):
        target = M.tuple_type(B[: i + 1])
        nxt = {}
        for c in frontier:
            for y in M.one_point_candidates(A + c):
                if y in c:
                    continue
                d = c + (y,)
                if M.tuple_type(d) != target:
                    continue
                nxt.setdefault(M.tuple_type(A + d), d)
        frontier = list(nxt.values())
    return frontier


def double_cosets(M: "Structure", A: Iterable, B: Iterable) -> DoubleCosetTable:
    """G_A \\ G / G_B via the orbits of G_A on copies g(B)."""
    A, B = as_set(A), as_set(B)
    reps = [PartialAuto(zip(B, c)) for c in _joint_configurations(M, A, B)]
    for r in reps:
        if not M.same_type(r.domain, r.images):
            raise NotPartialIso(f"bad representative {r!r}")
    return DoubleCosetTable(A, B, tuple(sorted(reps, key=PartialAuto.sort_key)))


def tensor_decompose(M: "Structure", A: Iterable, B: Iterable) -> list[tuple[PartialAuto, tuple]]:
    """Summand bases A u f(B), one per double-coset representative f.

    The summand for f carries the stabilizer of A u f(B), which is
    G_A intersected with f G_B f^-1.
    """
    table = double_cosets(M, A, B)
    return [(f, as_set(table.left + f.images)) for f in table.representatives]


__all__ = [
    "OpenSubgroup",
    "OpenCoset",
    "DoubleCosetTable",
    "aut_of",
    "canonical_subgroup",
    "stabilizer_coset",
    "coset_intersect",
    "coset_indicator",
    "double_cosets",
    "tensor_decompose",
]
