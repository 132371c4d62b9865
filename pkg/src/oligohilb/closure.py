"""Algebraic closure, its orbit-counting estimator, and relative index."""

from __future__ import annotations

from typing import TYPE_CHECKING, Iterable

from .elements import INFINITE, as_set

if TYPE_CHECKING:
    from .structure import Structure


def acl(M: "Structure", A: Iterable) -> tuple:
    """Closed-form algebraic closure (span for vector spaces, identity otherwise)."""
    return M.acl(A)


def acl_generic(M: "Structure", A: Iterable, bound: int) -> tuple:
    """Elements among the first ``bound`` whose G_A-orbit is finite.

    Finiteness comes from ``realizations``, i.e. from the structure's exact
    orbit rule on type codes, never from counting; so this is an independent
    route to acl used to cross-check :func:`acl`.
    """
    A = as_set(A)
    if A and bound <= max(M.index_of(a) for a in A):
        raise ValueError("bound must exceed the index of every element of A")
    return as_set(
        b for b in M.enumerate_elements(bound)
        if M.realizations(A, M.tuple_type(A + (b,))) is not INFINITE
    )


def is_acl_closed(M: "Structure", A: Iterable) -> bool:
    A = as_set(A)
    return M.acl(A) == A


def relative_index(M: "Structure", A: Iterable, B: Iterable):
    """Size of the G_A-orbit of the tuple B, as an int, or INFINITE.

    Walks B one point at a time; the orbit is infinite as soon as one point is
    non-algebraic over A and the earlier points of B.
    """
    A, B = as_set(A), as_set(B)
    frontier: list[tuple] = [()]
    for i in range(len(B)):
        code = M.tuple_type(A + B[: i + 1])
        nxt = []
        for c in frontier:
            r = M.realizations(A + c, code)
            if r is INFINITE:
                return INFINITE
            nxt += [c + (y,) for y in r]
        frontier = nxt
    return len(frontier)
