"""Element ordering shared by every structure.

Elements are plain Python values: ``int`` for pure_set and rado, ``Fraction``
for dlo, and tuples of field digits (trailing zeros stripped) for vector_space.
``element_key`` orders each kind exactly as its structure enumerates it.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable

Element = Hashable


def element_key(e):
    if isinstance(e, Fraction):
        p, q = e.numerator, e.denominator
        return (max(abs(p), q), q, abs(p), p < 0)
    if isinstance(e, tuple):
        return (len(e), e[::-1])
    return (e,)


def as_set(elements: Iterable) -> tuple:
    """Duplicate-free tuple in enumeration order (the FiniteSet representation)."""
    return tuple(sorted(set(elements), key=element_key))


class _Infinite:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"

    def __reduce__(self):
        return (_Infinite, ())


INFINITE = _Infinite()
