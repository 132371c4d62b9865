"""Exact Gaussian rationals a + b i with a, b in Q."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


@dataclass(frozen=True, slots=False)
class GaussRat:
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def of(cls, x) -> "GaussRat":
        if isinstance(x, GaussRat):
            return x
        if isinstance(x, (int, Rational)) and not isinstance(x, bool):
            return cls(Fraction(x))
        raise TypeError(f"cannot make an exact coefficient from {x!r}")

    def __add__(self, other):
        o = GaussRat.of(other)
        return GaussRat(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussRat.of(other))

    def __rsub__(self, other):
        return GaussRat.of(other) - self

    def __mul__(self, other):
        try:
            o = GaussRat.of(other)
        except TypeError:
            return NotImplemented
        return GaussRat(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = GaussRat.of(other)
        n = o.abs2()
        if n == 0:
            raise ZeroDivisionError("division by zero coefficient")
        return self * GaussRat(o.re / n, -o.im / n)

    def __eq__(self, other):
        try:
            o = GaussRat.of(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re or self.im)

    def conj(self) -> "GaussRat":
        return GaussRat(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def __repr__(self):
        return f"GaussRat({self})"

    def to_json(self) -> dict:
        return {"re": str(self.re), "im": str(self.im)}

    @classmethod
    def from_json(cls, d: dict) -> "GaussRat":
        return cls(Fraction(d["re"]), Fraction(d["im"]))

    @classmethod
    def parse(cls, text: str) -> "GaussRat":
        m = re.fullmatch(r"\s*(-?\d+(?:/\d+)?)\s*(?:([+-])\s*(\d+(?:/\d+)?)\s*i)?\s*", text)
        if not m:
            raise ValueError(f"not a Gaussian rational: {text!r}")
        im = Fraction(m.group(3)) if m.group(3) else Fraction(0)
        return cls(Fraction(m.group(1)), -im if m.group(2) == "-" else im)


ZERO = GaussRat()
ONE = GaussRat(1)
I = GaussRat(0, 1)
