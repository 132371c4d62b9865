"""The coset algebra: finite formal sums of indicators e_s of open cosets.

``e_s`` is the function on the automorphism group that is 1 at g iff g extends
s. Elements are immutable maps PartialAuto -> GaussRat. Structural equality
(``==``) compares the formal sums; use :func:`same_function` to compare the
functions they denote.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

from .coefficients import ZERO, GaussRat
from .errors import InsufficientSupport, UndecidedDomain
from .partials import EMPTY, PATTERN_LIMIT, PartialAuto, algebraic_extensions, compose, extends, inverse, join, realizable_patterns

if TYPE_CHECKING:
    from .structure import Structure


class AlgebraElement:
    __slots__ = ("terms", "normalized", "_hash")

    def __init__(self, terms=(), normalized: bool = False):
        acc: dict[PartialAuto, GaussRat] = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for s, c in items:
            acc[s] = acc.get(s, ZERO) + GaussRat.of(c)
        self.terms = {s: acc[s] for s in sorted(acc, key=PartialAuto.sort_key) if acc[s]}
        self.normalized = normalized
        self._hash = None

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def keys(self) -> list[PartialAuto]:
        return list(self.terms)

    def coefficient(self, s: PartialAuto) -> GaussRat:
        return self.terms.get(s, ZERO)

    def __add__(self, other: "AlgebraElement"):
        return AlgebraElement(
            list(self.terms.items()) + list(other.terms.items()),
            self.normalized and other.normalized,
        )

    def __neg__(self):
        return AlgebraElement({s: -c for s, c in self.terms.items()}, self.normalized)

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        c = GaussRat.of(scalar)
        return AlgebraElement({s: c * v for s, v in self.terms.items()}, self.normalized)

    def __eq__(self, other):
        return isinstance(other, AlgebraElement) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*e{s!r}" for s, c in self.terms.items())


def e(s: PartialAuto = EMPTY, coeff=1) -> AlgebraElement:
    return AlgebraElement({s: coeff})


def zero() -> AlgebraElement:
    return AlgebraElement()


def one() -> AlgebraElement:
    return e(EMPTY)


def multiply(M: "Structure", f: AlgebraElement, g: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of e_s * e_t = e_(s u t), or 0 when s, t have no common extension."""
    out = []
    for s, a in f:
        for t, b in g:
            j = join(M, s, t)
            if j is not None:
                out.append((j, a * b))
    return AlgebraElement(out)


def canonical_form(M: "Structure", f: AlgebraElement) -> AlgebraElement:
    """Rewrite every e_s as the sum of e_t over extensions t of s to acl(dom s)."""
    if f.normalized:
        return f
    out = []
    for s, c in f:
        for t in algebraic_extensions(M, s, M.acl(s.domain)):
            out.append((t, c))
    return AlgebraElement(out, normalized=True)


def same_function(M: "Structure", f: AlgebraElement, g: AlgebraElement) -> bool:
    return canonical_form(M, f) == canonical_form(M, g)


def evaluate_at(f: AlgebraElement, g: PartialAuto) -> GaussRat:
    """f(g) for any automorphism extending the finite witness g."""
    total = ZERO
    for s, c in f:
        if any(x not in g for x in s.domain):
            raise UndecidedDomain(f"witness {g!r} does not cover {s!r}")
        if extends(g, s):
            total = total + c
    return total


def star(f: AlgebraElement) -> AlgebraElement:
    """f*(g) = conj(f(g^-1)): e_s -> e_(s^-1) with conjugated coefficient."""
    return AlgebraElement({inverse(s): c.conj() for s, c in f}, f.normalized)


def conj(f: AlgebraElement) -> AlgebraElement:
    return AlgebraElement({s: c.conj() for s, c in f}, f.normalized)


def group_act(g: PartialAuto, f: AlgebraElement) -> AlgebraElement:
    """(g.f)(h) = f(g^-1 h): e_s -> e_(g o s)."""
    out = []
    for s, c in f:
        if any(y not in g for y in s.images):
            raise InsufficientSupport(f"{g!r} does not cover the range of {s!r}")
        out.append((compose(g, s), c))
    return AlgebraElement(out)


def pattern_sums(M: "Structure", f: AlgebraElement, limit: int = PATTERN_LIMIT) -> dict[frozenset, GaussRat]:
    """Value of f on each realizable truth pattern of its keys (its full range of values)."""
    keys = f.keys()
    coeffs = [f.terms[s] for s in keys]
    return {
        S: sum((coeffs[i] for i in S), ZERO)
        for S in realizable_patterns(M, keys, limit)
    }


@dataclass(frozen=True)
class NormReport:
    value: Fraction
    pattern: frozenset
    is_real: bool
    is_pointwise_nonneg: bool


def sup_norm_sq(M: "Structure", f: AlgebraElement, limit: int = PATTERN_LIMIT) -> NormReport:
    """Exact ||f||_inf^2 together with a pattern attaining it."""
    sums = pattern_sums(M, f, limit)
    best = min(sums, key=lambda S: (-sums[S].abs2(), len(S), sorted(S)))
    is_real = all(v.is_real for v in sums.values())
    return NormReport(
        value=sums[best].abs2(),
        pattern=best,
        is_real=is_real,
        is_pointwise_nonneg=is_real and all(v.re >= 0 for v in sums.values()),
    )
