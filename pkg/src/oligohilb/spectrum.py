"""Multiplicative functionals on the coset algebra and the monoid they form.

A point of the spectrum is a partial automorphism u with algebraically closed
domain; it acts on the algebra by phi_u(e_s) = [s <= u]. Convolution of
functionals is composition where defined, and the involution is inversion.
Points with infinite domain are only ever handled through finite closed pieces.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Sequence

from .algebra import AlgebraElement, canonical_form, e, evaluate_at
from .coefficients import ZERO, GaussRat
from .elements import as_set
from .errors import (
    Inconsistent,
    LimitExceeded,
    NonInjective,
    NotAclClosed,
    NotAFunction,
    NotPartialIso,
    Undecided,
)
from .partials import EMPTY, PartialAuto, compose, extends, inverse, join, realizable_patterns, selective_extension

if TYPE_CHECKING:
    from .structure import Structure

SPECTRUM_CAP = 6
ORACLE_CAP = 4


@dataclass(frozen=True)
class SpectrumPoint:
    """``map`` has an acl-closed domain. ``scope`` marks a truncation to the first
    ``scope`` elements of a point that may be larger; None means exact."""

    map: PartialAuto
    scope: int | None = None


@dataclass(frozen=True)
class FunctionalTable:
    assignments: tuple[tuple[PartialAuto, int], ...]
    scope: int | None = None
    _lookup: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        lookup = {}
        for s, bit in self.assignments:
            if s in lookup:
                raise ValueError(f"duplicate assignment for {s!r}")
            if bit not in (0, 1):
                raise ValueError("assignments are 0/1")
            lookup[s] = bit
        object.__setattr__(self, "_lookup", lookup)

    def __getitem__(self, s: PartialAuto) -> int:
        return self._lookup[s]

    def bits(self) -> tuple[int, ...]:
        return tuple(b for _, b in self.assignments)


def point(M: "Structure", u, scope: int | None = None) -> SpectrumPoint:
    """Validate and wrap a map as a spectrum point."""
    u = u if isinstance(u, PartialAuto) else M.partial(u)
    if not M.same_type(u.domain, u.images):
        raise NotPartialIso(f"{u!r} is not a partial isomorphism")
    closure = M.acl(u.domain)
    missing = [b for b in closure if b not in u]
    if missing:
        raise NotAclClosed(f"{missing[0]!r} is algebraic over the domain", missing[0])
    return SpectrumPoint(u, scope)


def _within(M: "Structure", x, scope: int) -> bool:
    return M.index_of(x) < scope


def phi_eval(M: "Structure", u: SpectrumPoint, f: AlgebraElement) -> GaussRat:
    """phi_u(f): the sum of the coefficients of canonical terms below u."""
    total = ZERO
    for s, c in canonical_form(M, f):
        if extends(u.map, s):
            total = total + c
            continue
        if all(x in u.map for x in s.domain):
            continue
        if any(x in u.map and u.map(x) != y for x, y in s.items()):
            continue
        if u.scope is None or all(_within(M, x, u.scope) for x in s.domain):
            continue
        raise Undecided(f"truncated point cannot decide e{s!r}")
    return total


def functional_to_point(M: "Structure", table: FunctionalTable) -> SpectrumPoint:
    """u_phi: the union of the maps phi sends to 1, checked to be a closed partial iso."""
    pairs = [p for s, bit in table.assignments if bit for p in s.items()]
    try:
        u = PartialAuto(pairs)
    except NotAFunction:
        raise
    except NonInjective as exc:
        raise NotPartialIso(str(exc)) from None
    if not M.same_type(u.domain, u.images):
        raise NotPartialIso(f"{u!r} does not preserve types")
    for s, bit in table.assignments:
        if not bit and extends(u, s):
            raise Inconsistent(f"e{s!r} is assigned 0 but lies below {u!r}")
    for b in M.acl(u.domain):
        if b not in u and (table.scope is None or _within(M, b, table.scope)):
            raise NotAclClosed(f"{b!r} is algebraic over the domain but uncovered", b)
    return SpectrumPoint(u, table.scope)


def convolve(u: SpectrumPoint, v: SpectrumPoint) -> SpectrumPoint:
    return SpectrumPoint(compose(u.map, v.map))


def point_star(u: SpectrumPoint) -> SpectrumPoint:
    return SpectrumPoint(inverse(u.map))


def convolve_operator(u: SpectrumPoint, f: AlgebraElement) -> AlgebraElement:
    """The operator f -> (g -> phi_u(g^-1 . f)): e_s -> e_(s o u^-1) when dom(s) <= dom(u)."""
    uinv = inverse(u.map)
    return AlgebraElement(
        [(compose(s, uinv), c) for s, c in f if all(x in u.map for x in s.domain)]
    )


def evaluate_via_witness(M: "Structure", u: SpectrumPoint, f: AlgebraElement) -> tuple[GaussRat, PartialAuto]:
    """Evaluate phi_u(f) as f(g0) for a finite witness g0 of an actual automorphism.

    g0 extends u restricted to the closure of the key domains inside dom(u) and
    extends no other key unless u does.
    """
    keys = f.keys()
    A = as_set(x for s in keys if all(y in u.map for y in s.domain) for x in s.domain)
    base = u.map.restrict(M.acl(A))
    g0 = selective_extension(M, base, keys)
    return evaluate_at(f, g0), g0


def _partial_isos_into(M: "Structure", A: tuple, target: Sequence) -> list[PartialAuto]:
    out = []

    def rec(t: PartialAuto):
        if len(t) == len(A):
            out.append(t)
            return
        x = A[len(t)]
        for y in target:
            if y in t.images:
                continue
            nt = t.add(x, y)
            if M.same_type(nt.domain, nt.images):
                rec(nt)

    rec(EMPTY)
    return out


def enumerate_spectrum(M: "Structure", bound: int, cap: int = SPECTRUM_CAP) -> list[SpectrumPoint]:
    """All points with domain and range among the first ``bound`` elements."""
    if bound > cap:
        raise LimitExceeded(f"bound {bound} exceeds the spectrum cap {cap}")
    elems = M.enumerate_elements(bound)
    out = []
    for k in range(bound + 1):
        for A in itertools.combinations(elems, k):
            A = as_set(A)
            if M.acl(A) == A:
                out += _partial_isos_into(M, A, elems)
    return [SpectrumPoint(u) for u in sorted(out, key=lambda s: (len(s), s.sort_key()))]


def generators(M: "Structure", bound: int) -> list[PartialAuto]:
    """Every finite partial iso with domain and range among the first ``bound`` elements."""
    elems = M.enumerate_elements(bound)
    out = []
    for k in range(bound + 1):
        for A in itertools.combinations(elems, k):
            out += _partial_isos_into(M, as_set(A), elems)
    return sorted(out, key=lambda s: (len(s), s.sort_key()))


def brute_force_functionals(M: "Structure", bound: int, cap: int = ORACLE_CAP) -> list[FunctionalTable]:
    """Exhaustive search for 0/1 assignments on the in-bound generators that are
    multiplicative, send e_empty to 1, and agree on generators that are equal
    as functions. Independent of acl and of :func:`enumerate_spectrum`."""
    if bound > cap:
        raise LimitExceeded(f"bound {bound} exceeds the oracle cap {cap}")
    gens = generators(M, bound)
    n = len(gens)
    index = {s: i for i, s in enumerate(gens)}

    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    both = frozenset({0, 1})
    for i, j in itertools.combinations(range(n), 2):
        if realizable_patterns(M, [gens[i], gens[j]]) <= {frozenset(), both}:
            parent[find(j)] = find(i)
    var = [find(i) for i in range(n)]

    # (a, b, c): value[c] == value[a] and value[b]; c None means the product vanishes
    constraints = []
    for i in range(n):
        for j in range(i, n):
            jn = join(M, gens[i], gens[j])
            c = None if jn is None else var[index[jn]]
            constraints.append((var[i], var[j], c))
    order = sorted(set(var))
    position = {v: k for k, v in enumerate(order)}
    triggered: dict[int, list] = {}
    for a, b, c in constraints:
        last = max(position[x] for x in (a, b, c) if x is not None)
        triggered.setdefault(last, []).append((a, b, c))

    value: dict[int, int] = {}
    solutions = []
    root = var[index[EMPTY]]

    def ok(k):
        for a, b, c in triggered.get(k, ()):
            prod = value[a] & value[b]
            if (c is None and prod) or (c is not None and value[c] != prod):
                return False
        return True

    def rec(k):
        if k == len(order):
            solutions.append(FunctionalTable(tuple((g, value[var[i]]) for i, g in enumerate(gens)), bound))
            return
        v = order[k]
        for bit in ((1,) if v == root else (0, 1)):
            value[v] = bit
            if ok(k):
                rec(k + 1)
        del value[v]

    rec(0)
    return solutions


def table_of(M: "Structure", u: SpectrumPoint, bound: int) -> FunctionalTable:
    """Restriction of phi_u to the in-bound generators."""
    return FunctionalTable(
        tuple((s, 1 if phi_eval(M, u, e(s)) == 1 else 0) for s in generators(M, bound)),
        bound,
    )


def spectrum_oracle(M: "Structure", bound: int) -> dict:
    """Compare the enumerated spectrum with the brute-force functionals."""
    points = enumerate_spectrum(M, bound)
    tables = brute_force_functionals(M, bound)
    brute = {t.bits(): t for t in tables}
    mapped = {}
    ok = True
    for u in points:
        t = table_of(M, u, bound)
        if t.bits() not in brute or t.bits() in mapped:
            ok = False
            continue
        mapped[t.bits()] = u
        if functional_to_point(M, brute[t.bits()]).map != u.map:
            ok = False
    ok = ok and len(mapped) == len(brute) == len(points)
    return {
        "points": len(points),
        "functionals": len(tables),
        "bijection_ok": ok,
        "bijection": [(u, brute_bits) for brute_bits, u in mapped.items()],
    }


@dataclass(frozen=True)
class Pinned:
    """O_x: points sending x to y."""

    x: object
    y: object


@dataclass(frozen=True)
class Avoids:
    """U_(x,A): points that, if defined at x, send it outside A."""

    x: object
    avoid: frozenset


def in_subbasic(u: SpectrumPoint, nbhd: Pinned | Avoids) -> bool:
    m = u.map
    if isinstance(nbhd, Pinned):
        return nbhd.x in m and m(nbhd.x) == nbhd.y
    return nbhd.x not in m or m(nbhd.x) not in nbhd.avoid
