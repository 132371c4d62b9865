"""Finite partial automorphisms: the monoid FP(M) and the witness searches on it.

A :class:`PartialAuto` is just a finite injective map; whether it preserves
types is a question for the structure, so every operation that can produce a
non-isomorphism (``join``, the searches) takes the structure as first argument.
``compose`` and ``inverse`` never leave the set of partial isomorphisms.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Iterable, Sequence

from .elements import INFINITE, as_set, element_key
from .errors import BoundExceeded, LimitExceeded, NonInjective, NotAclClosed, NotAFunction

if TYPE_CHECKING:
    from .structure import Structure

PATTERN_LIMIT = 12


class PartialAuto:
    """Finite injective map, stored with pairs sorted by domain element.

    ``s <= g`` reads "g extends s".
    """

    __slots__ = ("_map", "_hash", "domain", "images")

    def __init__(self, pairs=()):
        if hasattr(pairs, "items"):
            pairs = pairs.items()
        m: dict = {}
        for x, y in pairs:
            if m.get(x, y) != y:
                raise NotAFunction(f"{x!r} has images {m[x]!r} and {y!r}")
            m[x] = y
        if len(set(m.values())) != len(m):
            raise NonInjective(f"{m!r} is not injective")
        dom = tuple(sorted(m, key=element_key))
        self._map = {x: m[x] for x in dom}
        self.domain = dom
        self.images = tuple(m[x] for x in dom)
        self._hash = hash(frozenset(self._map.items()))

    def __call__(self, x):
        return self._map[x]

    def get(self, x, default=None):
        return self._map.get(x, default)

    def __contains__(self, x) -> bool:
        return x in self._map

    def __len__(self) -> int:
        return len(self._map)

    def __iter__(self):
        return iter(self._map.items())

    def items(self):
        return self._map.items()

    @property
    def range(self) -> tuple:
        return as_set(self.images)

    def __eq__(self, other) -> bool:
        return isinstance(other, PartialAuto) and self._map == other._map

    def __hash__(self) -> int:
        return self._hash

    def __le__(self, other: "PartialAuto") -> bool:
        return extends(other, self)

    def __repr__(self) -> str:
        return "{" + ", ".join(f"{x}->{y}" for x, y in self._map.items()) + "}"

    def sort_key(self) -> tuple:
        return tuple((element_key(x), element_key(y)) for x, y in self._map.items())

    def restrict(self, A: Iterable) -> "PartialAuto":
        A = set(A)
        return PartialAuto((x, y) for x, y in self._map.items() if x in A)

    def add(self, x, y) -> "PartialAuto":
        return PartialAuto(list(self._map.items()) + [(x, y)])


EMPTY = PartialAuto()


def identity(A: Iterable) -> PartialAuto:
    return PartialAuto((a, a) for a in A)


def join(M: "Structure", s: PartialAuto, t: PartialAuto) -> PartialAuto | None:
    """Common extension s u t, or None when the union is not a partial isomorphism."""
    try:
        u = PartialAuto(list(s.items()) + list(t.items()))
    except (NotAFunction, NonInjective):
        return None
    return u if M.same_type(u.domain, u.images) else None


def compose(u: PartialAuto, v: PartialAuto) -> PartialAuto:
    """u o v where defined: x -> u(v(x)) for x in dom(v) with v(x) in dom(u)."""
    return PartialAuto((x, u(y)) for x, y in v.items() if y in u)


def inverse(u: PartialAuto) -> PartialAuto:
    return PartialAuto((y, x) for x, y in u.items())


def extends(g: PartialAuto, s: PartialAuto) -> bool:
    return all(x in g and g(x) == y for x, y in s.items())


def algebraic_extensions(M: "Structure", s: PartialAuto, points: Iterable) -> list[PartialAuto]:
    """Every partial iso t >= s with dom(t) = dom(s) + points; points must be algebraic."""
    frontier = [s]
    for x in as_set(p for p in points if p not in s):
        nxt = []
        for t in frontier:
            r = M.realizations(t.images, M.tuple_type(t.domain + (x,)))
            if r is INFINITE:
                raise ValueError(f"{x!r} is not algebraic over {t.domain!r}")
            nxt += [t.add(x, y) for y in r]
        frontier = nxt
    return frontier


def _generic_extension(M, base: PartialAuto, points: Sequence, avoid: dict, params) -> PartialAuto | None:
    """Extend ``base`` to ``points`` so that each new x avoids ``avoid[x]``.

    Non-algebraic points get an image generic over ``params`` (which contains
    every constraint value), so they automatically avoid the constraints; and by
    exchange, points that become algebraic only through earlier generic points
    are generic too. Only points algebraic over the original base can collide,
    and those have finitely many options, which we branch over.
    """
    if not points:
        return base
    x, rest = points[0], points[1:]
    r = M.realizations(base.images, M.tuple_type(base.domain + (x,)))
    if r is INFINITE:
        return _generic_extension(M, base.add(x, M.fresh_image(base, x, params)), rest, avoid, params)
    for y in r:
        if y in avoid.get(x, ()):
            continue
        found = _generic_extension(M, base.add(x, y), rest, avoid, params)
        if found is not None:
            return found
    return None


def selective_extension(M: "Structure", u: PartialAuto, constraints: Sequence[PartialAuto]) -> PartialAuto:
    """Finite w >= u on dom(u) + all constraint domains with s_i <= w iff s_i <= u.

    Requires dom(u) to be algebraically closed: then any s_i not below u either
    already disagrees with u on dom(u), or has a point outside acl(dom u) that a
    generic extension sends away from s_i.
    """
    if tuple(M.acl(u.domain)) != as_set(u.domain):
        missing = [b for b in M.acl(u.domain) if b not in u]
        raise NotAclClosed(f"domain {u.domain!r} is not algebraically closed", missing[0])
    avoid: dict = {}
    params = set(u.images)
    for s in constraints:
        for x, y in s.items():
            avoid.setdefault(x, set()).add(y)
            params.add(y)
    points = as_set(x for s in constraints for x in s.domain if x not in u)
    w = _generic_extension(M, u, list(points), avoid, as_set(params))
    if w is None or any(extends(w, s) != extends(u, s) for s in constraints):
        raise BoundExceeded("selective extension failed; oracle assumptions violated")
    return w


def realizable_patterns(M: "Structure", family: Sequence[PartialAuto], limit: int = PATTERN_LIMIT) -> set[frozenset]:
    """All sets S of indices such that some automorphism extends exactly the s_i, i in S.

    A candidate g only matters through its restriction to D = union of the
    domains, and that restriction only matters through which of the specified
    values s_i(x) it hits at each x. So we branch over labellings x -> (one of the
    specified values | "none of them"), keep the labelled part a partial iso,
    and check the unlabelled points extend with generic images (homogeneity:
    all generic images of one type are interchangeable for the pattern).
    """
    family = list(family)
    if len(family) > limit:
        raise LimitExceeded(f"{len(family)} maps exceed the pattern limit {limit}")
    D = as_set(x for s in family for x in s.domain)
    values = {x: as_set(s(x) for s in family if x in s) for x in D}
    params = as_set(y for s in family for y in s.images)
    patterns: set[frozenset] = set()

    def pattern_of(label: dict) -> frozenset:
        return frozenset(i for i, s in enumerate(family) if all(label.get(x) == y for x, y in s.items()))

    def rec(i: int, fixed: PartialAuto, label: dict, free: list):
        if i == len(D):
            pat = pattern_of(label)
            if pat in patterns:
                return
            if _generic_extension(M, fixed, free, values, params) is not None:
                patterns.add(pat)
            return
        x = D[i]
        for y in values[x]:
            if y in fixed.images:
                continue
            t = fixed.add(x, y)
            if M.same_type(t.domain, t.images):
                label[x] = y
                rec(i + 1, t, label, free)
                del label[x]
        rec(i + 1, fixed, label, free + [x])

    rec(0, EMPTY, {}, [])
    return patterns
