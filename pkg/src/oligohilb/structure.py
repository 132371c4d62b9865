"""Builtin countable homogeneous structures behind a uniform oracle interface.

Every other module only talks to a :class:`Structure` through

* ``enumerate_elements`` / ``index_of``: a fixed enumeration of the universe,
* ``tuple_type``: a canonical code of the quantifier-free type of a tuple,
* ``is_partial_iso``: type preservation of a finite map,
* ``realizations``: the orbit of a new point over an anchor tuple, exactly,
* ``extend_one_avoiding`` / ``fresh_image``: witness search,
* ``one_point_candidates``: one representative of every 1-type over an anchor,
* ``acl``: algebraic closure in closed form.

All four builtins are Fraenkel-Mostowski style Fraisse limits, so equality of
type codes is exactly "same orbit" and a type-preserving finite map extends to
an automorphism.
"""

from __future__ import annotations

import itertools
import json
import os
import re
from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .elements import INFINITE, as_set, element_key
from .errors import (
    BoundExceeded,
    Exhausted,
    NonInjective,
    NotPartialIso,
    UnknownElementLiteral,
    UnrealizableCode,
)
from . import hf
from .fields import field, nullspace, prime_power, rref
from .partials import PartialAuto

KINDS = ("pure_set", "dlo", "rado", "vector_space")


@dataclass(frozen=True)
class StructureConfig:
    kind: str
    q: int | None = None
    enum_cap: int = 4096
    search_cap: int = 4096

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown structure kind {self.kind!r}")
        if self.kind == "vector_space":
            if self.q is None or prime_power(self.q) is None:
                raise ValueError("vector_space needs a prime power q >= 2")
        elif self.q is not None:
            raise ValueError(f"{self.kind} takes no q parameter")
        if self.enum_cap < 1 or self.search_cap < 1:
            raise ValueError("caps must be >= 1")

    @classmethod
    def from_dict(cls, d: Mapping) -> "StructureConfig":
        params = d.get("params") or {}
        bounds = d.get("bounds") or {}
        return cls(
            kind=d["kind"],
            q=params.get("q"),
            enum_cap=int(bounds.get("enum_cap", 4096)),
            search_cap=int(bounds.get("search_cap", 4096)),
        )

    def to_dict(self) -> dict:
        params = {"q": self.q} if self.q is not None else {}
        return {
            "kind": self.kind,
            "params": params,
            "bounds": {"enum_cap": self.enum_cap, "search_cap": self.search_cap},
        }

    @classmethod
    def load(cls, path: str | os.PathLike) -> "StructureConfig":
        return cls.from_dict(json.loads(Path(path).read_text()))

    @classmethod
    def preset(cls, name: str) -> "StructureConfig":
        """``pure_set``, ``dlo``, ``rado`` or ``vec<q>`` (e.g. ``vec2``)."""
        if name in ("pure_set", "dlo", "rado"):
            return cls(name)
        m = re.fullmatch(r"vec(?:tor_space)?(\d+)", name)
        if m:
            return cls("vector_space", q=int(m.group(1)))
        raise ValueError(f"unknown structure preset {name!r}")

    def with_bounds_env(self, env: Mapping[str, str] | None = None) -> "StructureConfig":
        """Apply ``OH_BOUNDS="enum_cap=N,search_cap=M"`` overrides."""
        raw = (env if env is not None else os.environ).get("OH_BOUNDS", "").strip()
        if not raw:
            return self
        updates = {}
        for item in raw.split(","):
            key, _, val = item.partition("=")
            key = key.strip()
            if key not in ("enum_cap", "search_cap"):
                raise ValueError(f"OH_BOUNDS: unknown key {key!r}")
            updates[key] = int(val)
        return replace(self, **updates)


def build(config: StructureConfig | str) -> "Structure":
    if isinstance(config, str):
        config = StructureConfig.preset(config)
    cls = {"pure_set": PureSet, "dlo": DenseOrder, "rado": RadoGraph, "vector_space": VectorSpace}
    return cls[config.kind](config)


class Structure:
    """Oracle bundle for one homogeneous structure; stateless apart from caches."""

    kind: str = ""

    def __init__(self, config: StructureConfig):
        self.config = config

    def __repr__(self):
        return f"{type(self).__name__}({self.config.to_dict()})"

    @property
    def name(self) -> str:
        if self.kind == "vector_space":
            return f"vec{self.config.q}"
        return self.kind

    # -- per-structure hooks -------------------------------------------------

    def enumerate_elements(self, n: int) -> list:
        raise NotImplementedError

    def index_of(self, e) -> int:
        raise NotImplementedError

    def coerce(self, e):
        raise NotImplementedError

    def format_element(self, e) -> str:
        return str(e)

    def tuple_type(self, t: Sequence) -> tuple:
        raise NotImplementedError

    def acl(self, A: Iterable) -> tuple:
        return as_set(A)

    def _forced(self, anchor: tuple, code: tuple) -> list | None:
        """Candidate values when ``code`` forces the new point to be algebraic."""
        raise NotImplementedError

    def _fresh_candidates(self, anchor: tuple) -> list:
        """Non-algebraic points covering every non-algebraic 1-type over anchor."""
        raise NotImplementedError

    def _smallest_fresh(self, anchor: tuple, code: tuple, forbidden: set):
        raise NotImplementedError

    # -- generic operations --------------------------------------------------

    def parse_element(self, text: str):
        from .textio import parse_element

        return parse_element(self, text)

    def same_type(self, t1: Sequence, t2: Sequence) -> bool:
        return len(t1) == len(t2) and self.tuple_type(t1) == self.tuple_type(t2)

    def is_partial_iso(self, m) -> bool:
        items = list(m.items())
        images = [y for _, y in items]
        if len(set(images)) != len(images):
            raise NonInjective(f"map {m!r} is not injective")
        return self.same_type([x for x, _ in items], images)

    def partial(self, pairs) -> PartialAuto:
        """Build a PartialAuto from pairs, coercing literals and checking types."""
        if hasattr(pairs, "items"):
            pairs = pairs.items()
        s = PartialAuto((self.coerce(x), self.coerce(y)) for x, y in pairs)
        if not self.same_type(s.domain, s.images):
            raise NotPartialIso(f"{s!r} does not preserve types")
        return s

    def one_point_candidates(self, anchor: Sequence) -> list:
        """One element of every 1-type over ``anchor`` (plus all algebraic points)."""
        anchor = tuple(anchor)
        return list(self.acl(anchor)) + self._fresh_candidates(anchor)

    def realizations(self, anchor: Sequence, code: tuple):
        """All y with ``tuple_type(anchor + (y,)) == code``: a sorted list or INFINITE."""
        anchor = tuple(anchor)
        forced = self._forced(anchor, code)
        if forced is not None:
            found = as_set(y for y in forced if self.tuple_type(anchor + (y,)) == code)
            if not found:
                raise UnrealizableCode(f"code {code!r} over {anchor!r}")
            return list(found)
        for y in self._fresh_candidates(anchor):
            if self.tuple_type(anchor + (y,)) == code:
                return INFINITE
        raise UnrealizableCode(f"code {code!r} over {anchor!r}")

    def extend_one_avoiding(self, s: PartialAuto, x, forbidden: Iterable = ()):
        """Smallest y (enumeration order) outside ``forbidden`` with s + {x->y} a partial iso."""
        if x in s:
            raise ValueError(f"{x!r} already in the domain")
        code = self.tuple_type(s.domain + (x,))
        forbidden = set(forbidden)
        r = self.realizations(s.images, code)
        if r is INFINITE:
            return self._smallest_fresh(s.images, code, forbidden)
        allowed = [y for y in r if y not in forbidden]
        if not allowed:
            raise Exhausted(f"all {len(r)} realizations for {x!r} are forbidden")
        return allowed[0]

    def fresh_image(self, s: PartialAuto, x, params: Iterable = ()):
        """An image for a non-algebraic x that is generic over ``params`` and ran(s).

        For structures with trivial acl "generic" just means outside params.
        """
        return self.extend_one_avoiding(s, x, params)


def _labels(t: Sequence) -> tuple:
    seen: dict = {}
    return tuple(seen.setdefault(v, len(seen)) for v in t)


def _forced_by_label(anchor: tuple, code_labels: tuple) -> list | None:
    if len(code_labels) != len(anchor) + 1:
        return []
    lab = code_labels[-1]
    if lab in code_labels[:-1]:
        return [anchor[code_labels.index(lab)]]
    return None


class PureSet(Structure):
    kind = "pure_set"

    def enumerate_elements(self, n):
        return list(range(n))

    def index_of(self, e):
        return e

    def coerce(self, e):
        if isinstance(e, bool) or not isinstance(e, int) or e < 0:
            raise UnknownElementLiteral(f"{e!r} is not a natural number")
        return e

    def tuple_type(self, t):
        return _labels(t)

    def _forced(self, anchor, code):
        return _forced_by_label(anchor, code)

    def _fresh_candidates(self, anchor):
        return [max(anchor) + 1 if anchor else 0]

    def _smallest_fresh(self, anchor, code, forbidden):
        taken = set(anchor) | forbidden
        return next(y for y in itertools.count() if y not in taken)


def _next_with_bits(lower: int, mask: int, bits: int) -> int:
    """Smallest y >= lower with y & mask == bits (bits must be a submask of mask)."""
    y = lower
    diff = (y & mask) ^ bits
    if not diff:
        return y
    h = diff.bit_length() - 1
    if (bits >> h) & 1:
        p = h
    else:
        p = h + 1
        while (mask >> p) & 1 or (y >> p) & 1:
            p += 1
    high = (y >> (p + 1)) << (p + 1)
    return high | (1 << p) | (bits & ((1 << p) - 1))


# candidate scans stay below this; larger witnesses come from the construction
_RADO_SCAN = 256


class RadoGraph(Structure):
    """Vertices are naturals; for i < j, i ~ j iff bit i of j is set.

    Vertices past 2**HUGE_BITS are stored sparsely (see :mod:`.hf`).
    """

    kind = "rado"

    enumerate_elements = PureSet.enumerate_elements

    def index_of(self, e):
        return hf.index(e)

    def coerce(self, e):
        if isinstance(e, hf.HugeVertex):
            return e
        return hf.canon(PureSet.coerce(self, e))

    def format_element(self, e):
        return hf.format_vertex(e)

    @staticmethod
    def adjacent(a, b) -> bool:
        if a == b:
            return False
        return hf.member(a, b) or hf.member(b, a)

    def tuple_type(self, t):
        labels = _labels(t)
        reps = list(dict.fromkeys(t))
        bits = tuple(
            self.adjacent(reps[i], reps[j])
            for i in range(len(reps))
            for j in range(i + 1, len(reps))
        )
        return (labels, bits)

    def _forced(self, anchor, code):
        return _forced_by_label(anchor, code[0])

    @staticmethod
    def _above(reps, adjacent_to: Iterable):
        """A vertex above every rep whose neighbours among reps are exactly ``adjacent_to``."""
        reps = as_set(reps)
        top = reps[-1]
        if isinstance(top, int) and top + 1 < hf.HUGE_BITS:
            mask = sum(1 << a for a in reps if isinstance(a, int))
            bits = sum(1 << a for a in adjacent_to)
            if all(isinstance(a, int) for a in adjacent_to):
                return hf.canon(_next_with_bits(top + 1, mask, bits))
        # a high member that is not a rep puts the vertex above all reps
        high = top + 1 if isinstance(top, int) else hf.from_members([top])
        return hf.from_members(list(adjacent_to) + [high])

    def _fresh_candidates(self, anchor):
        # Small witnesses first: chaining the above-max construction makes each
        # new vertex exponentially larger than the last.
        reps = as_set(anchor)
        if not reps:
            return [0]
        patterns = list(itertools.product((0, 1), repeat=len(reps)))
        found: dict = {}
        members = set(reps)
        # y ~ a for int y: bit y of a when y < a, bit a of y when y > a
        lower = [a if isinstance(a, int) else sum(1 << m for m in a.members if isinstance(m, int) and m < _RADO_SCAN) for a in reps]
        small = [a if isinstance(a, int) and a < _RADO_SCAN else None for a in reps]
        for y in range(min(_RADO_SCAN, self.config.search_cap)):
            if len(found) == len(patterns):
                break
            if y in members:
                continue
            key = tuple(
                (y >> a) & 1 if a is not None and y > a else (lo >> y) & 1
                for a, lo in zip(small, lower)
            )
            found.setdefault(key, y)
        out = []
        for choice in patterns:
            if choice not in found:
                found[choice] = self._above(reps, [a for a, c in zip(reps, choice) if c])
            out.append(found[choice])
        return out

    def _wanted_adjacency(self, anchor, code) -> dict:
        labels, bits = code
        reps = list(dict.fromkeys(anchor))
        k = len(reps)
        if len(labels) != len(anchor) + 1 or labels[-1] != k:
            raise UnrealizableCode(f"code {code!r} over {anchor!r}")
        # pair (i, k) sits at offset i*(2k+1-i)//2 + (k-i-1) in the upper-triangle order of k+1 reps
        want = {}
        for i, a in enumerate(reps):
            want[a] = bits[i * (2 * (k + 1) - i - 1) // 2 + (k - i - 1)]
        return want

    def _smallest_fresh(self, anchor, code, forbidden):
        want = self._wanted_adjacency(anchor, code)
        if not want:
            return next(y for y in itertools.count() if y not in forbidden)
        top = max(want, key=element_key)
        if not isinstance(top, int) or top > self.config.search_cap:
            raise BoundExceeded(f"rado scan below {self.format_element(top)} exceeds search cap")
        for y in range(top + 1):
            if y in want or y in forbidden:
                continue
            if all(self.adjacent(a, y) == w for a, w in want.items()):
                return y
        mask = sum(1 << a for a in want)
        bits = sum(1 << a for a, w in want.items() if w)
        y = _next_with_bits(top + 1, mask, bits)
        while y in forbidden:
            y = _next_with_bits(y + 1, mask, bits)
        return hf.canon(y)

    def fresh_image(self, s, x, params=()):
        code = self.tuple_type(s.domain + (x,))
        if self.realizations(s.images, code) is not INFINITE:
            raise ValueError(f"{x!r} is algebraic over the domain")
        want = self._wanted_adjacency(s.images, code)
        reps = as_set(list(want) + list(params))
        if not reps:
            return 0
        return self._above(reps, [a for a, w in want.items() if w])


def _height_block(h: int) -> list[Fraction]:
    """Rationals with max(|p|, q) == h, in (q, |p|, sign) order."""
    out = []
    for q in range(1, h):
        if gcd(h, q) == 1:
            out += [Fraction(h, q), Fraction(-h, q)]
    if h == 1:
        return [Fraction(0), Fraction(1), Fraction(-1)]
    for p in range(1, h):
        if gcd(p, h) == 1:
            out += [Fraction(p, h), Fraction(-p, h)]
    return out


class DenseOrder(Structure):
    """(Q, <): rationals enumerated by height max(|p|, q)."""

    kind = "dlo"

    def enumerate_elements(self, n):
        out: list[Fraction] = []
        h = 1
        while len(out) < n:
            out += _height_block(h)
            h += 1
        return out[:n]

    def index_of(self, e):
        e = self.coerce(e)
        h = element_key(e)[0]
        before = sum(len(_height_block(k)) for k in range(1, h))
        return before + _height_block(h).index(e)

    def coerce(self, e):
        if isinstance(e, bool) or not isinstance(e, (int, Fraction)):
            raise UnknownElementLiteral(f"{e!r} is not a rational")
        return Fraction(e)

    def tuple_type(self, t):
        rank = {v: i for i, v in enumerate(sorted(set(t)))}
        return tuple(rank[v] for v in t)

    def _forced(self, anchor, code):
        return _forced_by_label(anchor, code)

    def _fresh_candidates(self, anchor):
        vals = sorted(set(anchor))
        if not vals:
            return [Fraction(0)]
        mids = [
            Fraction(a.numerator + b.numerator, a.denominator + b.denominator)
            for a, b in zip(vals, vals[1:])
        ]
        return [vals[0] - 1] + mids + [vals[-1] + 1]

    def _smallest_fresh(self, anchor, code, forbidden):
        r = code[-1]
        lo = max((a for a, c in zip(anchor, code) if c < r), default=None)
        hi = min((a for a, c in zip(anchor, code) if c > r), default=None)
        for h in range(1, self.config.search_cap + 1):
            for v in _height_block(h):
                if (lo is None or v > lo) and (hi is None or v < hi) and v not in forbidden:
                    return v
        raise BoundExceeded(f"no rational in ({lo}, {hi}) up to height {self.config.search_cap}")


class VectorSpace(Structure):
    """Countable-dimensional F_q vector space; vectors are digit tuples, zero is ()."""

    kind = "vector_space"

    def __init__(self, config):
        super().__init__(config)
        self.F = field(config.q)

    def _from_index(self, i: int) -> tuple:
        q = self.config.q
        out = []
        while i:
            out.append(i % q)
            i //= q
        return tuple(out)

    def enumerate_elements(self, n):
        return [self._from_index(i) for i in range(n)]

    def index_of(self, e):
        return sum(c * self.config.q**i for i, c in enumerate(self.coerce(e)))

    def coerce(self, e):
        try:
            digits = [int(c) for c in e]
        except TypeError:
            raise UnknownElementLiteral(f"{e!r} is not a vector") from None
        if any(c < 0 or c >= self.config.q for c in digits):
            raise UnknownElementLiteral(f"{e!r} has a coefficient outside F_{self.config.q}")
        while digits and digits[-1] == 0:
            digits.pop()
        return tuple(digits)

    def format_element(self, e):
        return "[" + ",".join(map(str, e or (0,))) + "]"

    @staticmethod
    def unit(i: int) -> tuple:
        return (0,) * i + (1,)

    def add(self, u: tuple, v: tuple) -> tuple:
        n = max(len(u), len(v))
        u, v = u + (0,) * (n - len(u)), v + (0,) * (n - len(v))
        return self.coerce(self.F.add[a][b] for a, b in zip(u, v))

    def scale(self, c: int, v: tuple) -> tuple:
        return self.coerce(self.F.mul[c][a] for a in v)

    def tuple_type(self, t):
        n = len(t)
        dim = max((len(v) for v in t), default=0)
        matrix = [[v[r] if r < len(v) else 0 for v in t] for r in range(dim)]
        return (n, tuple(nullspace(matrix, n, self.F)))

    def _basis(self, vectors: Iterable[tuple]) -> list[list[int]]:
        vectors = [v for v in vectors if v]
        if not vectors:
            return []
        dim = max(len(v) for v in vectors)
        red, _ = rref([list(v) + [0] * (dim - len(v)) for v in vectors], self.F)
        return red

    def in_span(self, v: tuple, vectors: Iterable[tuple]) -> bool:
        vectors = list(vectors)
        return len(self._basis(vectors + [v])) == len(self._basis(vectors))

    def acl(self, A):
        basis = [self.coerce(r) for r in self._basis(A)]
        out = set()
        for coeffs in itertools.product(range(self.config.q), repeat=len(basis)):
            v: tuple = ()
            for c, b in zip(coeffs, basis):
                v = self.add(v, self.scale(c, b))
            out.add(v)
        return as_set(out)

    def _forced(self, anchor, code):
        n, relations = code
        if n != len(anchor) + 1:
            return []
        rel = next((r for r in relations if r[-1]), None)
        if rel is None:
            return None
        inv = self.F.inv[self.F.neg[rel[-1]]]
        y: tuple = ()
        for c, a in zip(rel, anchor):
            y = self.add(y, self.scale(self.F.mul[inv][c], a))
        return [y]

    def _fresh_candidates(self, anchor):
        return [self.unit(max((len(a) for a in anchor), default=0))]

    def _smallest_fresh(self, anchor, code, forbidden):
        for i in range(self.config.search_cap):
            v = self._from_index(i)
            if v not in forbidden and not self.in_span(v, anchor):
                return v
        raise BoundExceeded(f"no vector outside the anchor span in the first {self.config.search_cap}")

    def fresh_image(self, s, x, params=()):
        code = self.tuple_type(s.domain + (x,))
        if self._forced(s.images, code) is not None:
            raise ValueError(f"{x!r} is algebraic over the domain")
        y = self.unit(max((len(v) for v in list(params) + list(s.images)), default=0))
        if self.tuple_type(s.images + (y,)) != code:
            raise UnrealizableCode(f"no image for {x!r}")
        return y
