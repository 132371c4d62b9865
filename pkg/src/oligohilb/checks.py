"""Sampled property suites behind the acceptance criteria.

Each ``criterion_*`` function draws its inputs from a seeded ``random.Random``
and returns a :class:`CriterionResult`; the first failing sample is reported
in ``detail``. Sampling pools are kept to the first few elements of each
structure so witnesses stay small.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Callable

from .algebra import (
    AlgebraElement,
    conj,
    e,
    evaluate_at,
    multiply,
    star,
    sup_norm_sq,
)
from .closure import acl_generic, relative_index
from .coefficients import GaussRat
from .cosets import double_cosets, tensor_decompose
from .elements import INFINITE, as_set
from .partials import EMPTY, PartialAuto, compose, extends, join, realizable_patterns
from .spectrum import (
    SpectrumPoint,
    convolve,
    convolve_operator,
    evaluate_via_witness,
    phi_eval,
    point_star,
    spectrum_oracle,
)
from .structure import Structure, build

BUILTINS = ("pure_set", "dlo", "rado", "vec2")
EXTRA = ("vec3",)


@dataclass(frozen=True)
class Pools:
    """How many leading elements each structure samples from."""

    sizes: dict = field(default_factory=lambda: {"pure_set": 6, "dlo": 7, "rado": 6, "vec2": 8, "vec3": 9})

    def pool(self, M: Structure) -> list:
        return M.enumerate_elements(self.sizes.get(M.name, 6))


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    samples: int
    seconds: float
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return f"[{status}] criterion {self.number}: {self.name}: {self.samples} checks in {self.seconds:.2f}s{extra}"


class _Fail(Exception):
    pass


def _check(cond: bool, msg: Callable[[], str] | str):
    if not cond:
        raise _Fail(msg() if callable(msg) else msg)


# -- random inputs


def random_extension(M: Structure, rng: random.Random, s: PartialAuto, points, pool) -> PartialAuto:
    """Extend s to ``points`` with images drawn from ``pool`` when possible."""
    for x in as_set(points):
        if x in s:
            continue
        code = M.tuple_type(s.domain + (x,))
        options = [y for y in pool if y not in s.images and M.tuple_type(s.images + (y,)) == code]
        if not options:
            options = [
                y for y in M.one_point_candidates(s.images)
                if y not in s.images and M.tuple_type(s.images + (y,)) == code
            ]
        s = s.add(x, rng.choice(options))
    return s


def random_partial(M: Structure, rng: random.Random, pool, max_size: int = 3) -> PartialAuto:
    """A partial iso with domain inside ``pool`` (images mostly from ``pool``)."""
    k = rng.randint(0, min(max_size, len(pool)))
    return random_extension(M, rng, EMPTY, rng.sample(pool, k), pool)


def random_point(M: Structure, rng: random.Random, pool, max_gens: int = 2) -> SpectrumPoint:
    """A spectrum point: a random partial iso on the closure of a random set."""
    k = rng.randint(0, min(max_gens, len(pool)))
    A = M.acl(rng.sample(pool, k))
    return SpectrumPoint(random_extension(M, rng, EMPTY, A, pool))


def random_closed_key(M: Structure, rng: random.Random, pool, max_gens: int = 2) -> PartialAuto:
    return random_point(M, rng, pool, max_gens).map


def random_coeff(rng: random.Random, gaussian: bool = True) -> GaussRat:
    re = rng.randint(-3, 3)
    im = rng.randint(-2, 2) if gaussian and rng.random() < 0.3 else 0
    if re == 0 and im == 0:
        re = 1
    return GaussRat.of(re) + GaussRat.of(im) * GaussRat(0, 1)


def random_element(M: Structure, rng: random.Random, pool, max_terms: int = 4, near=None) -> AlgebraElement:
    """A random combination; with ``near`` some keys are pieces of that map."""
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        if near is not None and len(near) and rng.random() < 0.5:
            dom = rng.sample(near.domain, rng.randint(0, len(near)))
            s = near.restrict(dom)
            if rng.random() < 0.3:
                s = random_extension(M, rng, s, rng.sample(pool, 1), pool)
        else:
            s = random_partial(M, rng, pool)
        terms.append((s, random_coeff(rng)))
    return AlgebraElement(terms)


# -- criteria


def _run(number: int, name: str, body: Callable[[], int]) -> CriterionResult:
    t0 = time.perf_counter()
    try:
        n = body()
        return CriterionResult(number, name, True, n, time.perf_counter() - t0)
    except _Fail as exc:
        return CriterionResult(number, name, False, 0, time.perf_counter() - t0, str(exc))


def criterion_1(seed: int = 0) -> CriterionResult:
    """Spectrum points versus brute-force functionals at small bounds."""
    expected = {("pure_set", 2): 7, ("pure_set", 3): 34}
    cases = [("pure_set", 2), ("pure_set", 3), ("dlo", 2), ("vec2", 2), ("vec2", 4)]

    def body():
        for name, bound in cases:
            r = spectrum_oracle(build(name), bound)
            _check(r["bijection_ok"], f"{name} bound {bound}: bijection failed")
            _check(r["points"] == r["functionals"], f"{name} bound {bound}: {r['points']} != {r['functionals']}")
            if (name, bound) in expected:
                _check(r["points"] == expected[name, bound], f"{name} bound {bound}: {r['points']} points")
        return len(cases)

    return _run(1, "spectrum-functional bijection", body)


def criterion_2(seed: int = 0, pairs: int = 1000, witnesses: int = 5, structures=BUILTINS, pools: Pools = Pools()) -> CriterionResult:
    """e_s * e_t evaluates pointwise as the product of the indicators."""

    def body():
        n = 0
        for name in structures:
            M = build(name)
            rng = random.Random(f"{seed}-2-{name}")
            pool = pools.pool(M)
            for _ in range(pairs):
                s, t = random_partial(M, rng, pool), random_partial(M, rng, pool)
                prod = multiply(M, e(s), e(t))
                closure = M.acl(s.domain + t.domain)
                j = join(M, s, t)
                bases = [j if j is not None else s, s, t, EMPTY, EMPTY]
                for k in range(witnesses):
                    base = bases[k % len(bases)].restrict(closure)
                    g = random_extension(M, rng, base, closure, pool)
                    lhs = evaluate_at(prod, g)
                    rhs = evaluate_at(e(s), g) * evaluate_at(e(t), g)
                    _check(lhs == rhs, lambda: f"{name}: s={s!r} t={t!r} g={g!r}: {lhs} != {rhs}")
                    n += 1
        return n

    return _run(2, "product rule soundness", body)


def criterion_3(seed: int = 0, samples: int = 500, structures=BUILTINS, pools: Pools = Pools()) -> CriterionResult:
    """phi_u agrees with a witness evaluation and is bounded by the sup norm."""

    def body():
        n = 0
        for name in structures:
            M = build(name)
            rng = random.Random(f"{seed}-3-{name}")
            pool = pools.pool(M)
            for i in range(samples):
                u = random_point(M, rng, pool)
                f = random_element(M, rng, pool, 3, near=u.map)
                if i % 3 == 0:
                    f = multiply(M, conj(f), f)
                value = phi_eval(M, u, f)
                wval, g0 = evaluate_via_witness(M, u, f)
                _check(value == wval == evaluate_at(f, g0), lambda: f"{name}: u={u.map!r} f={f!r}: {value} vs {wval}")
                norm = sup_norm_sq(M, f)
                _check(value.abs2() <= norm.value, lambda: f"{name}: |phi|^2 {value.abs2()} > {norm.value}")
                if norm.is_pointwise_nonneg:
                    _check(value.is_real and value.re >= 0, lambda: f"{name}: negative value {value} on nonnegative f")
                n += 1
        return n

    return _run(3, "automatic continuity", body)


def criterion_4(seed: int = 0, samples: int = 500, structures=BUILTINS, pools: Pools = Pools()) -> CriterionResult:
    """Convolution, the convolution operator and the involution on points."""

    def body():
        n = 0
        for name in structures:
            M = build(name)
            rng = random.Random(f"{seed}-4-{name}")
            pool = pools.pool(M)
            for _ in range(samples):
                u, v = random_point(M, rng, pool), random_point(M, rng, pool)
                uv = compose(u.map, v.map)
                if len(uv) and rng.random() < 0.5:
                    s = uv.restrict(rng.sample(uv.domain, rng.randint(1, len(uv))))
                else:
                    s = random_partial(M, rng, pool)
                w = convolve(u, v)
                _check(M.acl(w.map.domain) == w.map.domain, f"{name}: domain of {w.map!r} not closed")
                got = phi_eval(M, w, e(s))
                _check(got == (1 if extends(uv, s) else 0), f"{name}: convolution at {s!r}")
                f = random_element(M, rng, pool, 3, near=u.map) + e(s)
                left = phi_eval(M, v, convolve_operator(u, f))
                right = phi_eval(M, convolve(v, u), f)
                _check(left == right, lambda: f"{name}: operator path {left} != {right}")
                a = phi_eval(M, point_star(u), e(s))
                b = phi_eval(M, u, star(e(s))).conj()
                _check(a == b, f"{name}: involution at {s!r}")
                n += 1
        return n

    return _run(4, "monoid identification", body)


def criterion_5(seed: int = 0, samples: int = 200, structures=BUILTINS, pools: Pools = Pools()) -> CriterionResult:
    """Distinct closed keys give linearly independent functions."""

    def body():
        n = 0
        for name in structures:
            M = build(name)
            rng = random.Random(f"{seed}-5-{name}")
            pool = pools.pool(M)
            for i in range(samples):
                keys: list[PartialAuto] = []
                target = rng.randint(1, 6)
                for _ in range(40):
                    if len(keys) == target:
                        break
                    k = random_closed_key(M, rng, pool)
                    if k not in keys:
                        keys.append(k)
                if i % 4 == 0:
                    coeffs = [0] * len(keys)
                else:
                    coeffs = [rng.randint(-2, 2) for _ in keys]
                pats = realizable_patterns(M, keys)
                is_zero = all(sum(coeffs[j] for j in P) == 0 for P in pats)
                _check(is_zero == all(c == 0 for c in coeffs), lambda: f"{name}: keys {keys!r} coeffs {coeffs}")
                n += 1
        return n

    return _run(5, "basis freeness", body)


def criterion_6(seed: int = 0, pairs_per_size: int = 3, structures=BUILTINS, pools: Pools = Pools()) -> CriterionResult:
    """Finite double-coset counts with matching tensor summands."""

    def body():
        n = 0
        P, D = build("pure_set"), build("dlo")
        _check(double_cosets(P, [1], [1]).count == 2, "pure_set {1}x{1}")
        _check(double_cosets(D, [D.coerce(0)], [D.coerce(0)]).count == 3, "dlo {0}x{0}")
        for name in structures:
            M = build(name)
            rng = random.Random(f"{seed}-6-{name}")
            pool = M.enumerate_elements(5)
            _check(double_cosets(M, [], rng.sample(pool, 2)).count == 1, f"{name}: A empty")
            for a, b in itertools.product(range(4), repeat=2):
                for _ in range(pairs_per_size):
                    A, B = rng.sample(pool, a), rng.sample(pool, b)
                    table = double_cosets(M, A, B)
                    _check(table.count >= 1, f"{name}: empty table for {A}x{B}")
                    _check(len(tensor_decompose(M, A, B)) == table.count, f"{name}: tensor count {A}x{B}")
                    codes = {M.tuple_type(table.left + r.images) for r in table.representatives}
                    _check(len(codes) == table.count, f"{name}: repeated joint type {A}x{B}")
                    n += 1
        return n

    return _run(6, "double-coset certificates", body)


def criterion_7(seed: int = 0, samples: int = 300, structures=BUILTINS, pools: Pools = Pools()) -> CriterionResult:
    """acl against the orbit-finiteness route, closure axioms, relative index."""

    def body():
        n = 0
        for name in structures:
            M = build(name)
            rng = random.Random(f"{seed}-7-{name}")
            pool = pools.pool(M)
            bound = len(pool) + 8
            window = set(M.enumerate_elements(bound))
            for _ in range(samples):
                A = as_set(rng.sample(pool, rng.randint(0, 3)))
                B = as_set(rng.sample(pool, rng.randint(0, 3)))
                cA = M.acl(A)
                _check(acl_generic(M, A, bound) == as_set(x for x in cA if x in window), f"{name}: acl {A!r}")
                _check(set(A) <= set(cA), f"{name}: not extensive at {A!r}")
                _check(M.acl(cA) == cA, f"{name}: not idempotent at {A!r}")
                _check(set(cA) <= set(M.acl(A + B)), f"{name}: not monotone at {A!r}")
                finite = relative_index(M, A, B) is not INFINITE
                _check(finite == set(B).issubset(cA), f"{name}: relative index {A!r} {B!r}")
                n += 1
        return n

    return _run(7, "closure axioms and acl agreement", body)


def criterion_8(seed: int = 0, expressions: int = 200, reruns: int = 2) -> CriterionResult:
    """Byte-identical CLI output and text round-trips."""
    from .cli import main_capture
    from .textio import format_expression, format_partial, parse_expression, parse_partial

    commands = [
        ["--structure", "vec2", "acl", "--set", "[1,0],[0,1]"],
        ["--structure", "dlo", "double-cosets", "--left", "0", "--right", "0"],
        ["--structure", "pure_set", "spectrum", "oracle", "--bound", "2"],
        ["--structure", "pure_set", "algebra", "norm", "--expr", "e[1->2] - 1/2*e[1->2, 3->4]"],
        ["--structure", "pure_set", "--format", "table", "tensor", "--left", "1", "--right", "1"],
        ["--structure", "vec2", "phi", "--point", "{[0]->[0]}", "--expr", "e[] + 2*e[[0]->[0]]"],
    ]

    def body():
        n = 0
        for argv in commands:
            outs = {main_capture(argv) for _ in range(reruns)}
            _check(len(outs) == 1, f"nondeterministic output for {argv}")
            code, text = outs.pop()
            _check(code == 0, f"{argv} exited {code}: {text}")
            n += 1
        rng = random.Random(f"{seed}-8")
        for i in range(expressions):
            M = build(BUILTINS[i % len(BUILTINS)])
            pool = Pools().pool(M)
            f = random_element(M, rng, pool, 4)
            text = format_expression(M, f)
            g = parse_expression(M, text)
            _check(g == f and format_expression(M, g) == text, f"{M.name}: round trip of {text!r}")
            s = random_partial(M, rng, pool)
            _check(parse_partial(M, format_partial(M, s)) == s, f"{M.name}: round trip of {s!r}")
            n += 1
        return n

    return _run(8, "CLI determinism and round-trip", body)


CRITERIA = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
}


def run_all(seed: int = 0) -> list[CriterionResult]:
    return [CRITERIA[k](seed) for k in sorted(CRITERIA)]
