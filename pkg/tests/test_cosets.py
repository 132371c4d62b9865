import itertools
from fractions import Fraction as F

import pytest

from oligohilb.algebra import AlgebraElement, evaluate_at
from oligohilb.cosets import (
    OpenCoset,
    OpenSubgroup,
    aut_of,
    canonical_subgroup,
    coset_indicator,
    coset_intersect,
    double_cosets,
    stabilizer_coset,
    tensor_decompose,
)
from oligohilb.partials import EMPTY, compose, extends, identity, inverse
from oligohilb.structure import build

from .oracles import joint_type_count

e0, e1, e01 = (1,), (0, 1), (1, 1)


def test_aut_of_examples(P, D, V2):
    assert aut_of(P, [1, 2]) == [P.partial({1: 1, 2: 2}), P.partial({1: 2, 2: 1})]
    assert aut_of(D, [F(0), F(1)]) == [D.partial({F(0): F(0), F(1): F(1)})]
    assert len(aut_of(V2, [(), e0, e1, e01])) == 6


@pytest.mark.parametrize("name,A", [("pure_set", [0, 1, 2]), ("vec2", [(), (1,), (0, 1), (1, 1)]), ("vec3", [(), (1,), (2,)]), ("rado", [0, 1, 2, 3])])
def test_aut_of_is_a_group(name, A):
    M = build(name)
    G = set(aut_of(M, A))
    assert identity(M.coerce(a) for a in A) in G
    for g, h in itertools.product(G, repeat=2):
        assert compose(g, h) in G
    assert all(inverse(g) in G for g in G)


def test_canonical_subgroup_examples(P, V2):
    H = canonical_subgroup(P, [1, 2])
    assert H.base == (1, 2) and H.local_group == (P.partial({1: 1, 2: 2}),)
    H = canonical_subgroup(V2, [e0, e1])
    assert H.base == ((), e0, e1, e01) and len(H.local_group) == 1
    H = canonical_subgroup(V2, [e01])
    assert H.base == ((), e01) and len(H.local_group) == 1


def test_canonical_subgroup_fixes_generators_only(V3):
    # fixing 0 in F_3^1 leaves x -> 2x on span{e0}
    H = canonical_subgroup(V3, [()])
    assert H.base == ((),)
    H = canonical_subgroup(V3, [(1,)])
    assert len(H.local_group) == 1


def test_coset_intersect_examples(P):
    c1 = stabilizer_coset(P, P.partial({1: 2}))
    c2 = stabilizer_coset(P, P.partial({3: 4}))
    both = coset_intersect(P, c1, c2)
    assert both.translate == P.partial({1: 2, 3: 4}) and both.subgroup.base == (1, 3)
    assert coset_intersect(P, c1, stabilizer_coset(P, P.partial({1: 3}))) is None
    assert coset_intersect(P, c1, c1) == c1


def test_coset_intersect_fills_algebraic_points(V2):
    c1 = stabilizer_coset(V2, V2.partial({(): (), e0: e1}))
    c2 = stabilizer_coset(V2, V2.partial({(): (), e1: e0}))
    c = coset_intersect(V2, c1, c2)
    assert c.translate == V2.partial({(): (), e0: e1, e1: e0, e01: e01})


def test_open_coset_requires_full_base(P):
    with pytest.raises(ValueError):
        OpenCoset(P.partial({1: 1}), OpenSubgroup((1, 2), (P.partial({1: 1, 2: 2}),)))


def test_double_coset_examples(P, D):
    assert double_cosets(P, [1], [1]).count == 2
    assert double_cosets(D, [F(0)], [F(0)]).count == 3
    for M in (P, D, build("rado"), build("vec2")):
        pool = M.enumerate_elements(3)
        assert double_cosets(M, [], pool[1:3]).count == 1
        assert double_cosets(M, pool[1:3], []).count == 1


@pytest.mark.parametrize("name,window", [("pure_set", 7), ("dlo", 20), ("vec2", 16), ("vec3", 81), ("rado", 40)])
def test_double_cosets_match_window_joint_types(name, window):
    M = build(name)
    pool = M.enumerate_elements(4)
    W = M.enumerate_elements(window)
    for A, B in [(pool[:2], pool[1:2]), (pool[1:3], pool[2:4]), (pool[:1], pool[:2])]:
        table = double_cosets(M, A, B)
        assert table.count == joint_type_count(M, A, B, W)
        codes = {M.tuple_type(table.left + r.images) for r in table.representatives}
        assert len(codes) == table.count
        assert all(r.domain == table.right and M.is_partial_iso(r) for r in table.representatives)


def test_tensor_examples(P, D):
    assert tensor_decompose(P, [1], [1]) == [(P.partial({1: 1}), (1,)), (P.partial({1: 2}), (1, 2))]
    assert tensor_decompose(P, [1, 2], []) == [(EMPTY, (1, 2))]
    summands = tensor_decompose(D, [F(0)], [F(0)])
    assert len(summands) == 3
    bases = sorted(len(b) for _, b in summands)
    assert bases == [1, 2, 2]
    others = sorted(f(F(0)) for f, b in summands if len(b) == 2)
    assert others[0] < 0 < others[1]


@pytest.mark.parametrize("name", ["pure_set", "dlo", "rado", "vec2"])
def test_surjection_comparison(name):
    M = build(name)
    pool = M.enumerate_elements(4)
    for A, B in [(pool[:1], pool[1:2]), (pool[1:3], pool[2:3])]:
        C = M.acl(tuple(A) + tuple(B))
        assert double_cosets(M, C, C).count >= double_cosets(M, A, B).count


def test_tensor_summand_bases_contain_copies(V2):
    A, B = [e0], [e1]
    for f, base in tensor_decompose(V2, A, B):
        assert set(A) <= set(base) and set(f.images) <= set(base)


def test_coset_indicator_examples(P, V2):
    H = OpenSubgroup((1, 2), tuple(aut_of(P, [1, 2])))
    c = OpenCoset(P.partial({1: 1, 2: 2}), H)
    assert coset_indicator(c) == AlgebraElement([(P.partial({1: 1, 2: 2}), 1), (P.partial({1: 2, 2: 1}), 1)])
    s = P.partial({1: 3})
    assert coset_indicator(stabilizer_coset(P, s)) == AlgebraElement([(s, 1)])
    base = V2.acl([e0, e1])
    full = OpenCoset(identity(base), OpenSubgroup(base, tuple(aut_of(V2, base))))
    assert len(coset_indicator(full)) == 6


def test_coset_indicator_is_the_indicator(P):
    H = OpenSubgroup((1, 2), tuple(aut_of(P, [1, 2])))
    c = OpenCoset(P.partial({1: 3, 2: 4}), H)
    f = coset_indicator(c)
    for img in itertools.permutations(range(6), 2):
        g = P.partial(dict(zip((1, 2), img)))
        inside = any(extends(g, compose(c.translate, sigma)) for sigma in H.local_group)
        assert evaluate_at(f, g) == (1 if inside else 0)
        assert inside == (set(img) == {3, 4})
