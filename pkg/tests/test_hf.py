import random

from hypothesis import given
from hypothesis import strategies as st

from oligohilb import hf
from oligohilb.structure import build


def big(n: int):
    return hf.canon(n)


@given(st.integers(0, 2**300), st.integers(0, 2**300))
def test_compare_matches_int_order(a, b):
    x, y = big(a), big(b)
    assert hf.compare(x, y) == (a > b) - (a < b)
    assert (x < y) == (a < b) and (x == y) == (a == b)


@given(st.integers(0, 400), st.integers(0, 2**300))
def test_member_matches_bits(i, n):
    assert hf.member(big(i), big(n)) == bool((n >> i) & 1)


def test_canonical_representation():
    n = 2**270 + 5
    v = big(n)
    assert isinstance(v, hf.HugeVertex)
    assert hf.from_members([0, 2, 270]) == v
    assert hf.from_members([0, 2]) == 5
    assert big(2**255) == 2**255


def test_towers_stay_small():
    R = build("rado")
    top = hf.from_members([hf.from_members([300])])
    y = R.fresh_image(R.partial({top: top}), 0)
    assert y > top and not R.adjacent(y, top)
    assert hf.format_vertex(top) == "{{300}}"


def test_mixed_sorting():
    xs = [big(2**260), 7, big(2**300 + 1), 0, big(2**260 + 2**259)]
    rng = random.Random(0)
    rng.shuffle(xs)
    assert sorted(xs) == [0, 7, big(2**260), big(2**260 + 2**259), big(2**300 + 1)]
