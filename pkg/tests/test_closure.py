from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oligohilb.closure import acl, acl_generic, is_acl_closed, relative_index
from oligohilb.elements import INFINITE
from oligohilb.structure import build

from .oracles import orbit_in_window, span_brute

e0, e1, e01 = (1,), (0, 1), (1, 1)


def test_acl_examples(P, V2):
    assert acl(V2, [e0, e1]) == ((), e0, e1, e01)
    assert acl(P, [5]) == (5,)
    assert acl(V2, []) == ((),)


def test_acl_generic_examples(P, D, V2):
    assert acl_generic(P, [1], 10) == (1,)
    assert acl_generic(D, [F(0), F(1)], 10) == (F(0), F(1))
    assert acl_generic(V2, [e0], 4) == ((), e0)


def test_acl_generic_bound_precondition(P):
    with pytest.raises(ValueError):
        acl_generic(P, [5], 5)


def test_is_acl_closed_examples(V2, R):
    assert not is_acl_closed(V2, [e0])
    assert is_acl_closed(V2, [(), e0])
    assert is_acl_closed(R, [0, 3, 17, 40])


def test_relative_index_examples(P, V3):
    assert relative_index(P, [1], [2]) is INFINITE
    assert relative_index(V3, [(1,)], [(2,)]) == 1
    assert relative_index(P, [1, 2], [2]) == 1


def test_relative_index_counts_orbit_in_window(V2):
    # over A = {0}, the tuple (e0) has an infinite orbit; over span it is fixed
    assert relative_index(V2, [()], [e0]) is INFINITE
    assert relative_index(V2, [e0, e1], [e01, e0]) == 1


@pytest.mark.parametrize("name", ["pure_set", "dlo", "rado", "vec2", "vec3"])
@given(data=st.data())
def test_closure_axioms_and_generic_agreement(name, data):
    M = build(name)
    pool = M.enumerate_elements(8)
    A = tuple(data.draw(st.lists(st.sampled_from(pool), max_size=3, unique=True)))
    B = tuple(data.draw(st.lists(st.sampled_from(pool), max_size=3, unique=True)))
    cA = acl(M, A)
    assert set(A) <= set(cA) and acl(M, cA) == cA
    assert set(cA) <= set(acl(M, A + B))
    bound = 30
    assert acl_generic(M, A, bound) == tuple(x for x in cA if M.index_of(x) < bound)
    assert (relative_index(M, A, B) is not INFINITE) == set(B).issubset(cA)


@pytest.mark.parametrize("q", [2, 3])
@given(data=st.data())
def test_vector_acl_matches_brute_span_and_orbits(q, data):
    M = build(f"vec{q}")
    window = M.enumerate_elements(q**3)
    A = data.draw(st.lists(st.sampled_from(window), max_size=2, unique=True))
    assert set(acl(M, A)) == span_brute(q, A)
    # algebraic elements are exactly those with a singleton orbit inside a full window
    for b in window:
        orbit = orbit_in_window(M, A, b, window)
        assert (len(orbit) == 1) == (b in acl(M, A))


@given(data=st.data())
def test_images_of_closed_domains_are_closed(data):
    from .strategies import partials

    M = build("vec3")
    u = data.draw(partials(M, 9, 2, closed=True))
    assert is_acl_closed(M, u.images)
