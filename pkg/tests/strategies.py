"""Hypothesis strategies for elements, partial isos and algebra elements."""

from hypothesis import strategies as st

from oligohilb.algebra import AlgebraElement
from oligohilb.coefficients import GaussRat
from oligohilb.elements import as_set
from oligohilb.partials import EMPTY


@st.composite
def extensions(draw, M, s, points, pool):
    """Extend s to the given points choosing images among pool or fresh candidates."""
    for x in as_set(points):
        if x in s:
            continue
        code = M.tuple_type(s.domain + (x,))
        options = [y for y in pool if y not in s.images and M.tuple_type(s.images + (y,)) == code]
        if not options:
            options = [y for y in M.one_point_candidates(s.images) if y not in s.images and M.tuple_type(s.images + (y,)) == code]
        s = s.add(x, draw(st.sampled_from(options)))
    return s


@st.composite
def partials(draw, M, pool_size=6, max_size=3, closed=False):
    pool = M.enumerate_elements(pool_size)
    dom = draw(st.lists(st.sampled_from(pool), max_size=max_size, unique=True))
    if closed:
        dom = M.acl(dom)
    return draw(extensions(M, EMPTY, dom, pool))


def families(M, pool_size=6, max_maps=3, max_size=2):
    return st.lists(partials(M, pool_size, max_size), max_size=max_maps, unique=True)


coefficients = st.builds(
    lambda a, b, c: GaussRat.of(a) + GaussRat(0, 1) * GaussRat.of(b) if c else GaussRat.of(a),
    st.integers(-3, 3),
    st.integers(-2, 2),
    st.booleans(),
)


@st.composite
def elements(draw, M, pool_size=6, max_terms=3, max_size=2):
    terms = draw(st.lists(st.tuples(partials(M, pool_size, max_size), coefficients), max_size=max_terms))
    return AlgebraElement(terms)
