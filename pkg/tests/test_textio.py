from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oligohilb.algebra import AlgebraElement, e
from oligohilb.coefficients import GaussRat
from oligohilb.errors import ExpressionSyntaxError, UnknownElementLiteral
from oligohilb.hf import HUGE_BITS, HugeVertex
from oligohilb.structure import build
from oligohilb.textio import (
    format_expression,
    format_partial,
    format_set,
    parse_element,
    parse_element_list,
    parse_expression,
    parse_partial,
)

from .strategies import elements, partials

BUILTINS = ["pure_set", "dlo", "rado", "vec2", "vec3"]


def test_expression_examples(P, D):
    assert parse_expression(P, "e[1->2] + 2*e[]") == e(P.partial({1: 2})) + 2 * e()
    f = parse_expression(D, "1/2*e[0->0] - e[1->-1]")
    assert len(f) == 2
    assert f.coefficient(D.partial({F(0): F(0)})) == F(1, 2)
    assert f.coefficient(D.partial({F(1): F(-1)})) == -1


def test_syntax_error_at_eof(P):
    with pytest.raises(ExpressionSyntaxError) as exc:
        parse_expression(P, "e[1->2")
    assert exc.value.position == len("e[1->2")
    assert "end of input" in exc.value.detail


@pytest.mark.parametrize("text", ["e[1->]", "2 e[1->2]", "e[1->2] +", "*e[]", "e[1->2]]", "", "3"])
def test_syntax_errors(P, text):
    with pytest.raises(ExpressionSyntaxError):
        parse_expression(P, text)


def test_complex_coefficients(P):
    f = parse_expression(P, "1+2i*e[1->2] - 1/3-1i*e[]")
    assert f.coefficient(P.partial({1: 2})) == GaussRat(F(1), F(2))
    assert f.coefficient(P.partial({})) == -GaussRat(F(1, 3), F(-1))
    assert parse_expression(P, "-2*e[]") == -2 * e()
    assert parse_expression(P, "-e[]") == -1 * e()


def test_zero_and_cancellation(P):
    assert parse_expression(P, "0") == AlgebraElement([])
    assert format_expression(P, parse_expression(P, "e[1->2] - e[1->2]")) == "0"


def test_element_literals(P, D, R, V2):
    assert parse_element(D, "-3/4") == F(-3, 4)
    assert parse_element(V2, "[1,0,0]") == (1,)
    assert parse_element(R, "{0,2}") == 5
    big = parse_element(R, f"{{{HUGE_BITS}}}")
    assert isinstance(big, HugeVertex) and R.format_element(big) == f"{{{HUGE_BITS}}}"
    assert parse_element_list(P, "3, 1, 3") == (1, 3)
    assert parse_element_list(P, "") == ()
    with pytest.raises(UnknownElementLiteral):
        parse_element(V2, "[2]")
    with pytest.raises(ExpressionSyntaxError):
        parse_element(D, "1/0")


def test_partial_literals(P, V2):
    s = parse_partial(P, "{1->2, 3->4}")
    assert s == P.partial({1: 2, 3: 4})
    assert format_partial(P, s) == "{1->2, 3->4}"
    assert format_set(V2, V2.acl([(1,)])) == "[0],[1]"


def test_expression_output_is_sorted(P):
    f = parse_expression(P, "e[3->4] + e[1->2]")
    assert format_expression(P, f) == "e[1->2] + e[3->4]"


@pytest.mark.parametrize("name", BUILTINS)
@given(data=st.data())
def test_expression_round_trip(name, data):
    M = build(name)
    f = data.draw(elements(M, 8, 4, 3))
    text = format_expression(M, f)
    assert parse_expression(M, text) == f
    assert format_expression(M, parse_expression(M, text)) == text


@pytest.mark.parametrize("name", BUILTINS)
@given(data=st.data())
def test_partial_round_trip(name, data):
    M = build(name)
    s = data.draw(partials(M, 8, 4))
    assert parse_partial(M, format_partial(M, s)) == s
