"""Text forms of elements, partial automorphisms and algebra expressions.

Grammar for expressions::

    expr  := '0' | sign? term (('+'|'-') term)*
    term  := coeff '*' atom | atom
    atom  := 'e' '[' pairs? ']'
    coeff := rational | rational ('+'|'-') rational 'i'
    pairs := pair (',' pair)*
    pair  := elem '->' elem

Element literals depend on the structure: naturals for pure_set and rado
(rado also accepts ``{m,...}``, the vertex with 1-bits at the members),
``p/q`` for dlo and ``[c0,c1,...]`` for vector spaces.
"""

from __future__ import annotations

from fractions import Fraction
from typing import TYPE_CHECKING

from . import hf
from .algebra import AlgebraElement
from .coefficients import ONE, GaussRat
from .elements import as_set
from .errors import ExpressionSyntaxError, UnknownElementLiteral
from .partials import PartialAuto

if TYPE_CHECKING:
    from .structure import Structure


class _Parser:
    def __init__(self, M: "Structure", text: str):
        self.M = M
        self.text = text
        self.pos = 0

    # -- lexing helpers
    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, k: int = 0) -> str:
        self.skip()
        i = self.pos + k
        return self.text[i] if i < len(self.text) else ""

    def at_end(self) -> bool:
        self.skip()
        return self.pos >= len(self.text)

    def fail(self, what: str, pos: int | None = None):
        pos = self.pos if pos is None else pos
        found = "end of input" if pos >= len(self.text) else repr(self.text[pos])
        raise ExpressionSyntaxError(f"expected {what}, found {found}", pos)

    def expect(self, token: str):
        self.skip()
        if not self.text.startswith(token, self.pos):
            self.fail(repr(token))
        self.pos += len(token)

    def accept(self, token: str) -> bool:
        self.skip()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def finish(self):
        if not self.at_end():
            self.fail("end of input")

    def digits(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("digits")
        return int(self.text[start : self.pos])

    def rational(self) -> Fraction:
        neg = self.accept("-")
        num = self.digits()
        den = 1
        if self.accept("/"):
            at = self.pos
            den = self.digits()
            if den == 0:
                raise ExpressionSyntaxError("zero denominator", at)
        value = Fraction(num, den)
        return -value if neg else value

    # -- elements
    def element(self):
        self.skip()
        start = self.pos
        kind = self.M.kind
        if kind == "vector_space":
            self.expect("[")
            coords = [self.digits()]
            while self.accept(","):
                coords.append(self.digits())
            self.expect("]")
            raw = tuple(coords)
        elif kind == "dlo":
            raw = self.rational()
        elif kind == "rado" and self.peek() == "{":
            raw = self.vertex_set()
        else:
            raw = self.digits()
        try:
            return self.M.coerce(raw)
        except UnknownElementLiteral as exc:
            raise UnknownElementLiteral(f"{exc.detail} (at position {start})") from None

    def vertex_set(self):
        self.expect("{")
        members = []
        if not self.accept("}"):
            members.append(self.element())
            while self.accept(","):
                members.append(self.element())
            self.expect("}")
        if len(set(members)) != len(members):
            raise UnknownElementLiteral("repeated member in vertex literal")
        return hf.from_members(members)

    def element_list(self) -> tuple:
        if self.at_end():
            return ()
        out = [self.element()]
        while self.accept(","):
            out.append(self.element())
        return tuple(out)

    # -- partial automorphisms
    def pairs(self, close: str) -> list:
        out = []
        if self.peek() == close:
            return out
        while True:
            x = self.element()
            self.expect("->")
            out.append((x, self.element()))
            if not self.accept(","):
                return out

    def partial(self) -> PartialAuto:
        self.expect("{")
        pairs = self.pairs("}")
        self.expect("}")
        return self.M.partial(pairs)

    # -- expressions
    def coeff(self) -> GaussRat | None:
        """A coefficient followed by '*', or None when the term is a bare atom."""
        if self.peek() == "e":
            return None
        re = self.rational()
        im = Fraction(0)
        save = self.pos
        if self.peek() and self.peek() in "+-":
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
            try:
                if self.peek() in "+-":
                    raise ExpressionSyntaxError("", self.pos)
                im = sign * self.rational()
                self.expect("i")
            except ExpressionSyntaxError:
                self.pos = save
                im = Fraction(0)
        self.expect("*")
        return GaussRat(re, im)

    def atom(self) -> PartialAuto:
        self.expect("e")
        self.expect("[")
        pairs = self.pairs("]")
        self.expect("]")
        return self.M.partial(pairs)

    def term(self) -> tuple[PartialAuto, GaussRat]:
        c = self.coeff()
        return self.atom(), ONE if c is None else c

    def expression(self) -> AlgebraElement:
        if self.peek() == "0" and self.text[self.pos + 1 :].strip() == "":
            self.pos = len(self.text)
            return AlgebraElement([])
        terms = []
        # a leading '-' is a sign only before a bare atom; otherwise it belongs to the coefficient
        sign, save = 1, self.pos
        if self.accept("-"):
            if self.peek() == "e":
                sign = -1
            else:
                self.pos = save
        s, c = self.term()
        terms.append((s, c * sign))
        while not self.at_end():
            if self.accept("+"):
                sign = 1
            elif self.accept("-"):
                sign = -1
            else:
                self.fail("'+' or '-'")
            s, c = self.term()
            terms.append((s, c * sign))
        return AlgebraElement(terms)


def _run(M: "Structure", text: str, method: str):
    p = _Parser(M, text)
    out = getattr(p, method)()
    p.finish()
    return out


def parse_element(M: "Structure", text: str):
    return _run(M, text, "element")


def parse_element_list(M: "Structure", text: str) -> tuple:
    """Comma-separated elements as a sorted set."""
    return as_set(_run(M, text, "element_list"))


def parse_partial(M: "Structure", text: str) -> PartialAuto:
    return _run(M, text, "partial")


def parse_expression(M: "Structure", text: str) -> AlgebraElement:
    return _run(M, text, "expression")


def format_element(M: "Structure", e) -> str:
    return M.format_element(e)


def format_pairs(M: "Structure", s: PartialAuto) -> str:
    return ", ".join(f"{M.format_element(x)}->{M.format_element(y)}" for x, y in s.items())


def format_partial(M: "Structure", s: PartialAuto) -> str:
    return "{" + format_pairs(M, s) + "}"


def format_set(M: "Structure", A) -> str:
    return ",".join(M.format_element(a) for a in A)


def format_expression(M: "Structure", f: AlgebraElement) -> str:
    """Normalized text form; parse_expression inverts it."""
    if not f.terms:
        return "0"
    parts = []
    for i, (s, c) in enumerate(f):
        atom = f"e[{format_pairs(M, s)}]"
        if c.is_real:
            neg = c.re < 0
            mag = abs(c.re)
            body = atom if mag == 1 else f"{mag}*{atom}"
            if i == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        else:
            parts.append(("" if i == 0 else " + ") + f"{c}*{atom}")
    return "".join(parts)


__all__ = [
    "parse_element",
    "parse_element_list",
    "parse_partial",
    "parse_expression",
    "format_element",
    "format_partial",
    "format_set",
    "format_expression",
]
