"""Exception hierarchy shared by every module.

Each error carries a ``kind`` used by the CLI when serializing failures.
"""

from __future__ import annotations


class OligoError(Exception):
    kind = "Error"

    def __init__(self, detail: str = ""):
        super().__init__(detail)
        self.detail = detail

    def to_dict(self) -> dict:
        return {"kind": self.kind, "detail": self.detail}


def _make(name: str, doc: str):
    return type(name, (OligoError,), {"kind": name, "__doc__": doc})


NonInjective = _make("NonInjective", "A map sends two points to the same image.")
NotAFunction = _make("NotAFunction", "A set of pairs assigns two images to one point.")
NotPartialIso = _make("NotPartialIso", "A finite map does not preserve quantifier-free types.")
UnrealizableCode = _make("UnrealizableCode", "No element realizes the requested type code.")
Exhausted = _make("Exhausted", "Every realization of a finite type is forbidden.")
BoundExceeded = _make("BoundExceeded", "A witness search hit its configured cap.")
LimitExceeded = _make("LimitExceeded", "An exhaustive enumeration was asked for too much.")
UndecidedDomain = _make("UndecidedDomain", "The evaluation point does not cover a term's domain.")
InsufficientSupport = _make("InsufficientSupport", "A group element does not cover a term's range.")
Undecided = _make("Undecided", "A truncated spectrum point cannot decide a term.")
Inconsistent = _make("Inconsistent", "A functional table assigns 0 to a map below its union.")
UnknownElementLiteral = _make("UnknownElementLiteral", "Text is not an element of the structure.")


class NotAclClosed(OligoError):
    """A domain misses an element algebraic over it."""

    kind = "NotAclClosed"

    def __init__(self, detail: str = "", element=None):
        super().__init__(detail)
        self.element = element


class ExpressionSyntaxError(OligoError):
    kind = "SyntaxError"

    def __init__(self, detail: str, position: int):
        super().__init__(f"{detail} at position {position}")
        self.position = position
