"""Ring-specification expressions: AST, canonical rendering, and the parser.

Grammar (whitespace-insensitive)::

    expr  := "Z(" int ")" | "Zi(" int ")" | "M(" int "," expr ")"
           | "T(" int "," expr ")" | "prod(" expr ("," expr)* ")"
           | "quot(" expr "," ideal ")" | "corner(" expr "," elem ")"
    ideal := "zero" | "all" | "jacobson" | "gen(" elem ("," elem)* ")"
    elem  := constructor-native element literal (balanced brackets)

Parse errors carry the byte offset into the original text.  A family
template is the same grammar with the parameter name "n" allowed wherever
an integer is expected.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import RingSyntaxError


@dataclass(frozen=True)
class Param:
    """Placeholder for the swept integer in a parametric family."""

    name: str = "n"


IntArg = Union[int, Param]


@dataclass(frozen=True)
class Cyclic:
    n: IntArg


@dataclass(frozen=True)
class Gaussian:
    n: IntArg


@dataclass(frozen=True)
class Matrix:
    dim: IntArg
    base: "RingExpr"


@dataclass(frozen=True)
class Triangular:
    dim: IntArg
    base: "RingExpr"


@dataclass(frozen=True)
class Product:
    factors: tuple["RingExpr", ...]


@dataclass(frozen=True)
class Quotient:
    base: "RingExpr"
    ideal: "IdealSpec"


@dataclass(frozen=True)
class Corner:
    base: "RingExpr"
    element: str


RingExpr = Union[Cyclic, Gaussian, Matrix, Triangular, Product, Quotient, Corner]


@dataclass(frozen=True)
class ZeroIdeal:
    pass


@dataclass(frozen=True)
class AllIdeal:
    pass


@dataclass(frozen=True)
class JacobsonIdeal:
    pass


@dataclass(frozen=True)
class GeneratedIdeal:
    generators: tuple[str, ...]


IdealSpec = Union[ZeroIdeal, AllIdeal, JacobsonIdeal, GeneratedIdeal]


def render(expr: RingExpr) -> str:
    """Canonical text for an expression; parse(render(e)) == e."""
    if isinstance(expr, Cyclic):
        return f"Z({_int_str(expr.n)})"
    if isinstance(expr, Gaussian):
        return f"Zi({_int_str(expr.n)})"
    if isinstance(expr, Matrix):
        return f"M({_int_str(expr.dim)},{render(expr.base)})"
    if isinstance(expr, Triangular):
        return f"T({_int_str(expr.dim)},{render(expr.base)})"
    if isinstance(expr, Product):
        return "prod(" + ",".join(render(f) for f in expr.factors) + ")"
    if isinstance(expr, Quotient):
        return f"quot({render(expr.base)},{render_ideal(expr.ideal)})"
    if isinstance(expr, Corner):
        return f"corner({render(expr.base)},{expr.element})"
    raise TypeError(f"not a ring expression: {expr!r}")


def render_ideal(spec: IdealSpec) -> str:
    if isinstance(spec, ZeroIdeal):
        return "zero"
    if isinstance(spec, AllIdeal):
        return "all"
    if isinstance(spec, JacobsonIdeal):
        return "jacobson"
    if isinstance(spec, GeneratedIdeal):
        return "gen(" + ",".join(spec.generators) + ")"
    raise TypeError(f"not an ideal spec: {spec!r}")


def _int_str(v: IntArg) -> str:
    return v.name if isinstance(v, Param) else str(v)


def substitute(expr: RingExpr, value: int) -> RingExpr:
    """Instantiate every Param in a family template with a concrete integer."""
    if isinstance(expr, Cyclic):
        return Cyclic(_subst_int(expr.n, value))
    if isinstance(expr, Gaussian):
        return Gaussian(_subst_int(expr.n, value))
    if isinstance(expr, Matrix):
        return Matrix(_subst_int(expr.dim, value), substitute(expr.base, value))
    if isinstance(expr, Triangular):
        return Triangular(_subst_int(expr.dim, value), substitute(expr.base, value))
    if isinstance(expr, Product):
        return Product(tuple(substitute(f, value) for f in expr.factors))
    if isinstance(expr, Quotient):
        return Quotient(substitute(expr.base, value), expr.ideal)
    if isinstance(expr, Corner):
        return Corner(substitute(expr.base, value), expr.element)
    raise TypeError(f"not a ring expression: {expr!r}")


def _subst_int(v: IntArg, value: int) -> int:
    return value if isinstance(v, Param) else v


_CONSTRUCTORS = ("Z", "Zi", "M", "T", "prod", "quot", "corner")


class _Parser:
    def __init__(self, text: str, allow_param: bool):
        self.text = text
        self.pos = 0
        self.allow_param = allow_param

    def error(self, *expected: str):
        raise RingSyntaxError(self.pos, expected)

    def skip_ws(self):
        t = self.text
        while self.pos < len(t) and t[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def literal(self, tok: str):
        self.skip_ws()
        if not self.text.startswith(tok, self.pos):
            self.error(f"'{tok}'")
        self.pos += len(tok)

    def word(self) -> str:
        self.skip_ws()
        j = self.pos
        while j < len(self.text) and self.text[j].isalpha():
            j += 1
        w = self.text[self.pos : j]
        self.pos = j
        return w

    def integer(self) -> IntArg:
        self.skip_ws()
        start = self.pos
        j = self.pos
        while j < len(self.text) and self.text[j].isdigit():
            j += 1
        if j == start:
            if self.allow_param and self.text.startswith("n", start):
                self.pos = start + 1
                return Param("n")
            self.error("integer" if not self.allow_param else "integer or 'n'")
        self.pos = j
        return int(self.text[start:j])

    def element(self) -> str:
        # Balanced-bracket capture up to the next top-level ',' or ')'.
        self.skip_ws()
        start = self.pos
        depth = 0
        j = self.pos
        t = self.text
        while j < len(t):
            c = t[j]
            if c in "([":
                depth += 1
            elif c in ")]":
                if depth == 0:
                    break
                depth -= 1
            elif c == "," and depth == 0:
                break
            j += 1
        lit = "".join(ch for ch in t[start:j] if not ch.isspace())
        if not lit:
            self.error("element literal")
        self.pos = j
        return lit

    def expr(self) -> RingExpr:
        self.skip_ws()
        at = self.pos
        w = self.word()
        if w == "Z":
            self.literal("(")
            n = self.integer()
            self.literal(")")
            return Cyclic(n)
        if w == "Zi":
            self.literal("(")
            n = self.integer()
            self.literal(")")
            return Gaussian(n)
        if w in ("M", "T"):
            self.literal("(")
            k = self.integer()
            self.literal(",")
            base = self.expr()
            self.literal(")")
            return Matrix(k, base) if w == "M" else Triangular(k, base)
        if w == "prod":
            self.literal("(")
            factors = [self.expr()]
            while True:
                self.skip_ws()
                if self.text.startswith(",", self.pos):
                    self.pos += 1
                    factors.append(self.expr())
                else:
                    break
            self.literal(")")
            return Product(tuple(factors))
        if w == "quot":
            self.literal("(")
            base = self.expr()
            self.literal(",")
            spec = self.ideal()
            self.literal(")")
            return Quotient(base, spec)
        if w == "corner":
            self.literal("(")
            base = self.expr()
            self.literal(",")
            elem = self.element()
            self.literal(")")
            return Corner(base, elem)
        self.pos = at
        self.error(*(f"'{c}('" for c in _CONSTRUCTORS))

    def ideal(self) -> IdealSpec:
        self.skip_ws()
        at = self.pos
        w = self.word()
        if w == "zero":
            return ZeroIdeal()
        if w == "all":
            return AllIdeal()
        if w == "jacobson":
            return JacobsonIdeal()
        if w == "gen":
            self.literal("(")
            gens = [self.element()]
            while True:
                self.skip_ws()
                if self.text.startswith(",", self.pos):
                    self.pos += 1
                    gens.append(self.element())
                else:
                    break
            self.literal(")")
            return GeneratedIdeal(tuple(gens))
        self.pos = at
        self.error("'zero'", "'all'", "'jacobson'", "'gen('")


def parse_ring_expr(text: str, allow_param: bool = False) -> RingExpr:
    """Parse a ring expression; RingSyntaxError carries the failing offset."""
    p = _Parser(text, allow_param)
    e = p.expr()
    if not p.at_end():
        p.error("end of input")
    return e


def parse_ideal_spec(text: str) -> IdealSpec:
    """Parse a standalone ideal spec as used by --ideal."""
    p = _Parser(text, allow_param=False)
    s = p.ideal()
    if not p.at_end():
        p.error("end of input")
    return s


def parse_family(text: str) -> RingExpr:
    """Parse a parametric family template; 'n' marks the swept integer."""
    return parse_ring_expr(text, allow_param=True)


def has_param(expr: RingExpr) -> bool:
    if isinstance(expr, (Cyclic, Gaussian)):
        return isinstance(expr.n, Param)
    if isinstance(expr, (Matrix, Triangular)):
        return isinstance(expr.dim, Param) or has_param(expr.base)
    if isinstance(expr, Product):
        return any(has_param(f) for f in expr.factors)
    if isinstance(expr, (Quotient, Corner)):
        return has_param(expr.base)
    return False
