"""Parsing and printing of rational-function expressions in ``t``.

Grammar (whitespace is ignored)::

    expr     := term (('+' | '-') term)*
    term     := factor (('*' | '/') factor)*
    factor   := ['-'] base ['^' uint]
    base     := rational | 't' | '(' expr ')'
    rational := int ['/' uint]

A literal ``a/b`` is a single rational base, so ``2/3^2`` is ``(2/3)^2``.
The unary minus covers the whole factor: ``-t^2`` is ``-(t^2)``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .ratfunc import Polynomial, RationalFunction

_TOKEN = re.compile(r"\s*(?:(\d+)|(.))")


class ExprSyntaxError(ValueError):
    def __init__(self, msg: str, text: str, pos: int):
        super().__init__(f"{msg} at position {pos}: {text!r}")
        self.pos = pos
        self.text = text


def _tokenize(s: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    s = s.rstrip()
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        start = m.start(1) if m.group(1) is not None else m.start(2)
        if m.group(1) is not None:
            toks.append(("int", m.group(1), start))
        else:
            ch = m.group(2)
            if ch not in "+-*/^()t":
                raise ExprSyntaxError(f"unexpected character {ch!r}", s, start)
            toks.append((ch, ch, start))
        pos = m.end()
    toks.append(("end", "", len(s)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self, ahead: int = 0) -> str:
        return self.toks[min(self.i + ahead, len(self.toks) - 1)][0]

    def take(self, kind: str) -> str:
        tok = self.toks[self.i]
        if tok[0] != kind:
            want = "end of input" if kind == "end" else repr(kind)
            got = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ExprSyntaxError(f"expected {want}, got {got}", self.text, tok[2])
        self.i += 1
        return tok[1]

    def expr(self) -> RationalFunction:
        acc = self.term()
        while self.peek() in "+-":
            op = self.take(self.peek())
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> RationalFunction:
        acc = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take(self.peek())
            pos = self.toks[self.i][2]
            rhs = self.factor()
            if op == "*":
                acc = acc * rhs
            elif not rhs:
                raise ExprSyntaxError("division by the zero function", self.text, pos)
            else:
                acc = acc / rhs
        return acc

    def factor(self) -> RationalFunction:
        neg = False
        if self.peek() == "-":
            self.take("-")
            neg = True
        base = self.base()
        if self.peek() == "^":
            self.take("^")
            pos = self.toks[self.i][2]
            k = int(self.take("int"))
            if k == 0 and not base:
                raise ExprSyntaxError("0^0 is undefined", self.text, pos)
            base = base**k
        return -base if neg else base

    def base(self) -> RationalFunction:
        kind = self.peek()
        if kind == "int":
            num = int(self.take("int"))
            if self.peek() == "/" and self.peek(1) == "int":
                self.take("/")
                pos = self.toks[self.i][2]
                den = int(self.take("int"))
                if den == 0:
                    raise ExprSyntaxError("zero denominator", self.text, pos)
                return RationalFunction.constant(Fraction(num, den))
            return RationalFunction.constant(num)
        if kind == "t":
            self.take("t")
            return RationalFunction.t()
        if kind == "(":
            self.take("(")
            inner = self.expr()
            self.take(")")
            return inner
        tok = self.toks[self.i]
        got = "end of input" if tok[0] == "end" else repr(tok[1])
        raise ExprSyntaxError(f"expected a number, 't' or '(', got {got}", self.text, tok[2])


def parse_expr(s: str) -> RationalFunction:
    """Parse an expression in ``t`` into a canonical :class:`RationalFunction`.

    >>> parse_expr("-(1-t)/6") == parse_expr("t/6 - 1/6")
    True
    """
    if not s or not s.strip():
        raise ExprSyntaxError("empty expression", s or "", 0)
    parser = _Parser(s)
    out = parser.expr()
    parser.take("end")
    return out


def _format_poly(poly: Polynomial) -> str:
    if not poly:
        return "0"
    parts = []
    for i in range(poly.degree, -1, -1):
        c = poly.coeffs[i]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if i == 0:
            body = str(c)
        else:
            mono = "t" if i == 1 else f"t^{i}"
            body = mono if c == 1 else f"{c}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def format_expr(g: RationalFunction) -> str:
    """Render ``g`` in the grammar accepted by :func:`parse_expr`."""
    num = _format_poly(g.num)
    if g.is_polynomial:
        return num
    if len([c for c in g.num.coeffs if c]) > 1:
        num = f"({num})"
    return f"{num}/({_format_poly(g.den)})"


def format_poly(f: Polynomial) -> str:
    return _format_poly(f)
