"""Polynomial text parser.

Grammar (whitespace ignored, implicit multiplication rejected)::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INT)?
    atom   := NUMBER | NUMBER "/" NUMBER | "x" | "y" | "(" expr ")"
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..poly import BiPoly, X, Y

__all__ = ["ParseError", "NegativeExponent", "parse_poly"]


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


class NegativeExponent(ParseError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+/\d+|\d+)|([xy])|([-+*^()]))")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].isspace():
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        kind = "num" if m.group(1) else "var" if m.group(2) else "op"
        tokens.append((kind, m.group(m.lastindex), m.start(m.lastindex)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.tokens[self.k]

    def take(self):
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.take()
        if val != value:
            raise ParseError(f"expected {value!r}, found {val or 'end of input'!r}", pos)

    def expr(self) -> BiPoly:
        acc = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> BiPoly:
        acc = self.unary()
        while self.peek()[1] == "*":
            self.take()
            acc = acc * self.unary()
        return acc

    def unary(self) -> BiPoly:
        if self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            val = self.unary()
            return -val if op == "-" else val
        return self.power()

    def power(self) -> BiPoly:
        base = self.atom()
        if self.peek()[1] != "^":
            return base
        self.take()
        kind, val, pos = self.take()
        if val == "-":
            raise NegativeExponent("negative exponent", pos)
        if kind != "num" or "/" in val:
            raise ParseError("exponent must be a nonnegative integer", pos)
        return base ** int(val)

    def atom(self) -> BiPoly:
        kind, val, pos = self.take()
        if kind == "num":
            try:
                return BiPoly.constant(Fraction(val))
            except ZeroDivisionError:
                raise ParseError("zero denominator", pos) from None
        if kind == "var":
            return X if val == "x" else Y
        if val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected {val or 'end of input'!r}", pos)

    def parse(self) -> BiPoly:
        result = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", pos)
        return result


def parse_poly(text: str) -> BiPoly:
    """Parse polynomial text such as ``"(y+x^2)^2 + x"`` exactly."""
    return _Parser(text).parse()
