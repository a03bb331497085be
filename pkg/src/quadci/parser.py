"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace insignificant):

    expr   := term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := scalar | varname | "(" expr ")" | factor "^" uint
    scalar := ["-"] digit+ ["/" digit+]

Printing a Polynomial with ``str`` produces a string this parser maps
back to the identical term map.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .polyring import Polynomial, VariableTable
from .scalars import FieldSpec, Scalar

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([-+*^()/]))")


def tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos:]!r} in {text!r}")
        if m.group(1) is not None:
            tokens.append(("num", m.group(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2)))
        else:
            tokens.append(("op", m.group(3)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens, field: FieldSpec, table: VariableTable, text: str):
        self.tokens = tokens
        self.pos = 0
        self.field = field
        self.table = table
        self.text = text

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def next(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def fail(self, why):
        raise ParseError(f"{why} in {self.text!r}")

    def expr(self) -> Polynomial:
        out = self.term()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                rhs = self.term()
                out = out + rhs if val == "+" else out - rhs
            else:
                return out

    def term(self) -> Polynomial:
        out = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.next()
                out = out * self.factor()
            else:
                return out

    def factor(self) -> Polynomial:
        base = self.primary()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "^":
                self.next()
                kind, val = self.next()
                if kind != "num":
                    self.fail("exponent must be an unsigned integer")
                base = base ** int(val)
            else:
                return base

    def primary(self) -> Polynomial:
        kind, val = self.next()
        if kind == "num":
            return Polynomial.constant(self.field, self.table, self.scalar_tail(int(val)))
        if kind == "op" and val == "-":
            kind, val = self.next()
            if kind != "num":
                self.fail("'-' must introduce a scalar literal here")
            return Polynomial.constant(self.field, self.table, self.scalar_tail(-int(val)))
        if kind == "name":
            try:
                i = self.table.index(val)
            except ValueError:
                self.fail(f"unknown variable {val!r}")
            return Polynomial.variable(self.field, self.table, i)
        if kind == "op" and val == "(":
            inner = self.expr()
            kind, val = self.next()
            if (kind, val) != ("op", ")"):
                self.fail("expected ')'")
            return inner
        self.fail(f"unexpected token {val!r}" if val is not None else "unexpected end of input")

    def scalar_tail(self, num: int) -> Scalar:
        """Finish an int or int/int literal whose numerator is parsed."""
        kind, val = self.peek()
        if kind == "op" and val == "/":
            self.next()
            kind, val = self.next()
            if kind != "num":
                self.fail("denominator must be an unsigned integer")
            den = int(val)
            if den == 0:
                self.fail("zero denominator")
            if self.field.kind == "prime" and den % self.field.modulus == 0:
                self.fail(f"denominator vanishes in {self.field}")
            return Scalar(self.field, Fraction(num, den))
        return Scalar(self.field, num)


def parse_polynomial(text: str, field: FieldSpec, table: VariableTable) -> Polynomial:
    """Parse an expression over the given variables into a Polynomial."""
    tokens = tokenize(text)
    if not tokens:
        raise ParseError("empty expression")
    p = _Parser(tokens, field, table, text)
    result = p.expr()
    if p.pos != len(tokens):
        p.fail(f"trailing input starting at {p.peek()[1]!r}")
    return result
