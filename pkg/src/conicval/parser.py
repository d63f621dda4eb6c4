"""Recursive-descent parser for field-element expressions.

Grammar (standard precedence, ^ binds tightest, unary minus below it):

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | power
    power  := atom ('^' ('-')? INT)?
    atom   := INT | NAME | '(' expr ')'

Integers become elements of the target context, names resolve through the
declared variable table, and all arithmetic is exact, so the printed form of
any element parses back to an equal value.
"""

from __future__ import annotations

import re

from .errors import ExpressionSyntaxError, UndeclaredVariable

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_]\w*)|"
                    r"(?P<op>[-+*/^()]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            at = len(text) - len(stripped)
            raise ExpressionSyntaxError(f"unexpected character {stripped[0]!r}", at)
        if m.group("int") is not None:
            tokens.append(("int", m.group("int"), m.start("int")))
        elif m.group("name") is not None:
            tokens.append(("name", m.group("name"), m.start("name")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, context, variables):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.context = context
        self.variables = variables

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str):
        kind, text, pos = self.peek()
        if kind == "op" and text == op:
            return self.advance()
        raise ExpressionSyntaxError(f"expected {op!r}", pos)

    def parse(self):
        value = self.expr()
        kind, text, pos = self.peek()
        if kind != "end":
            raise ExpressionSyntaxError(f"unexpected {text!r}", pos)
        return value

    def expr(self):
        value = self.term()
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text in "+-":
                self.advance()
                rhs = self.term()
                value = value + rhs if text == "+" else value - rhs
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text in "*/":
                self.advance()
                rhs = self.factor()
                value = value * rhs if text == "*" else value / rhs
            else:
                return value

    def factor(self):
        kind, text, _ = self.peek()
        if kind == "op" and text == "-":
            self.advance()
            return -self.factor()
        return self.power()

    def power(self):
        base = self.atom()
        kind, text, _ = self.peek()
        if kind == "op" and text == "^":
            self.advance()
            sign = 1
            kind, text, pos = self.peek()
            if kind == "op" and text == "-":
                self.advance()
                sign = -1
                kind, text, pos = self.peek()
            if kind != "int":
                raise ExpressionSyntaxError("exponent must be an integer", pos)
            self.advance()
            return base ** (sign * int(text))
        return base

    def atom(self):
        kind, text, pos = self.advance()
        if kind == "int":
            return self.context.from_int(int(text))
        if kind == "name":
            if text not in self.variables:
                raise UndeclaredVariable(text, pos)
            return self.variables[text]
        if kind == "op" and text == "(":
            value = self.expr()
            self.expect_op(")")
            return value
        raise ExpressionSyntaxError(
            f"unexpected {text!r}" if text else "unexpected end of input", pos)


def parse_element(text: str, context, variables: dict | None = None):
    """Parse ``text`` into an element, with integers built by ``context``
    and names resolved through ``variables``."""
    return _Parser(text, context, variables or {}).parse()
