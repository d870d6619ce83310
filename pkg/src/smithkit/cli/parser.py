"""Recursive-descent parser for polynomial expressions.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INT)?
    atom   := INT | NAME | '(' expr ')'

Juxtaposition is rejected, so ``2x1`` and ``x1 x2`` are syntax errors.
Division is only defined by nonzero constants.
"""

from __future__ import annotations

import re

from ..polycore import Polynomial, VariableContext


class ParseError(ValueError):
    """Syntax or semantic error in user input, with a 1-based location."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__("line %d, column %d: %s" % (line, column, message))
        self.message = message
        self.line = line
        self.column = column


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text: str, line: int, col0: int):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError("unexpected character %r" % ch, line, col0 + start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, ctx, line, col0):
        self.ctx = ctx
        self.line = line
        self.col0 = col0
        self.tokens = _tokenize(text, line, col0)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, self.line, self.col0 + tok[2])

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            raise self.error("empty expression")
        result = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            if tok[0] in ("int", "name", "("):
                raise self.error("implicit multiplication is not allowed; use '*'")
            raise self.error("unexpected %r" % tok[1])
        return result

    def expr(self):
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek()[0] in ("*", "/"):
            op = self.take()
            rhs = self.unary()
            if op[0] == "*":
                value = value * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    raise self.error("division only by a nonzero constant", op)
                value = value / rhs.constant_value()
        return value

    def unary(self):
        tok = self.peek()
        if tok[0] == "-":
            self.take()
            return -self.unary()
        if tok[0] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            if tok[0] == "-":
                raise self.error("negative exponent")
            if tok[0] != "int":
                raise self.error("exponent must be a nonnegative integer literal")
            self.take()
            base = base ** int(tok[1])
            if self.peek()[0] == "^":
                raise self.error("chained '^' is ambiguous; use parentheses")
        return base

    def atom(self):
        tok = self.take()
        kind = tok[0]
        if kind == "int":
            return self.ctx.const(int(tok[1]))
        if kind == "name":
            if tok[1] not in self.ctx.names:
                raise self.error("unknown variable %r" % tok[1], tok)
            return self.ctx.var(tok[1])
        if kind == "(":
            inner = self.expr()
            if self.peek()[0] != ")":
                raise self.error("expected ')'")
            self.take()
            return inner
        if kind == "end":
            raise self.error("unexpected end of expression", tok)
        raise self.error("unexpected %r" % tok[1], tok)


def parse_polynomial(text: str, ctx: VariableContext, line: int = 1, column: int = 1) -> Polynomial:
    """Parse ``text`` into a canonical polynomial of ``ctx``.

    ``line``/``column`` give the location of ``text`` inside a larger
    document so errors point at the right place.
    """
    return _Parser(text, ctx, line, column).parse()
