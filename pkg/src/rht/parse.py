"""Parser for the cochain expression language.

    expr     := term (('+' | '-') term)*
    term     := ['-'] factor ('*' factor)*
    factor   := rational | gen ['^' int]
    rational := int ['/' int]

e.g. ``"3*x1*x2 - 1/2*a^2*y"``. Factors are multiplied in the order written,
so ``"x2*x1"`` parses to ``-x1*x2`` when both generators are odd.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .grade import Element, GradedAlgebra

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


class ElementParseError(SyntaxError):
    def __init__(self, message: str, text: str, pos: int):
        line = text.count("\n", 0, pos) + 1
        column = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} at line {line}, column {column}", ("<element>", line, column, text))
        self.message = message
        self.text = text
        self.pos = pos
        self.line = line
        self.column = column

    def __str__(self) -> str:
        return f"{self.message} at line {self.line}, column {self.column}"


class UnknownGenerator(ElementParseError):
    pass


class OddPower(ElementParseError):
    pass


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            bad = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ElementParseError(f"unexpected character {text[bad]!r}", text, bad)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, algebra: GradedAlgebra):
        self.text = text
        self.alg = algebra
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None, cls=ElementParseError):
        tok = tok or self.peek()
        return cls(msg, self.text, tok[2])

    def expect_int(self) -> int:
        kind, val, pos = self.take()
        if kind != "int":
            raise self.error("expected an integer", (kind, val, pos))
        return int(val)

    def expr(self) -> Element:
        if self.peek()[0] == "end":
            raise self.error("empty expression")
        total = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                total = total + t if val == "+" else total - t
            elif kind == "end":
                return total
            else:
                raise self.error(f"unexpected {val!r}")

    def term(self) -> Element:
        sign = 1
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            if self.take()[1] == "-":
                sign = -sign
        out = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            out = out * self.factor()
        return out if sign > 0 else -out

    def factor(self) -> Element:
        tok = self.take()
        kind, val, pos = tok
        if kind == "int":
            num = Fraction(int(val))
            if self.peek()[0] == "op" and self.peek()[1] == "/":
                self.take()
                den_tok = self.peek()
                den = self.expect_int()
                if den == 0:
                    raise self.error("zero denominator", den_tok)
                num /= den
            return self.alg.scalar(num)
        if kind == "name":
            try:
                idx = self.alg.index(val)
            except KeyError:
                raise self.error(f"unknown generator {val!r}", tok, UnknownGenerator) from None
            power = 1
            if self.peek()[0] == "op" and self.peek()[1] == "^":
                self.take()
                power = self.expect_int()
                if power > 1 and self.alg.generators[idx].odd:
                    raise self.error(f"odd generator {val!r} raised to power {power}", tok, OddPower)
            return self.alg.gen(idx) ** power
        if kind == "op" and val == "(":
            inner_start = self.i
            depth = 1
            # parenthesised sub-expression: parse recursively on the slice of tokens
            while depth:
                k, v, _ = self.take()
                if k == "end":
                    raise self.error("unbalanced parenthesis", tok)
                if k == "op" and v == "(":
                    depth += 1
                elif k == "op" and v == ")":
                    depth -= 1
            sub = _Parser.__new__(_Parser)
            sub.text, sub.alg = self.text, self.alg
            sub.toks = self.toks[inner_start:self.i - 1] + [("end", "", self.toks[self.i - 1][2])]
            sub.i = 0
            return sub.expr()
        if kind == "end":
            raise self.error("unexpected end of input", tok)
        raise self.error(f"unexpected {val!r}", tok)


def parse_element(text: str, algebra: GradedAlgebra) -> Element:
    """Parse ``text`` into an element of ``algebra``."""
    return _Parser(text, algebra).expr()


def parse_rational(text) -> Fraction:
    """Rationals in files are strings ``"p/q"`` (ints also accepted)."""
    if isinstance(text, int):
        return Fraction(text)
    m = re.fullmatch(r"\s*(-?\d+)\s*(?:/\s*(\d+))?\s*", str(text))
    if not m:
        raise ValueError(f"not a rational: {text!r}")
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(m.group(1)), den)


def format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
