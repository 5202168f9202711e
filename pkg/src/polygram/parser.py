"""Recursive-descent parsing for polynomial expressions and rewrite rules.

Rule text looks like ``u -> u*v; v -> 4*u^2``: one rule per segment, with
semicolons or newlines between rules.  Expressions use '+', '-', '*', '^',
nonnegative integer literals and parentheses; other whitespace is
insignificant.  Every letter appearing on any right-hand side must own a
rule of its own (forward references are fine).
"""

from __future__ import annotations

from dataclasses import dataclass

from .grammar import Grammar
from .poly import MultiPoly, check_letters

__all__ = ["ParseError", "parse_grammar", "parse_poly"]


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


@dataclass(frozen=True)
class _Token:
    kind: str  # NAME, INT, SYM, ARROW, SEP, END
    value: str
    line: int
    col: int


def _tokenize(text: str, newline_sep: bool) -> list[_Token]:
    toks: list[_Token] = []
    line, col, i = 1, 1, 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            if newline_sep:
                toks.append(_Token("SEP", ";", line, col))
            i += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == ";":
            toks.append(_Token("SEP", ";", line, col))
            i += 1
            col += 1
            continue
        if ch == "-":
            if i + 1 < n and text[i + 1] == ">":
                toks.append(_Token("ARROW", "->", line, col))
                i += 2
                col += 2
                continue
            toks.append(_Token("SYM", "-", line, col))
            i += 1
            col += 1
            continue
        if ch in "+*^()":
            toks.append(_Token("SYM", ch, line, col))
            i += 1
            col += 1
            continue
        if ch.isascii() and ch.isdigit():
            j = i
            while j < n and text[j].isascii() and text[j].isdigit():
                j += 1
            toks.append(_Token("INT", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isascii() and ch.isalpha():
            j = i
            while j < n and text[j].isascii() and text[j].isalnum():
                j += 1
            toks.append(_Token("NAME", text[i:j], line, col))
            col += j - i
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    toks.append(_Token("END", "", line, col))
    return toks


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.toks = tokens
        self.i = 0

    def peek(self) -> _Token:
        return self.toks[self.i]

    def advance(self) -> _Token:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, message: str, tok: _Token | None = None):
        tok = tok or self.peek()
        raise ParseError(message, tok.line, tok.col)

    # expr := sign? term (('+'|'-') term)*
    def expression(self):
        tok = self.peek()
        negate = False
        if tok.kind == "SYM" and tok.value in "+-":
            self.advance()
            negate = tok.value == "-"
        node = self.term()
        if negate:
            node = ("neg", node)
        while True:
            tok = self.peek()
            if tok.kind == "SYM" and tok.value in "+-":
                self.advance()
                rhs = self.term()
                node = ("add" if tok.value == "+" else "sub", node, rhs)
            else:
                return node

    # term := factor ('*' factor)*
    def term(self):
        node = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "SYM" and tok.value == "*":
                self.advance()
                node = ("mul", node, self.factor())
            else:
                return node

    # factor := atom ('^' INT)?
    def factor(self):
        node = self.atom()
        tok = self.peek()
        if tok.kind == "SYM" and tok.value == "^":
            self.advance()
            exp = self.peek()
            if exp.kind != "INT":
                self.fail("expected a nonnegative integer exponent after '^'")
            self.advance()
            node = ("pow", node, int(exp.value))
        return node

    # atom := INT | NAME | '(' expr ')'
    def atom(self):
        tok = self.peek()
        if tok.kind == "INT":
            self.advance()
            return ("int", int(tok.value))
        if tok.kind == "NAME":
            self.advance()
            return ("var", tok.value, tok.line, tok.col)
        if tok.kind == "SYM" and tok.value == "(":
            self.advance()
            node = self.expression()
            closing = self.peek()
            if not (closing.kind == "SYM" and closing.value == ")"):
                self.fail("expected ')'")
            self.advance()
            return node
        if tok.kind == "END":
            self.fail("unexpected end of input")
        self.fail(f"expected a value, found {tok.value!r}")


def _collect_names(node, order: list[str], seen: set[str]) -> None:
    kind = node[0]
    if kind == "var":
        if node[1] not in seen:
            seen.add(node[1])
            order.append(node[1])
    elif kind == "neg":
        _collect_names(node[1], order, seen)
    elif kind in ("add", "sub", "mul"):
        _collect_names(node[1], order, seen)
        _collect_names(node[2], order, seen)
    elif kind == "pow":
        _collect_names(node[1], order, seen)


def _build(node, letters: tuple[str, ...]) -> MultiPoly:
    kind = node[0]
    if kind == "int":
        return MultiPoly.const(letters, node[1])
    if kind == "var":
        name = node[1]
        if name not in letters:
            raise ParseError(f"undeclared letter {name!r}", node[2], node[3])
        return MultiPoly.variable(letters, name)
    if kind == "neg":
        return -_build(node[1], letters)
    if kind == "add":
        return _build(node[1], letters) + _build(node[2], letters)
    if kind == "sub":
        return _build(node[1], letters) - _build(node[2], letters)
    if kind == "mul":
        return _build(node[1], letters) * _build(node[2], letters)
    if kind == "pow":
        return _build(node[1], letters) ** node[2]
    raise AssertionError(f"unknown node {kind!r}")


def parse_poly(text: str, letters=None) -> MultiPoly:
    """Parse one polynomial expression.

    With letters given, every name must belong to that alphabet; otherwise
    the alphabet is inferred in first-occurrence order.
    """
    parser = _Parser(_tokenize(text, newline_sep=False))
    node = parser.expression()
    trailing = parser.peek()
    if trailing.kind != "END":
        parser.fail(f"unexpected trailing input {trailing.value!r}", trailing)
    if letters is None:
        order: list[str] = []
        _collect_names(node, order, set())
        letters = tuple(order)
    else:
        letters = check_letters(letters)
    return _build(node, letters)


def parse_grammar(text: str) -> Grammar:
    """Parse rule text into a Grammar; the alphabet is the rule order."""
    parser = _Parser(_tokenize(text, newline_sep=True))
    rules: list[tuple[_Token, object]] = []
    while True:
        while parser.peek().kind == "SEP":
            parser.advance()
        if parser.peek().kind == "END":
            break
        lhs = parser.peek()
        if lhs.kind != "NAME":
            parser.fail(f"expected a letter to open a rule, found {lhs.value!r}")
        parser.advance()
        arrow = parser.peek()
        if arrow.kind != "ARROW":
            parser.fail("expected '->' after the rule letter")
        parser.advance()
        body = parser.expression()
        nxt = parser.peek()
        if nxt.kind not in ("SEP", "END"):
            parser.fail(f"unexpected token {nxt.value!r} after rule body")
        rules.append((lhs, body))
    if not rules:
        parser.fail("no rules found")
    names: list[str] = []
    for lhs, _ in rules:
        if lhs.value in names:
            raise ParseError(f"duplicate rule for letter {lhs.value!r}", lhs.line, lhs.col)
        names.append(lhs.value)
    letters = tuple(names)
    table = {lhs.value: _build(body, letters) for lhs, body in rules}
    return Grammar(letters, table)
