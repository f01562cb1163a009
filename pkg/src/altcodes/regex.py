"""Abstract syntax and parser for the input regex dialect.

Grammar (whitespace ignored)::

    expr   := term ('+' term)*
    term   := factor+
    factor := atom '*'*
    atom   := symbol | '(' expr ')'

``+`` is union, juxtaposition is concatenation and ``*`` is the postfix Kleene
star.  The empty word cannot be written; ``Epsilon`` and ``Empty`` nodes only
arise from programmatic construction.
"""
from __future__ import annotations

from dataclasses import dataclass

from .alphabet import Alphabet
from .errors import RegexSyntaxError, UnknownSymbol


class Regex:
    __slots__ = ()

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class Symbol(Regex):
    symbol: str


@dataclass(frozen=True)
class Epsilon(Regex):
    pass


@dataclass(frozen=True)
class Empty(Regex):
    pass


@dataclass(frozen=True)
class Union(Regex):
    left: Regex
    right: Regex


@dataclass(frozen=True)
class Concat(Regex):
    left: Regex
    right: Regex


@dataclass(frozen=True)
class Star(Regex):
    inner: Regex


class _Parser:
    def __init__(self, text: str, alphabet: Alphabet):
        # keep original positions for error messages
        self.tokens = [(i, ch) for i, ch in enumerate(text) if not ch.isspace()]
        self.pos = 0
        self.alphabet = alphabet
        self.end = len(text)

    def peek(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos][1]
        return None

    def where(self) -> int:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos][0]
        return self.end

    def parse(self) -> Regex:
        node = self.expr()
        if self.peek() is not None:
            raise RegexSyntaxError(f"unexpected {self.peek()!r}", self.where())
        return node

    def expr(self) -> Regex:
        node = self.term()
        while self.peek() == "+":
            self.pos += 1
            node = Union(node, self.term())
        return node

    def term(self) -> Regex:
        node = self.factor()
        while self.peek() is not None and self.peek() not in "+)":
            node = Concat(node, self.factor())
        return node

    def factor(self) -> Regex:
        node = self.atom()
        while self.peek() == "*":
            self.pos += 1
            node = Star(node)
        return node

    def atom(self) -> Regex:
        ch = self.peek()
        if ch is None:
            raise RegexSyntaxError("unexpected end of input", self.where())
        if ch == "(":
            self.pos += 1
            node = self.expr()
            if self.peek() != ")":
                raise RegexSyntaxError("expected ')'", self.where())
            self.pos += 1
            return node
        if ch in "+*)":
            raise RegexSyntaxError(f"unexpected {ch!r}", self.where())
        if ch not in self.alphabet:
            raise UnknownSymbol(ch, self.where())
        self.pos += 1
        return Symbol(ch)


def parse_regex(text: str, alphabet: Alphabet) -> Regex:
    """Parse ``text`` into a regex AST over ``alphabet``."""
    return _Parser(text, alphabet).parse()


_UNION, _CONCAT, _STAR = 0, 1, 2


def _prec(node: Regex) -> int:
    if isinstance(node, Union):
        return _UNION
    if isinstance(node, Concat):
        return _CONCAT
    return _STAR


def render(node: Regex) -> str:
    """Print ``node`` in the input dialect with minimal parentheses.

    ``Epsilon`` and ``Empty`` have no surface syntax and render as ``ε`` and
    ``∅``; such strings do not parse back.
    """
    if isinstance(node, Symbol):
        return node.symbol
    if isinstance(node, Epsilon):
        return "ε"
    if isinstance(node, Empty):
        return "∅"
    if isinstance(node, Union):
        return f"{render(node.left)}+{render(node.right)}"
    if isinstance(node, Concat):
        parts = []
        for child in (node.left, node.right):
            text = render(child)
            parts.append(f"({text})" if _prec(child) < _CONCAT else text)
        return "".join(parts)
    if isinstance(node, Star):
        text = render(node.inner)
        if isinstance(node.inner, (Symbol, Epsilon, Empty)):
            return f"{text}*"
        return f"({text})*"
    raise TypeError(f"not a regex node: {node!r}")
