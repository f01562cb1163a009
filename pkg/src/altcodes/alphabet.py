"""Finite alphabets and words.

Words are plain ``str`` values whose characters are alphabet symbols.  The
alphabet fixes a total order on symbols which drives every lexicographic
tie-break in the package.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import AlphabetMismatch, UnknownSymbol

MAX_SYMBOLS = 64
RESERVED = frozenset("+*() \t\r\n")


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __init__(self, symbols):
        symbols = tuple(symbols)
        if not symbols:
            raise ValueError("alphabet must contain at least one symbol")
        if len(symbols) > MAX_SYMBOLS:
            raise ValueError(f"alphabet has {len(symbols)} symbols, limit is {MAX_SYMBOLS}")
        for s in symbols:
            if not isinstance(s, str) or len(s) != 1:
                raise ValueError(f"alphabet symbols must be single characters, got {s!r}")
            if s in RESERVED:
                raise ValueError(f"symbol {s!r} is reserved by the regex syntax")
        if len(set(symbols)) != len(symbols):
            raise ValueError("alphabet contains duplicate symbols")
        object.__setattr__(self, "symbols", symbols)
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(symbols)})

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __contains__(self, symbol) -> bool:
        return symbol in self._index

    def __str__(self) -> str:
        return "{" + ", ".join(self.symbols) + "}"

    def index(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise UnknownSymbol(symbol) from None

    def check_word(self, word: str) -> str:
        for pos, ch in enumerate(word):
            if ch not in self._index:
                raise UnknownSymbol(ch, pos)
        return word

    def encode(self, word: str) -> tuple[int, ...]:
        idx = self._index
        try:
            return tuple(idx[ch] for ch in word)
        except KeyError as exc:
            raise UnknownSymbol(exc.args[0]) from None

    def sort_key(self, word: str):
        """Length-then-lexicographic key under the alphabet order."""
        return (len(word), self.encode(word))

    def sorted(self, words) -> list[str]:
        return sorted(words, key=self.sort_key)


def same_alphabet(*alphabets: Alphabet) -> Alphabet:
    first = alphabets[0]
    for other in alphabets[1:]:
        if other != first:
            raise AlphabetMismatch(f"alphabets differ: {first} vs {other}")
    return first
