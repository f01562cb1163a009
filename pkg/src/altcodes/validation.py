"""Exhaustive small-instance grids comparing the automaton-based procedures
with the brute-force oracles."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import codes, oracle
from .alphabet import Alphabet
from .altinduced import rsic
from .language import Language

INFIX_KEYS = ("prefix", "suffix") + codes.INFIX_FLAGS


def grid_words(alphabet: Alphabet, max_len: int) -> list[str]:
    return [
        "".join(p)
        for n in range(1, max_len + 1)
        for p in itertools.product(alphabet.symbols, repeat=n)
    ]


def grid_sets(words, max_size: int):
    for r in range(1, max_size + 1):
        yield from itertools.combinations(words, r)


def finite_is_code(words) -> bool:
    """Sardinas–Patterson on explicit word sets (no automata)."""
    words = frozenset(words)

    def quotient(left, right):
        return frozenset(v[len(u):] for u in left for v in right if v.startswith(u))

    current = quotient(words, words) - {""}
    seen = set()
    while current and current not in seen:
        if "" in current:
            return False
        seen.add(current)
        current = quotient(words, current) | quotient(current, words)
    return "" not in current


@dataclass
class GridTally:
    name: str
    instances: int = 0
    disagreements: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def as_dict(self) -> dict:
        return {
            "criterion": self.name,
            "instances": self.instances,
            "disagreements": len(self.disagreements),
            "examples": [list(d) if isinstance(d, tuple) else d for d in self.disagreements[:5]],
        }


def _spread(items: list, limit: int | None) -> list:
    """Deterministic, evenly spaced subsample of at most ``limit`` items."""
    if limit is None or len(items) <= limit:
        return items
    step = len(items) / limit
    return [items[int(i * step)] for i in range(limit)]


def class_flag_grid(alphabet: Alphabet, max_size: int, max_len: int, limit: int | None = None):
    """Quotient-based prefix/suffix tests and infix-family constructions
    against pairwise definitional checks."""
    tallies = {k: GridTally(k) for k in INFIX_KEYS}
    sets = _spread(list(grid_sets(grid_words(alphabet, max_len), max_size)), limit)
    for ws in sets:
        lang = Language.from_words(alphabet, ws)
        expected = oracle.brute_flags(ws)
        got = {"prefix": codes.is_prefix_code(lang), "suffix": codes.is_suffix_code(lang)}
        got.update(codes.infix_family(lang))
        for key in INFIX_KEYS:
            tallies[key].instances += 1
            if got[key] != expected[key]:
                tallies[key].disagreements.append(ws)
    return list(tallies.values())


def unambiguity_grid(alphabet: Alphabet, max_size: int, max_len: int, limit: int | None = 10_000):
    tally = GridTally("unambiguous-product")
    sets = list(grid_sets(grid_words(alphabet, max_len), max_size))
    pairs = _spread([(i, j) for i in range(len(sets)) for j in range(len(sets))], limit)
    langs: dict = {}

    def lang(i):
        if i not in langs:
            langs[i] = Language.from_words(alphabet, sets[i])
        return langs[i]

    for i, j in pairs:
        tally.instances += 1
        got = codes.is_unambiguous_product(lang(i), lang(j)).unambiguous
        if got != oracle.brute_is_unambiguous_product(sets[i], sets[j])[0]:
            tally.disagreements.append((sets[i], sets[j]))
    return tally


def code_grid(alphabet: Alphabet, max_size: int, max_len: int, limit: int | None = None, bound: int = 12):
    """Automaton Sardinas–Patterson against the bounded double-factorization
    search (a falsifier) and the word-set Sardinas–Patterson."""
    tally = GridTally("is-code")
    for ws in _spread(list(grid_sets(grid_words(alphabet, max_len), max_size)), limit):
        tally.instances += 1
        trace = codes.is_code(Language.from_words(alphabet, ws))
        brute = oracle.brute_is_code(ws, bound)
        exact = finite_is_code(ws)
        if trace.code != exact or (brute.code is False and trace.code):
            tally.disagreements.append(ws)
        elif not trace.code:
            # the reported witness must really have two factorizations
            if len(oracle.brute_factorizations(ws, trace.witness)) < 2:
                tally.disagreements.append(ws)
    return tally


def rsic_grid_instances(alphabet: Alphabet, max_size: int, max_len: int) -> list[frozenset]:
    """Distinct finite codes Z = XY with |X|, |Y| ≤ max_size over words of
    length ≤ max_len, sorted for reproducibility."""
    sets = list(grid_sets(grid_words(alphabet, max_len), max_size))
    products = set()
    for xs in sets:
        for ys in sets:
            products.add(frozenset(u + v for u in xs for v in ys))
    key = lambda z: (len(z), sorted((len(w), w) for w in z))  # noqa: E731
    return sorted((z for z in products if finite_is_code(z)), key=key)


def rsic_grid(alphabet: Alphabet, max_size: int = 3, max_len: int = 3, limit: int | None = None):
    """RSIC verdict against exhaustive search for strong alt-induced
    decompositions."""
    tally = GridTally("rsic-completeness")
    for z in _spread(rsic_grid_instances(alphabet, max_size, max_len), limit):
        tally.instances += 1
        result = rsic(Language.from_words(alphabet, z), check_code=False)
        witnesses = oracle.brute_sai_decompositions(z)
        if result.strong != bool(witnesses):
            tally.disagreements.append(tuple(sorted(z)))
        elif result.strong and (result.x.words, result.y.words) not in witnesses:
            tally.disagreements.append(tuple(sorted(z)))
    return tally


# -- scaling family -----------------------------------------------------------

def scaling_code(m: int, alphabet: Alphabet | None = None) -> tuple[Language, dict]:
    """A strong alt-induced code a^r(a^p)*b · a(b^q)*a whose minimal automaton
    has exactly ``m`` states.  Its shortest word has length about m/4, so
    RSIC walks through many candidate prefixes before accepting."""
    alphabet = alphabet or Alphabet("ab")
    r = max(1, m // 4)
    for p in range(1, m):
        for q in (p, p + 1):
            pattern = "a" * r + "(" + "a" * p + ")*ba(" + "b" * q + ")*a"
            lang = Language.from_regex(pattern, alphabet)
            if lang.size == m:
                return lang, {"r": r, "p": p, "q": q, "regex": pattern}
            if lang.size > m:
                break
    raise ValueError(f"no member of the family has {m} states")
