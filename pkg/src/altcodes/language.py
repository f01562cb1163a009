"""Regular languages over a fixed alphabet.

A :class:`Language` wraps a canonical minimal automaton, so language equality
is structural equality of automata.  Finite languages additionally expose
their word set.
"""
from __future__ import annotations

from collections import deque
from functools import cached_property

from .alphabet import Alphabet
from .automaton import Dfa, Nfa, determinize, minimize, thompson, trie_dfa
from .errors import EmptyLanguage, NotFinite
from .regex import Concat, Regex, Star, Symbol, Union, parse_regex, render

MAX_MATERIALIZED = 10**6


class Language:
    """An immutable regular language with a canonical minimal automaton."""

    def __init__(self, alphabet: Alphabet, dfa: Dfa, *, canonical: bool = False):
        if dfa.nsym != len(alphabet):
            raise ValueError("automaton and alphabet sizes differ")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "dfa", dfa if canonical else minimize(dfa))

    def __setattr__(self, name, value):
        if name in ("alphabet", "dfa"):
            raise AttributeError("Language is immutable")
        object.__setattr__(self, name, value)

    # -- constructors ---------------------------------------------------
    @classmethod
    def from_words(cls, alphabet: Alphabet, words) -> "Language":
        encoded = [alphabet.encode(alphabet.check_word(w)) for w in words]
        return cls(alphabet, trie_dfa(encoded, len(alphabet)))

    @classmethod
    def from_regex(cls, text: str, alphabet: Alphabet) -> "Language":
        return compile_regex(parse_regex(text, alphabet), alphabet)

    @classmethod
    def from_nfa(cls, alphabet: Alphabet, nfa: Nfa) -> "Language":
        return cls(alphabet, determinize(nfa))

    @classmethod
    def empty(cls, alphabet: Alphabet) -> "Language":
        return cls(alphabet, Dfa(len(alphabet), 0, frozenset(), (tuple([0] * len(alphabet)),)))

    @classmethod
    def epsilon(cls, alphabet: Alphabet) -> "Language":
        return cls.from_words(alphabet, [""])

    @classmethod
    def universe(cls, alphabet: Alphabet) -> "Language":
        """A*."""
        return cls(alphabet, Dfa(len(alphabet), 0, frozenset({0}), (tuple([0] * len(alphabet)),)))

    @classmethod
    def letters(cls, alphabet: Alphabet) -> "Language":
        """A, the words of length one."""
        return cls.from_words(alphabet, alphabet.symbols)

    @classmethod
    def plus(cls, alphabet: Alphabet) -> "Language":
        """A+, every non-empty word."""
        k = len(alphabet)
        return cls(alphabet, Dfa(k, 0, frozenset({1}), (tuple([1] * k), tuple([1] * k))))

    # -- basic predicates -----------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, Language):
            return NotImplemented
        return self.alphabet == other.alphabet and self.dfa == other.dfa

    def __hash__(self) -> int:
        return hash(self.dfa)

    def __contains__(self, word: str) -> bool:
        return self.dfa.accepts_codes(self.alphabet.encode(word))

    @property
    def size(self) -> int:
        """Number of states of the minimal (total) automaton."""
        return self.dfa.size

    @cached_property
    def live_states(self) -> frozenset:
        return frozenset(self.dfa.coaccessible())

    @property
    def is_empty(self) -> bool:
        return not self.dfa.accepting

    @property
    def contains_epsilon(self) -> bool:
        return self.dfa.start in self.dfa.accepting

    @property
    def epsilon_free(self) -> bool:
        return not self.contains_epsilon

    @cached_property
    def is_finite(self) -> bool:
        # cycle detection restricted to live states (all states are reachable)
        live = self.live_states
        delta = self.dfa.delta
        color = {}
        for root in live:
            if root in color:
                continue
            color[root] = 1
            stack = [(root, iter(delta[root]))]
            while stack:
                s, it = stack[-1]
                for t in it:
                    if t not in live:
                        continue
                    c = color.get(t)
                    if c == 1:
                        return False
                    if c is None:
                        color[t] = 1
                        stack.append((t, iter(delta[t])))
                        break
                else:
                    color[s] = 2
                    stack.pop()
        return True

    def count_words(self) -> int:
        """Number of words of a finite language."""
        if not self.is_finite:
            raise NotFinite("language is infinite")
        live = self.live_states
        delta = self.dfa.delta
        memo: dict[int, int] = {}

        def count(s: int) -> int:
            if s in memo:
                return memo[s]
            n = 1 if s in self.dfa.accepting else 0
            for t in delta[s]:
                if t in live:
                    n += count(t)
            memo[s] = n
            return n

        return count(self.dfa.start) if self.dfa.start in live else 0

    @cached_property
    def words(self) -> frozenset:
        """The word set of a finite language."""
        if not self.is_finite:
            raise NotFinite("language is infinite")
        if self.count_words() > MAX_MATERIALIZED:
            raise NotFinite(f"language has more than {MAX_MATERIALIZED} words")
        return frozenset(iter_words(self))

    def sorted_words(self) -> list[str]:
        return self.alphabet.sorted(self.words)

    @cached_property
    def max_length(self) -> int:
        if self.is_empty:
            raise EmptyLanguage("empty language has no words")
        return max(len(w) for w in self.words)

    def __repr__(self) -> str:
        return f"Language({describe(self)!r}, alphabet={''.join(self.alphabet.symbols)!r})"

    def __str__(self) -> str:
        return describe(self)


def compile_regex(ast: Regex, alphabet: Alphabet) -> Language:
    return Language(alphabet, determinize(thompson(ast, alphabet.index, len(alphabet))))


def shortest_word(lang: Language) -> str:
    """A shortest word of ``lang``; ties go to the lexicographically least."""
    d = lang.dfa
    if not d.accepting:
        raise EmptyLanguage("cannot pick a word from the empty language")
    # BFS with symbols in alphabet order discovers each state along its
    # shortlex-least access word, so the first accepting state wins.
    parent = {d.start: None}
    queue = deque([d.start])
    while queue:
        s = queue.popleft()
        if s in d.accepting:
            codes = []
            while parent[s] is not None:
                s, a = parent[s]
                codes.append(a)
            return "".join(lang.alphabet.symbols[a] for a in reversed(codes))
        for a, t in enumerate(d.delta[s]):
            if t not in parent:
                parent[t] = (s, a)
                queue.append(t)
    raise AssertionError("accepting state unreachable in a minimal automaton")


def enumerate_words(lang: Language, maxlen: int) -> list[str]:
    """All words of length at most ``maxlen`` in length-then-lex order."""
    if maxlen < 0:
        raise ValueError("maxlen must be non-negative")
    return list(iter_words(lang, maxlen))


def iter_words(lang: Language, maxlen: int | None = None):
    """Generate words in length-then-lex order, optionally up to ``maxlen``."""
    d = lang.dfa
    live = lang.live_states
    syms = lang.alphabet.symbols
    if d.start not in live:
        return
    level = [("", d.start)]
    length = 0
    while level and (maxlen is None or length <= maxlen):
        nxt = []
        for w, s in level:
            if s in d.accepting:
                yield w
            for a, t in enumerate(d.delta[s]):
                if t in live:
                    nxt.append((w + syms[a], t))
        level = nxt
        length += 1


# -- automaton to regex ---------------------------------------------------
# Expressions are carried as (nullable, body) pairs where ``body`` is an
# epsilon-free regex or None, so the output never needs an epsilon token.

def _union(parts) -> Regex | None:
    flat = set()
    for p in parts:
        stack = [p]
        while stack:
            q = stack.pop()
            if q is None:
                continue
            if isinstance(q, Union):
                stack.extend((q.left, q.right))
            else:
                flat.add(q)
    if not flat:
        return None
    ordered = sorted(flat, key=lambda r: (len(render(r)), render(r)))
    out = ordered[0]
    for r in ordered[1:]:
        out = Union(out, r)
    return out


def _alt(x, y):
    if x is None:
        return y
    if y is None:
        return x
    return (x[0] or y[0], _union([x[1], y[1]]))


def _star_body(x):
    """``s`` when the pair denotes exactly s*, else None."""
    n, r = x
    if n and isinstance(r, Concat) and isinstance(r.right, Star) and r.right.inner == r.left:
        return r.left
    return None


def _cat(x, y):
    n1, r1 = x
    n2, r2 = y
    if r1 is not None and not n1 and _star_body(y) is not None:
        return (False, Concat(r1, Star(_star_body(y))))
    if r2 is not None and not n2 and _star_body(x) is not None:
        return (False, Concat(Star(_star_body(x)), r2))
    parts = []
    if r1 is not None and r2 is not None:
        parts.append(Concat(r1, r2))
    if n1 and r2 is not None:
        parts.append(r2)
    if n2 and r1 is not None:
        parts.append(r1)
    return (n1 and n2, _union(parts))


def _star(x):
    r = x[1]
    return (True, None if r is None else Concat(r, Star(r)))


_EPS = (True, None)


def to_regex(lang: Language) -> tuple[bool, Regex | None]:
    """Return ``(contains_epsilon, body)`` with ``body`` an epsilon-free regex
    for ``lang`` minus the empty word (None when that part is empty)."""
    d = lang.dfa
    live = lang.live_states
    if d.start not in live:
        return (False, None)
    start, final = "S", "F"
    edges: dict = {}

    def add(p, q, label):
        edges[(p, q)] = _alt(edges.get((p, q)), label)

    add(start, d.start, _EPS)
    for s in live:
        if s in d.accepting:
            add(s, final, _EPS)
        for a, t in enumerate(d.delta[s]):
            if t in live:
                add(s, t, (False, Symbol(lang.alphabet.symbols[a])))
    remaining = set(live)
    while remaining:
        def cost(q):
            ins = sum(1 for (p, r) in edges if r == q and p != q)
            outs = sum(1 for (p, r) in edges if p == q and r != q)
            return (ins * outs, q)

        q = min(remaining, key=cost)
        remaining.discard(q)
        loop = edges.pop((q, q), None)
        mid = _EPS if loop is None else _star(loop)
        preds = [(p, lab) for (p, r), lab in edges.items() if r == q]
        succs = [(r, lab) for (p, r), lab in edges.items() if p == q]
        for p, _ in preds:
            del edges[(p, q)]
        for r, _ in succs:
            del edges[(q, r)]
        for p, lp in preds:
            for r, lr in succs:
                add(p, r, _cat(_cat(lp, mid), lr))
    label = edges.get((start, final), (False, None))
    return label


def regex_string(lang: Language) -> str | None:
    """Regex text for an epsilon-free language, or None if it cannot be written."""
    nullable, body = to_regex(lang)
    if nullable or body is None:
        return None
    return render(body)


def describe(lang: Language, limit: int = 12) -> str:
    if lang.is_empty:
        return "∅"
    if lang.is_finite and lang.count_words() <= limit:
        return "{" + ", ".join(w if w else "ε" for w in lang.sorted_words()) + "}"
    nullable, body = to_regex(lang)
    text = render(body) if body is not None else ""
    if nullable:
        return "ε" if not text else f"ε+{text}"
    return text
