"""Deterministic and nondeterministic automata.

Symbols are referred to by their index in the alphabet.  A :class:`Dfa` is
always total; after :func:`minimize` it is also canonical, so two minimal
automata for the same language compare (and hash) equal.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import StateBudgetExceeded
from .regex import Concat, Empty, Epsilon, Regex, Star, Symbol, Union

EPS = -1
DEFAULT_STATE_BUDGET = 250_000


@dataclass(frozen=True)
class Dfa:
    nsym: int
    start: int
    accepting: frozenset
    delta: tuple  # delta[state][symbol] -> state
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash((self.nsym, self.start, self.accepting, self.delta)))

    def __hash__(self) -> int:
        return self._hash

    @property
    def size(self) -> int:
        return len(self.delta)

    def run(self, codes, state: int | None = None) -> int:
        s = self.start if state is None else state
        delta = self.delta
        for c in codes:
            s = delta[s][c]
        return s

    def accepts_codes(self, codes) -> bool:
        return self.run(codes) in self.accepting

    def coaccessible(self) -> set[int]:
        """States from which some accepting state is reachable."""
        preds: list[list[int]] = [[] for _ in self.delta]
        for s, row in enumerate(self.delta):
            for t in row:
                preds[t].append(s)
        seen = set(self.accepting)
        stack = list(seen)
        while stack:
            t = stack.pop()
            for s in preds[t]:
                if s not in seen:
                    seen.add(s)
                    stack.append(s)
        return seen


class Nfa:
    """Mutable builder: ``delta[state]`` maps a symbol index (or ``EPS``) to targets."""

    def __init__(self, nsym: int):
        self.nsym = nsym
        self.delta: list[dict[int, set[int]]] = []
        self.starts: set[int] = set()
        self.accepting: set[int] = set()

    def add_state(self) -> int:
        self.delta.append({})
        return len(self.delta) - 1

    def add_edge(self, src: int, sym: int, dst: int) -> None:
        self.delta[src].setdefault(sym, set()).add(dst)

    def embed_dfa(self, d: Dfa) -> int:
        """Copy ``d`` into this NFA and return the offset of its states."""
        off = len(self.delta)
        for row in d.delta:
            self.delta.append({a: {t + off} for a, t in enumerate(row)})
        return off

    @classmethod
    def from_dfa(cls, d: Dfa) -> "Nfa":
        n = cls(d.nsym)
        off = n.embed_dfa(d)
        n.starts = {d.start + off}
        n.accepting = {s + off for s in d.accepting}
        return n

    def closure(self, states) -> frozenset:
        seen = set(states)
        stack = list(seen)
        delta = self.delta
        while stack:
            s = stack.pop()
            for t in delta[s].get(EPS, ()):
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        return frozenset(seen)


def determinize(nfa: Nfa, budget: int = DEFAULT_STATE_BUDGET) -> Dfa:
    """Subset construction; the empty subset becomes the explicit dead state."""
    has_eps = any(EPS in row for row in nfa.delta)
    start = nfa.closure(nfa.starts) if has_eps else frozenset(nfa.starts)
    ids = {start: 0}
    order = [start]
    rows: list[tuple[int, ...]] = []
    accepting = set()
    nsym = nfa.nsym
    delta = nfa.delta
    i = 0
    while i < len(order):
        subset = order[i]
        if subset & nfa.accepting:
            accepting.add(i)
        row = []
        for a in range(nsym):
            nxt = set()
            for s in subset:
                targets = delta[s].get(a)
                if targets:
                    nxt |= targets
            key = nfa.closure(nxt) if has_eps else frozenset(nxt)
            j = ids.get(key)
            if j is None:
                j = len(order)
                if j >= budget:
                    raise StateBudgetExceeded(f"subset construction exceeded {budget} states")
                ids[key] = j
                order.append(key)
            row.append(j)
        rows.append(tuple(row))
        i += 1
    return Dfa(nsym, 0, frozenset(accepting), tuple(rows))


def minimize(d: Dfa) -> Dfa:
    """Minimal canonical automaton for ``d``.

    Unreachable states are dropped, equivalent states merged by partition
    refinement, and the survivors renumbered in breadth-first order from the
    start state with symbols explored in alphabet order.
    """
    delta = d.delta
    nsym = d.nsym
    # reachable states
    seen = {d.start}
    queue = deque([d.start])
    while queue:
        s = queue.popleft()
        for t in delta[s]:
            if t not in seen:
                seen.add(t)
                queue.append(t)
    states = sorted(seen)
    acc = d.accepting
    cls = {s: (1 if s in acc else 0) for s in states}
    count = len(set(cls.values()))
    while True:
        sigs: dict = {}
        new = {}
        for s in states:
            row = delta[s]
            sig = (cls[s],) + tuple(cls[row[a]] for a in range(nsym))
            new[s] = sigs.setdefault(sig, len(sigs))
        cls = new
        if len(sigs) == count:
            break
        count = len(sigs)
    # canonical numbering by BFS over classes
    rep = {}
    for s in states:
        rep.setdefault(cls[s], s)
    numbering = {cls[d.start]: 0}
    order = [cls[d.start]]
    i = 0
    while i < len(order):
        src = rep[order[i]]
        for a in range(nsym):
            c = cls[delta[src][a]]
            if c not in numbering:
                numbering[c] = len(order)
                order.append(c)
        i += 1
    rows = tuple(
        tuple(numbering[cls[delta[rep[c]][a]]] for a in range(nsym)) for c in order
    )
    accepting = frozenset(numbering[c] for c in order if rep[c] in acc)
    return Dfa(nsym, 0, accepting, rows)


def thompson(node: Regex, index, nsym: int) -> Nfa:
    """Thompson construction; ``index`` maps a symbol to its alphabet index."""

    def build(n: Regex) -> tuple[int, int]:
        if isinstance(n, Symbol):
            s, t = nfa.add_state(), nfa.add_state()
            nfa.add_edge(s, index(n.symbol), t)
            return s, t
        if isinstance(n, Epsilon):
            s, t = nfa.add_state(), nfa.add_state()
            nfa.add_edge(s, EPS, t)
            return s, t
        if isinstance(n, Empty):
            return nfa.add_state(), nfa.add_state()
        if isinstance(n, Union):
            s, t = nfa.add_state(), nfa.add_state()
            for child in (n.left, n.right):
                cs, ct = build(child)
                nfa.add_edge(s, EPS, cs)
                nfa.add_edge(ct, EPS, t)
            return s, t
        if isinstance(n, Concat):
            ls, lt = build(n.left)
            rs, rt = build(n.right)
            nfa.add_edge(lt, EPS, rs)
            return ls, rt
        if isinstance(n, Star):
            s, t = nfa.add_state(), nfa.add_state()
            cs, ct = build(n.inner)
            nfa.add_edge(s, EPS, cs)
            nfa.add_edge(s, EPS, t)
            nfa.add_edge(ct, EPS, cs)
            nfa.add_edge(ct, EPS, t)
            return s, t
        raise TypeError(f"not a regex node: {n!r}")

    nfa = Nfa(nsym)
    start, final = build(node)
    nfa.starts = {start}
    nfa.accepting = {final}
    return nfa


def trie_dfa(words, nsym: int) -> Dfa:
    """Deterministic trie for a finite set of encoded words (not minimized)."""
    rows: list[list[int]] = [[-1] * nsym]
    accepting = set()
    for w in words:
        s = 0
        for c in w:
            t = rows[s][c]
            if t < 0:
                t = len(rows)
                rows.append([-1] * nsym)
                rows[s][c] = t
            s = t
        accepting.add(s)
    dead = len(rows)
    rows.append([dead] * nsym)
    final = tuple(tuple(dead if t < 0 else t for t in row) for row in rows)
    return Dfa(nsym, 0, frozenset(accepting), final)
