"""Regular-language algebra: boolean operations, products, quotients and
closures.  Every result is returned re-minimized (canonical)."""
from __future__ import annotations

from collections import deque

from .alphabet import same_alphabet
from .automaton import EPS, Dfa, Nfa
from .language import Language


def _product(x: Language, y: Language, accept) -> Language:
    """Reachable product automaton; ``accept(in_x, in_y)`` decides finality."""
    alphabet = same_alphabet(x.alphabet, y.alphabet)
    dx, dy = x.dfa, y.dfa
    k = dx.nsym
    start = (dx.start, dy.start)
    ids = {start: 0}
    order = [start]
    rows = []
    accepting = set()
    i = 0
    while i < len(order):
        p, q = order[i]
        if accept(p in dx.accepting, q in dy.accepting):
            accepting.add(i)
        rp, rq = dx.delta[p], dy.delta[q]
        row = []
        for a in range(k):
            pair = (rp[a], rq[a])
            j = ids.get(pair)
            if j is None:
                j = ids[pair] = len(order)
                order.append(pair)
            row.append(j)
        rows.append(tuple(row))
        i += 1
    return Language(alphabet, Dfa(k, 0, frozenset(accepting), tuple(rows)))


def union(x: Language, y: Language) -> Language:
    return _product(x, y, lambda a, b: a or b)


def intersect(x: Language, y: Language) -> Language:
    return _product(x, y, lambda a, b: a and b)


def difference(x: Language, y: Language) -> Language:
    return _product(x, y, lambda a, b: a and not b)


def complement(x: Language) -> Language:
    d = x.dfa
    flipped = frozenset(range(d.size)) - d.accepting
    return Language(x.alphabet, Dfa(d.nsym, d.start, flipped, d.delta))


def union_all(alphabet, langs) -> Language:
    out = Language.empty(alphabet)
    for lang in langs:
        out = union(out, lang)
    return out


# -- decisions ------------------------------------------------------------

def is_empty(x: Language) -> bool:
    return x.is_empty


def equal(x: Language, y: Language) -> bool:
    same_alphabet(x.alphabet, y.alphabet)
    return x.dfa == y.dfa


def subset(x: Language, y: Language) -> bool:
    """Whether x ⊆ y, by emptiness of the reachable part of x \\ y."""
    same_alphabet(x.alphabet, y.alphabet)
    dx, dy = x.dfa, y.dfa
    start = (dx.start, dy.start)
    seen = {start}
    stack = [start]
    while stack:
        p, q = stack.pop()
        if p in dx.accepting and q not in dy.accepting:
            return False
        rp, rq = dx.delta[p], dy.delta[q]
        for a in range(dx.nsym):
            pair = (rp[a], rq[a])
            if pair not in seen:
                seen.add(pair)
                stack.append(pair)
    return True


def is_epsilon_only(x: Language) -> bool:
    """Whether x = {ε}."""
    live = x.live_states
    return x.contains_epsilon and not any(t in live for t in x.dfa.delta[x.dfa.start])


# -- products and closures ------------------------------------------------

def concat(x: Language, y: Language) -> Language:
    alphabet = same_alphabet(x.alphabet, y.alphabet)
    nfa = Nfa(len(alphabet))
    ox = nfa.embed_dfa(x.dfa)
    oy = nfa.embed_dfa(y.dfa)
    nfa.starts = {x.dfa.start + ox}
    for s in x.dfa.accepting:
        nfa.add_edge(s + ox, EPS, y.dfa.start + oy)
    nfa.accepting = {s + oy for s in y.dfa.accepting}
    return Language.from_nfa(alphabet, nfa)


def concat_all(alphabet, langs) -> Language:
    out = Language.epsilon(alphabet)
    for lang in langs:
        out = concat(out, lang)
    return out


def star(x: Language) -> Language:
    nfa = Nfa(len(x.alphabet))
    hub = nfa.add_state()
    off = nfa.embed_dfa(x.dfa)
    nfa.add_edge(hub, EPS, x.dfa.start + off)
    for s in x.dfa.accepting:
        nfa.add_edge(s + off, EPS, hub)
    nfa.starts = {hub}
    nfa.accepting = {hub}
    return Language.from_nfa(x.alphabet, nfa)


def plus(x: Language) -> Language:
    return concat(x, star(x))


def reverse(x: Language) -> Language:
    d = x.dfa
    nfa = Nfa(d.nsym)
    for _ in range(d.size):
        nfa.add_state()
    for s, row in enumerate(d.delta):
        for a, t in enumerate(row):
            nfa.add_edge(t, a, s)
    nfa.starts = set(d.accepting)
    nfa.accepting = {d.start}
    return Language.from_nfa(x.alphabet, nfa)


# -- quotients ------------------------------------------------------------

def left_quotient(u: str, x: Language) -> Language:
    """u⁻¹X = {v | uv ∈ X}."""
    d = x.dfa
    s = d.run(x.alphabet.encode(x.alphabet.check_word(u)))
    return Language(x.alphabet, Dfa(d.nsym, s, d.accepting, d.delta))


def right_quotient(x: Language, u: str) -> Language:
    """Xu⁻¹ = {v | vu ∈ X}."""
    d = x.dfa
    codes = x.alphabet.encode(x.alphabet.check_word(u))
    acc = frozenset(s for s in range(d.size) if d.run(codes, s) in d.accepting)
    return Language(x.alphabet, Dfa(d.nsym, d.start, acc, d.delta))


def _reachable_pairs(k: Language, x: Language) -> set:
    dk, dx = k.dfa, x.dfa
    start = (dk.start, dx.start)
    seen = {start}
    queue = deque([start])
    while queue:
        p, q = queue.popleft()
        rp, rq = dk.delta[p], dx.delta[q]
        for a in range(dk.nsym):
            pair = (rp[a], rq[a])
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)
    return seen


def left_quotient_lang(k: Language, x: Language) -> Language:
    """K⁻¹X = ⋃_{w ∈ K} w⁻¹X.

    The states of X's automaton reached by some word of K become the start
    set of a subset construction; K may be infinite.
    """
    alphabet = same_alphabet(k.alphabet, x.alphabet)
    starts = {q for p, q in _reachable_pairs(k, x) if p in k.dfa.accepting}
    if not starts:
        return Language.empty(alphabet)
    if len(starts) == 1:
        (s,) = starts
        return Language(alphabet, Dfa(x.dfa.nsym, s, x.dfa.accepting, x.dfa.delta))
    nfa = Nfa.from_dfa(x.dfa)
    nfa.starts = starts
    return Language.from_nfa(alphabet, nfa)


def right_quotient_lang(x: Language, k: Language) -> Language:
    """XK⁻¹ = ⋃_{w ∈ K} Xw⁻¹: a state of X stays final iff some word of K
    leads from it to acceptance."""
    alphabet = same_alphabet(k.alphabet, x.alphabet)
    dx, dk = x.dfa, k.dfa
    # backward reachability in the full product X × K from final pairs
    preds: dict = {}
    for p in range(dx.size):
        rp = dx.delta[p]
        for q in range(dk.size):
            rq = dk.delta[q]
            for a in range(dx.nsym):
                preds.setdefault((rp[a], rq[a]), []).append((p, q))
    good = {(p, q) for p in dx.accepting for q in dk.accepting}
    stack = list(good)
    while stack:
        pair = stack.pop()
        for pr in preds.get(pair, ()):
            if pr not in good:
                good.add(pr)
                stack.append(pr)
    acc = frozenset(p for p in range(dx.size) if (p, dk.start) in good)
    return Language(alphabet, Dfa(dx.nsym, dx.start, acc, dx.delta))


# -- prefix / suffix / factor sets ----------------------------------------

def prefixes(x: Language) -> Language:
    """Proper prefixes of words of X (ε included when X has a non-empty word)."""
    d = x.dfa
    live = x.live_states
    acc = frozenset(s for s in range(d.size) if any(t in live for t in d.delta[s]))
    return Language(x.alphabet, Dfa(d.nsym, d.start, acc, d.delta))


def suffixes(x: Language) -> Language:
    """Proper suffixes of words of X."""
    return reverse(prefixes(reverse(x)))


def factors(x: Language) -> Language:
    """All infixes of words of X, the words themselves included."""
    d = x.dfa
    live = x.live_states
    if not live:
        return Language.empty(x.alphabet)
    nfa = Nfa.from_dfa(d)
    nfa.starts = set(live)
    nfa.accepting = set(live)
    return Language.from_nfa(x.alphabet, nfa)


# -- scattered-subword closures -------------------------------------------

def upward_closure(x: Language) -> Language:
    """Every word having some word of X as a scattered subword."""
    nfa = Nfa.from_dfa(x.dfa)
    for s in range(len(nfa.delta)):
        for a in range(nfa.nsym):
            nfa.add_edge(s, a, s)
    return Language.from_nfa(x.alphabet, nfa)


def strict_upward_closure(x: Language) -> Language:
    """Every word having some word of X as a proper scattered subword."""
    d = x.dfa
    n = d.size
    nfa = Nfa(d.nsym)
    for _ in range(2 * n):
        nfa.add_state()
    # state s + flag * n; flag records that at least one symbol was inserted
    for s, row in enumerate(d.delta):
        for a, t in enumerate(row):
            nfa.add_edge(s, a, t)
            nfa.add_edge(s + n, a, t + n)
            nfa.add_edge(s, a, s + n)
            nfa.add_edge(s + n, a, s + n)
    nfa.starts = {d.start}
    nfa.accepting = {s + n for s in d.accepting}
    return Language.from_nfa(x.alphabet, nfa)


# -- convenience ----------------------------------------------------------

def pad_left(x: Language) -> Language:
    """A⁺X."""
    return concat(Language.plus(x.alphabet), x)


def pad_right(x: Language) -> Language:
    """XA⁺."""
    return concat(x, Language.plus(x.alphabet))


def surround(x: Language) -> Language:
    """A*XA*."""
    u = Language.universe(x.alphabet)
    return concat(concat(u, x), u)
