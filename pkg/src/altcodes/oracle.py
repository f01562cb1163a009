"""Brute-force oracles over finite languages.

Nothing here touches automata: every check works directly on word sets from
the definitions, so it can be used to validate the automaton-based
decision procedures.  All routines are exponential in the worst case.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import NotFinite, TooLarge
from .language import Language

MAX_CANDIDATES = 16


def finite_words(x) -> frozenset:
    """Word set of a finite :class:`Language` or of any iterable of words."""
    if isinstance(x, Language):
        if not x.is_finite:
            raise NotFinite("oracle requires a finite language")
        return x.words
    return frozenset(x)


# -- factorizations and the code property ---------------------------------

@dataclass(frozen=True)
class FactorizationSet:
    word: str
    factorizations: tuple[tuple[str, ...], ...]

    def __len__(self) -> int:
        return len(self.factorizations)


def brute_factorizations(x, w: str) -> FactorizationSet:
    """Every factorization of ``w`` into words of ``x``, by DP over positions."""
    words = finite_words(x)
    ways: list[list[tuple[str, ...]]] = [[] for _ in range(len(w) + 1)]
    ways[0].append(())
    for i in range(1, len(w) + 1):
        for j in range(i):
            piece = w[j:i]
            if piece in words and ways[j]:
                ways[i].extend(f + (piece,) for f in ways[j])
    return FactorizationSet(w, tuple(sorted(ways[len(w)])))


@dataclass(frozen=True)
class BruteCodeVerdict:
    code: bool  # True means "no double factorization up to the bound"
    maxlen: int
    witness: str | None = None
    factorizations: tuple = ()


def brute_is_code(x, maxlen: int) -> BruteCodeVerdict:
    """Search for a word of length ≤ ``maxlen`` with two factorizations."""
    words = sorted(w for w in finite_words(x))
    if "" in words:
        return BruteCodeVerdict(False, maxlen, "", ((), ("",)))
    bylen: list[dict[str, tuple[str, ...]]] = [dict() for _ in range(maxlen + 1)]
    bylen[0][""] = ()
    for total in range(1, maxlen + 1):
        level = bylen[total]
        for piece in words:
            if len(piece) > total:
                continue
            for head, fact in bylen[total - len(piece)].items():
                new = head + piece
                f = fact + (piece,)
                other = level.get(new)
                if other is None:
                    level[new] = f
                elif other != f:
                    return BruteCodeVerdict(False, maxlen, new, tuple(sorted((other, f))))
    return BruteCodeVerdict(True, maxlen)


# -- definitional class checks ---------------------------------------------

def is_subword(u: str, v: str) -> bool:
    """Whether ``u`` is a scattered subword of ``v``."""
    it = iter(v)
    return all(ch in it for ch in u)


def _proper_prefixes(v: str):
    return (v[:i] for i in range(len(v)))


def _proper_suffixes(v: str):
    return (v[i:] for i in range(1, len(v) + 1))


def _proper_infixes(v: str):
    n = len(v)
    return (v[i:j] for i in range(n + 1) for j in range(i, n + 1) if (i, j) != (0, n))


def brute_flags(x) -> dict[str, bool]:
    """Definition-level class membership by pairwise comparison."""
    words = finite_words(x)
    pairs = [(u, v) for u in words for v in words if u != v]

    def none_inside(parts, test) -> bool:
        return not any(test(u, p) for u, v in pairs for p in parts(v))

    def infix(u, p):
        return u in p

    flags = {
        "prefix": not any(v.startswith(u) for u, v in pairs),
        "suffix": not any(v.endswith(u) for u, v in pairs),
        "p-infix": none_inside(_proper_prefixes, infix),
        "s-infix": none_inside(_proper_suffixes, infix),
        "infix": none_inside(_proper_infixes, infix),
        "p-subinfix": none_inside(_proper_prefixes, is_subword),
        "s-subinfix": none_inside(_proper_suffixes, is_subword),
        "subinfix": none_inside(_proper_infixes, is_subword),
        "hypercode": not any(is_subword(u, v) for u, v in pairs),
    }
    flags["bifix"] = flags["prefix"] and flags["suffix"]
    return flags


# -- products ---------------------------------------------------------------

def brute_product_pairs(x, y) -> dict[str, list[tuple[str, str]]]:
    out: dict[str, list[tuple[str, str]]] = {}
    for u in sorted(finite_words(x)):
        for v in sorted(finite_words(y)):
            out.setdefault(u + v, []).append((u, v))
    return out


def brute_is_unambiguous_product(x, y) -> tuple[bool, str | None]:
    pairs = brute_product_pairs(x, y)
    bad = sorted((z for z, ps in pairs.items() if len(ps) > 1), key=lambda z: (len(z), z))
    return (not bad, bad[0] if bad else None)


@dataclass(frozen=True)
class AltFactorizationReport:
    word: str
    factorizations: tuple  # each a tuple of (piece, "X"|"Y")
    similar: dict = field(default_factory=dict)

    @property
    def has_similar_pair(self) -> bool:
        return bool(self.similar)


def brute_alt_factorizations(x, y, w: str) -> AltFactorizationReport:
    """All alternating factorizations of ``w`` on (X, Y) with at least two
    pieces, grouped by (first set, last set)."""
    sets = {"X": finite_words(x), "Y": finite_words(y)}
    found = []

    def extend(pos, acc, label):
        if pos == len(w):
            if len(acc) >= 2:
                found.append(tuple(acc))
            return
        for end in range(pos + 1, len(w) + 1):
            piece = w[pos:end]
            if piece in sets[label]:
                acc.append((piece, label))
                extend(end, acc, "Y" if label == "X" else "X")
                acc.pop()

    extend(0, [], "X")
    extend(0, [], "Y")
    groups: dict = {}
    for f in found:
        groups.setdefault((f[0][1], f[-1][1]), []).append(f)
    similar = {sig: fs for sig, fs in groups.items() if len(fs) > 1}
    return AltFactorizationReport(w, tuple(found), similar)


# -- strong alt-induced decompositions ------------------------------------

def _is_prefix_set(words) -> bool:
    return not any(u != v and v.startswith(u) for u in words for v in words)


def _is_suffix_set(words) -> bool:
    return not any(u != v and v.endswith(u) for u in words for v in words)


def _subsets_with(anchor, others):
    if len(others) > MAX_CANDIDATES:
        raise TooLarge(f"{len(others)} candidate words exceed the oracle limit")
    for r in range(len(others) + 1):
        for combo in itertools.combinations(others, r):
            yield frozenset((anchor,) + combo)


def _decompositions(z, accept):
    words = finite_words(z)
    if not words or "" in words:
        return []
    z0 = min(words, key=lambda w: (len(w), w))
    found = set()
    # any Z = XY splits the shortest word as z0 = x0·y0 with x0 ∈ X, y0 ∈ Y,
    # which forces X ⊆ Z·y0⁻¹ and Y ⊆ x0⁻¹·Z
    for i in range(1, len(z0)):
        x0, y0 = z0[:i], z0[i:]
        xc = sorted(w[: -len(y0)] for w in words if w.endswith(y0) and len(w) > len(y0))
        yc = sorted(w[len(x0):] for w in words if w.startswith(x0) and len(w) > len(x0))
        for xs in _subsets_with(x0, [u for u in xc if u != x0]):
            ymax = [v for v in yc if all(u + v in words for u in xs)]
            for ys in _subsets_with(y0, [v for v in ymax if v != y0]):
                if {u + v for u in xs for v in ys} == words and accept(xs, ys):
                    found.add((xs, ys))
    return sorted(found, key=lambda p: (sorted(p[0]), sorted(p[1])))


def brute_sai_decompositions(z) -> list[tuple[frozenset, frozenset]]:
    """Every (X, Y) with Z = XY, X a prefix code and Y a suffix code.

    For a code Z these are exactly the strong alternative codes inducing Z.
    """
    return _decompositions(z, lambda xs, ys: _is_prefix_set(xs) and _is_suffix_set(ys))


def brute_alt_induced_decompositions(z) -> list[tuple[frozenset, frozenset]]:
    """Every (X, Y) with Z = XY and the product XY unambiguous."""
    return _decompositions(z, lambda xs, ys: brute_is_unambiguous_product(xs, ys)[0])


# -- maximality -------------------------------------------------------------

_CLASS_TESTS = {
    "prefix": lambda u, v: v.startswith(u) or u.startswith(v),
    "suffix": lambda u, v: v.endswith(u) or u.endswith(v),
    "bifix": lambda u, v: v.startswith(u) or u.startswith(v) or v.endswith(u) or u.endswith(v),
}


def brute_maximality(x: Language, cls: str, maxlen: int) -> list[str]:
    """Words of length ≤ ``maxlen`` whose addition keeps X in ``cls``."""
    words = finite_words(x)
    clash = _CLASS_TESTS[cls]
    out = []
    for n in range(1, maxlen + 1):
        for letters in itertools.product(x.alphabet.symbols, repeat=n):
            w = "".join(letters)
            if w not in words and not any(clash(u, w) for u in words):
                out.append(w)
    return out
