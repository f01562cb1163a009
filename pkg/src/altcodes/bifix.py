"""Bifix-code machinery: indicator, interpretations, full words and a bounded
search for finite maximal bifix containers."""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field

from . import ops
from .codes import is_bifix_code, is_thin
from .errors import BoundExceeded, NotBifix, NotFinite, NotFoundWithinBound
from .language import Language
from .maximal import BOUNDED_SEARCH, FIXPOINT, CompletionResult, is_maximal_bifix

DEFAULT_BUDGET = 200_000


def _require_bifix(x: Language) -> None:
    if not is_bifix_code(x):
        raise NotBifix(f"{x} is not a bifix code")


@dataclass(frozen=True)
class IndicatorValue:
    word: str
    occurrences: int  # F: infix occurrences of X-words, with multiplicity
    value: int  # L = 1 + |w| - F


def _occurrences(x: Language, w: str) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n + 1) if w[i:j] in x)


def indicator(x: Language, w: str) -> IndicatorValue:
    _require_bifix(x)
    x.alphabet.check_word(w)
    f = _occurrences(x, w)
    return IndicatorValue(w, f, 1 + len(w) - f)


def indicator_bound(x: Language) -> int:
    """max{L_X(x) : x ∈ X}, the least degree admitted for a finite container."""
    _require_bifix(x)
    if not x.is_finite:
        raise NotFinite("indicator bound needs a finite code")
    return max(1 + len(w) - _occurrences(x, w) for w in x.words)


@dataclass(frozen=True)
class Interpretation:
    """w = s·x1…xk·p with s a proper suffix and p a proper prefix of X-words."""

    s: str
    x: tuple[str, ...]
    p: str

    @property
    def cuts(self) -> frozenset:
        pos = len(self.s)
        out = {pos}
        for piece in self.x:
            pos += len(piece)
            out.add(pos)
        return frozenset(out)

    def passes_by(self, point: int) -> bool:
        """Whether the interpretation passes by the point (w[:point], w[point:])."""
        return point in self.cuts


def _factorizations(x: Language, w: str) -> list[tuple[str, ...]]:
    ways: list[list[tuple[str, ...]]] = [[] for _ in range(len(w) + 1)]
    ways[0].append(())
    for i in range(1, len(w) + 1):
        for j in range(i):
            if ways[j] and w[j:i] in x:
                ways[i].extend(f + (w[j:i],) for f in ways[j])
    return ways[len(w)]


class _Interpreter:
    def __init__(self, x: Language):
        self.x = x
        self.suff = ops.suffixes(x)
        self.pref = ops.prefixes(x)

    def __call__(self, w: str) -> list[Interpretation]:
        out = []
        n = len(w)
        for i in range(n + 1):
            if w[:i] not in self.suff:
                continue
            for j in range(i, n + 1):
                if w[j:] not in self.pref:
                    continue
                for f in _factorizations(self.x, w[i:j]):
                    out.append(Interpretation(w[:i], f, w[j:]))
        return out


def interpretations(x: Language, w: str) -> list[Interpretation]:
    _require_bifix(x)
    x.alphabet.check_word(w)
    return _Interpreter(x)(w)


def is_full(interps, length: int) -> bool:
    cuts = set()
    for it in interps:
        cuts |= it.cuts
    return all(p in cuts for p in range(length + 1))


@dataclass(frozen=True)
class FullnessReport:
    maxlen: int
    full_counts: dict  # length -> number of full words of that length
    interpretation_counts: dict  # length -> sorted distinct counts over full words
    examples: dict = field(default_factory=dict)  # count -> a full word at maxlen

    @property
    def growing(self) -> bool:
        """Full words keep appearing up to the probe length (sufficiency evidence)."""
        tail = [self.full_counts.get(n, 0) for n in range(max(0, self.maxlen - 2), self.maxlen + 1)]
        return all(c > 0 for c in tail)

    @property
    def uniform_degree(self) -> bool:
        """All longest full words share one interpretation count."""
        return len(self.interpretation_counts.get(self.maxlen, ())) <= 1

    @property
    def degree_evidence(self) -> int | None:
        counts = self.interpretation_counts.get(self.maxlen, ())
        return counts[0] if len(counts) == 1 else None


def fullness_probe(x: Language, maxlen: int) -> FullnessReport:
    """Classify every word up to ``maxlen`` as full or not.

    The result is evidence only: sufficiency and degree concern infinite
    words, which a finite probe cannot certify.
    """
    _require_bifix(x)
    if not x.is_finite:
        raise NotFinite("fullness probe needs a finite code")
    interp = _Interpreter(x)
    full_counts = {}
    counts = {}
    examples = {}
    for n in range(maxlen + 1):
        seen = Counter()
        for letters in itertools.product(x.alphabet.symbols, repeat=n):
            w = "".join(letters)
            its = interp(w)
            if is_full(its, n):
                seen[len(its)] += 1
                if n == maxlen:
                    examples.setdefault(len(its), w)
        full_counts[n] = sum(seen.values())
        counts[n] = tuple(sorted(seen))
    return FullnessReport(maxlen, full_counts, counts, examples)


# -- verification of containers ---------------------------------------------

@dataclass(frozen=True)
class ContainerCheck:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_bifix_container(x: Language, candidate: Language) -> ContainerCheck:
    if not ops.subset(x, candidate):
        return ContainerCheck(False, "candidate does not contain X")
    if candidate.is_empty or candidate.contains_epsilon:
        return ContainerCheck(False, "candidate is empty or contains ε")
    if not is_bifix_code(candidate):
        return ContainerCheck(False, "candidate is not a bifix code")
    if not is_thin(candidate):
        return ContainerCheck(False, "candidate is not thin")
    if not is_maximal_bifix(candidate):
        return ContainerCheck(False, "candidate is not a maximal bifix code")
    return ContainerCheck(True)


# -- bounded completion -------------------------------------------------------

class _Search:
    """Depth-first construction of a complete prefix tree of depth ≤ maxlen
    whose leaves form a suffix code containing X.

    Each open node is either a leaf (a code word) or expanded into all its
    children; the most constrained open node is decided first.
    """

    def __init__(self, x: Language, maxlen: int, budget: int):
        self.x = x
        self.alphabet = x.alphabet.symbols
        self.maxlen = maxlen
        self.budget = budget
        self.visited = 0
        self.required = set(x.words)
        self.required_prefixes = {w[:i] for w in self.required for i in range(len(w))}

    def options(self, w: str, codewords: set, suffix_count: Counter) -> list[str]:
        if w in self.required:
            return ["leaf"]
        if w in self.required_prefixes:
            return ["expand"] if len(w) < self.maxlen else []
        opts = []
        if suffix_count[w] == 0 and not any(w[i:] in codewords for i in range(1, len(w))):
            opts.append("leaf")
        if len(w) < self.maxlen:
            opts.append("expand")
        return opts

    def run(self):
        codewords = set(self.required)
        suffix_count: Counter = Counter(w[i:] for w in self.required for i in range(1, len(w)))
        return self._search([""], codewords, suffix_count)

    def _search(self, frontier, codewords, suffix_count):
        self.visited += 1
        if self.visited > self.budget:
            raise BoundExceeded(f"bifix search exceeded {self.budget} nodes")
        if not frontier:
            lang = Language.from_words(self.x.alphabet, codewords)
            return lang if is_maximal_bifix(lang) else None
        best = None
        for w in frontier:
            opts = self.options(w, codewords, suffix_count)
            key = (len(opts), len(w), w)
            if best is None or key < best[0]:
                best = (key, w, opts)
                if not opts:
                    return None
        _, node, opts = best
        rest = [w for w in frontier if w != node]
        for choice in opts:
            if choice == "leaf" and node in self.required:
                found = self._search(rest, codewords, suffix_count)
            elif choice == "leaf":
                codewords.add(node)
                for i in range(1, len(node)):
                    suffix_count[node[i:]] += 1
                found = self._search(rest, codewords, suffix_count)
                codewords.discard(node)
                for i in range(1, len(node)):
                    suffix_count[node[i:]] -= 1
            else:
                found = self._search(rest + [node + a for a in self.alphabet], codewords, suffix_count)
            if found is not None:
                return found
        return None


def complete_bifix_bounded(
    x: Language, maxlen: int, budget: int = DEFAULT_BUDGET
) -> CompletionResult:
    """Search for a finite maximal bifix code containing X with words of
    length ≤ ``maxlen``.

    Raises NotFoundWithinBound when the search space is exhausted and
    BoundExceeded when the node budget runs out first.
    """
    _require_bifix(x)
    if not x.is_finite:
        raise NotFinite("bounded bifix completion needs a finite code")
    if is_maximal_bifix(x):
        return CompletionResult(x, "bifix", x, FIXPOINT, True)
    if maxlen < x.max_length:
        raise NotFoundWithinBound(f"no container with words of length ≤ {maxlen}")
    found = _Search(x, maxlen, budget).run()
    if found is None:
        raise NotFoundWithinBound(f"no finite maximal bifix container with words of length ≤ {maxlen}")
    assert ops.subset(x, found) and is_maximal_bifix(found)
    return CompletionResult(x, "bifix", found, BOUNDED_SEARCH, found.max_length == x.max_length)
