"""Maximal prefix, suffix and bifix codes, and prefix/suffix completion."""
from __future__ import annotations

from dataclasses import dataclass

from . import ops
from .codes import is_bifix_code, is_prefix_code, is_suffix_code, is_thin
from .errors import NotBifix, NotFinite, NotPrefixCode, NotSuffixCode, NotThin
from .language import Language

TREE_FILL = "TreeFill"
MIN_WORDS = "MinWords"
BOUNDED_SEARCH = "BoundedSearch"
VERIFIED_CANDIDATE = "VerifiedCandidate"
FIXPOINT = "Fixpoint"


@dataclass(frozen=True)
class CompletionResult:
    input: Language
    cls: str  # "prefix" | "suffix" | "bifix"
    container: Language
    method: str
    preserved_maxlen: bool | None = None


def _right_complete(x: Language) -> bool:
    universe = Language.universe(x.alphabet)
    return ops.union(ops.prefixes(x), ops.concat(x, universe)) == universe


def is_maximal_prefix(x: Language) -> bool:
    """A prefix code is maximal iff it is right complete: Pref(X) ∪ XA* = A*."""
    if not is_prefix_code(x):
        raise NotPrefixCode(f"{x} is not a prefix code")
    return _right_complete(x)


def is_maximal_suffix(x: Language) -> bool:
    if not is_suffix_code(x):
        raise NotSuffixCode(f"{x} is not a suffix code")
    return _right_complete(ops.reverse(x))


def is_maximal_bifix(x: Language) -> bool:
    """For thin bifix codes, maximal bifix = maximal prefix and maximal suffix."""
    if not is_bifix_code(x):
        raise NotBifix(f"{x} is not a bifix code")
    if not is_thin(x):
        raise NotThin(f"{x} is not thin")
    return _right_complete(x) and _right_complete(ops.reverse(x))


def complete_prefix_finite(x: Language) -> CompletionResult:
    """Fill the literal prefix tree of X: add every child of an internal node
    that is neither internal nor a word of X.  The longest word is unchanged."""
    if not is_prefix_code(x):
        raise NotPrefixCode(f"{x} is not a prefix code")
    if not x.is_finite:
        raise NotFinite("tree fill needs a finite prefix code")
    words = x.words
    internal = {w[:i] for w in words for i in range(len(w))}
    added = {p + a for p in internal for a in x.alphabet} - internal - words
    container = Language.from_words(x.alphabet, words | added)
    preserved = container.max_length == x.max_length
    return CompletionResult(x, "prefix", container, TREE_FILL, preserved)


def complete_prefix_regular(x: Language) -> CompletionResult:
    """X ∪ U where V = A* \\ (Pref(X) ∪ XA*) and U keeps the prefix-minimal
    words of V."""
    if not is_prefix_code(x):
        raise NotPrefixCode(f"{x} is not a prefix code")
    universe = Language.universe(x.alphabet)
    covered = ops.union(ops.prefixes(x), ops.concat(x, universe))
    v = ops.complement(covered)
    u = ops.difference(v, ops.concat(v, Language.plus(x.alphabet)))
    container = ops.union(x, u)
    preserved = None
    if x.is_finite and container.is_finite:
        preserved = container.max_length == x.max_length
    return CompletionResult(x, "prefix", container, MIN_WORDS, preserved)


def complete_prefix(x: Language) -> CompletionResult:
    if x.is_finite:
        return complete_prefix_finite(x)
    return complete_prefix_regular(x)


def _mirror(result: CompletionResult, original: Language) -> CompletionResult:
    return CompletionResult(
        original, "suffix", ops.reverse(result.container), result.method, result.preserved_maxlen
    )


def complete_suffix_finite(x: Language) -> CompletionResult:
    if not is_suffix_code(x):
        raise NotSuffixCode(f"{x} is not a suffix code")
    return _mirror(complete_prefix_finite(ops.reverse(x)), x)


def complete_suffix_regular(x: Language) -> CompletionResult:
    if not is_suffix_code(x):
        raise NotSuffixCode(f"{x} is not a suffix code")
    return _mirror(complete_prefix_regular(ops.reverse(x)), x)


def complete_suffix(x: Language) -> CompletionResult:
    if x.is_finite:
        return complete_suffix_finite(x)
    return complete_suffix_regular(x)
