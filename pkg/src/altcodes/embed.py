"""Embedding prefix/suffix/bifix strong alt-induced codes into maximal ones."""
from __future__ import annotations

from dataclasses import dataclass

from . import ops
from .altinduced import subclass_characterize
from .bifix import complete_bifix_bounded, verify_bifix_container
from .codes import is_prefix_code, is_suffix_code
from .errors import ClassViolation, NotFoundWithinBound
from .language import Language
from .maximal import (
    FIXPOINT,
    VERIFIED_CANDIDATE,
    CompletionResult,
    complete_prefix,
    complete_suffix,
    is_maximal_bifix,
    is_maximal_prefix,
    is_maximal_suffix,
)

EMBED_CLASSES = ("prefix", "suffix", "bifix")


@dataclass(frozen=True)
class EmbedResult:
    cls: str
    x: CompletionResult
    y: CompletionResult

    @property
    def pair(self) -> tuple[Language, Language]:
        return self.x.container, self.y.container


def _one_sided(lang: Language, side: str, candidate: Language | None) -> CompletionResult:
    if candidate is None:
        return complete_prefix(lang) if side == "prefix" else complete_suffix(lang)
    has_side = is_prefix_code if side == "prefix" else is_suffix_code
    maximal = is_maximal_prefix if side == "prefix" else is_maximal_suffix
    if not ops.subset(lang, candidate):
        raise ClassViolation(f"candidate {candidate} does not contain {lang}")
    if candidate.contains_epsilon or not has_side(candidate) or not maximal(candidate):
        raise ClassViolation(f"candidate {candidate} is not a maximal {side} code")
    return CompletionResult(lang, side, candidate, VERIFIED_CANDIDATE)


def _bifix_side(lang: Language, candidate: Language | None, bound: int) -> CompletionResult:
    if candidate is not None:
        check = verify_bifix_container(lang, candidate)
        if not check:
            raise ClassViolation(f"candidate {candidate} rejected: {check.reason}")
        return CompletionResult(lang, "bifix", candidate, VERIFIED_CANDIDATE)
    if is_maximal_bifix(lang):
        return CompletionResult(lang, "bifix", lang, FIXPOINT)
    if not lang.is_finite:
        raise NotFoundWithinBound(f"no candidate given for the infinite bifix code {lang}")
    return complete_bifix_bounded(lang, bound)


def embed_strong(
    witness: tuple[Language, Language],
    cls: str,
    candidates: tuple[Language | None, Language | None] = (None, None),
    bound: int = 6,
) -> EmbedResult:
    """Containers (M_X, M_Y) with M_X·M_Y a maximal ``cls`` strong
    alt-induced code containing XY.

    For ``prefix``, M_X is a maximal prefix code and M_Y a maximal bifix
    code; ``suffix`` is the mirror image and ``bifix`` completes both sides
    as bifix codes.  Bifix sides come from a supplied candidate (verified),
    from the input when it is already maximal, or from the bounded search.
    """
    if cls not in EMBED_CLASSES:
        raise ValueError(f"unknown class {cls!r}")
    x, y = witness
    report = subclass_characterize(x, y)
    if not report.holds(f"{cls}-SAI"):
        raise ClassViolation(f"XY is not a {cls} strong alt-induced code")
    cand_x, cand_y = candidates
    if cls == "prefix":
        mx = _one_sided(x, "prefix", cand_x)
        my = _bifix_side(y, cand_y, bound)
    elif cls == "suffix":
        mx = _bifix_side(x, cand_x, bound)
        my = _one_sided(y, "suffix", cand_y)
    else:
        mx = _bifix_side(x, cand_x, bound)
        my = _bifix_side(y, cand_y, bound)
    result = EmbedResult(cls, mx, my)
    # never trust the construction: re-derive the maximal class from the factors
    final = subclass_characterize(mx.container, my.container)
    if not final.holds(f"maximal-{cls}-SAI"):
        raise AssertionError(f"embedding failed verification: {final.as_dict()}")
    if not ops.subset(ops.concat(x, y), ops.concat(mx.container, my.container)):
        raise AssertionError("embedding does not contain the input code")
    return result
