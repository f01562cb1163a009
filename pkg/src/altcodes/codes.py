"""Code-class predicates for regular languages."""
from __future__ import annotations

from dataclasses import dataclass, field, fields

from . import ops
from .errors import EmptyLanguage, EpsilonInCode, NotACode
from .language import Language, shortest_word


def require_code_candidate(x: Language, name: str = "X") -> None:
    if x.is_empty:
        raise EmptyLanguage(f"{name} is empty")
    if x.contains_epsilon:
        raise EpsilonInCode(f"{name} contains the empty word")


# -- Sardinas–Patterson ------------------------------------------------------

@dataclass(frozen=True)
class SardinasTrace:
    """Rounds U1, U2, … of the dangling-suffix test and its outcome.

    ``factorizations`` holds two distinct factorizations of ``witness``
    when the language is not a code.
    """

    rounds: tuple[Language, ...]
    code: bool
    witness: str | None = None
    factorizations: tuple[tuple[str, ...], tuple[str, ...]] | None = None

    @property
    def verdict(self) -> str:
        return "Code" if self.code else "NotCode"

    def __bool__(self) -> bool:
        return self.code


def _without_epsilon(x: Language) -> Language:
    return ops.difference(x, Language.epsilon(x.alphabet))


def is_code(x: Language) -> SardinasTrace:
    """Sardinas–Patterson test generalized to regular languages.

    U1 = X⁻¹X \\ {ε} and U(n+1) = X⁻¹U(n) ∪ U(n)⁻¹X.  X fails to be a code
    iff some round contains ε.  Rounds are compared as canonical automata,
    so the first repeated round ends the test.
    """
    require_code_candidate(x)
    current = _without_epsilon(ops.left_quotient_lang(x, x))
    rounds = [current]
    seen = {current}
    while True:
        if current.contains_epsilon:
            word, f1, f2 = _double_factorization(x, rounds)
            return SardinasTrace(tuple(rounds), False, word, (f1, f2))
        if current.is_empty:
            return SardinasTrace(tuple(rounds), True)
        current = ops.union(ops.left_quotient_lang(x, current), ops.left_quotient_lang(current, x))
        if current in seen:
            return SardinasTrace(tuple(rounds), True)
        seen.add(current)
        rounds.append(current)


def _double_factorization(x: Language, rounds):
    """Walk back from ε in the last round to a word with two factorizations."""
    steps = []  # (kind, piece) per round transition, recorded backwards
    target = ""
    for k in range(len(rounds) - 2, -1, -1):
        uk = rounds[k]
        via_code = ops.intersect(x, ops.right_quotient(uk, target))
        if not via_code.is_empty:
            piece = shortest_word(via_code)  # target ∈ piece⁻¹ U_k
            steps.append(("code", piece, target))
            target = piece + target
            continue
        via_round = ops.intersect(uk, ops.right_quotient(x, target))
        prev = shortest_word(via_round)  # prev·target ∈ X
        steps.append(("round", prev + target, target))
        target = prev
    first = shortest_word(ops.intersect(x, ops.right_quotient(x, target)))
    short, long = [first], [first + target]
    for kind, piece, after in reversed(steps):
        short.append(piece)
        if kind == "round":
            short, long = long, short
    word = "".join(short)
    assert word == "".join(long)
    return word, tuple(short), tuple(long)


# -- edge classes -----------------------------------------------------------

def is_prefix_code(x: Language) -> bool:
    """X is a prefix code iff X⁻¹X = {ε}."""
    require_code_candidate(x)
    return ops.is_epsilon_only(ops.left_quotient_lang(x, x))


def is_suffix_code(x: Language) -> bool:
    """X is a suffix code iff XX⁻¹ = {ε}."""
    require_code_candidate(x)
    return ops.is_epsilon_only(ops.right_quotient_lang(x, x))


def is_bifix_code(x: Language) -> bool:
    return is_prefix_code(x) and is_suffix_code(x)


INFIX_FLAGS = ("p-infix", "s-infix", "infix", "p-subinfix", "s-subinfix", "subinfix", "hypercode")


def _disjoint(x: Language, y: Language) -> bool:
    return ops.intersect(x, y).is_empty


def infix_family(x: Language) -> dict[str, bool]:
    """Infix, subinfix and hypercode flags.

    Properness is obtained by padding with A⁺ on the relevant side, e.g.
    X is p-infix iff X ∩ A*XA⁺ = ∅.
    """
    require_code_candidate(x)
    universe = Language.universe(x.alphabet)
    plus = Language.plus(x.alphabet)
    left_any = ops.concat(universe, x)
    left_some = ops.concat(plus, x)
    inside_prefix = ops.concat(left_any, plus)  # A*XA⁺
    inside_suffix = ops.concat(left_some, universe)  # A⁺XA*
    up = ops.upward_closure(x)
    sub_prefix = ops.concat(up, plus)  # up(X)A⁺
    sub_suffix = ops.concat(plus, up)  # A⁺up(X)
    sub_inside = ops.union(ops.concat(sub_suffix, universe), ops.concat(universe, sub_prefix))
    flags = {
        "p-infix": _disjoint(x, inside_prefix),
        "s-infix": _disjoint(x, inside_suffix),
        "infix": _disjoint(x, ops.union(inside_prefix, inside_suffix)),
        "p-subinfix": _disjoint(x, sub_prefix),
        "s-subinfix": _disjoint(x, sub_suffix),
        "subinfix": _disjoint(x, sub_inside),
    }
    # Higman: an infinite language always contains two comparable words
    flags["hypercode"] = x.is_finite and _disjoint(x, ops.strict_upward_closure(x))
    return flags


# -- products ---------------------------------------------------------------

@dataclass(frozen=True)
class ProductCheck:
    """Outcome of an unambiguity test; ``pairs`` are two factorizations of ``witness``."""

    unambiguous: bool
    witness: str | None = None
    pairs: tuple[tuple[str, str], tuple[str, str]] | None = None

    def __bool__(self) -> bool:
        return self.unambiguous


def is_unambiguous_product(x: Language, y: Language) -> ProductCheck:
    """XY is ambiguous iff some s ≠ ε lies in X⁻¹X ∩ YY⁻¹.

    Such an s gives z = x·(s y′) = (x s)·y′ with two distinct pairs, and any
    ambiguity arises this way since the two X-parts of z are comparable.
    """
    require_code_candidate(x)
    require_code_candidate(y, "Y")
    shared = _without_epsilon(
        ops.intersect(ops.left_quotient_lang(x, x), ops.right_quotient_lang(y, y))
    )
    if shared.is_empty:
        return ProductCheck(True)
    s = shortest_word(shared)
    left = shortest_word(ops.intersect(x, ops.right_quotient(x, s)))
    tail = shortest_word(ops.intersect(y, ops.left_quotient(s, y)))
    return ProductCheck(False, left + s + tail, ((left, s + tail), (left + s, tail)))


def is_alternative_code(x: Language, y: Language) -> bool:
    """(X, Y) is an alternative code iff XY is a code and the product is unambiguous."""
    if not is_unambiguous_product(x, y):
        return False
    return is_code(ops.concat(x, y)).code


def is_strong_alternative_code(x: Language, y: Language) -> bool:
    if not is_alternative_code(x, y):
        return False
    z = ops.concat(x, y)
    return ops.subset(ops.left_quotient_lang(x, z), y) and ops.subset(
        ops.right_quotient_lang(z, y), x
    )


# -- thinness and completeness --------------------------------------------

def is_thin(x: Language) -> bool:
    """Some word is not a factor of any word of X."""
    return ops.factors(x) != Language.universe(x.alphabet)


def is_complete_code(x: Language) -> bool:
    """Every word is a factor of some word of X*."""
    if not is_code(x).code:
        raise NotACode("completeness is only defined here for codes")
    return ops.factors(ops.star(x)) == Language.universe(x.alphabet)


# -- summary report ----------------------------------------------------------

@dataclass(frozen=True)
class CodeClassReport:
    code: bool
    prefix: bool
    suffix: bool
    bifix: bool
    p_infix: bool
    s_infix: bool
    infix: bool
    p_subinfix: bool
    s_subinfix: bool
    subinfix: bool
    hypercode: bool
    thin: bool
    complete: bool  # False whenever X is not a code
    sardinas: SardinasTrace | None = field(default=None, compare=False, repr=False)

    def as_dict(self) -> dict[str, bool]:
        return {
            f.name.replace("_", "-"): getattr(self, f.name)
            for f in fields(self)
            if f.name != "sardinas"
        }

    def check_hierarchy(self) -> None:
        implications = [
            (self.bifix, self.prefix and self.suffix),
            (self.prefix and self.suffix, self.bifix),
            (self.infix, self.p_infix and self.s_infix),
            (self.subinfix, self.p_subinfix and self.s_subinfix),
            (self.p_subinfix, self.p_infix),
            (self.s_subinfix, self.s_infix),
            (self.hypercode, self.subinfix),
            (self.prefix or self.suffix, self.code),
            (self.complete, self.code),
        ]
        for premise, conclusion in implications:
            if premise and not conclusion:
                raise AssertionError(f"class hierarchy violated in {self.as_dict()}")


def classify(x: Language) -> CodeClassReport:
    trace = is_code(x)
    fam = infix_family(x)
    prefix, suffix = is_prefix_code(x), is_suffix_code(x)
    complete = trace.code and ops.factors(ops.star(x)) == Language.universe(x.alphabet)
    report = CodeClassReport(
        code=trace.code,
        prefix=prefix,
        suffix=suffix,
        bifix=prefix and suffix,
        p_infix=fam["p-infix"],
        s_infix=fam["s-infix"],
        infix=fam["infix"],
        p_subinfix=fam["p-subinfix"],
        s_subinfix=fam["s-subinfix"],
        subinfix=fam["subinfix"],
        hypercode=fam["hypercode"],
        thin=is_thin(x),
        complete=complete,
        sardinas=trace,
    )
    report.check_hierarchy()
    return report
