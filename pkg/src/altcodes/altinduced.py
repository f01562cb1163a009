"""Strong alt-induced codes: the RSIC decision procedure, witness checks,
subclass characterization and closure under product."""
from __future__ import annotations

import enum
from dataclasses import dataclass

from . import ops
from .alphabet import same_alphabet
from .codes import (
    infix_family,
    is_code,
    is_prefix_code,
    is_suffix_code,
    is_thin,
    require_code_candidate,
)
from .errors import ClassViolation, InvalidWitness, NotACode
from .language import Language, shortest_word
from .maximal import is_maximal_bifix, is_maximal_prefix, is_maximal_suffix

ACCEPT = "accept"
REJECT_Y = "YY^-1 != {ε}"
REJECT_X = "X^-1X != {ε}"
REJECT_PRODUCT = "XY != Z"


@dataclass(frozen=True)
class RsicStep:
    u: str
    y: Language
    outcome: str
    y_word: str | None = None
    x: Language | None = None

    @property
    def accepted(self) -> bool:
        return self.outcome == ACCEPT


@dataclass(frozen=True)
class RsicResult:
    strong: bool
    shortest: str
    trace: tuple[RsicStep, ...]
    x: Language | None = None
    y: Language | None = None

    @property
    def verdict(self) -> str:
        return "StrongAltInduced" if self.strong else "NotStrongAltInduced"

    @property
    def witness(self) -> tuple[Language, Language] | None:
        return (self.x, self.y) if self.strong else None

    def __bool__(self) -> bool:
        return self.strong


def rsic(z: Language, *, check_code: bool = True, exhaustive: bool = False) -> RsicResult:
    """Decide whether the regular code Z is strong alt-induced.

    Candidates Y = u⁻¹Z are tried for the proper non-empty prefixes u of a
    shortest word of Z, shortest u first.  A candidate survives when Y is a
    suffix code, X = Zy⁻¹ (y a shortest word of Y) is a prefix code and
    XY = Z.  The first surviving candidate is the witness; with
    ``exhaustive`` the remaining prefixes are still evaluated and traced.
    """
    require_code_candidate(z, "Z")
    if check_code and not is_code(z).code:
        raise NotACode(f"{z} is not a code")
    w = shortest_word(z)
    trace = []
    witness = None
    for i in range(1, len(w)):
        u = w[:i]
        y = ops.left_quotient(u, z)
        if not ops.is_epsilon_only(ops.right_quotient_lang(y, y)):
            trace.append(RsicStep(u, y, REJECT_Y))
            continue
        yw = shortest_word(y)
        x = ops.right_quotient(z, yw)
        if not ops.is_epsilon_only(ops.left_quotient_lang(x, x)):
            trace.append(RsicStep(u, y, REJECT_X, yw, x))
            continue
        if ops.concat(x, y) != z:
            trace.append(RsicStep(u, y, REJECT_PRODUCT, yw, x))
            continue
        trace.append(RsicStep(u, y, ACCEPT, yw, x))
        assert verify_witness(x, y, z, z_is_code=True).valid
        if witness is None:
            witness = (x, y)
        if not exhaustive:
            break
    if witness is None:
        return RsicResult(False, w, tuple(trace))
    return RsicResult(True, w, tuple(trace), *witness)


@dataclass(frozen=True)
class WitnessReport:
    prefix_x: bool
    suffix_y: bool
    code_z: bool
    product_equal: bool
    left_inclusion: bool  # X⁻¹(XY) ⊆ Y
    right_inclusion: bool  # (XY)Y⁻¹ ⊆ X

    @property
    def valid(self) -> bool:
        return self.prefix_x and self.suffix_y and self.code_z and self.product_equal

    def __bool__(self) -> bool:
        return self.valid

    def as_dict(self) -> dict[str, bool]:
        return {
            "valid": self.valid,
            "prefix_x": self.prefix_x,
            "suffix_y": self.suffix_y,
            "code_z": self.code_z,
            "product_equal": self.product_equal,
            "left_inclusion": self.left_inclusion,
            "right_inclusion": self.right_inclusion,
        }


def verify_witness(x: Language, y: Language, z: Language, *, z_is_code: bool = False) -> WitnessReport:
    """Check that (X, Y) induces Z as a strong alternative code: X prefix,
    Y suffix, Z a code and XY = Z.  The inclusions of the strong condition
    are evaluated as well, against the product XY."""
    for name, lang in (("X", x), ("Y", y), ("Z", z)):
        require_code_candidate(lang, name)
    same_alphabet(x.alphabet, y.alphabet, z.alphabet)
    product = ops.concat(x, y)
    return WitnessReport(
        prefix_x=is_prefix_code(x),
        suffix_y=is_suffix_code(y),
        code_z=z_is_code or is_code(z).code,
        product_equal=product == z,
        left_inclusion=ops.subset(ops.left_quotient_lang(x, product), y),
        right_inclusion=ops.subset(ops.right_quotient_lang(product, y), x),
    )


class Tri(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    NEEDS_THINNESS = "needs-thinness"

    @classmethod
    def of(cls, flag: bool) -> "Tri":
        return cls.HOLDS if flag else cls.FAILS


SUBCLASS_FLAGS = (
    "prefix-SAI",
    "maximal-prefix-SAI",
    "suffix-SAI",
    "maximal-suffix-SAI",
    "bifix-SAI",
    "maximal-bifix-SAI",
)


@dataclass(frozen=True)
class SubclassReport:
    flags: dict  # name -> Tri

    def __getitem__(self, name: str) -> Tri:
        return self.flags[name]

    def holds(self, name: str) -> bool:
        return self.flags[name] is Tri.HOLDS

    def as_dict(self) -> dict[str, str]:
        return {k: v.value for k, v in self.flags.items()}


def subclass_characterize(x: Language, y: Language) -> SubclassReport:
    """Which prefix/suffix/bifix strong alt-induced subclasses XY falls in,
    read off the factors X and Y."""
    report = verify_witness(x, y, ops.concat(x, y))
    if not report.valid:
        raise InvalidWitness(f"(X, Y) does not induce a strong alt-induced code: {report.as_dict()}")
    px, sx = is_prefix_code(x), is_suffix_code(x)
    py, sy = is_prefix_code(y), is_suffix_code(y)
    bx, by = px and sx, py and sy
    mpx = px and is_maximal_prefix(x)
    msx = sx and is_maximal_suffix(x)
    mpy = py and is_maximal_prefix(y)
    msy = sy and is_maximal_suffix(y)
    flags = {
        "prefix-SAI": Tri.of(px and by),
        "maximal-prefix-SAI": Tri.of(mpx and mpy and by),
        "suffix-SAI": Tri.of(bx and sy),
        "maximal-suffix-SAI": Tri.of(msx and bx and msy),
        "bifix-SAI": Tri.of(bx and by),
    }
    if not (bx and by):
        flags["maximal-bifix-SAI"] = Tri.FAILS
    elif not (is_thin(x) and is_thin(y)):
        flags["maximal-bifix-SAI"] = Tri.NEEDS_THINNESS
    else:
        flags["maximal-bifix-SAI"] = Tri.of(is_maximal_bifix(x) and is_maximal_bifix(y))
    return SubclassReport(flags)


# -- closure under product ---------------------------------------------------

PRODUCT_CLASSES = (
    "prefix",
    "suffix",
    "bifix",
    "p-infix",
    "s-infix",
    "infix",
    "p-subinfix",
    "s-subinfix",
    "subinfix",
    "hypercode",
)
# every class except these forces Z to be a prefix code
_SUFFIX_SIDE = frozenset({"suffix", "s-infix", "s-subinfix"})


def in_class(z: Language, cls: str) -> bool:
    if cls == "prefix":
        return is_prefix_code(z)
    if cls == "suffix":
        return is_suffix_code(z)
    if cls == "bifix":
        return is_prefix_code(z) and is_suffix_code(z)
    if cls in PRODUCT_CLASSES:
        return infix_family(z)[cls]
    raise ValueError(f"unknown class {cls!r}")


def product_compose(
    first: tuple[Language, Language], second: tuple[Language, Language], cls: str
) -> tuple[Language, Language]:
    """Witness for ZZ′ from witnesses (X, Y) of Z and (X′, Y′) of Z′.

    When the class makes Z a prefix code the witness is (ZX′, Y′); for the
    suffix-side classes it is the mirror (X, YZ′).
    """
    if cls not in PRODUCT_CLASSES:
        raise ValueError(f"unknown class {cls!r}")
    (x, y), (x2, y2) = first, second
    z, z2 = ops.concat(x, y), ops.concat(x2, y2)
    for name, (a, b), prod in (("first", first, z), ("second", second, z2)):
        if not verify_witness(a, b, prod).valid:
            raise InvalidWitness(f"{name} witness does not verify")
        if not in_class(prod, cls):
            raise ClassViolation(f"{name} product is not a {cls} code")
    if cls in _SUFFIX_SIDE:
        composed = (x, ops.concat(y, z2))
    else:
        composed = (ops.concat(z, x2), y2)
    zz = ops.concat(z, z2)
    if not verify_witness(*composed, zz).valid:
        raise AssertionError("composed witness failed verification")
    if not in_class(zz, cls):
        raise AssertionError(f"product left the {cls} class")
    return composed
