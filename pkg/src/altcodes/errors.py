"""Exception hierarchy shared by every module of the toolkit."""


class AltCodesError(Exception):
    """Base class for all errors raised by altcodes."""


class RegexSyntaxError(AltCodesError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownSymbol(AltCodesError, ValueError):
    def __init__(self, symbol: str, position: int | None = None):
        where = "" if position is None else f" at position {position}"
        super().__init__(f"symbol {symbol!r} is not in the alphabet{where}")
        self.symbol = symbol
        self.position = position


class StateBudgetExceeded(AltCodesError):
    pass


class AlphabetMismatch(AltCodesError, ValueError):
    pass


class EmptyLanguage(AltCodesError, ValueError):
    pass


class EpsilonInCode(AltCodesError, ValueError):
    pass


class NotACode(AltCodesError, ValueError):
    pass


class NotPrefixCode(AltCodesError, ValueError):
    pass


class NotSuffixCode(AltCodesError, ValueError):
    pass


class NotBifix(AltCodesError, ValueError):
    pass


class NotThin(AltCodesError, ValueError):
    pass


class NotFinite(AltCodesError, ValueError):
    pass


class InvalidWitness(AltCodesError, ValueError):
    pass


class ClassViolation(AltCodesError, ValueError):
    pass


class NotFoundWithinBound(AltCodesError):
    """The bounded search finished without finding a certified container."""


class BoundExceeded(AltCodesError):
    """The bounded search ran out of its node budget before finishing."""


class TooLarge(AltCodesError, ValueError):
    pass


class SpecError(AltCodesError, ValueError):
    pass
