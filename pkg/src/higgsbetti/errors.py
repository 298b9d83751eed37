"""Typed errors raised by the library.

Every error carries a stable ``code`` string, used verbatim in the CLI's
machine-readable error objects.
"""


class HiggsError(ValueError):
    code = "HiggsError"


class UnsupportedGenus(HiggsError):
    code = "UnsupportedGenus"


class UnsupportedRank(HiggsError):
    code = "UnsupportedRank"


class UnsupportedDegree(HiggsError):
    code = "UnsupportedDegree"


class UnsupportedType(HiggsError):
    code = "UnsupportedType"


class NonCoprime(HiggsError):
    code = "NonCoprime"


class InexactDivision(HiggsError, ArithmeticError):
    """The numerator is not a polynomial multiple of the denominator."""

    code = "InexactDivision"
