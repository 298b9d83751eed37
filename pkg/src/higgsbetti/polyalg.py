"""
Exact univariate polynomials in the Betti variable ``y``.

Coefficients are Python integers, so nothing here ever rounds.  A polynomial
is stored as a tuple of coefficients in ascending order with no trailing
zeros; the zero polynomial is the empty tuple.

    >>> p = IntPolynomial.binomial_power(2)
    >>> p
    IntPolynomial(1 + 4y + 6y^2 + 4y^3 + y^4)
    >>> poly_exact_div(p, IntPolynomial((1, 1)))
    IntPolynomial(1 + 3y + 3y^2 + y^3)

The second half of the module extracts Poincare polynomials of symmetric
products of a curve from the generating series

    sum_n P_y(S^n X) x^n = (1 + x y)^{2g} / ((1 - x)(1 - x y^2)),

by truncated power-series arithmetic in ``x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InexactDivision

__all__ = [
    "IntPolynomial",
    "poly_add",
    "poly_sub",
    "poly_mul",
    "poly_pow",
    "poly_exact_div",
    "sym_series_coeff",
]


def _normalize(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = [int(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...] = ()

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _normalize(coeffs))

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        if k < 0:
            raise ValueError(f"negative exponent {k}")
        return cls((0,) * k + (c,))

    @classmethod
    def binomial_power(cls, k: int) -> "IntPolynomial":
        """``(1 + y)^k``."""
        return poly_pow(cls((1, 1)), k)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __call__(self, y: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * y + c
        return acc

    def __add__(self, other):
        return poly_add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return poly_sub(self, _coerce(other))

    def __rsub__(self, other):
        return poly_sub(_coerce(other), self)

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __mul__(self, other):
        return poly_mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return poly_pow(self, k)

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by ``y^k``."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def to_text(self, var: str = "y") -> str:
        """Ascending human-readable form, e.g. ``1 + 4y^3 - y^5``."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{mag}{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"IntPolynomial({self.to_text()})"


def _coerce(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial((x,))
    return NotImplemented


def poly_add(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    n = max(len(a), len(b))
    return IntPolynomial(a[i] + b[i] for i in range(n))


def poly_sub(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    n = max(len(a), len(b))
    return IntPolynomial(a[i] - b[i] for i in range(n))


def poly_mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    if a.is_zero() or b.is_zero():
        return IntPolynomial()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        for j, bj in enumerate(b.coeffs):
            out[i + j] += ai * bj
    return IntPolynomial(out)


def poly_pow(a: IntPolynomial, k: int) -> IntPolynomial:
    if k < 0:
        raise ValueError(f"negative power {k}")
    result = IntPolynomial((1,))
    base = a
    while k:
        if k & 1:
            result = poly_mul(result, base)
        k >>= 1
        if k:
            base = poly_mul(base, base)
    return result


def poly_exact_div(num: IntPolynomial, den: IntPolynomial) -> IntPolynomial:
    """Quotient of ``num`` by ``den``, which must divide it exactly over Z.

    Raises InexactDivision when a quotient coefficient is not an integer or
    the remainder is nonzero.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return IntPolynomial()
    rem = list(num.coeffs)
    dd = den.degree
    lead = den.coeffs[-1]
    if len(rem) - 1 < dd:
        raise InexactDivision(f"{num} is not divisible by {den}")
    quot = [0] * (len(rem) - dd)
    for k in range(len(quot) - 1, -1, -1):
        c = rem[k + dd]
        if c == 0:
            continue
        q, r = divmod(c, lead)
        if r:
            raise InexactDivision(f"{num} is not divisible by {den}")
        quot[k] = q
        for j, dj in enumerate(den.coeffs):
            rem[k + j] -= q * dj
    if any(rem):
        raise InexactDivision(f"{num} is not divisible by {den}")
    return IntPolynomial(quot)


# -- truncated series in x with IntPolynomial coefficients -------------------

Series = list  # list[IntPolynomial], index = power of x


def _series_mul(a: Sequence[IntPolynomial], b: Sequence[IntPolynomial], n: int) -> Series:
    out = [IntPolynomial() for _ in range(n + 1)]
    for i, ai in enumerate(a[: n + 1]):
        if ai.is_zero():
            continue
        for j, bj in enumerate(b[: n + 1 - i]):
            out[i + j] = out[i + j] + ai * bj
    return out


def _geometric(ratio: IntPolynomial, n: int) -> Series:
    # 1 / (1 - x * ratio)
    return [poly_pow(ratio, k) for k in range(n + 1)]


def sym_series_coeff(g: int, n: int) -> IntPolynomial:
    """Poincare polynomial of the n-th symmetric product of a genus-g curve."""
    if g < 1:
        raise ValueError(f"genus must be >= 1, got {g}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    y = IntPolynomial((0, 1))
    one = IntPolynomial((1,))
    # (1 + x y)^{2g}, truncated
    odd = [one, y] + [IntPolynomial() for _ in range(n - 1)]
    numerator = [one] + [IntPolynomial() for _ in range(n)]
    for _ in range(2 * g):
        numerator = _series_mul(numerator, odd, n)
    series = _series_mul(numerator, _geometric(one, n), n)
    series = _series_mul(series, _geometric(y.shift(1), n), n)
    return series[n]
