"""
Circle-fixed Higgs bundles as chains of subbundles.

A fixed point of the circle action splits as E = L_1 + ... + L_n with the
Higgs field shifting each piece one step, L_i -> L_{i+1} (x) omega.  All the
numerical information lives in the rank and degree of each L_i, which is
what `VHSType` records.  Its Morse index is a quadratic expression in these
numbers; stability can be decided for chains of line bundles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .curve import _ctx
from .errors import UnsupportedDegree, UnsupportedType
from .polyalg import IntPolynomial

PAPER_VERIFIED = "paper-verified"
EXTRAPOLATED = "extrapolated"


@dataclass(frozen=True)
class VHSType:
    ranks: tuple[int, ...]
    degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "ranks", tuple(int(r) for r in self.ranks))
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if not self.ranks:
            raise ValueError("a chain needs at least one piece")
        if len(self.ranks) != len(self.degrees):
            raise ValueError(
                f"ranks {self.ranks} and degrees {self.degrees} differ in length"
            )
        if any(r < 1 for r in self.ranks):
            raise ValueError(f"ranks must be positive, got {self.ranks}")

    @property
    def length(self) -> int:
        return len(self.ranks)

    @property
    def rank(self) -> int:
        return sum(self.ranks)

    @property
    def degree(self) -> int:
        return sum(self.degrees)

    def is_line_chain(self) -> bool:
        return all(r == 1 for r in self.ranks)

    def twist(self, k: int) -> "VHSType":
        """Type after tensoring with a line bundle of degree k."""
        return VHSType(self.ranks, tuple(d + r * k for r, d in zip(self.ranks, self.degrees)))

    def label(self) -> str:
        rs = ",".join(map(str, self.ranks))
        ds = ",".join(map(str, self.degrees))
        return f"({rs}; {ds})"

    def __str__(self) -> str:
        return self.label()


@dataclass(frozen=True)
class FixedComponentReport:
    vhs_type: VHSType
    morse_index: int
    component_poly: Optional[IntPolynomial]
    description: str
    provenance_flag: str = PAPER_VERIFIED

    def weighted(self) -> IntPolynomial:
        """y^index times the component polynomial."""
        if self.component_poly is None:
            raise ValueError(f"component {self.vhs_type} has no Poincare polynomial")
        return self.component_poly.shift(self.morse_index)


def slope(rank: int, degree: int) -> Fraction:
    if rank < 1:
        raise ValueError(f"rank must be >= 1, got {rank}")
    return Fraction(degree, rank)


def is_admissible_chain(ctx, t: VHSType) -> bool:
    """Whether a stable fixed point of type `t` can exist.

    Checks that every link L_i -> L_{i+1} (x) omega has nonnegative degree,
    so a nonzero map is possible, and that each phi-invariant tail
    L_k + ... + L_n has slope strictly below the total slope.
    """
    ctx = _ctx(ctx)
    ctx.require_hyperbolic("is_admissible_chain")
    if t.length == 1:
        # zero-Higgs locus; stability of the bundle itself is assumed
        return True
    if not t.is_line_chain():
        raise UnsupportedType(f"admissibility is only decided for line-bundle chains, got {t}")
    K = ctx.canonical_degree
    ds = t.degrees
    if any(ds[i + 1] - ds[i] + K < 0 for i in range(len(ds) - 1)):
        return False
    total = slope(t.rank, t.degree)
    for k in range(1, len(ds)):
        tail = ds[k:]
        if slope(len(tail), sum(tail)) >= total:
            return False
    return True


def morse_index(ctx, t: VHSType) -> int:
    """Morse index of the fixed component of type `t`.

    Depends on ranks and degrees only:

        (4g-4) [n>2] sum_{j >= i+2} r_i r_j
          - 2 [n>1] sum_i ( r_i d_{i+1} - r_{i+1} d_i + (1-g) r_i r_{i+1} )
    """
    ctx = _ctx(ctx)
    ctx.require_hyperbolic("morse_index")
    g = ctx.genus
    r, d, n = t.ranks, t.degrees, t.length
    beta = 0
    if n > 2:
        beta += (4 * g - 4) * sum(
            r[i] * r[j] for i in range(n - 2) for j in range(i + 2, n)
        )
    if n > 1:
        beta -= 2 * sum(
            (r[i] * d[i + 1] - r[i + 1] * d[i]) + (1 - g) * r[i] * r[i + 1]
            for i in range(n - 1)
        )
    return beta


def enumerate_rank2_fixed_types(ctx, d: int) -> list[VHSType]:
    """Fixed-point types in rank 2, degree 1.

    The zero-Higgs type (2; 1) first, then the chains (1,1; m, 1-m) for
    1 <= m <= g-1.
    """
    ctx = _ctx(ctx)
    ctx.require_hyperbolic("rank-2 fixed points")
    if d != 1:
        raise UnsupportedDegree(f"rank-2 enumeration is normalized to degree 1, got {d}")
    types = [VHSType((2,), (1,))]
    types += [VHSType((1, 1), (m, 1 - m)) for m in range(1, ctx.genus)]
    return types


def enumerate_line_chains(ctx, r: int, d: int) -> list[VHSType]:
    """All admissible chains of r line bundles with total degree d.

    Sorted by degree vector.  The search box is finite: tails bound each
    degree from above, and the link condition bounds the head from below.
    """
    ctx = _ctx(ctx)
    ctx.require_hyperbolic("line chains")
    if r < 2:
        raise ValueError(f"a line chain needs length >= 2, got {r}")
    K = ctx.canonical_degree
    n = r
    found: list[VHSType] = []

    def fill(k: int, tail: list[int], tail_sum: int) -> None:
        # tail holds d_{k+1..n}; choose d_k (1-indexed)
        if k == 1:
            d1 = d - tail_sum
            if d1 <= tail[0] + K:
                found.append(VHSType((1,) * n, (d1, *tail)))
            return
        width = n - k + 1
        # n * (d_k + tail_sum) < width * d
        hi = (width * d - n * tail_sum - 1) // n
        if tail:
            hi = min(hi, tail[0] + K)
        # heads d_1..d_{k-1} each <= d_k + (k-i) K
        lo = -((-(d - tail_sum - K * k * (k - 1) // 2)) // k)
        for dk in range(lo, hi + 1):
            fill(k - 1, [dk, *tail], tail_sum + dk)

    fill(n, [], 0)
    found.sort(key=lambda t: t.degrees)
    return [t for t in found if is_admissible_chain(ctx, t)]

