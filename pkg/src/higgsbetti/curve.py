"""Riemann-Roch counts on a smooth projective curve of genus g.

Only powers of the canonical bundle are ever needed, so sections are counted
with the closed-form answers rather than a general divisor machinery.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnsupportedGenus


@dataclass(frozen=True)
class CurveContext:
    genus: int

    def __post_init__(self):
        if not isinstance(self.genus, int) or self.genus < 1:
            raise UnsupportedGenus(f"genus must be an integer >= 1, got {self.genus!r}")

    @property
    def canonical_degree(self) -> int:
        return 2 * self.genus - 2

    def require_hyperbolic(self, what: str = "this operation") -> None:
        if self.genus < 2:
            raise UnsupportedGenus(f"{what} requires genus >= 2, got {self.genus}")


def _ctx(ctx) -> CurveContext:
    return ctx if isinstance(ctx, CurveContext) else CurveContext(ctx)


def _check_rank(r: int) -> None:
    if r < 1:
        raise ValueError(f"rank must be >= 1, got {r}")


def pluricanonical_dim(ctx, i: int) -> int:
    """h^0(X, omega^i) for i >= 0 on a curve of genus >= 2."""
    ctx = _ctx(ctx)
    ctx.require_hyperbolic("pluricanonical_dim")
    if i < 0:
        raise ValueError(f"i must be >= 0, got {i}")
    g = ctx.genus
    if i == 0:
        return 1
    if i == 1:
        return g
    return (2 * i - 1) * (g - 1)


def hitchin_base_dim(ctx, r: int) -> int:
    """Dimension of the Hitchin base, 1 + r^2 (g - 1).

    Rank 1 is allowed in genus 1, where the base is H^0(omega) = C.
    """
    ctx = _ctx(ctx)
    _check_rank(r)
    if r >= 2:
        ctx.require_hyperbolic("rank >= 2")
    return 1 + r * r * (ctx.genus - 1)


def moduli_dim(ctx, r: int) -> int:
    return 2 * hitchin_base_dim(ctx, r)


def stable_bundles_dim(ctx, r: int) -> int:
    """Dimension of the moduli space of stable bundles, h^1(End E)."""
    ctx = _ctx(ctx)
    _check_rank(r)
    if r >= 2:
        ctx.require_hyperbolic("rank >= 2")
    return 1 + r * r * (ctx.genus - 1)
