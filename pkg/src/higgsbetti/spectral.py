"""Invariants of a generic spectral curve of the Hitchin fibration."""

from __future__ import annotations

from dataclasses import dataclass

from .curve import _ctx, _check_rank, hitchin_base_dim


@dataclass(frozen=True)
class SpectralData:
    rank: int
    genus: int
    spectral_genus: int
    line_degree: int
    base_dim: int
    fibre_dim: int


def _require(ctx, r):
    ctx = _ctx(ctx)
    _check_rank(r)
    # rank 1: the spectral curve is X itself, meaningful for any g >= 1
    if r >= 2:
        ctx.require_hyperbolic("spectral curves of rank >= 2")
    return ctx


def spectral_genus(ctx, r: int) -> int:
    """Genus of a smooth r-sheeted spectral cover, r^2 (g - 1) + 1.

    Riemann-Hurwitz with branch divisor the discriminant of the
    characteristic polynomial, of degree r(r-1)(2g-2).
    """
    ctx = _require(ctx, r)
    return r * r * (ctx.genus - 1) + 1


def spectral_line_degree(ctx, r: int, d: int) -> int:
    """Degree of the eigen-line bundle whose direct image has degree d."""
    ctx = _require(ctx, r)
    gt = spectral_genus(ctx, r)
    return d - (1 - gt) + r * (1 - ctx.genus)


def spectral_report(ctx, r: int, d: int) -> SpectralData:
    ctx = _require(ctx, r)
    gt = spectral_genus(ctx, r)
    data = SpectralData(
        rank=r,
        genus=ctx.genus,
        spectral_genus=gt,
        line_degree=spectral_line_degree(ctx, r, d),
        base_dim=hitchin_base_dim(ctx, r),
        # generic fibre is Jac^{d'} of the spectral curve
        fibre_dim=gt,
    )
    assert data.fibre_dim == data.base_dim
    return data
