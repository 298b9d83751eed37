"""Exact topological invariants of moduli spaces of Higgs bundles on a curve."""

from .betti import (
    BettiReport,
    Flavor,
    ModuliSpec,
    higgs_poincare,
    jacobian_poincare,
    stable_rank2_fixed_det_poincare,
)
from .curve import CurveContext, hitchin_base_dim, moduli_dim, pluricanonical_dim, stable_bundles_dim
from .errors import (
    HiggsError,
    InexactDivision,
    NonCoprime,
    UnsupportedDegree,
    UnsupportedGenus,
    UnsupportedRank,
    UnsupportedType,
)
from .polyalg import IntPolynomial, poly_add, poly_exact_div, poly_mul, poly_pow, sym_series_coeff
from .spectral import SpectralData, spectral_genus, spectral_line_degree, spectral_report
from .vhs import (
    FixedComponentReport,
    VHSType,
    enumerate_line_chains,
    enumerate_rank2_fixed_types,
    is_admissible_chain,
    morse_index,
    slope,
)

__version__ = "0.1.0"
