import pytest

from higgsbetti import (
    Flavor,
    IntPolynomial,
    ModuliSpec,
    NonCoprime,
    UnsupportedGenus,
    UnsupportedRank,
    higgs_poincare,
    jacobian_poincare,
    morse_index,
    stable_rank2_fixed_det_poincare,
    sym_series_coeff,
)
from higgsbetti.betti import assemble
from higgsbetti.vhs import EXTRAPOLATED, PAPER_VERIFIED, VHSType

from oracles import Y, expand_coeffs

P = IntPolynomial
HEADLINE = [1, 4, 7, 12, 25, 40, 47, 44, 30, 12, 2]


def test_jacobian():
    assert jacobian_poincare(1) == P((1, 2, 1))
    assert jacobian_poincare(2) == P((1, 4, 6, 4, 1))


@pytest.mark.parametrize("g", range(1, 9))
def test_jacobian_binomial(g):
    assert jacobian_poincare(g).to_list() == expand_coeffs((1 + Y) ** (2 * g))


def test_atiyah_bott_genus_two():
    assert stable_rank2_fixed_det_poincare(2) == P((1, 0, 1, 4, 1, 0, 1))
    num = (1 + Y**3) ** 4 - Y**4 * (1 + Y) ** 4
    assert expand_coeffs(num) == [1, 0, 0, 4, -1, -4, 0, -4, -1, 4, 0, 0, 1]


@pytest.mark.parametrize("g", range(2, 9))
def test_atiyah_bott_structure(g):
    p = stable_rank2_fixed_det_poincare(g)
    assert p[0] == 1 and p(0) == 1
    assert p.degree == 6 * g - 6
    assert all(c >= 0 for c in p)
    # sympy cross-check: quotient times denominator recovers numerator
    prod = expand_coeffs(sum(c * Y**k for k, c in enumerate(p)) * (1 - Y**2) * (1 - Y**4))
    num = expand_coeffs((1 + Y**3) ** (2 * g) - Y ** (2 * g) * (1 + Y) ** (2 * g))
    assert prod == num


def test_atiyah_bott_rejects_genus_one():
    with pytest.raises(UnsupportedGenus):
        stable_rank2_fixed_det_poincare(1)


@pytest.mark.parametrize("g", range(1, 9))
@pytest.mark.parametrize("d", range(-3, 4))
def test_rank_one(g, d):
    rep = higgs_poincare(ModuliSpec(g, 1, d))
    assert rep.total == P.binomial_power(2 * g)
    assert len(rep.components) == 1
    assert rep.components[0].morse_index == 0
    assert rep.provenance_flag == PAPER_VERIFIED


def test_rank_two_genus_two_gl():
    rep = higgs_poincare(ModuliSpec(2, 2, 1, Flavor.GL))
    assert rep.total.to_list() == HEADLINE
    want = expand_coeffs((1 + Y) ** 4 * (1 + Y**2 + 4 * Y**3 + 2 * Y**4 + 4 * Y**5 + 2 * Y**6))
    assert rep.total.to_list() == want
    jac, rest = rep.factorization
    assert jac == P.binomial_power(4)
    assert rest == P((1, 0, 1, 4, 2, 4, 2))
    assert [c.morse_index for c in rep.components] == [0, 4]
    assert rep.components[1].component_poly == P((1, 4, 1))
    assert rep.provenance_flag == PAPER_VERIFIED


def test_rank_two_pgl_genus_three():
    rep = higgs_poincare(ModuliSpec(3, 2, 1, "PGL"))
    want = (
        stable_rank2_fixed_det_poincare(3)
        + sym_series_coeff(3, 3).shift(6)
        + sym_series_coeff(3, 1).shift(10)
    )
    assert rep.total == want
    assert rep.factorization is None
    assert rep.provenance_flag == EXTRAPOLATED
    assert all(c.provenance_flag == EXTRAPOLATED for c in rep.components)


def test_sl_flavor_is_invariant_part():
    sl = higgs_poincare(ModuliSpec(2, 2, 1, Flavor.SL_fixed_det))
    pgl = higgs_poincare(ModuliSpec(2, 2, 1, Flavor.PGL_quotient))
    assert sl.total == pgl.total
    assert sl.notes


@pytest.mark.parametrize("d", [-5, -1, 3, 7])
def test_odd_degree_independence(d):
    base = higgs_poincare(ModuliSpec(3, 2, 1))
    rep = higgs_poincare(ModuliSpec(3, 2, d))
    assert rep.total == base.total
    assert all(c.vhs_type.degree == d for c in rep.components)
    assert [c.morse_index for c in rep.components] == [c.morse_index for c in base.components]
    for c in rep.components:
        assert morse_index(3, c.vhs_type) == c.morse_index


@pytest.mark.parametrize("g", range(2, 9))
@pytest.mark.parametrize("flavor", list(Flavor))
def test_rank_two_invariants(g, flavor):
    rep = higgs_poincare(ModuliSpec(g, 2, 1, flavor))
    assert rep.total[0] == 1
    assert all(c >= 0 for c in rep.total)
    assert len(rep.components) == g
    # removing and re-adding one weighted component reproduces the total
    reduced = assemble(rep.components)
    for c in rep.components:
        assert assemble([x for x in rep.components if x is not c]) + c.weighted() == reduced
    if flavor is Flavor.GL:
        assert rep.total == jacobian_poincare(g) * reduced
    else:
        assert rep.total == reduced


def test_errors():
    with pytest.raises(UnsupportedRank):
        higgs_poincare(ModuliSpec(2, 3, 1))
    with pytest.raises(NonCoprime):
        higgs_poincare(ModuliSpec(2, 2, 2))
    with pytest.raises(UnsupportedGenus):
        higgs_poincare(ModuliSpec(1, 2, 1))
    with pytest.raises(ValueError):
        ModuliSpec(2, 2, 1, "SO")


def test_component_descriptions():
    rep = higgs_poincare(ModuliSpec(3, 2, 1))
    assert rep.components[0].vhs_type == VHSType((2,), (1,))
    assert "Sym^3" in rep.components[1].description
    assert "2^6" in rep.components[1].description
