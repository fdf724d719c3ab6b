import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy import special
from matspec.errors import DomainError
from matspec.series.operators import annihilation_residual
from matspec.special.young import (young_Y, young_series, bessel_J_matrix, young_expansion, young_ode_residual,
                                   reduced_operator, young_W_series, young_W_params, EXPANSIONS)
from matspec.special.hyper import eval_pFq
from matspec.special.gamma_beta import matrix_gamma, reciprocal_gamma
from matspec.matrix.core import matrix_power
from matspec.matrix.family import commuting_family
from matspec.series.formal import MatrixPowerSeries


@pytest.mark.parametrize("x", (0.1, 1.0, 2.5, 6.0))
def test_closed_forms(x):
    assert_allclose(young_Y(0.0, x)[0, 0], np.cos(x), rtol=1e-12, atol=1e-14)
    assert_allclose(young_Y(1.0, x)[0, 0], np.sin(x), rtol=1e-12, atol=1e-14)


def test_forms_agree(family):
    a = family.members[0]
    for x in (0.3, 1.7):
        assert_allclose(young_Y(a, x, form="gamma-sum"), young_Y(a, x), rtol=1e-11, atol=1e-13)


def test_series_evaluation(family):
    a = family.members[1]
    assert_allclose(young_series(a, 25).evaluate(0.9), young_Y(a, 0.9), rtol=1e-12, atol=1e-14)


def test_argument_must_be_positive():
    with pytest.raises(DomainError):
        young_Y(0.5, -1.0)
    with pytest.raises(ValueError):
        young_Y(0.5, 1.0, form="other")


@pytest.mark.parametrize("nu x".split(), ((0.0, 1.0), (0.5, 2.2), (1.7, 0.4)))
def test_bessel_scalar_reduction(nu, x):
    assert_allclose(bessel_J_matrix(nu, x)[0, 0], special.jv(nu, x), rtol=1e-12)


def test_w_factor(family):
    a = family.members[2]
    x = 1.1
    eye = np.eye(family.dim)
    w = eval_pFq(young_W_params(a), -x * x / 4).value
    assert_allclose(matrix_power(x, a) @ reciprocal_gamma(a + eye) @ w, young_Y(a, x), rtol=1e-12, atol=1e-14)
    assert_allclose(young_W_series(a, 20).evaluate(x), w, rtol=1e-12)


@pytest.mark.parametrize("variant", EXPANSIONS)
def test_expansions_converge(variant, family):
    result = young_expansion(variant, family.members[0], 1.0, k_max=20)
    assert result.error < 1e-6
    assert result.terms == 21


@pytest.mark.parametrize("variant", ("bessel-even", "young-to-bessel-odd"))
def test_printed_expansions_miss(variant):
    assert young_expansion(variant, 0.6, 1.5, k_max=20, printed=True).error > 1e-3


def test_expansion_domain():
    with pytest.raises(DomainError):
        young_expansion("bessel-odd", 0.5, 4.5)


@pytest.mark.parametrize("form", ("prose", "scaled"))
def test_ode_annihilates_closed_form(form):
    assert young_ode_residual(0.0, k_order=30, form=form).residual < 1e-10


@pytest.mark.parametrize("form", ("prose", "scaled"))
def test_ode_annihilates_matrix_young(form, rng):
    a = commuting_family(rng, 2, count=1).members[0]
    assert young_ode_residual(a, form=form).residual < 1e-10


def test_reduced_equation(family):
    a = family.members[0]
    eye = np.eye(family.dim)
    w = young_series(a, 20)
    w = MatrixPowerSeries(np.einsum("ij,kjl->kil", matrix_gamma(a + eye), w.coeffs))
    assert annihilation_residual(reduced_operator(a), w.truncate(35)).residual < 1e-10
