from math import factorial
import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy import special
from matspec.errors import SingularDenominator, Nonconvergence, NonCommuting, DomainError
from matspec.matrix.family import commuting_family
from matspec.special.hyper import (HyperParams, HyperFunction, SeriesControl, eval_pFq,
                                   pFq_coefficients, order_type_estimate)


def test_1f2_unit_parameters_coefficients():
    coeffs = pFq_coefficients(HyperParams((1.0,), (1.0, 1.0)), 6)
    assert_allclose([c[0, 0] for c in coeffs], [1 / factorial(k) ** 2 for k in range(7)], rtol=1e-14)


def test_0f0_is_exponential():
    result = eval_pFq(HyperParams((), (), dim=2), 1.0)
    assert_allclose(result.value, np.e * np.eye(2), rtol=1e-13)
    assert result.n_terms > 10
    assert result.tail_bound < 1e-13


def test_value_at_zero_is_identity(family):
    a, b, c = family.members
    assert_allclose(eval_pFq(HyperParams((a,), (b, c)), 0.0).value, np.eye(family.dim))


def test_equal_parameters_cancel(family):
    a = family.members[0]
    z = 0.7 - 0.2j
    assert_allclose(eval_pFq(HyperParams((a,), (a,)), z).value, np.exp(z) * np.eye(family.dim),
                    rtol=1e-12, atol=1e-13)


@pytest.mark.parametrize("z", (0.3, -0.5, 0.5 + 0.2j))
def test_2f1_logarithm(z):
    value = eval_pFq(HyperParams((1.0, 1.0), (2.0,)), z).value[0, 0]
    assert_allclose(value, -np.log(1 - z) / z, rtol=1e-12)


@pytest.mark.parametrize("a b c z".split(), ((0.5, 1.5, 2.5, 0.8), (1.2, 0.7, 3.1, -2.0)))
def test_scalar_reduction_of_1f2(a, b, c, z):
    expected = sum(special.poch(a, k) / (special.poch(b, k) * special.poch(c, k) * factorial(k)) * z ** k
                   for k in range(60))
    assert_allclose(eval_pFq(HyperParams((a,), (b, c)), z).value[0, 0], expected, rtol=1e-12)


def test_singular_denominator():
    with pytest.raises(SingularDenominator):
        pFq_coefficients(HyperParams((1.0,), (-2.0,)), 5)


def test_divergent_series_reports_nonconvergence():
    with pytest.raises(Nonconvergence):
        eval_pFq(HyperParams((1.0, 1.0), ()), 1.0, SeriesControl(max_terms=50))


def test_non_commuting_parameters():
    with pytest.raises(NonCommuting):
        HyperParams(([[1.0, 1.0], [0.0, 2.0]],), ([[1.0, 0.0], [1.0, 2.0]],))


def test_hyper_function_reuses_coefficients(family):
    params = HyperParams((family.members[0],), (family.members[1], family.members[2]))
    fn = HyperFunction(params)
    for z in (0.1, -1.0, 2.0j):
        assert_allclose(fn(z), eval_pFq(params, z).value, rtol=1e-14)
    assert_allclose(fn.coefficient(3), pFq_coefficients(params, 3)[3], rtol=1e-14)


@pytest.mark.parametrize("seed", range(5))
def test_order_and_type_of_1f2(seed):
    rng = np.random.default_rng(seed)
    dim = 1 if seed < 3 else 2
    fam = commuting_family(rng, dim, count=3, low=0.5, high=2.5)
    estimate = order_type_estimate(HyperParams((fam.members[0],), fam.members[1:]), range(100, 501, 50))
    orders = [rho for _, rho in estimate.order_samples]
    assert abs(orders[-1] - 0.5) < 0.1
    assert abs(estimate.type_samples[-1][1] - 2) < 0.5
    assert all(np.diff(orders) < 0)


def test_type_of_exponential():
    estimate = order_type_estimate(HyperParams((), (), dim=1), [500], reference_order=1.0)
    assert abs(estimate.type_samples[-1][1] - 1) < 0.05


def test_order_estimate_needs_entire_function():
    with pytest.raises(DomainError):
        order_type_estimate(HyperParams((1.0, 1.0), ()), [10])


@pytest.mark.parametrize("z", (2500.0, 4.0e4))
def test_large_argument_terms_do_not_overflow(z):
    # 0F1(;1;z) = I_0(2 sqrt(z)); z^s alone leaves the float range long before the terms become small
    value = eval_pFq(HyperParams((), (1.0,)), z).value[0, 0]
    assert np.isfinite(value)
    assert_allclose(value, special.iv(0, 2 * np.sqrt(z)), rtol=1e-11)


def test_large_argument_matrix_parameters(family):
    a, b, c = family.members
    fn = HyperFunction(HyperParams((a,), (b, c)))
    assert np.all(np.isfinite(fn(-900.0)))
    assert np.all(np.isfinite(fn(900.0)))


def test_out_of_range_series_raises_nonconvergence():
    with pytest.raises(Nonconvergence):
        eval_pFq(HyperParams((), (), dim=1), 1000.0)


def test_coefficients_past_the_float_range_are_kept_in_log_scale():
    fn = HyperFunction(HyperParams((), (1.0, 1.0)))
    mantissa, log_scale = fn.scaled_coefficient(200)
    assert_allclose(log_scale, -3 * special.gammaln(201), rtol=1e-12)
    assert_allclose(abs(mantissa[0, 0]), 1.0, rtol=1e-12)
    assert fn.coefficient(200)[0, 0] == 0
