from math import factorial
import numpy as np
import pytest
from hypothesis import given
from hypothesis.strategies import floats, integers
from numpy.testing import assert_allclose
from matspec.errors import ExponentMismatch, ExtractionUnstable, NonCommutingOperator, ShapeMismatch
from matspec.series.formal import MatrixPowerSeries, compare
from matspec.series.operators import Operator, annihilation_residual, rising, theta_shifted
from matspec.series.builders import hyper_series, polynomial_series
from matspec.series.extraction import bivariate_coefficient, contour_coefficients
from matspec.special.hyper import HyperParams, eval_pFq

D, Z, THETA = Operator.derivative, Operator.z, Operator.theta


def exp_series(dim=1, stop=30):
    return MatrixPowerSeries([np.eye(dim) / factorial(k) for k in range(stop)])


def test_coefficients_outside_window():
    s = MatrixPowerSeries(np.ones(3), start=2)
    assert_allclose(s.coefficient(0), [[0.0]])
    assert_allclose(s.coefficient(4), [[1.0]])
    with pytest.raises(ValueError):
        s.coefficient(5)
    assert s.stop == 5 and len(s) == 3


def test_sum_truncates_to_smallest_stop():
    total = MatrixPowerSeries(np.ones(10)) + MatrixPowerSeries(np.ones(4), start=1)
    assert total.start == 0 and total.stop == 5
    assert_allclose(total.coeffs[:, 0, 0], [1, 2, 2, 2, 2])


def test_cauchy_product():
    product = MatrixPowerSeries([1.0, 1.0, 0.0, 0.0]) * MatrixPowerSeries([1.0, -1.0, 0.0, 0.0])
    assert_allclose(product.coeffs[:, 0, 0], [1.0, 0.0, -1.0, 0.0])


def test_product_of_exponentials():
    compare_result = compare(exp_series() * exp_series(), MatrixPowerSeries(
        [2.0 ** k / factorial(k) for k in range(30)]), tol=1e-14)
    assert compare_result.passed


def test_theta_and_derivative_on_monomials():
    m = MatrixPowerSeries.monomial(1, 3, 6)
    assert_allclose(m.theta().coefficient(3), [[3.0]])
    d = m.derivative()
    assert_allclose(d.coefficient(2), [[3.0]])
    assert_allclose(m.derivative(2).coefficient(1), [[6.0]])


def test_theta_with_offset():
    alpha = np.diag([0.5, 1.5])
    s = MatrixPowerSeries([np.eye(2), np.eye(2)], offset=alpha)
    assert_allclose(s.theta().coefficient(1), alpha + np.eye(2))


def test_evaluate_exponential():
    assert_allclose(exp_series(2).evaluate(0.5), np.exp(0.5) * np.eye(2), rtol=1e-14)


def test_offset_mismatch():
    a = MatrixPowerSeries([1.0], offset=0.5)
    b = MatrixPowerSeries([1.0])
    with pytest.raises(ExponentMismatch):
        a + b
    with pytest.raises(ExponentMismatch):
        compare(a, b)


def test_lmul_checks_commutation_with_offset():
    s = MatrixPowerSeries([np.eye(2)], offset=np.diag([0.5, 1.0]))
    with pytest.raises(NonCommutingOperator):
        s.lmul(np.array([[0.0, 1.0], [1.0, 0.0]]))


def test_dimension_mismatch():
    with pytest.raises(ShapeMismatch):
        MatrixPowerSeries(np.ones((2, 2, 2))) + MatrixPowerSeries(np.ones((2, 3, 3)))


@given(floats(min_value=-3, max_value=3), floats(min_value=-3, max_value=3))
def test_offsets_add_in_products(a, b):
    product = MatrixPowerSeries([1.0], offset=a) * MatrixPowerSeries([1.0], offset=b)
    expected = None if a + b == 0 else (a + b) * np.eye(1)
    if expected is None:
        assert product.offset is None or np.allclose(product.offset, 0)
    else:
        assert_allclose(product.offset, expected)


def test_euler_operator_annihilates_monomial():
    result = annihilation_residual(THETA() - 2, MatrixPowerSeries.monomial(1, 2, 6))
    assert result.passed and result.residual == 0.0


def test_derivative_times_z_is_theta_plus_one():
    s = exp_series(stop=12)
    compare_result = compare((D() * Z()).apply(s), (THETA() + 1).apply(s), tol=1e-14)
    assert compare_result.passed


def test_rising_operator():
    image = rising(THETA(), 2).apply(MatrixPowerSeries.monomial(1, 3, 5))
    assert_allclose(image.coefficient(3), [[12.0]])
    shifted = theta_shifted(2.0).apply(MatrixPowerSeries.monomial(1, 1, 3))
    assert_allclose(shifted.coefficient(1), [[3.0]])


def test_operator_power_and_right_scalar():
    op = 2.0 * THETA() ** 2 - THETA()
    image = op.apply(MatrixPowerSeries.monomial(1, 3, 5))
    assert_allclose(image.coefficient(3), [[15.0]])


def test_exponential_ode_residual():
    assert annihilation_residual(D() - 1, exp_series(stop=25)).residual < 1e-15


def test_operator_coefficient_must_commute():
    s = MatrixPowerSeries([np.diag([1.0, 2.0]), np.diag([0.5, 0.1])])
    with pytest.raises(NonCommutingOperator):
        Operator.const(np.array([[0.0, 1.0], [1.0, 0.0]])).apply(s)


def test_hyper_series_matches_evaluation(family):
    a, b, c = family.members
    params = HyperParams((a,), (b, c))
    s = hyper_series(params, 40, scale=-0.5, power=2)
    assert s.stop == 81
    assert_allclose(s.evaluate(0.8), eval_pFq(params, -0.5 * 0.64).value, rtol=1e-12, atol=1e-14)


def test_polynomial_series_padding():
    s = polynomial_series([np.eye(1), 2 * np.eye(1)], stop=5)
    assert s.stop == 5
    assert_allclose(s.coeffs[:, 0, 0], [1, 2, 0, 0, 0])


@pytest.mark.parametrize("z0", (0.5, 2.0, -1.0 + 0.5j))
def test_bivariate_coefficient_of_exponential(z0):
    coeffs = bivariate_coefficient(lambda z, t: np.exp(z * t) * np.eye(2), z0, 6)
    assert_allclose([c[0, 0] for c in coeffs], [z0 ** n / factorial(n) for n in range(7)], rtol=1e-10, atol=1e-14)


def test_extraction_detects_aliasing():
    with pytest.raises(ExtractionUnstable):
        bivariate_coefficient(lambda z, t: np.exp(z * t) * np.eye(1), 50.0, 4, n_points=16)


def test_contour_needs_enough_points():
    with pytest.raises(ValueError):
        contour_coefficients(lambda z, t: np.eye(1), 0.0, 10, n_points=16)


@given(integers(min_value=0, max_value=5), integers(min_value=0, max_value=5))
def test_monomial_products(j, k):
    product = MatrixPowerSeries.monomial(1, j, 12) * MatrixPowerSeries.monomial(1, k, 12)
    assert_allclose(product.coefficient(j + k), [[1.0]])
