import math
import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy import special
from matspec.errors import (SingularityUnresolved, TailBoundViolation, DivergentIntegral,
                            NonIntegerPowerAmbiguity, ExponentMismatch, QuadratureError)
from matspec.matrix.core import principal_power
from matspec.special.gamma_beta import matrix_beta, matrix_gamma
from matspec.series.formal import MatrixPowerSeries
from matspec.transforms.quadrature import gauss_legendre, gauss_jacobi, truncated_exponential, integrate_matrix_weight
from matspec.transforms.integrals import (beta_transform, laplace_transform, erdelyi_kober_left,
                                          erdelyi_kober_right, rl_integral, rl_integral_left, rl_integral_right)
from matspec.transforms.fractional import monomial_factor, fractional_derivative_formal


def one(dim=1):
    eye = np.eye(dim)
    return lambda t: eye


def test_gauss_legendre_moments():
    rule = gauss_legendre(10, (1.0, 3.0))
    assert_allclose(rule.integrate(rule.nodes ** 3), (3.0 ** 4 - 1) / 4, rtol=1e-14)


def test_gauss_jacobi_weight_integral():
    rule = gauss_jacobi(20, 0.5, -0.5)
    assert_allclose(rule.integrate(np.ones(rule.n)), np.pi / 2, rtol=1e-13)


def test_gauss_jacobi_rejects_non_integrable_weight():
    with pytest.raises(SingularityUnresolved):
        gauss_jacobi(5, -1.0, 0.0)


def test_truncated_exponential_rule():
    rule = truncated_exponential(20, 40.0, rate=2.0)
    assert_allclose(rule.integrate(np.ones(rule.n)), (1 - np.exp(-80.0)) / 2, rtol=1e-12)


def test_matrix_weight_with_diagonal_exponent():
    result = integrate_matrix_weight(one(2), left_exp=np.diag([-0.5, 0.5]), right_exp=0.0)
    assert_allclose(result.value, np.diag([2.0, 2.0 / 3.0]), rtol=1e-12)
    assert result.error < 1e-12


def test_matrix_weight_complex_exponent():
    value = integrate_matrix_weight(one(), left_exp=0.5j, right_exp=0.0).value[0, 0]
    # t^(ib) is not smooth at t = 0
    assert_allclose(value, 1 / (1 + 0.5j), rtol=1e-3)


def test_matrix_weight_rejects_singular_exponent():
    with pytest.raises(SingularityUnresolved):
        integrate_matrix_weight(one(), left_exp=-1.2, right_exp=0.0)


def test_beta_transform_of_identity_is_beta(family):
    a, b = family.members[:2]
    assert_allclose(beta_transform(one(family.dim), a, b), matrix_beta(a, b), rtol=1e-8, atol=1e-10)


def test_beta_transform_of_monomial(family):
    a, b = family.members[:2]
    eye = np.eye(family.dim)
    value = beta_transform(lambda t: t ** 2 * eye, a, b)
    assert_allclose(value, matrix_beta(a + 2 * eye, b), rtol=1e-8, atol=1e-10)


@pytest.mark.parametrize("s", (2.0, 1.5 + 1.0j))
def test_laplace_of_constant(s):
    assert_allclose(laplace_transform(one(), s)[0, 0], 1 / s, rtol=1e-8)


def test_laplace_with_power_factor(family):
    p = family.members[0] - 0.5 * np.eye(family.dim)
    s = 1.3 + 0.4j
    eye = np.eye(family.dim)
    expected = matrix_gamma(p + eye) @ principal_power(s, -(p + eye))
    assert_allclose(laplace_transform(one(family.dim), s, exponent=p), expected, rtol=1e-6, atol=1e-8)


def test_laplace_of_exponential():
    value = laplace_transform(lambda t: np.exp(0.5 * t) * np.eye(1), 2.0, growth=0.5)
    assert_allclose(value[0, 0], 1 / 1.5, rtol=1e-8)


def test_laplace_growth_violation():
    with pytest.raises(TailBoundViolation):
        laplace_transform(one(), 0.5, growth=1.0)


def test_erdelyi_kober_left_of_constant():
    assert_allclose(erdelyi_kober_left(one(), 1.0, 1.0, 1.3)[0, 0], 0.5, rtol=1e-12)


def test_erdelyi_kober_left_of_square():
    x, alpha, eta = 1.7, 0.5, 1.2
    value = erdelyi_kober_left(lambda t: t ** 2 * np.eye(1), alpha, eta, x)[0, 0]
    assert_allclose(value, special.gamma(4.2) / special.gamma(4.7) * x ** 2, rtol=1e-10)


@pytest.mark.parametrize("k", (0, 1, 2))
def test_erdelyi_kober_right_monomials(k):
    x, alpha, eta = 1.5, 0.5, 2.8
    value = erdelyi_kober_right(lambda t: t ** k * np.eye(1), alpha, eta, x, growth_order=k)[0, 0]
    assert_allclose(value, special.gamma(eta - k) / special.gamma(alpha + eta - k) * x ** k, rtol=1e-8)
    assert_allclose(monomial_factor("erdelyi-kober-right", k, alpha, eta),
                    special.gamma(eta - k) / special.gamma(alpha + eta - k))


def test_erdelyi_kober_right_divergence():
    with pytest.raises(DivergentIntegral):
        erdelyi_kober_right(lambda t: t ** 3 * np.eye(1), 0.5, 2.0, 1.0, growth_order=3)
    with pytest.raises(DivergentIntegral):
        erdelyi_kober_right(lambda t: t ** 3 * np.eye(1), 0.5, 2.0, 1.0, growth_order=0)


def test_riemann_liouville_integrals_of_constant():
    alpha = 0.6
    assert_allclose(rl_integral(one(), alpha, 2.0)[0, 0], 2.0 ** alpha / special.gamma(alpha + 1), rtol=1e-12)
    assert_allclose(rl_integral_left(one(), alpha, -0.5, 1.0)[0, 0],
                    1.5 ** alpha / special.gamma(alpha + 1), rtol=1e-12)
    assert_allclose(rl_integral_right(one(), alpha, 1.0, 2.2)[0, 0],
                    1.2 ** alpha / special.gamma(alpha + 1), rtol=1e-12)


def test_riemann_liouville_monomial_rule():
    alpha, x, k = 0.35, 1.4, 3
    value = rl_integral(lambda t: t ** k * np.eye(1), alpha, x)[0, 0]
    assert_allclose(value, monomial_factor("rl-integral", k, alpha) * x ** (k + alpha), rtol=1e-10)


def test_rl_argument_checks():
    with pytest.raises(QuadratureError):
        rl_integral_left(one(), 0.5, 1.0, 0.5)
    with pytest.raises(QuadratureError):
        rl_integral(one(), -0.5, 1.0)


def test_formal_derivative_offsets_and_factors():
    s = MatrixPowerSeries([1.0, 1.0, 1.0])
    image = fractional_derivative_formal(s, 0.5, "rl-left")
    assert_allclose(image.offset, -0.5 * np.eye(1))
    assert_allclose(image.coefficient(2)[0, 0], special.gamma(3) / special.gamma(2.5))
    integral = fractional_derivative_formal(s, 0.5, "weyl-integral")
    assert_allclose(integral.offset, 0.5 * np.eye(1))
    assert_allclose(integral.coefficient(2)[0, 0], 1 / (0.5 * 1.5))


def test_weyl_branch():
    assert_allclose(monomial_factor("weyl", 1, 0.5), np.exp(0.5j * np.pi) / special.gamma(1.5))
    assert_allclose(monomial_factor("weyl", 2, 1.0), -2.0)
    with pytest.raises(NonIntegerPowerAmbiguity):
        monomial_factor("weyl", 1, 0.5, branch=None)


def test_formal_derivative_rejects_offset_series():
    with pytest.raises(ExponentMismatch):
        fractional_derivative_formal(MatrixPowerSeries([1.0], offset=0.5), 0.5, "rl-left")
    with pytest.raises(ValueError):
        fractional_derivative_formal(MatrixPowerSeries([1.0]), 0.5, "unknown")


@pytest.mark.parametrize("a", np.linspace(-0.9, 3.0, 14))
def test_gauss_jacobi_validates_at_doubled_order(a):
    for b in np.linspace(-0.9, 3.0, 14):
        rule = gauss_jacobi(80, float(a), float(b))
        assert_allclose(rule.integrate(rule.nodes), special.beta(a + 1, b + 2), rtol=1e-10)


def test_laplace_integrand_overflow_is_a_tail_violation():
    with pytest.raises(TailBoundViolation):
        laplace_transform(lambda t: math.exp(t * t) * np.eye(1), 1.0, growth=0.5)


def test_laplace_cutoff_stops_where_the_exponential_underflows():
    with pytest.raises(TailBoundViolation, match="largest cutoff"):
        laplace_transform(lambda t: np.exp(0.99 * t) * np.eye(1), 1.0, growth=0.5)
