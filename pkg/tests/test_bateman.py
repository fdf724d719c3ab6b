from math import factorial
import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy import special
from matspec.errors import SingularShift, BranchCut, NonCommuting
from matspec.special.bateman import (BatemanParams, bateman_B, bateman_J, bateman_series,
                                     bateman_coefficients, hyper_bessel_J, laguerre_L)
from matspec.special.hyper import HyperParams, eval_pFq


def scalar_bateman(n, a, b, z):
    return sum(special.poch(-n, k) / (special.poch(a + 1, k) * special.poch(b + 1, k) * factorial(k)) * z ** k
               for k in range(n + 1))


def test_low_degrees(family):
    a, b = family.members[:2]
    eye = np.eye(family.dim)
    params = BatemanParams(a, b)
    z = 0.8 - 0.3j
    assert_allclose(bateman_B(0, params, z), eye)
    expected = eye - z * np.linalg.inv((a + eye) @ (b + eye))
    assert_allclose(bateman_B(1, params, z), expected, rtol=1e-12, atol=1e-14)


@pytest.mark.parametrize("n a b z".split(), ((3, 0.0, 0.0, 1.5), (5, 0.4, 1.7, -2.0), (8, 1.3, 0.2, 0.5 + 1j)))
def test_scalar_reduction(n, a, b, z):
    assert_allclose(bateman_B(n, BatemanParams(a, b), z)[0, 0], scalar_bateman(n, a, b, z), rtol=1e-12)


def test_terminating_1f2(family):
    a, b = family.members[:2]
    eye = np.eye(family.dim)
    n, z = 4, 1.1
    series = eval_pFq(HyperParams((-n * eye,), (a + eye, b + eye)), z).value
    assert_allclose(bateman_B(n, BatemanParams(a, b), z), series, rtol=1e-11, atol=1e-13)


def test_series_matches_coefficients(family):
    params = BatemanParams(*family.members[:2])
    s = bateman_series(3, params, stop=7)
    assert s.stop == 7
    coeffs = bateman_coefficients(3, params)
    for k in range(4):
        assert_allclose(s.coefficient(k), coeffs[k])
    assert_allclose(s.coefficient(5), np.zeros((family.dim, family.dim)))


def test_singular_shift():
    with pytest.raises(SingularShift):
        bateman_B(3, BatemanParams(-2.0, 0.5), 1.0)


def test_params_must_commute():
    with pytest.raises(NonCommuting):
        BatemanParams([[1.0, 1.0], [0.0, 2.0]], [[1.0, 0.0], [1.0, 2.0]])


def test_shifted_params(family):
    params = BatemanParams(*family.members[:2]).shifted(1, 2)
    assert_allclose(params.A, family.members[0] + np.eye(family.dim))
    assert_allclose(params.B, family.members[1] + 2 * np.eye(family.dim))


def test_bateman_j_scalar():
    n, a, b, x = 2, 0.5, 0.8, 0.9
    beta = b + a / 2
    expected = special.gamma(beta + n + 1) / (factorial(n) * special.gamma(a + 1) * special.gamma(beta + 1)) \
        * x ** a * scalar_bateman(n, a, beta, x * x)
    assert_allclose(bateman_J(n, BatemanParams(a, b), x)[0, 0], expected, rtol=1e-12)


def test_bateman_j_branch_cut():
    with pytest.raises(BranchCut):
        bateman_J(1, BatemanParams(0.5, 0.5), -1.0)


@pytest.mark.parametrize("a b x".split(), ((0.0, 0.0, 1.0), (0.5, 1.2, 2.5), (1.5, 0.3, 0.7)))
def test_hyper_bessel_scalar(a, b, x):
    expected = sum((-1) ** k * (x / 3) ** (a + b + 3 * k)
                   / (factorial(k) * special.gamma(a + k + 1) * special.gamma(b + k + 1)) for k in range(40))
    assert_allclose(hyper_bessel_J(a, b, x)[0, 0], expected, rtol=1e-12)


@pytest.mark.parametrize("n alpha x".split(), ((0, 0.0, 1.0), (3, 0.0, 2.5), (5, 0.7, 1.3), (6, 2.4, 4.0)))
def test_laguerre_scalar_reduction(n, alpha, x):
    assert_allclose(laguerre_L(n, alpha, x)[0, 0], special.eval_genlaguerre(n, alpha, x), rtol=1e-11)


def test_laguerre_is_bateman_limit(family):
    a = family.members[0]
    eye = np.eye(family.dim)
    n, x = 3, 0.6
    # L_n^(A)(x) = (A+I)_n / n! 1F1(-n; A+I; x)
    rising = (a + eye) @ (a + 2 * eye) @ (a + 3 * eye)
    series = eval_pFq(HyperParams((-n * eye,), (a + eye,)), x).value
    assert_allclose(laguerre_L(n, a, x), rising @ series / factorial(n), rtol=1e-10, atol=1e-12)
