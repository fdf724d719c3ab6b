"""
Bateman-type matrix polynomials and their companions.

    B_n^{A,B}(z) = sum_{k<=n} (-n)_k / k! [(A+I)_k]^-1 [(B+I)_k]^-1 z^k
    J_n^{A,B}(x) = Gamma(A/2 + B + (n+1)I) / n! Gamma^-1(A+I) Gamma^-1(A/2 + B + I)
                   x^A B_n^{A, B + A/2}(x^2)

plus the hyper-Bessel function J_{A,B} and the matrix Laguerre polynomials
used by the generating-function and multiplication formulas.
"""

import logging
from dataclasses import dataclass
from math import factorial
import numpy as np
from matspec.errors import SingularShift
from matspec.matrix.core import (as_matrix, assert_commuting, check_invertible,
                                 principal_power, identity_like)
from matspec.special.gamma_beta import matrix_gamma, reciprocal_gamma
from matspec.special.hyper import HyperParams, HyperFunction, SeriesControl
from matspec.series.builders import polynomial_series

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class BatemanParams:
    """
    Commuting parameter matrices (A, B) of the Bateman family.
    Scalars are promoted against the other parameter.
    """
    A: np.ndarray
    B: np.ndarray

    def __post_init__(self):
        dims = [np.shape(m)[0] for m in (self.A, self.B) if np.ndim(m) == 2]
        dim = dims[0] if dims else 1
        a, b = as_matrix(self.A, dim=dim), as_matrix(self.B, dim=dim)
        assert_commuting([a, b], what="Bateman parameters")
        object.__setattr__(self, "A", a)
        object.__setattr__(self, "B", b)

    @property
    def dim(self):
        return self.A.shape[0]

    def shifted(self, da=0, db=0):
        """ Parameters (A + da I, B + db I) """
        eye = identity_like(self.A)
        return BatemanParams(self.A + da * eye, self.B + db * eye)


def _shift_factor(m, j, what):
    shifted = m + j * identity_like(m)
    check_invertible(shifted, SingularShift, what=f"{what} + {j}I")
    return shifted


def bateman_coefficients(n, params):
    """
    Polynomial coefficients of B_n^{A,B} (lowest degree first), built by the
    term ratio (k - n) / (k + 1) [(A + (k+1)I)(B + (k+1)I)]^-1.
    """
    if n < 0:
        raise ValueError(f"Polynomial degree must be non-negative, got {n}")
    eye = identity_like(params.A)
    coeffs = [eye]
    for k in range(n):
        a = _shift_factor(params.A, k + 1, "A")
        b = _shift_factor(params.B, k + 1, "B")
        nxt = coeffs[-1] * ((k - n) / (k + 1))
        coeffs.append(np.linalg.solve(a @ b, nxt))
    return coeffs


def bateman_B(n, params, z):
    """
    B_n^{A,B}(z), a degree-n matrix polynomial in complex z.

    Raises:
        SingularShift if A + (k+1)I or B + (k+1)I is singular for some k < n
    """
    z = complex(z)
    return sum(c * z ** k for k, c in enumerate(bateman_coefficients(n, params)))


def bateman_series(n, params, stop=None):
    """ B_n^{A,B} as an (exact) MatrixPowerSeries, zero-padded to 'stop' """
    coeffs = bateman_coefficients(n, params)
    return polynomial_series(coeffs, stop or n + 1)


def bateman_J(n, params, x):
    """
    J_n^{A,B}(x) through the Bateman polynomial of (A, B + A/2) at x^2.
    x^A is taken on the principal branch.
    """
    beta = params.B + 0.5 * params.A
    eye = identity_like(params.A)
    front = (matrix_gamma(beta + (n + 1) * eye) / factorial(n)) \
        @ reciprocal_gamma(params.A + eye) @ reciprocal_gamma(beta + eye)
    x = complex(x)
    return front @ principal_power(x, params.A) @ bateman_B(n, BatemanParams(params.A, beta), x * x)


def hyper_bessel_J(A, B, x, ctrl=None):
    """
    J_{A,B}(x) = Gamma^-1(A+I) Gamma^-1(B+I) (x/3)^(A+B) 0F2(-; A+I, B+I; -(x/3)^3)
    for complex x off the branch cut of (x/3)^(A+B).
    """
    a, b = as_matrix(A), as_matrix(B, dim=as_matrix(A).shape[0])
    eye = identity_like(a)
    x = complex(x)
    series = HyperFunction(HyperParams((), (a + eye, b + eye)), ctrl or SeriesControl())
    return reciprocal_gamma(a + eye) @ reciprocal_gamma(b + eye) \
        @ principal_power(x / 3, a + b) @ series(-(x / 3) ** 3)


def laguerre_L(n, A, x):
    """
    Matrix Laguerre polynomial
        L_n^(A)(x) = sum_k (-1)^k / (k! (n-k)!) (A+I)_n [(A+I)_k]^-1 x^k

    (A+I)_n [(A+I)_k]^-1 is formed as the product (A+(k+1)I)...(A+nI).
    """
    a = as_matrix(A)
    eye = identity_like(a)
    for j in range(1, n + 1):
        _shift_factor(a, j, "A")
    x = complex(x)
    total = np.zeros_like(eye)
    for k in range(n + 1):
        tail = eye
        for j in range(k + 1, n + 1):
            tail = tail @ (a + j * eye)
        total = total + ((-1) ** k / (factorial(k) * factorial(n - k))) * tail * x ** k
    return total
