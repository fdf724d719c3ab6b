"""
Young's matrix functions

    Y_A(x) = x^A sum_k (-1)^k Gamma^-1(A + (2k+1)I) x^2k
           = x^A Gamma^-1(A+I) 1F2(I; (A+I)/2, (A+2I)/2; -x^2/4)

Bessel matrix functions J_A(x) = Gamma^-1(A+I) (x/2)^A 0F1(-; A+I; -x^2/4),
the four expansions of Y in Bessel functions (and back) and the third order
ODE satisfied by Y_A.
"""

import logging
from dataclasses import dataclass
from math import factorial
import numpy as np
from matspec.errors import Nonconvergence, DomainError
from matspec.matrix.core import as_matrix, identity_like, matrix_power, norm, check_invertible
from matspec.special.gamma_beta import matrix_gamma, reciprocal_gamma, pochhammer_term
from matspec.special.hyper import HyperParams, HyperFunction, SeriesControl
from matspec.series.formal import MatrixPowerSeries
from matspec.series.builders import hyper_series
from matspec.series.operators import Operator, annihilation_residual

logger = logging.getLogger(__name__)

EXPANSIONS = ("bessel-even", "bessel-odd", "young-to-bessel-even", "young-to-bessel-odd")
ODE_FORMS = ("prose", "scaled")


@dataclass(frozen=True, eq=False)
class YoungParams:
    A: np.ndarray

    def __post_init__(self):
        a = as_matrix(self.A)
        eye = identity_like(a)
        check_invertible(0.5 * (a + eye), DomainError, what="matrix (A+I)/2")
        check_invertible(0.5 * (a + 2 * eye), DomainError, what="matrix (A+2I)/2")
        object.__setattr__(self, "A", a)


def _check_x(x):
    x = float(x)
    if not x > 0:
        raise DomainError(f"Young and Bessel matrix functions are evaluated at x > 0, got {x}")
    return x


def young_W_params(a):
    """ Parameters (I; (A+I)/2, (A+2I)/2) of the 1F2 factor of Y_A """
    eye = identity_like(a)
    return HyperParams((eye,), (0.5 * (a + eye), 0.5 * (a + 2 * eye)))


def young_Y(A, x, ctrl=None, form="hypergeometric"):
    """
    Y_A(x) for x > 0.

    Args:
        A:    (matrix-like, YoungParams) Parameter matrix
        x:    (float) Positive real argument
        ctrl: (SeriesControl) Truncation control
        form: (str) 'hypergeometric' (1F2 form) or 'gamma-sum' (reciprocal gamma series)
    """
    a = A.A if isinstance(A, YoungParams) else as_matrix(A)
    x = _check_x(x)
    ctrl = ctrl or SeriesControl()
    eye = identity_like(a)
    if form == "hypergeometric":
        w = HyperFunction(young_W_params(a), ctrl)(-x * x / 4)
        return matrix_power(x, a) @ reciprocal_gamma(a + eye) @ w
    if form != "gamma-sum":
        raise ValueError(f"Unknown Young function form '{form}', expected 'hypergeometric' or 'gamma-sum'")
    total, small_run = np.zeros_like(eye), 0
    for k in range(ctrl.max_terms):
        term = (-1) ** k * reciprocal_gamma(a + (2 * k + 1) * eye) * x ** (2 * k)
        total = total + term
        small_run = small_run + 1 if norm(term) < ctrl.abs_tol else 0
        if small_run >= ctrl.tail_window:
            return matrix_power(x, a) @ total
    raise Nonconvergence(f"Young gamma-sum series at x={x} did not converge in {ctrl.max_terms} terms")


def young_series(A, K):
    """ Y_A as a formal series in x with offset A, exact below exponent 2K + 1 """
    a = as_matrix(A)
    eye = identity_like(a)
    coeffs = np.zeros((2 * K + 1, *a.shape), dtype=complex)
    for k in range(K + 1):
        coeffs[2 * k] = (-1) ** k * reciprocal_gamma(a + (2 * k + 1) * eye)
    return MatrixPowerSeries(coeffs, offset=a)


def bessel_J_matrix(A, x, ctrl=None):
    """ Bessel matrix function J_A(x), x > 0 """
    a = as_matrix(A)
    x = _check_x(x)
    eye = identity_like(a)
    series = HyperFunction(HyperParams((), (a + eye,)), ctrl or SeriesControl())
    return reciprocal_gamma(a + eye) @ matrix_power(x / 2, a) @ series(-x * x / 4)


@dataclass(frozen=True)
class ExpansionResult:
    """
    Partial sum of an expansion, the directly evaluated function it expands,
    their relative distance and the norm of the last retained term.
    """
    value: np.ndarray
    reference: np.ndarray
    error: float
    tail: float
    terms: int


def _inv_rising(a, k):
    return np.linalg.inv(pochhammer_term(a, k))


def _bessel_even_term(a, x, k, printed, ctrl):
    eye = identity_like(a)
    order = 0.5 * (a + 2 * k * eye)
    term = (pochhammer_term(0.5 * (a - eye), k) / factorial(k)) @ _inv_rising(a + eye, 2 * k) \
        @ reciprocal_gamma(a + eye) @ matrix_gamma(0.5 * a + (k + 1) * eye) \
        @ matrix_power(2 * x, order) @ bessel_J_matrix(order, x, ctrl)
    return term * x ** (2 * k) if printed else term


def _bessel_odd_term(a, x, k, ctrl):
    eye = identity_like(a)
    return 0.5 * (pochhammer_term(0.5 * a, k) / factorial(k)) @ _inv_rising(a + eye, 2 * k) \
        @ matrix_power(2 * x, 0.5 * (a + (2 * k + 1) * eye)) @ reciprocal_gamma(a + eye) \
        @ matrix_gamma(0.5 * (a + (2 * k + 1) * eye)) \
        @ bessel_J_matrix(0.5 * (a + (2 * k - 1) * eye), x, ctrl)


def _young_even_term(a, x, k, ctrl):
    eye = identity_like(a)
    return ((-1) ** k / factorial(k)) * matrix_power(2 * x, -0.5 * a) \
        @ pochhammer_term(0.5 * (a - eye), k) @ _inv_rising(a + eye, 2 * k) \
        @ reciprocal_gamma(0.5 * (a + 2 * eye)) @ matrix_gamma(a + (2 * k + 1) * eye) \
        @ young_Y(a + 2 * k * eye, x, ctrl)


def _young_odd_term(a, x, k, printed, ctrl):
    eye = identity_like(a)
    power = -0.5 * a if printed else -0.5 * (a + eye)
    return (2 * (-1) ** k / factorial(k)) * pochhammer_term(0.5 * a, k) @ matrix_power(2 * x, power) \
        @ _inv_rising(a + eye, 2 * k) @ reciprocal_gamma(0.5 * (a + eye)) \
        @ matrix_gamma(a + (2 * k + 1) * eye) @ young_Y(a + 2 * k * eye, x, ctrl)


def young_expansion(variant, A, x, k_max=20, printed=False, ctrl=None):
    """
    Partial sum (k = 0..k_max) of one of the Young/Bessel expansions:

        'bessel-even'          Y_A in J_{(A+2kI)/2}
        'bessel-odd'           Y_A in J_{(A+(2k-1)I)/2}
        'young-to-bessel-even' J_{A/2} in Y_{A+2kI}
        'young-to-bessel-odd'  J_{(A-I)/2} in Y_{A+2kI}

    With printed=True the 'bessel-even' term carries an extra x^2k factor and
    the 'young-to-bessel-odd' term the power (2x)^(-A/2) instead of
    (2x)^(-(A+I)/2); both sums then miss the function they expand.

    Returns:
        ExpansionResult
    """
    if variant not in EXPANSIONS:
        raise ValueError(f"Unknown expansion '{variant}', expected one of {EXPANSIONS}")
    x = _check_x(x)
    if not x < 4:
        raise DomainError(f"Expansions are evaluated for x in (0, 4), got {x}")
    a = as_matrix(A)
    eye = identity_like(a)
    ctrl = ctrl or SeriesControl()
    if variant == "bessel-even":
        term_fn = lambda k: _bessel_even_term(a, x, k, printed, ctrl)
        reference = young_Y(a, x, ctrl)
    elif variant == "bessel-odd":
        term_fn = lambda k: _bessel_odd_term(a, x, k, ctrl)
        reference = young_Y(a, x, ctrl)
    elif variant == "young-to-bessel-even":
        term_fn = lambda k: _young_even_term(a, x, k, ctrl)
        reference = bessel_J_matrix(0.5 * a, x, ctrl)
    else:
        term_fn = lambda k: _young_odd_term(a, x, k, printed, ctrl)
        reference = bessel_J_matrix(0.5 * (a - eye), x, ctrl)

    total, term = np.zeros_like(eye), np.zeros_like(eye)
    for k in range(k_max + 1):
        term = term_fn(k)
        total = total + term
    error = norm(total - reference) / max(norm(reference), 1e-300)
    logger.debug(f"Young expansion '{variant}' (printed={printed}, x={x}, k_max={k_max}): "
                 f"relative error {error:.3e}")
    return ExpansionResult(value=total, reference=reference, error=float(error),
                           tail=norm(term), terms=k_max + 1)


def young_operator(A, form="prose"):
    """
    x Y''' + (2I-A) Y'' + x Y' + (2I-A) Y ('prose') or x^2 times it ('scaled').
    """
    a = as_matrix(A)
    c = 2 * identity_like(a) - a
    d, z = Operator.derivative, Operator.z
    op = z(1) * d(3) + c * d(2) + z(1) * d(1) + c
    if form == "scaled":
        return z(2) * op
    if form != "prose":
        raise ValueError(f"Unknown Young ODE form '{form}', expected one of {ODE_FORMS}")
    return op


def reduced_operator(A):
    """ x^2 W''' + 2(A+I) x W'' + (x^2 I + A(A+I)) W' + 2x W for W = Gamma(A+I) x^-A Y_A """
    a = as_matrix(A)
    eye = identity_like(a)
    d, z = Operator.derivative, Operator.z
    return z(2) * d(3) + 2 * (a + eye) * (z(1) * d(2)) + (z(2) + a @ (a + eye)) * d(1) + 2 * z(1)


def young_ode_residual(A, k_order=30, form="prose"):
    """
    Formal-series residual of the Young ODE applied to Y_A, using
    coefficients up to x^k_order past the offset.

    Returns:
        SeriesComparison (see annihilation_residual)
    """
    K = max(k_order // 2 + 2, 3)
    series = young_series(A, K).truncate(k_order + 1)
    return annihilation_residual(young_operator(A, form), series)


def young_W_series(A, K):
    """ W = 1F2(I; (A+I)/2, (A+2I)/2; -x^2/4) as a series in x """
    return hyper_series(young_W_params(as_matrix(A)), K, scale=-0.25, power=2)
