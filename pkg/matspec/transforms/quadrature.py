"""
Quadrature rules and the matrix-weighted integration kernel shared by the
integral operators.

All rules are validated on construction: the rule mapped to [0, 1] must
reproduce the moments of its weight for degrees k <= min(20, 2n-1).
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
import numpy as np
from scipy import special
from matspec.errors import QuadratureError, SingularityUnresolved
from matspec.matrix.core import as_matrix, joint_eigenbasis, norm

logger = logging.getLogger(__name__)

# Relative to the absolute moment sum; roots_jacobi loses about 1e-12 at n = 80
MOMENT_RTOL = 1e-10
MAX_VALIDATED_DEGREE = 20


@dataclass(frozen=True)
class QuadratureRule:
    """
    Nodes and weights on 'interval'.

    kind is one of 'gauss-legendre', 'gauss-jacobi' or 'truncated-exponential';
    params holds the weight parameters: (a, b) exponents of (hi-t)^a (t-lo)^b for
    Gauss-Jacobi and the decay rate for the truncated exponential.
    """
    kind: str
    nodes: np.ndarray
    weights: np.ndarray
    interval: tuple
    params: tuple = ()

    @property
    def n(self):
        return len(self.nodes)

    def integrate(self, values):
        """ Sum of weights * values over the first axis (scalar or array values) """
        values = np.asarray(values)
        return np.tensordot(self.weights, values, axes=(0, 0))


def _frozen(*arrays):
    for arr in arrays:
        arr.setflags(write=False)
    return arrays


def _validate(kind, unit_nodes, unit_weights, moment_fn, n):
    for k in range(min(MAX_VALIDATED_DEGREE, 2 * n - 1) + 1):
        exact = moment_fn(k)
        terms = unit_weights * unit_nodes ** k
        approx = float(np.sum(terms))
        scale = max(abs(exact), float(np.sum(np.abs(terms))), 1e-300)
        if abs(approx - exact) > MOMENT_RTOL * scale:
            raise QuadratureError(f"{kind} rule with n={n} failed moment validation at degree {k}: "
                                  f"{approx!r} vs {exact!r}")


@lru_cache(maxsize=256)
def gauss_legendre(n, interval=(0.0, 1.0)):
    x, w = special.roots_legendre(n)
    _validate("Gauss-Legendre", (x + 1) / 2, w / 2, lambda k: 1.0 / (k + 1), n)
    lo, hi = interval
    half = (hi - lo) / 2
    nodes, weights = _frozen(lo + half * (x + 1), half * w)
    return QuadratureRule("gauss-legendre", nodes, weights, tuple(interval))


@lru_cache(maxsize=1024)
def gauss_jacobi(n, a, b, interval=(0.0, 1.0)):
    """
    Gauss-Jacobi rule for the weight (hi-t)^a (t-lo)^b on [lo, hi].

    Args:
        n:        (int)   Number of nodes
        a, b:     (float) Endpoint exponents, both > -1
        interval: (tuple) (lo, hi)
    """
    if not (a > -1 and b > -1):
        raise SingularityUnresolved(f"Gauss-Jacobi exponents must exceed -1, got a={a}, b={b}")
    x, w = special.roots_jacobi(n, a, b)
    unit_weights = w / 2 ** (a + b + 1)
    _validate("Gauss-Jacobi", (x + 1) / 2, unit_weights, lambda k: special.beta(a + 1, b + k + 1), n)
    lo, hi = interval
    half = (hi - lo) / 2
    nodes, weights = _frozen(lo + half * (x + 1), w * half ** (a + b + 1))
    return QuadratureRule("gauss-jacobi", nodes, weights, tuple(interval), (a, b))


@lru_cache(maxsize=256)
def truncated_exponential(n, cutoff, rate=1.0):
    """
    Composite rule for the weight exp(-rate*t) on [0, cutoff]: n-point
    Gauss-Legendre panels of width at most 1/rate.
    """
    if not (cutoff > 0 and rate > 0):
        raise QuadratureError(f"Truncated exponential rule needs positive cutoff and rate, got {cutoff}, {rate}")
    n_panels = max(1, int(np.ceil(cutoff * rate)))
    edges = np.linspace(0.0, cutoff, n_panels + 1)
    x, w = special.roots_legendre(n)
    half = (edges[1:] - edges[:-1]) / 2
    nodes = (edges[:-1, None] + half[:, None] * (x[None, :] + 1)).ravel()
    weights = (half[:, None] * w[None, :]).ravel() * np.exp(-rate * nodes)

    scaled = nodes * rate
    _validate("Truncated exponential", scaled / (cutoff * rate), weights * rate,
              lambda k: special.gamma(k + 1) * special.gammainc(k + 1, cutoff * rate) / (cutoff * rate) ** k,
              n)
    nodes, weights = _frozen(nodes, weights)
    return QuadratureRule("truncated-exponential", nodes, weights, (0.0, float(cutoff)), (float(rate),))


@dataclass(frozen=True)
class QuadratureResult:
    value: np.ndarray
    error: float
    n: int


def _exponent_matrix(exp, dim):
    return as_matrix(exp, dim=dim)


def integrate_matrix_weight(g, left_exp, right_exp, interval=(0.0, 1.0), n=40):
    """
    Integral over [lo, hi] of (t-lo)^L (hi-t)^R g(t) dt for commuting,
    diagonalizable exponent matrices L and R (scalars are allowed).

    The weight is diagonalized on the joint eigenbasis of L and R. Each row of
    the transformed integrand then carries scalar endpoint exponents: their real
    parts go into a Gauss-Jacobi rule and the imaginary parts into an oscillating
    phase factor.

    Args:
        g:         (callable) t -> matrix-like, smooth on [lo, hi]
        left_exp:  (matrix-like) L, eigenvalue real parts > -1
        right_exp: (matrix-like) R, eigenvalue real parts > -1
        interval:  (tuple) (lo, hi) with lo < hi
        n:         (int) Nodes per rule; the value uses 2n nodes and the
                         error is the difference to the n-node result

    Returns:
        QuadratureResult
    """
    lo, hi = float(interval[0]), float(interval[1])
    if not hi > lo:
        raise QuadratureError(f"Integration interval must have lo < hi, got {interval}")
    dims = [np.shape(e)[0] for e in (left_exp, right_exp) if np.ndim(e) == 2]
    dim = dims[0] if dims else as_matrix(g(0.5 * (lo + hi))).shape[0]
    v, v_inv, (left, right) = joint_eigenbasis([_exponent_matrix(left_exp, dim),
                                                _exponent_matrix(right_exp, dim)])
    if min(left.real) <= -1 or min(right.real) <= -1:
        raise SingularityUnresolved(f"Endpoint exponents must have real parts > -1, got "
                                    f"{np.round(left, 6)} and {np.round(right, 6)}")

    def _integrate(order):
        transformed = {}
        rows = []
        for i in range(dim):
            key = (float(right[i].real), float(left[i].real))
            rule = gauss_jacobi(order, key[0], key[1], (lo, hi))
            if key not in transformed:
                transformed[key] = np.stack([v_inv @ as_matrix(g(t), dim=dim) @ v for t in rule.nodes])
            phase = np.exp(1j * left[i].imag * np.log(rule.nodes - lo)
                           + 1j * right[i].imag * np.log(hi - rule.nodes))
            rows.append(rule.integrate(phase[:, None] * transformed[key][:, i, :]))
        return v @ np.array(rows) @ v_inv

    coarse, fine = _integrate(n), _integrate(2 * n)
    error = norm(fine - coarse)
    logger.debug(f"Matrix-weighted quadrature on [{lo}, {hi}] (n={n}/{2 * n}): error estimate {error:.2e}")
    return QuadratureResult(value=fine, error=error, n=2 * n)
