"""
Generalized hypergeometric matrix functions

    pFq(A_1..A_p; B_1..B_q; z) = sum_s z^s U_s,
    U_s = (A_1)_s...(A_p)_s [(B_1)_s]^-1...[(B_q)_s]^-1 / s!

for pairwise commuting parameter matrices. Coefficients come from the ratio
recurrence U_{s+1} = U_s prod(A_i + sI) prod(B_j + sI)^-1 / (s+1).
"""

import logging
import threading
from dataclasses import dataclass, field
import numpy as np
from matspec.errors import (SingularDenominator, Nonconvergence, DegenerateSeries,
                            ConfigurationError, DomainError)
from matspec.matrix.core import as_matrix, assert_commuting, check_invertible, norm

logger = logging.getLogger(__name__)

# Natural log of the largest term magnitude a series may reach
LOG_MAX_TERM = 0.95 * np.log(np.finfo(float).max)


@dataclass(frozen=True)
class SeriesControl:
    max_terms: int = 500
    abs_tol: float = 1e-14
    tail_window: int = 3

    def __post_init__(self):
        if not (self.max_terms >= self.tail_window >= 1):
            raise ConfigurationError(f"Need max_terms >= tail_window >= 1, got "
                                     f"max_terms={self.max_terms}, tail_window={self.tail_window}")
        if not self.abs_tol > 0:
            raise ConfigurationError(f"abs_tol must be positive, got {self.abs_tol}")


@dataclass(frozen=True, eq=False)
class HyperParams:
    """
    Numerator and denominator parameter lists of a pFq instance.

    Scalars are promoted to scalar multiples of the identity. 'dim' is only
    needed when it cannot be read off a matrix parameter (e.g. 0F0 or all
    scalar parameters). All parameters must commute pairwise.
    """
    numerators: tuple
    denominators: tuple
    dim: int = None

    def __post_init__(self):
        matrices = [m for m in (*self.numerators, *self.denominators) if np.ndim(m) == 2]
        dim = self.dim or (np.shape(matrices[0])[0] if matrices else 1)
        numerators = tuple(as_matrix(m, dim=dim) for m in self.numerators)
        denominators = tuple(as_matrix(m, dim=dim) for m in self.denominators)
        assert_commuting(numerators + denominators, what="hypergeometric parameters")
        for m in numerators + denominators:
            m.setflags(write=False)
        object.__setattr__(self, "numerators", numerators)
        object.__setattr__(self, "denominators", denominators)
        object.__setattr__(self, "dim", int(dim))

    @property
    def p(self):
        return len(self.numerators)

    @property
    def q(self):
        return len(self.denominators)

    @property
    def label(self):
        return f"{self.p}F{self.q}"

    def __repr__(self):
        return f"HyperParams({self.label}, dim={self.dim})"


def _coefficient_step(params, u, s, eye):
    nxt = u
    for a in params.numerators:
        nxt = nxt @ (a + s * eye)
    for b in params.denominators:
        shifted = b + s * eye
        check_invertible(shifted, SingularDenominator, what=f"denominator parameter shifted by {s}I")
        nxt = np.linalg.solve(shifted.T, nxt.T).T
    return nxt / (s + 1)


def pFq_coefficients(params, K):
    """
    U_0, ..., U_K of the pFq series by the ratio recurrence.

    Returns:
        list of (dim, dim) complex arrays, U_0 = I
    """
    if K < 0:
        raise ValueError(f"K must be non-negative, got {K}")
    eye = np.eye(params.dim, dtype=complex)
    coeffs = [eye]
    for s in range(K):
        coeffs.append(_coefficient_step(params, coeffs[-1], s, eye))
    return coeffs


@dataclass(frozen=True)
class HyperResult:
    value: np.ndarray
    n_terms: int
    tail_bound: float


def _scaled_step(params, mantissa, log_scale, s, eye):
    """
    U_{s+1} from U_s = exp(log_scale) mantissa, again split into a unit norm
    mantissa and a log scale. The scale is -inf once the series terminates.
    """
    nxt = _coefficient_step(params, mantissa, s, eye)
    nxt_norm = norm(nxt)
    if nxt_norm == 0:
        return nxt, -np.inf
    return nxt / nxt_norm, log_scale + np.log(nxt_norm)


def _scaled_term(mantissa, log_scale, z, s):
    """
    U_s z^s formed in log space, so that a representable term is not lost to
    an overflowing z^s or an underflowing U_s. None when the term itself is
    out of range.
    """
    if z == 0:
        return mantissa * np.exp(log_scale) if s == 0 else np.zeros_like(mantissa)
    log_mag = log_scale + s * np.log(abs(z))
    if log_mag > LOG_MAX_TERM:
        return None
    return mantissa * np.exp(complex(log_mag, s * np.angle(z)))


def _sum_series(scaled_coefficient, z, ctrl, label):
    z = complex(z)
    total = None
    small_run = 0
    norms = []
    for s in range(ctrl.max_terms):
        term = _scaled_term(*scaled_coefficient(s), z, s)
        if term is None:
            raise Nonconvergence(f"{label} series at z={z}: term {s} exceeds the floating point range")
        total = term.copy() if total is None else total + term
        term_norm = norm(term)
        norms.append(term_norm)
        small_run = small_run + 1 if term_norm < ctrl.abs_tol else 0
        if small_run >= ctrl.tail_window:
            last, prev = norms[-1], norms[-2] if len(norms) > 1 else 0.0
            ratio = last / prev if prev > 0 else 0.0
            tail = last * ratio / (1 - ratio) if ratio < 1 else last
            return HyperResult(value=total, n_terms=s + 1, tail_bound=float(tail))
    raise Nonconvergence(f"{label} series at z={z} did not reach abs_tol={ctrl.abs_tol:.1e} within "
                         f"{ctrl.max_terms} terms (last term norm {norms[-1]:.3e})")


def eval_pFq(params, z, ctrl=None):
    """
    Sum the pFq series at complex z.

    Args:
        params: (HyperParams)   Parameter lists
        z:      (complex)       Argument
        ctrl:   (SeriesControl) Truncation control, defaults to SeriesControl()

    Returns:
        HyperResult with the partial sum, number of terms used and the tail bound
    """
    return HyperFunction(params, ctrl).evaluate(z)


class HyperFunction:
    """
    Callable z -> pFq(z) that keeps the coefficients it has computed, so
    repeated evaluation (quadrature nodes, contour points) only pays for the
    recurrence once. Thread safe.
    """
    def __init__(self, params, ctrl=None):
        self.params = params
        self.ctrl = ctrl or SeriesControl()
        self._eye = np.eye(params.dim, dtype=complex)
        self._scaled = [(self._eye, 0.0)]
        self._lock = threading.Lock()

    def scaled_coefficient(self, s):
        """ U_s as (mantissa, log scale) with U_s = exp(log scale) * mantissa """
        if s >= len(self._scaled):
            with self._lock:
                while len(self._scaled) <= s:
                    k = len(self._scaled) - 1
                    self._scaled.append(_scaled_step(self.params, *self._scaled[-1], k, self._eye))
        return self._scaled[s]

    def coefficient(self, s):
        mantissa, log_scale = self.scaled_coefficient(s)
        return mantissa * np.exp(log_scale)

    def evaluate(self, z):
        return _sum_series(self.scaled_coefficient, z, self.ctrl, self.params.label)

    def __call__(self, z):
        return self.evaluate(z).value

    def __repr__(self):
        return f"HyperFunction({self.params!r}, cached_terms={len(self._scaled)})"


@dataclass(frozen=True)
class OrderTypeEstimate:
    """
    Sampled order and type trajectories: lists of (s, estimate) pairs, with the
    reference order used for the type normalization.
    """
    order_samples: list = field(default_factory=list)
    type_samples: list = field(default_factory=list)
    reference_order: float = None


def order_type_estimate(params, s_grid, reference_order=None):
    """
    Sampled estimates of the order and type of the entire function pFq.

    rho(s) = s ln(s) / ln(1/||U_s||) and tau(s) = s ||U_s||^(rho/s) / (e rho),
    with rho = 1/(q - p + 1) unless 'reference_order' is given. Norms are
    carried in log space since ||U_s|| underflows long before s = 500.

    Args:
        params:          (HyperParams) Parameters with q >= p
        s_grid:          (list)  Sample indices (>= 2)
        reference_order: (float) Order used in the type estimate

    Returns:
        OrderTypeEstimate
    """
    if params.q - params.p + 1 <= 0:
        raise DomainError(f"{params.label} is not entire; order/type estimates need q >= p")
    rho = float(reference_order) if reference_order is not None else 1.0 / (params.q - params.p + 1)
    s_grid = sorted(set(int(s) for s in s_grid))
    if not s_grid or s_grid[0] < 2:
        raise ValueError(f"Sample indices must be >= 2, got {s_grid}")
    eye = np.eye(params.dim, dtype=complex)
    mantissa, log_norm = eye / norm(eye), 0.0
    wanted = set(s_grid)
    order_samples, type_samples = [], []
    for s in range(s_grid[-1]):
        mantissa, log_norm = _scaled_step(params, mantissa, log_norm, s, eye)
        if not np.isfinite(log_norm):
            raise DegenerateSeries(f"Coefficient U_{s + 1} of {params.label} vanishes; "
                                   f"the series is a polynomial and has no growth order")
        if s + 1 in wanted:
            k = s + 1
            order_samples.append((k, k * np.log(k) / -log_norm))
            type_samples.append((k, k * np.exp(rho / k * log_norm) / (np.e * rho)))
    logger.debug(f"Order/type samples for {params.label}: {order_samples[-1]}, {type_samples[-1]}")
    return OrderTypeEstimate(order_samples=order_samples, type_samples=type_samples, reference_order=rho)
