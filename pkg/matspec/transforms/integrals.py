"""
Integral operators on matrix-valued functions of one real variable:

    beta transform       int_0^1 t^(A-I) (1-t)^(B-I) f(t) dt
    Laplace transform    int_0^inf exp(-s t) f(t) dt
    Erdelyi-Kober        left operator E^{alpha,eta}_{0,x} and right operator K^{-alpha,eta}_{x,inf}
    Riemann-Liouville    fractional integrals from 0, from b (left) and up to c (right)

Every operator maps its interval onto [0, 1] and hands the endpoint powers
to integrate_matrix_weight, so singular endpoints are absorbed by the
Gauss-Jacobi weight.
"""

import logging
import numpy as np
from scipy import special
from matspec.errors import MatspecError, QuadratureError, TailBoundViolation, DivergentIntegral
from matspec.matrix.core import as_matrix, joint_eigenbasis, norm, identity_like
from matspec.special.gamma_beta import check_positive_stable
from matspec.transforms.quadrature import (integrate_matrix_weight, truncated_exponential,
                                           QuadratureResult)

logger = logging.getLogger(__name__)

# Decay panels per unit of 1/Re(s) before the first tail check
INITIAL_CUTOFF_PANELS = 32
MAX_CUTOFF_DOUBLINGS = 6
# Largest Re(s) * cutoff; exp(-s t) underflows beyond it
MAX_DECAY_EXPONENT = 700.0
# Doubling depth of the samples testing the right Erdelyi-Kober integrand for divergence
DIVERGENCE_DEPTH = 10


def _finish(result, tol, full_output, what):
    if tol is not None and result.error > tol:
        raise QuadratureError(f"{what}: quadrature error estimate {result.error:.3e} exceeds tol={tol:.1e}")
    return result if full_output else result.value


def beta_transform(f, A, B, n=40, tol=None, full_output=False):
    """
    int_0^1 t^(A-I) (1-t)^(B-I) f(t) dt for commuting positive stable A, B.

    Args:
        f:           (callable) t -> matrix-like
        A, B:        (matrix-like) Positive stable exponent matrices
        n:           (int) Base rule size (value from 2n nodes)
        tol:         (float) Raise QuadratureError if the error estimate exceeds it
        full_output: (bool) Return the QuadratureResult instead of the value
    """
    a, b = as_matrix(A), as_matrix(B, dim=as_matrix(A).shape[0])
    check_positive_stable(a, "A")
    check_positive_stable(b, "B")
    eye = identity_like(a)
    result = integrate_matrix_weight(f, left_exp=a - eye, right_exp=b - eye, n=n)
    return _finish(result, tol, full_output, "Beta transform")


def _power_fn(exponent, dim):
    """ t -> t^exponent for t > 0 through one eigen decomposition """
    if exponent is None:
        eye = np.eye(dim, dtype=complex)
        return lambda t: eye
    v, v_inv, (w,) = joint_eigenbasis([as_matrix(exponent, dim=dim)])
    return lambda t: (v * np.exp(w * np.log(t))) @ v_inv


def laplace_transform(f, s, cutoff=None, exponent=None, growth=0.0, tol=1e-10, n=20, full_output=False):
    """
    int_0^inf exp(-s t) t^exponent f(t) dt.

    [0, h] with h = 1/Re(s) carries the (possibly singular) factor t^exponent in
    a Gauss-Jacobi weight. [h, cutoff] uses truncated exponential panels with the
    oscillation exp(-i Im(s) t) folded into the integrand. The cutoff doubles
    until the geometric tail estimate

        ||exp(-s c) c^exponent f(c)|| / (Re(s) - growth)

    drops below tol. The cutoff never passes 700/Re(s), where exp(-s t) underflows.

    Args:
        f:        (callable) t -> matrix-like, smooth on [0, inf)
        s:        (complex)  Transform variable, Re(s) > growth
        cutoff:   (float)    Initial truncation point (default 32/Re(s))
        exponent: (matrix-like, None) Optional power t^exponent with Re eigenvalues > -1
        growth:   (float)    Caller supplied exponential growth rate of f
        tol:      (float)    Tail tolerance
        n:        (int)      Nodes per panel

    Returns:
        The transform value (or a QuadratureResult if full_output)
    """
    s = complex(s)
    if not s.real > growth:
        raise TailBoundViolation(f"Laplace transform needs Re(s) > growth rate, got s={s}, growth={growth}")
    h = 1.0 / s.real
    dim = as_matrix(f(h)).shape[0] if exponent is None else as_matrix(exponent).shape[0]
    power = _power_fn(exponent, dim)
    integrand = lambda t: np.exp(-s * t) * power(t) @ as_matrix(f(t), dim=dim)

    def _tail(c):
        try:
            return norm(integrand(c)) / (s.real - growth)
        except (MatspecError, ArithmeticError) as e:
            raise TailBoundViolation(f"Laplace integrand could not be evaluated at cutoff {c:.4g}: {e}") from e

    limit = MAX_DECAY_EXPONENT * h
    cutoff = min(max(cutoff or INITIAL_CUTOFF_PANELS * h, 2 * h), limit)
    for _ in range(MAX_CUTOFF_DOUBLINGS):
        if _tail(cutoff) < tol:
            break
        if cutoff >= limit:
            raise TailBoundViolation(f"Laplace tail estimate {_tail(cutoff):.3e} still above tol={tol:.1e} "
                                     f"at the largest cutoff {limit:.4g}")
        cutoff = min(2 * cutoff, limit)
    else:
        raise TailBoundViolation(f"Laplace tail estimate {_tail(cutoff):.3e} still above tol={tol:.1e} "
                                 f"at cutoff {cutoff:.4g}")
    head = integrate_matrix_weight(lambda t: np.exp(-s * t) * as_matrix(f(t), dim=dim),
                                   left_exp=0 if exponent is None else exponent, right_exp=0,
                                   interval=(0.0, h), n=n)

    def _body(order):
        rule = truncated_exponential(order, cutoff - h, rate=s.real)
        phase = np.exp(-s * h - 1j * s.imag * rule.nodes)
        values = np.stack([p * power(h + t) @ as_matrix(f(h + t), dim=dim)
                           for p, t in zip(phase, rule.nodes)])
        return rule.integrate(values)

    coarse, fine = _body(n), _body(2 * n)
    value = head.value + fine
    error = head.error + norm(fine - coarse) + _tail(cutoff)
    logger.debug(f"Laplace transform at s={s}: cutoff {cutoff:.4g}, error estimate {error:.2e}")
    return _finish(QuadratureResult(value=value, error=error, n=head.n), None, full_output, "Laplace transform")


def erdelyi_kober_left(f, alpha, eta, x, n=40, tol=None, full_output=False):
    """
    E^{alpha,eta}_{0,x} f = x^(-eta-alpha) / Gamma(alpha) int_0^x (x-t)^(alpha-1) t^eta f(t) dt
                          = 1/Gamma(alpha) int_0^1 (1-u)^(alpha-1) u^eta f(xu) du
    """
    if not alpha > 0:
        raise QuadratureError(f"Erdelyi-Kober order must be positive, got alpha={alpha}")
    result = integrate_matrix_weight(lambda u: f(x * u), left_exp=eta, right_exp=alpha - 1, n=n)
    result = QuadratureResult(value=result.value / special.gamma(alpha), error=result.error / special.gamma(alpha),
                              n=result.n)
    return _finish(result, tol, full_output, "Erdelyi-Kober left operator")


def erdelyi_kober_right(f, alpha, eta, x, growth_order=0, n=40, tol=None, full_output=False):
    """
    K^{-alpha,eta}_{x,inf} f = x^eta / Gamma(alpha) int_x^inf (t-x)^(alpha-1) t^(-alpha-eta) f(t) dt
                             = 1/Gamma(alpha) int_0^1 (1-u)^(alpha-1) u^(eta-1) f(x/u) du

    after t = x/u. For f growing like t^k ('growth_order' k) the integrand is
    u^(eta-1-k) (1-u)^(alpha-1) times the bounded factor u^k f(x/u), which
    converges only for eta > k.

    Raises:
        DivergentIntegral if eta <= growth_order, or if u^eta ||f(x/u)|| is
        still increasing as u -> 0 (f grows faster than the declared order)
    """
    if not alpha > 0:
        raise QuadratureError(f"Erdelyi-Kober order must be positive, got alpha={alpha}")
    k = growth_order
    if not eta > k:
        raise DivergentIntegral(f"Right Erdelyi-Kober integral diverges: eta={eta} <= growth order {k}")
    samples = [2.0 ** (-j * eta) * norm(as_matrix(f(x * 2.0 ** j)))
               for j in (DIVERGENCE_DEPTH - 1, DIVERGENCE_DEPTH)]
    if samples[1] > samples[0]:
        raise DivergentIntegral(f"Right Erdelyi-Kober integrand u^eta ||f(x/u)|| grows as u -> 0 "
                                f"({samples[0]:.3e} -> {samples[1]:.3e}); f grows faster than t^{k}")
    result = integrate_matrix_weight(lambda u: u ** k * as_matrix(f(x / u)),
                                     left_exp=eta - 1 - k, right_exp=alpha - 1, n=n)
    g = special.gamma(alpha)
    result = QuadratureResult(value=result.value / g, error=result.error / g, n=result.n)
    return _finish(result, tol, full_output, "Erdelyi-Kober right operator")


def rl_integral(f, mu, x, n=40, tol=None, full_output=False):
    """
    Riemann-Liouville integral from 0:
        1/Gamma(mu) int_0^x (x-t)^(mu-1) f(t) dt = x^mu / Gamma(mu) int_0^1 (1-u)^(mu-1) f(xu) du
    """
    return rl_integral_left(f, mu, 0.0, x, n=n, tol=tol, full_output=full_output)


def rl_integral_left(f, alpha, b, x, n=40, tol=None, full_output=False):
    """ 1/Gamma(alpha) int_b^x (x-t)^(alpha-1) f(t) dt for x > b """
    if not alpha > 0:
        raise QuadratureError(f"Fractional integral order must be positive, got {alpha}")
    if not x > b:
        raise QuadratureError(f"Left sided integral needs x > b, got x={x}, b={b}")
    span = x - b
    result = integrate_matrix_weight(lambda u: f(b + span * u), left_exp=0, right_exp=alpha - 1, n=n)
    factor = span ** alpha / special.gamma(alpha)
    result = QuadratureResult(value=factor * result.value, error=factor * result.error, n=result.n)
    return _finish(result, tol, full_output, "Riemann-Liouville left integral")


def rl_integral_right(f, alpha, x, c, n=40, tol=None, full_output=False):
    """ 1/Gamma(alpha) int_x^c (t-x)^(alpha-1) f(t) dt for c > x """
    if not alpha > 0:
        raise QuadratureError(f"Fractional integral order must be positive, got {alpha}")
    if not c > x:
        raise QuadratureError(f"Right sided integral needs c > x, got x={x}, c={c}")
    span = c - x
    result = integrate_matrix_weight(lambda u: f(x + span * u), left_exp=alpha - 1, right_exp=0, n=n)
    factor = span ** alpha / special.gamma(alpha)
    result = QuadratureResult(value=factor * result.value, error=factor * result.error, n=result.n)
    return _finish(result, tol, full_output, "Riemann-Liouville right integral")
