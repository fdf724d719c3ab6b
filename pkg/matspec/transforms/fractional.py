"""
Fractional operators applied termwise to power series.

Each variant maps the monomial w^k to a multiple of a shifted monomial. The
shift of the exponent by a non-integer amount is carried by the series offset
(a scalar multiple of I), so the image of a power series is again a
MatrixPowerSeries.

    variant                 w^k  ->
    'rl-left', 'rl-right',  Gamma(k+1) / Gamma(k+1-alpha) w^(k-alpha)
    'classical'
    'weyl'                  (-1)^alpha Gamma(k+1) / Gamma(k+1-alpha) w^(k-alpha)
    'weyl-integral'         w^(k+alpha) / (alpha)_k
    'rl-integral'           Gamma(k+1) / Gamma(k+1+alpha) w^(k+alpha)
    'erdelyi-kober-left'    Gamma(eta+k+1) / Gamma(alpha+eta+k+1) w^k
    'erdelyi-kober-right'   Gamma(eta-k) / Gamma(alpha+eta-k) w^k

The Weyl-type rules on [x, inf) are termwise: the defining integrals diverge
for monomials, so these variants have no quadrature counterpart.
"""

import logging
from dataclasses import dataclass
import numpy as np
from scipy import special
from matspec.errors import NonIntegerPowerAmbiguity, ExponentMismatch
from matspec.series.formal import MatrixPowerSeries

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MonomialRule:
    name: str
    exponent_shift: int          # -1: w^(k-alpha), +1: w^(k+alpha), 0: w^k
    convergent_integral: bool


MONOMIAL_RULES = {
    "rl-left": MonomialRule("rl-left", -1, True),
    "rl-right": MonomialRule("rl-right", -1, True),
    "classical": MonomialRule("classical", -1, True),
    "weyl": MonomialRule("weyl", -1, False),
    "weyl-integral": MonomialRule("weyl-integral", 1, False),
    "rl-integral": MonomialRule("rl-integral", 1, True),
    "erdelyi-kober-left": MonomialRule("erdelyi-kober-left", 0, True),
    "erdelyi-kober-right": MonomialRule("erdelyi-kober-right", 0, True),
}


def monomial_factor(variant, k, alpha, eta=None, branch="principal"):
    """
    Scalar factor c_k of the monomial rule w^k -> c_k w^(k + shift * alpha).
    """
    if variant in ("rl-left", "rl-right", "classical", "weyl"):
        factor = special.gamma(k + 1) * special.rgamma(k + 1 - alpha)
        if variant == "weyl":
            factor = factor * _minus_one_power(alpha, branch)
        return complex(factor)
    if variant == "weyl-integral":
        return complex(1.0 / special.poch(alpha, k))
    if variant == "rl-integral":
        return complex(special.gamma(k + 1) * special.rgamma(k + 1 + alpha))
    if eta is None:
        raise ValueError(f"Variant '{variant}' needs the weight exponent eta")
    if variant == "erdelyi-kober-left":
        return complex(special.gamma(eta + k + 1) * special.rgamma(alpha + eta + k + 1))
    if variant == "erdelyi-kober-right":
        return complex(special.gamma(eta - k) * special.rgamma(alpha + eta - k))
    raise ValueError(f"Unknown fractional variant '{variant}', expected one of {sorted(MONOMIAL_RULES)}")


def _minus_one_power(alpha, branch):
    if float(alpha).is_integer():
        return (-1.0) ** int(alpha)
    if branch is None:
        raise NonIntegerPowerAmbiguity(f"(-1)^alpha with alpha={alpha} needs a branch choice")
    if branch != "principal":
        raise ValueError(f"Only the principal branch is supported, got '{branch}'")
    logger.warning(f"Using the principal branch (-1)^alpha = exp(i pi alpha) for alpha={alpha}")
    return np.exp(1j * np.pi * alpha)


def fractional_derivative_formal(series, alpha, variant, eta=None, branch="principal"):
    """
    Apply a fractional operator termwise to a power series in w.

    Args:
        series:  (MatrixPowerSeries) Input series with zero offset and exponents >= 0
        alpha:   (float) Operator order
        variant: (str)   Key of MONOMIAL_RULES
        eta:     (float) Weight exponent of the Erdelyi-Kober variants
        branch:  (str, None) Branch of (-1)^alpha for 'weyl'; None raises
                 NonIntegerPowerAmbiguity for non-integer alpha

    Returns:
        MatrixPowerSeries with offset (shift * alpha) I
    """
    if variant not in MONOMIAL_RULES:
        raise ValueError(f"Unknown fractional variant '{variant}', expected one of {sorted(MONOMIAL_RULES)}")
    if series.offset is not None or series.start < 0:
        raise ExponentMismatch("Termwise fractional operators act on plain power series "
                               "(zero offset, non-negative exponents)")
    rule = MONOMIAL_RULES[variant]
    factors = np.array([monomial_factor(variant, k, alpha, eta=eta, branch=branch)
                        for k in range(series.start, series.stop)])
    coeffs = factors[:, None, None] * series.coeffs
    offset = rule.exponent_shift * alpha * np.eye(series.dim) if rule.exponent_shift else None
    return MatrixPowerSeries(coeffs, start=series.start, offset=offset)
