"""
MatrixPowerSeries builders for pFq arguments and finite coefficient lists.

matspec.special imports this module, so pFq_coefficients is imported where
it is used.
"""

import logging
import numpy as np
from matspec.series.formal import MatrixPowerSeries

logger = logging.getLogger(__name__)


def hyper_series(params, K, scale=1.0, power=1, offset=None):
    """
    Truncated series of z^offset * pFq(params; scale * z^power).

    Args:
        params: (HyperParams) pFq parameters
        K:      (int)     Number of pFq coefficients after U_0
        scale:  (complex) Argument scaling
        power:  (int)     Argument power (>= 1)
        offset: (matrix-like, None) Exponent offset

    Returns:
        MatrixPowerSeries, exact for exponents below power * K + 1
    """
    if power < 1:
        raise ValueError(f"power must be a positive integer, got {power}")
    from matspec.special.hyper import pFq_coefficients
    coeffs = pFq_coefficients(params, K)
    out = np.zeros((power * K + 1, params.dim, params.dim), dtype=complex)
    for s, u in enumerate(coeffs):
        out[power * s] = u * complex(scale) ** s
    return MatrixPowerSeries(out, offset=offset)


def polynomial_series(coeffs, stop, offset=None):
    """ Series from a finite list of matrix coefficients, zero-padded up to 'stop' """
    coeffs = np.asarray(coeffs, dtype=complex)
    out = np.zeros((max(stop, len(coeffs)), *coeffs.shape[1:]), dtype=complex)
    out[:len(coeffs)] = coeffs
    return MatrixPowerSeries(out, offset=offset)
