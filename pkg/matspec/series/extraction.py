"""
Taylor coefficients of a generating function by contour sampling.

For fixed z the coefficients c_n of G(z, t) = sum_n c_n t^n are read off the
discrete Fourier transform of G on the circle |t| = r:

    c_n ~ r^-n / N * sum_j G(z, r w^j) w^(-jn),    w = exp(2 pi i / N)

The N-point and 2N-point results are compared to estimate the aliasing error.
"""

import logging
import numpy as np
from scipy import fft
from matspec.errors import ExtractionUnstable
from matspec.matrix.core import as_matrix, norm

logger = logging.getLogger(__name__)

EXTRACTION_RTOL = 1e-8


def _sample_circle(gen_fn, z, radius, n_points):
    t = radius * np.exp(2j * np.pi * np.arange(n_points) / n_points)
    return np.stack([as_matrix(gen_fn(z, ti)) for ti in t])


def contour_coefficients(gen_fn, z, order, radius=0.5, n_points=64):
    """
    Coefficients c_0..c_order of t -> gen_fn(z, t) and an error estimate.

    The error is max_n ||c_n(N) - c_n(2N)|| r^n relative to the largest
    norm of gen_fn on the circle.

    Returns:
        (list of (dim, dim) arrays, float error)
    """
    if order >= n_points // 2:
        raise ValueError(f"Need n_points > 2 * order, got n_points={n_points}, order={order}")
    fine = _sample_circle(gen_fn, z, radius, 2 * n_points)
    coarse = fine[::2]
    scale = max(norm(v) for v in fine) or 1.0
    c_coarse = fft.fft(coarse, axis=0)[:order + 1] / n_points
    c_fine = fft.fft(fine, axis=0)[:order + 1] / (2 * n_points)
    error = max(norm(a - b) for a, b in zip(c_coarse, c_fine)) / scale
    rescale = radius ** -np.arange(order + 1, dtype=float)
    coeffs = list(c_fine * rescale[:, None, None])
    return coeffs, float(error)


def bivariate_coefficient(gen_fn, z0, t_order, radius=0.5, n_points=64, rtol=EXTRACTION_RTOL):
    """
    Taylor coefficients in t, at fixed z0, of a bivariate generating function.

    Args:
        gen_fn:   (callable) (z, t) -> matrix, analytic in t on |t| <= radius
        z0:       (complex)  Fixed first argument
        t_order:  (int)      Highest coefficient index
        radius:   (float)    Contour radius, inside the disk of analyticity
        n_points: (int)      Base number of contour samples
        rtol:     (float)    Largest accepted relative aliasing estimate

    Returns:
        list [c_0, ..., c_t_order]
    """
    coeffs, error = contour_coefficients(gen_fn, z0, t_order, radius=radius, n_points=n_points)
    if error > rtol:
        raise ExtractionUnstable(f"Contour extraction (N={n_points} vs {2 * n_points}, r={radius}) "
                                 f"disagrees by {error:.3e} > {rtol:.1e}")
    logger.debug(f"Extracted {t_order + 1} coefficients at z={z0} (aliasing estimate {error:.2e})")
    return coeffs
