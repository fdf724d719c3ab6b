"""
Matrix gamma, reciprocal gamma, beta and Pochhammer symbols.

Gamma and reciprocal gamma are spectral matrix functions built on the scipy
scalar kernels. Pochhammer products are formed by the running product
(A)_{k+1} = (A)_k (A + kI) and never through gamma ratios.
"""

import logging
from dataclasses import dataclass
from functools import reduce
import numpy as np
from scipy import special
from matspec.errors import NotPositiveStable, SingularShift
from matspec.matrix.core import (as_matrix, spectrum, matrix_function,
                                 assert_commuting, check_invertible, identity_like)

logger = logging.getLogger(__name__)


def check_positive_stable(m, name):
    """ Raise NotPositiveStable unless every eigenvalue of m has positive real part """
    spec = spectrum(m)
    if not spec.min_re > 0:
        raise NotPositiveStable(f"Matrix '{name}' must be positive stable, got min Re(eigenvalue) = {spec.min_re:.4g}")


def matrix_gamma(a):
    """
    Gamma(A) for a positive stable, diagonalizable matrix A.
    """
    a = as_matrix(a)
    check_positive_stable(a, "A")
    return matrix_function(a, special.gamma)


def reciprocal_gamma(a):
    """
    1/Gamma(A). Defined for every diagonalizable A (vanishes on the
    non-positive integers).
    """
    return matrix_function(as_matrix(a), special.rgamma)


def matrix_beta(p, q):
    """
    B(P, Q) = Gamma(P) Gamma(Q) Gamma^-1(P+Q) for commuting positive stable
    P and Q. See matrix_beta_quadrature for the integral form.
    """
    p, q = as_matrix(p), as_matrix(q)
    check_positive_stable(p, "P")
    check_positive_stable(q, "Q")
    assert_commuting([p, q], what="beta arguments")
    return matrix_gamma(p) @ matrix_gamma(q) @ reciprocal_gamma(p + q)


def matrix_beta_quadrature(p, q, n=60):
    """
    B(P, Q) as the integral of t^(P-I) (1-t)^(Q-I) over (0, 1) by Gauss-Jacobi
    quadrature on the joint eigenbasis of P and Q.

    Returns:
        A QuadratureResult (value and n vs. 2n error estimate)
    """
    from matspec.transforms.quadrature import integrate_matrix_weight
    p, q = as_matrix(p), as_matrix(q)
    check_positive_stable(p, "P")
    check_positive_stable(q, "Q")
    assert_commuting([p, q], what="beta arguments")
    eye = identity_like(p)
    return integrate_matrix_weight(lambda t: eye, left_exp=p - eye, right_exp=q - eye, n=n)


@dataclass(frozen=True)
class PochhammerCache:
    """
    (A)_0, ..., (A)_K for a fixed base matrix A.

    terms[0] is the identity and terms[k+1] = terms[k] (A + kI).
    """
    base: np.ndarray
    terms: tuple
    K: int

    def __getitem__(self, k):
        return self.terms[k]

    def __len__(self):
        return len(self.terms)

    def inverse(self, k):
        """ [(A)_k]^-1, raising SingularShift if A + jI is singular for some j < k """
        eye = identity_like(self.base)
        for j in range(k):
            check_invertible(self.base + j * eye, SingularShift, what=f"shifted matrix A + {j}I")
        return np.linalg.inv(self.terms[k])


def pochhammer(a, K):
    """
    Build the PochhammerCache of A up to order K.

    Args:
        a: (matrix-like) Base matrix A
        K: (int)         Highest order (>= 0)
    """
    if K < 0:
        raise ValueError(f"Pochhammer order must be non-negative, got {K}")
    a = as_matrix(a)
    eye = identity_like(a)
    terms = [eye]
    for k in range(K):
        terms.append(terms[-1] @ (a + k * eye))
    for term in terms:
        term.setflags(write=False)
    return PochhammerCache(base=a, terms=tuple(terms), K=K)


def pochhammer_term(a, k):
    """ The single product (A)_k """
    a = as_matrix(a)
    eye = identity_like(a)
    return reduce(lambda acc, j: acc @ (a + j * eye), range(k), eye)

