from .quadrature import gauss_legendre, gauss_jacobi, integrate_matrix_weight
from .integrals import (beta_transform, laplace_transform, erdelyi_kober_left, erdelyi_kober_right,
                        rl_integral, rl_integral_left, rl_integral_right)
from .fractional import monomial_factor, fractional_derivative_formal
