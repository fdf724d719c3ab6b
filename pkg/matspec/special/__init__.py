from .gamma_beta import matrix_gamma, reciprocal_gamma, matrix_beta, matrix_beta_quadrature, pochhammer
from .hyper import SeriesControl, HyperParams, HyperFunction, eval_pFq, pFq_coefficients, order_type_estimate
from .bateman import BatemanParams, bateman_B, bateman_J, bateman_series, hyper_bessel_J, laguerre_L
from .young import young_Y, young_expansion, young_ode_residual, bessel_J_matrix
