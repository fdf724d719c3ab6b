from .formal import MatrixPowerSeries, SeriesComparison, compare
from .operators import Operator, annihilation_residual
from .builders import hyper_series, polynomial_series
from .extraction import contour_coefficients, bivariate_coefficient
