"""
Truncated formal power series with matrix coefficients

    f(z) = z^alpha * sum_{j = start}^{stop - 1} c_j z^j

'alpha' is an optional offset matrix (None means the zero matrix) and must
commute with every coefficient. Coefficients for exponents j < stop are known
exactly; everything at or beyond 'stop' is unknown, so sums and products
truncate to the smallest valid stop.
"""

import logging
from dataclasses import dataclass
import numpy as np
from matspec.errors import ExponentMismatch, ShapeMismatch, NonCommutingOperator
from matspec.matrix.core import as_matrix, principal_power, norm, commutator_norm

logger = logging.getLogger(__name__)

# Relative commutator bound between constant factors and series offsets/coefficients
COMMUTE_RTOL = 1e-8


def _same_offset(a, b):
    if a is None and b is None:
        return True
    dim = (a if a is not None else b).shape[0]
    zero = np.zeros((dim, dim), dtype=complex)
    a = zero if a is None else a
    b = zero if b is None else b
    return np.allclose(a, b, rtol=0, atol=1e-12 * max(1.0, norm(a), norm(b)))


class MatrixPowerSeries:
    """
    Immutable truncated series z^offset * sum_j c_j z^j with coefficient
    exponents start, ..., stop - 1.
    """
    __slots__ = ("_coeffs", "_start", "_offset")
    __array_ufunc__ = None

    def __init__(self, coeffs, start=0, offset=None):
        coeffs = np.array(coeffs, dtype=complex)
        if coeffs.ndim == 1:
            coeffs = coeffs[:, None, None]
        if coeffs.ndim != 3 or coeffs.shape[1] != coeffs.shape[2] or len(coeffs) == 0:
            raise ShapeMismatch(f"Coefficients must have shape (m, n, n) with m >= 1, got {coeffs.shape}")
        if offset is not None:
            offset = as_matrix(offset, dim=coeffs.shape[1]).copy()
            if not np.any(offset):
                offset = None
            else:
                offset.setflags(write=False)
        coeffs.setflags(write=False)
        self._coeffs = coeffs
        self._start = int(start)
        self._offset = offset

    @classmethod
    def zero(cls, dim, stop, start=0, offset=None):
        return cls(np.zeros((max(stop - start, 1), dim, dim)), start=start, offset=offset)

    @classmethod
    def monomial(cls, dim, power, stop, coefficient=None):
        coeffs = np.zeros((stop, dim, dim), dtype=complex)
        if power < stop:
            coeffs[power] = np.eye(dim) if coefficient is None else as_matrix(coefficient, dim)
        return cls(coeffs)

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def dim(self):
        return self._coeffs.shape[1]

    @property
    def start(self):
        return self._start

    @property
    def stop(self):
        return self._start + len(self._coeffs)

    @property
    def offset(self):
        return self._offset

    def __len__(self):
        return len(self._coeffs)

    def __repr__(self):
        return (f"MatrixPowerSeries(dim={self.dim}, exponents=[{self.start}, {self.stop}), "
                f"offset={'0' if self._offset is None else 'matrix'})")

    def coefficient(self, j):
        """ Coefficient of z^j (zero below 'start'); ValueError at or beyond 'stop' """
        if j >= self.stop:
            raise ValueError(f"Coefficient of z^{j} is beyond the truncation order ({self.stop})")
        if j < self._start:
            return np.zeros((self.dim, self.dim), dtype=complex)
        return self._coeffs[j - self._start]

    def window(self, start, stop):
        """ Coefficients for exponents start..stop-1 as an (m, n, n) array """
        if stop > self.stop:
            raise ValueError(f"Requested exponents up to {stop - 1} but series is truncated at {self.stop}")
        out = np.zeros((max(stop - start, 0), self.dim, self.dim), dtype=complex)
        lo = max(start, self._start)
        if stop > lo:
            out[lo - start:] = self._coeffs[lo - self._start:stop - self._start]
        return out

    def truncate(self, stop):
        stop = min(stop, self.stop)
        return MatrixPowerSeries(self.window(self._start, stop) if stop > self._start
                                 else np.zeros((1, self.dim, self.dim)),
                                 start=self._start, offset=self._offset)

    def _check_compatible(self, other):
        if not isinstance(other, MatrixPowerSeries):
            raise TypeError(f"Expected a MatrixPowerSeries, got {type(other)}")
        if other.dim != self.dim:
            raise ShapeMismatch(f"Series dimensions differ: {self.dim} vs {other.dim}")
        if not _same_offset(self._offset, other._offset):
            raise ExponentMismatch("Series with different exponent offsets cannot be combined termwise")

    def __add__(self, other):
        self._check_compatible(other)
        start, stop = min(self.start, other.start), min(self.stop, other.stop)
        if stop <= start:
            raise ShapeMismatch(f"Series share no valid exponents (start {start}, stop {stop})")
        return MatrixPowerSeries(self.window(start, stop) + other.window(start, stop),
                                 start=start, offset=self._offset)

    def __neg__(self):
        return MatrixPowerSeries(-self._coeffs, start=self._start, offset=self._offset)

    def __sub__(self, other):
        return self + (-other)

    def _check_commutes(self, m):
        if self._offset is not None and commutator_norm(m, self._offset) > COMMUTE_RTOL:
            raise NonCommutingOperator("Constant factor does not commute with the series exponent offset")

    def lmul(self, m):
        """ Left multiplication by a scalar or a constant matrix """
        if np.ndim(m) == 0:
            return MatrixPowerSeries(complex(m) * self._coeffs, start=self._start, offset=self._offset)
        m = as_matrix(m, dim=self.dim)
        self._check_commutes(m)
        return MatrixPowerSeries(np.einsum("ij,kjl->kil", m, self._coeffs),
                                 start=self._start, offset=self._offset)

    def __rmul__(self, m):
        return self.lmul(m)

    def __mul__(self, other):
        """ Cauchy product (offsets add) or scalar multiplication """
        if not isinstance(other, MatrixPowerSeries):
            return self.lmul(other)
        if other.dim != self.dim:
            raise ShapeMismatch(f"Series dimensions differ: {self.dim} vs {other.dim}")
        if self._offset is not None and other._offset is not None \
                and commutator_norm(self._offset, other._offset) > COMMUTE_RTOL:
            raise NonCommutingOperator("Exponent offsets of the factors do not commute")
        start = self.start + other.start
        stop = min(self.stop + other.start, other.stop + self.start)
        coeffs = np.zeros((stop - start, self.dim, self.dim), dtype=complex)
        for i, a in enumerate(self._coeffs):
            for j, b in enumerate(other._coeffs[:stop - start - i]):
                coeffs[i + j] += a @ b
        if self._offset is None:
            offset = other._offset
        elif other._offset is None:
            offset = self._offset
        else:
            offset = self._offset + other._offset
        return MatrixPowerSeries(coeffs, start=start, offset=offset)

    def shift(self, m):
        """ Multiply by z^m (m may be negative) """
        return MatrixPowerSeries(self._coeffs, start=self._start + int(m), offset=self._offset)

    def theta(self):
        """ Euler operator z d/dz: c_j -> (offset + jI) c_j """
        exponents = np.arange(self.start, self.stop, dtype=complex)
        coeffs = exponents[:, None, None] * self._coeffs
        if self._offset is not None:
            coeffs = coeffs + np.einsum("ij,kjl->kil", self._offset, self._coeffs)
        return MatrixPowerSeries(coeffs, start=self._start, offset=self._offset)

    def derivative(self, order=1):
        out = self
        for _ in range(order):
            out = out.theta().shift(-1)
        return out

    def evaluate(self, z):
        z = complex(z)
        powers = z ** np.arange(self.start, self.stop, dtype=float)
        value = np.tensordot(powers, self._coeffs, axes=(0, 0))
        if self._offset is not None:
            value = principal_power(z, self._offset) @ value
        return value


@dataclass(frozen=True)
class SeriesComparison:
    residual: float
    worst_index: int
    order_compared: int
    passed: bool
    tolerance: float


def compare(lhs, rhs, tol=1e-10, stop=None):
    """
    Coefficientwise comparison of two series with the same offset.

    The residual is max_j ||lhs_j - rhs_j|| divided by the largest coefficient
    norm found in either series (1 if both vanish identically).

    Args:
        lhs, rhs: (MatrixPowerSeries) Series to compare
        tol:      (float) Pass threshold on the residual
        stop:     (int)   Optional exponent bound (exclusive) below both truncations

    Returns:
        SeriesComparison
    """
    if lhs.dim != rhs.dim:
        raise ShapeMismatch(f"Cannot compare series of dimension {lhs.dim} and {rhs.dim}")
    if not _same_offset(lhs.offset, rhs.offset):
        raise ExponentMismatch("Cannot compare series with different exponent offsets")
    start = min(lhs.start, rhs.start)
    stop = min(lhs.stop, rhs.stop) if stop is None else min(stop, lhs.stop, rhs.stop)
    if stop <= start:
        raise ShapeMismatch(f"Series share no valid exponents (start {start}, stop {stop})")
    a, b = lhs.window(start, stop), rhs.window(start, stop)
    diffs = np.array([norm(d) for d in a - b])
    scale = max(max(norm(c) for c in a), max(norm(c) for c in b))
    diffs = diffs / (scale if scale > 0 else 1.0)
    worst = int(np.argmax(diffs))
    residual = float(diffs[worst])
    return SeriesComparison(residual=residual, worst_index=start + worst,
                            order_compared=stop - start, passed=residual <= tol, tolerance=tol)
