"""
Linear differential operators with constant matrix coefficients acting on
MatrixPowerSeries.

An Operator is a finite sum of terms coef * w where w is a word over the atoms
'theta' (z d/dz), 'd' (d/dz) and ('z', m) (multiplication by z^m). Words act
right to left. Constant matrices commute with every atom, so composing
(c1 w1)(c2 w2) gives (c1 c2)(w1 w2).
"""

import logging
import numpy as np
from matspec.errors import NonCommutingOperator, ShapeMismatch
from matspec.matrix.core import commutator_norm, norm
from matspec.series.formal import MatrixPowerSeries, SeriesComparison, COMMUTE_RTOL

logger = logging.getLogger(__name__)

THETA = ("theta",)
D = ("d",)


def _z_atom(m):
    return ("z", int(m))


def _mul_coef(a, b):
    if np.ndim(a) == 0 or np.ndim(b) == 0:
        return a * b
    return np.asarray(a) @ np.asarray(b)


class Operator:
    """
    Sum of (coefficient, word) terms. Coefficients are complex scalars or
    constant (dim, dim) matrices; words are tuples of atoms.

    Operators compose with '*' and '@', add with '+' and '-', and apply to a
    MatrixPowerSeries by calling them.
    """
    __slots__ = ("terms",)
    __array_ufunc__ = None

    def __init__(self, terms=()):
        self.terms = tuple((c, tuple(w)) for c, w in terms)

    @classmethod
    def const(cls, c):
        return cls([(c, ())])

    @classmethod
    def identity(cls):
        return cls.const(1.0)

    @classmethod
    def theta(cls):
        return cls([(1.0, (THETA,))])

    @classmethod
    def derivative(cls, order=1):
        return cls([(1.0, (D,) * order)])

    @classmethod
    def z(cls, m=1):
        return cls([(1.0, (_z_atom(m),))])

    @staticmethod
    def _coerce(other):
        return other if isinstance(other, Operator) else Operator.const(other)

    def __add__(self, other):
        return Operator(self.terms + self._coerce(other).terms)

    __radd__ = __add__

    def __neg__(self):
        return Operator((-1.0 * c if np.ndim(c) == 0 else -np.asarray(c), w) for c, w in self.terms)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        """ Composition (self after other), or right multiplication by a constant """
        other = self._coerce(other)
        return Operator((_mul_coef(c1, c2), w1 + w2) for c1, w1 in self.terms for c2, w2 in other.terms)

    __matmul__ = __mul__

    def __rmul__(self, other):
        return self._coerce(other) * self

    def __pow__(self, k):
        if k < 0:
            raise ValueError("Operators can only be raised to non-negative integer powers")
        out = Operator.identity()
        for _ in range(k):
            out = out * self
        return out

    def __repr__(self):
        words = [" ".join(a[0] if len(a) == 1 else f"z^{a[1]}" for a in w) or "1" for _, w in self.terms]
        return f"Operator({' + '.join(words)})"

    def __call__(self, series):
        return self.apply(series)

    def apply(self, series):
        """ Apply to a MatrixPowerSeries; returns the series of the result """
        parts = self.apply_terms(series)
        out = parts[0]
        for part in parts[1:]:
            out = out + part
        return out

    def apply_terms(self, series):
        """ The image of 'series' under each term separately """
        if not self.terms:
            raise ValueError("Cannot apply an empty operator")
        self._check_coefficients(series)
        return [self._apply_word(w, series).lmul(c) for c, w in self.terms]

    def _check_coefficients(self, series):
        nonzero = [c for c in series.coeffs if norm(c) > 0]
        for c, _ in self.terms:
            if np.ndim(c) == 0:
                continue
            if np.shape(c) != (series.dim, series.dim):
                raise ShapeMismatch(f"Operator coefficient of shape {np.shape(c)} does not match "
                                    f"series dimension {series.dim}")
            against = nonzero if series.offset is None else [series.offset, *nonzero]
            worst = max((commutator_norm(c, m) for m in against), default=0.0)
            if worst > COMMUTE_RTOL:
                raise NonCommutingOperator(f"Operator coefficient does not commute with the series "
                                           f"(relative commutator norm {worst:.3e})")

    @staticmethod
    def _apply_word(word, series):
        out = series
        for atom in reversed(word):
            if atom == THETA:
                out = out.theta()
            elif atom == D:
                out = out.derivative()
            else:
                out = out.shift(atom[1])
        return out


def theta_shifted(m):
    """ theta + m for a scalar or constant matrix m """
    return Operator.theta() + m


def rising(op, k):
    """ (op)_k = op (op + 1) ... (op + k - 1) """
    out = Operator.identity()
    for j in range(k):
        out = out * (op + j)
    return out


def annihilation_residual(op, series, tol=1e-10):
    """
    How far 'op' is from annihilating 'series'.

    Each term of 'op' is applied separately and the summed image is measured
    against the largest coefficient norm over all the separate term images, so
    exact cancellation between large terms scores close to zero.

    Returns:
        SeriesComparison of the summed image against zero
    """
    parts = op.apply_terms(series)
    total = parts[0]
    for part in parts[1:]:
        total = total + part
    start, stop = total.start, total.stop
    scale = max(max((norm(c) for c in p.window(start, stop)), default=0.0) for p in parts)
    diffs = np.array([norm(c) for c in total.coeffs]) / (scale if scale > 0 else 1.0)
    worst = int(np.argmax(diffs))
    residual = float(diffs[worst])
    logger.debug(f"Annihilation residual {residual:.3e} at exponent {start + worst}")
    return SeriesComparison(residual=residual, worst_index=start + worst,
                            order_compared=stop - start, passed=residual <= tol, tolerance=tol)
