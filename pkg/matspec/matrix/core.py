"""
Complex square-matrix values and the spectral primitives used by every other
module.

Library functions accept anything that converts to a square complex array
(a SquareMatrix, a numpy array or a plain number for the 1x1 case) and return
plain complex numpy arrays of shape (dim, dim). SquareMatrix is the validated
value type used at the edges: JSON encoding, tolerance-based equality and the
command line.
"""

import logging
from dataclasses import dataclass
import numpy as np
from scipy import linalg
from matspec import Defaults
from matspec.errors import (EigenFailure, IllConditionedEigenbasis,
                            DomainError, BranchCut, NonCommuting, ParseError)

logger = logging.getLogger(__name__)


class SquareMatrix:
    """
    Dense complex N x N matrix value.

    Equality is tolerance based (absolute, on entries); use allclose to pass
    a tolerance other than Defaults.EQUALITY_ATOL.
    """
    __slots__ = ("_data",)

    def __init__(self, entries):
        data = np.array(entries, dtype=complex)
        if data.ndim == 0:
            data = data.reshape(1, 1)
        if data.ndim != 2 or data.shape[0] != data.shape[1] or data.shape[0] < 1:
            raise DomainError(f"Expected a non-empty square matrix, got array of shape {data.shape}")
        data.setflags(write=False)
        self._data = data

    @classmethod
    def identity(cls, dim):
        return cls(np.eye(dim))

    @property
    def dim(self):
        return self._data.shape[0]

    @property
    def entries(self):
        """ Row-major list of complex entries (length dim**2) """
        return list(self._data.ravel())

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self._data.copy()
        return self._data.astype(dtype)

    def allclose(self, other, atol=None):
        other = as_matrix(other)
        if other.shape != self._data.shape:
            return False
        atol = Defaults.EQUALITY_ATOL if atol is None else atol
        return bool(np.all(np.abs(self._data - other) <= atol))

    def __eq__(self, other):
        try:
            return self.allclose(other)
        except DomainError:
            return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f"SquareMatrix(dim={self.dim}, entries={np.array2string(self._data, precision=6)})"

    def to_json(self):
        return to_json(self._data)

    @classmethod
    def from_json(cls, obj):
        return cls(from_json(obj))


def as_matrix(m, dim=None):
    """
    Convert 'm' to a complex (dim, dim) numpy array. Scalars become scalar
    multiples of the identity of size 'dim' (default 1).
    """
    if isinstance(m, SquareMatrix):
        arr = np.asarray(m)
    else:
        arr = np.asarray(m, dtype=complex)
    if arr.ndim == 0:
        return complex(arr) * np.eye(dim or 1, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DomainError(f"Expected a square matrix, got array of shape {arr.shape}")
    if dim is not None and arr.shape[0] != dim:
        raise DomainError(f"Expected a {dim}x{dim} matrix, got {arr.shape[0]}x{arr.shape[1]}")
    return arr.astype(complex, copy=False)


def identity_like(m):
    return np.eye(as_matrix(m).shape[0], dtype=complex)


def to_json(m):
    """ Shared matrix encoding: {"dim": n, "entries": [[re, im], ...]} row-major """
    m = as_matrix(m)
    return {"dim": int(m.shape[0]),
            "entries": [[float(v.real), float(v.imag)] for v in m.ravel()]}


def from_json(obj):
    """
    Decode the shared matrix encoding. Also accepts a bare flat list of
    [re, im] pairs (its length must be a square number), a nested list of
    rows, or a single number.
    """
    if isinstance(obj, (int, float, complex)):
        return as_matrix(obj)
    if isinstance(obj, dict):
        try:
            dim, pairs = int(obj["dim"]), obj["entries"]
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"Matrix object must have 'dim' and 'entries' fields, got {obj}") from e
    elif isinstance(obj, (list, tuple)):
        pairs, dim = obj, None
        if pairs and all(isinstance(p, (list, tuple)) and len(p) == 2 for p in pairs) \
                and int(round(np.sqrt(len(pairs)))) ** 2 == len(pairs):
            dim = int(round(np.sqrt(len(pairs))))
        else:
            try:
                return as_matrix(np.array(obj, dtype=complex))
            except (ValueError, TypeError, DomainError) as e:
                raise ParseError(f"Could not decode matrix from {obj}") from e
    else:
        raise ParseError(f"Could not decode matrix from object of type {type(obj)}")
    if len(pairs) != dim * dim:
        raise ParseError(f"Matrix of dim {dim} needs {dim*dim} entries, got {len(pairs)}")
    try:
        values = [complex(re, im) for re, im in pairs]
    except (TypeError, ValueError) as e:
        raise ParseError(f"Entries must be [re, im] pairs, got {pairs}") from e
    return np.array(values, dtype=complex).reshape(dim, dim)


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: np.ndarray
    max_re: float
    min_re: float


def spectrum(m):
    """
    Eigenvalues of m (with multiplicity) and the extreme real parts M(m), m(m).
    """
    m = as_matrix(m)
    if not np.all(np.isfinite(m)):
        raise DomainError("Cannot compute the spectrum of a matrix with non-finite entries")
    try:
        eigenvalues = linalg.eigvals(m)
    except (np.linalg.LinAlgError, ValueError) as e:
        raise EigenFailure(f"Eigenvalue solver did not converge: {e}") from e
    return Spectrum(eigenvalues=eigenvalues,
                    max_re=float(np.max(eigenvalues.real)),
                    min_re=float(np.min(eigenvalues.real)))


def is_positive_stable(m):
    return spectrum(m).min_re > 0


def is_scalar_matrix(m, rtol=1e-14):
    m = as_matrix(m)
    return np.allclose(m, m[0, 0] * np.eye(m.shape[0]), rtol=0, atol=rtol * max(1.0, np.abs(m).max()))


def norm(m):
    return float(np.linalg.norm(m, 2)) if np.ndim(m) == 2 else float(np.abs(m))


def commutator_norm(x, y):
    """ ||XY - YX|| relative to ||X||*||Y|| (0 if either is zero) """
    x, y = as_matrix(x), as_matrix(y)
    scale = norm(x) * norm(y)
    if scale == 0:
        return 0.0
    return norm(x @ y - y @ x) / scale


def commutes(x, y, rtol=None):
    rtol = Defaults.COMMUTATOR_RTOL if rtol is None else rtol
    return commutator_norm(x, y) <= rtol


def assert_commuting(matrices, rtol=None, error=NonCommuting, what="matrices"):
    matrices = [as_matrix(m) for m in matrices]
    for i in range(len(matrices)):
        for j in range(i + 1, len(matrices)):
            if not commutes(matrices[i], matrices[j], rtol):
                raise error(f"The {what} at positions {i} and {j} do not commute "
                            f"(relative commutator norm {commutator_norm(matrices[i], matrices[j]):.3e})")


def check_invertible(m, error=DomainError, what="matrix"):
    """
    Raises 'error' unless the smallest singular value of m exceeds
    Defaults.INVERTIBILITY_RTOL times its norm.
    """
    s = linalg.svdvals(as_matrix(m))
    if s[0] == 0 or s[-1] <= Defaults.INVERTIBILITY_RTOL * s[0]:
        raise error(f"The {what} is not invertible (singular values {s[0]:.3e}...{s[-1]:.3e})")


def matrix_function(m, scalar_fn):
    """
    Apply a scalar function to a diagonalizable matrix through its spectrum:
    V diag(f(w)) V^-1.

    Args:
        m:         (matrix-like) Diagonalizable matrix
        scalar_fn: (callable)    Vectorized complex scalar function

    Returns:
        A complex ndarray of the same shape as m
    """
    m = as_matrix(m)
    if m.shape[0] == 1:
        return np.asarray(scalar_fn(m.ravel()), dtype=complex).reshape(1, 1)
    if is_scalar_matrix(m):
        return complex(np.asarray(scalar_fn(np.array([m[0, 0]])))[0]) * np.eye(m.shape[0], dtype=complex)
    try:
        w, v = linalg.eig(m)
    except (np.linalg.LinAlgError, ValueError) as e:
        raise EigenFailure(f"Eigen decomposition did not converge: {e}") from e
    cond = np.linalg.cond(v)
    if not np.isfinite(cond) or cond > Defaults.MAX_EIGENBASIS_COND:
        raise IllConditionedEigenbasis(f"Eigenvector matrix condition number {cond:.3e} exceeds "
                                       f"{Defaults.MAX_EIGENBASIS_COND:.1e}")
    fw = np.asarray(scalar_fn(w), dtype=complex)
    return (v * fw) @ np.linalg.inv(v)


def matrix_power(t, a):
    """
    t^A = exp(ln(t) A) for a positive real scalar t.
    """
    if np.iscomplexobj(t) and np.imag(t) != 0:
        raise DomainError(f"matrix_power requires a positive real base, got {t}")
    t = float(np.real(t))
    if not t > 0:
        raise DomainError(f"matrix_power requires a positive real base, got {t}")
    return linalg.expm(np.log(t) * as_matrix(a))


def principal_power(z, a):
    """
    z^A = exp(Log(z) A) on the principal branch. Raises BranchCut for z on
    the closed negative real axis.
    """
    z = complex(z)
    if z.imag == 0 and z.real <= 0:
        raise BranchCut(f"z^A is undefined on the principal branch for z = {z}")
    return linalg.expm(np.log(z) * as_matrix(a))


def joint_eigenbasis(matrices, rtol=1e-8):
    """
    Simultaneously diagonalize commuting diagonalizable matrices.

    Scalar multiples of the identity are diagonal in any basis and are
    ignored when choosing the basis. The remaining matrices are combined with
    incommensurate weights so that one eigen decomposition separates all
    joint eigenspaces.

    Args:
        matrices: (list) Commuting matrix-likes of equal dimension
        rtol:     (float) Largest accepted off-diagonal mass after the change
                          of basis, relative to each matrix norm

    Returns:
        v, v_inv, eigenvalues: basis, its inverse and a list with one array
        of diagonal entries per input matrix
    """
    matrices = [as_matrix(m) for m in matrices]
    dim = matrices[0].shape[0]
    non_scalar = [m for m in matrices if not is_scalar_matrix(m)]
    if not non_scalar:
        v = np.eye(dim, dtype=complex)
        return v, v, [np.full(dim, m[0, 0]) for m in matrices]
    weights = np.sqrt(np.arange(2, 2 + len(non_scalar), dtype=float)) + (np.sqrt(5) - 1) / 2
    combined = sum(w * m / max(norm(m), 1e-300) for w, m in zip(weights, non_scalar))
    try:
        _, v = linalg.eig(combined)
    except (np.linalg.LinAlgError, ValueError) as e:
        raise EigenFailure(f"Eigen decomposition did not converge: {e}") from e
    cond = np.linalg.cond(v)
    if not np.isfinite(cond) or cond > Defaults.MAX_EIGENBASIS_COND:
        raise IllConditionedEigenbasis(f"Joint eigenbasis condition number {cond:.3e} exceeds "
                                       f"{Defaults.MAX_EIGENBASIS_COND:.1e}")
    v_inv = np.linalg.inv(v)
    eigenvalues = []
    for m in matrices:
        d = v_inv @ m @ v
        diag = np.diag(d).copy()
        off = norm(d - np.diag(diag))
        if off > rtol * max(norm(m), 1e-300) * cond:
            raise NonCommuting(f"Matrices could not be diagonalized jointly "
                               f"(off-diagonal residual {off:.3e})")
        eigenvalues.append(diag)
    return v, v_inv, eigenvalues
