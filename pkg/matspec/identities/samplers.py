"""
Random parameter draws for the identity catalog.

All matrices drawn by one ParamDraw share the eigenbasis of a random
commuting family, so they commute and their spectra are prescribed exactly.
"""

import logging
import zlib
import numpy as np
from matspec.errors import GenerationFailure
from matspec.matrix.family import commuting_family

logger = logging.getLogger(__name__)

# Default eigenvalue window for hypergeometric parameters
LOW, HIGH = 0.3, 2.5
INTEGER_GAP = 0.1


def sample_rng(seed, dim, entry_id):
    """ Generator for one (seed, dim, entry) triple, independent of run order """
    return np.random.default_rng([int(seed), int(dim), zlib.crc32(entry_id.encode("utf-8"))])


def away_from_integers(values, gap=INTEGER_GAP):
    values = np.asarray(values, dtype=float)
    return bool(np.all(np.abs(values - np.round(values)) >= gap))


class ParamDraw:
    """
    Draws commuting matrices with chosen spectra and the scalar arguments that
    go with them.
    """
    def __init__(self, rng, dim):
        self.rng = rng
        self.dim = dim
        self.family = commuting_family(rng, dim, count=1)

    def eigenvalues(self, low=LOW, high=HIGH, avoid_integers=True, max_tries=1000):
        for _ in range(max_tries):
            values = self.rng.uniform(low, high, size=self.dim)
            if not avoid_integers or away_from_integers(values):
                return values
        raise GenerationFailure(f"Could not draw {self.dim} eigenvalues in ({low}, {high}) "
                                f"away from the integers")

    def matrix(self, eigenvalues):
        return self.family.member(eigenvalues)

    def draw(self, low=LOW, high=HIGH, avoid_integers=True):
        """ Returns (matrix, eigenvalues) """
        values = self.eigenvalues(low, high, avoid_integers)
        return self.matrix(values), values

    def point(self, radius=2.0, real=False):
        """ Random argument with |z| <= radius (real if requested) """
        r = radius * np.sqrt(self.rng.uniform(0.05, 1.0))
        if real:
            return float(r * self.rng.choice([-1.0, 1.0]))
        return complex(r * np.exp(2j * np.pi * self.rng.uniform()))

    def uniform(self, low, high):
        return float(self.rng.uniform(low, high))


def frobenius_spectra(draw, max_tries=1000):
    """
    Eigenvalues (b, c) for B and C with b, c and b - c all away from the
    integers, so the three Frobenius solutions are distinct.
    """
    for _ in range(max_tries):
        b = draw.eigenvalues()
        c = draw.eigenvalues()
        if away_from_integers(b - c):
            return b, c
    raise GenerationFailure("Could not draw Frobenius parameters with non-integer B - C")
