"""
Random pairwise-commuting matrix families.

Every member is V diag(mu) V^-1 on the eigenbasis V of one random
diagonalizable seed M = V diag(lambda) V^-1. With distinct seed eigenvalues
such a member equals p(M) for the Lagrange polynomial p with p(lambda_i) = mu_i,
so all members are scalar polynomials in M and commute up to roundoff.
"""

import logging
from dataclasses import dataclass, field
import numpy as np
from matspec.errors import GenerationFailure
from matspec.matrix.core import as_matrix, commutator_norm

logger = logging.getLogger(__name__)

# Largest accepted condition number of the shared eigenvector matrix
MAX_BASIS_COND = 100.0


@dataclass(frozen=True)
class CommutingFamily:
    basis: np.ndarray
    eigenvectors: np.ndarray
    seed_eigenvalues: np.ndarray
    members: tuple = field(default_factory=tuple)

    @property
    def dim(self):
        return self.basis.shape[0]

    def member(self, eigenvalues):
        """
        Returns the matrix commuting with the family that has the given
        eigenvalues on the family eigenbasis. A scalar is broadcast.
        """
        mu = np.broadcast_to(np.asarray(eigenvalues, dtype=complex), (self.dim,))
        v = self.eigenvectors
        return (v * mu) @ np.linalg.inv(v)

    def polynomial(self, eigenvalues):
        """
        Coefficients (highest degree first) of the scalar polynomial p with
        p(M) = self.member(eigenvalues).
        """
        mu = np.broadcast_to(np.asarray(eigenvalues, dtype=complex), (self.dim,))
        return np.polyfit(self.seed_eigenvalues, mu, deg=self.dim - 1)

    def max_commutator_norm(self):
        norms = [commutator_norm(x, y) for i, x in enumerate(self.members)
                 for y in self.members[i + 1:]]
        return max(norms, default=0.0)


def _random_basis(rng, dim, max_retries):
    if dim == 1:
        return np.eye(1, dtype=complex)
    for attempt in range(max_retries):
        v = np.eye(dim) + rng.normal(scale=0.5 / np.sqrt(dim), size=(dim, dim))
        v = v / np.linalg.norm(v, axis=0)
        if np.linalg.cond(v) < MAX_BASIS_COND:
            return v.astype(complex)
        logger.debug(f"Rejected eigenbasis with condition {np.linalg.cond(v):.2f} (attempt {attempt})")
    raise GenerationFailure(f"Could not draw a {dim}x{dim} eigenbasis with condition number below "
                            f"{MAX_BASIS_COND} in {max_retries} attempts")


def _distinct_points(rng, dim, low, high, min_gap):
    for _ in range(1000):
        points = np.sort(rng.uniform(low, high, size=dim))
        if dim == 1 or np.min(np.diff(points)) >= min_gap:
            return points
    raise GenerationFailure(f"Could not draw {dim} points in ({low}, {high}) separated by {min_gap}")


def commuting_family(seed, dim, count, stable=True, max_retries=50, low=0.2, high=3.0):
    """
    Draw 'count' pairwise-commuting matrices.

    Args:
        seed:        (int, Generator) RNG seed or numpy Generator
        dim:         (int)   Matrix dimension (>= 1)
        count:       (int)   Number of members (>= 1)
        stable:      (bool)  Map every member spectrum into (low, high) so all
                             members are positive stable
        max_retries: (int)   Attempts at drawing a well-conditioned basis
        low, high:   (float) Spectrum window used when 'stable' is set

    Returns:
        A CommutingFamily
    """
    if dim < 1 or count < 1:
        raise ValueError(f"dim and count must be positive, got dim={dim}, count={count}")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    v = _random_basis(rng, dim, max_retries)
    lam = _distinct_points(rng, dim, -1.0, 1.0, min_gap=0.1)
    v_inv = np.linalg.inv(v)
    seed_matrix = (v * lam) @ v_inv

    members = []
    for _ in range(count):
        degree = min(dim - 1, 2)
        coeffs = rng.normal(size=degree + 1)
        mu = np.polyval(coeffs, lam) if degree > 0 else np.full(dim, coeffs[0])
        if stable:
            span = rng.uniform(0.3, high - low - 0.1)
            offset = rng.uniform(low + 0.05, high - span)
            spread = np.ptp(mu)
            mu = offset + (mu - mu.min()) / spread * span if spread > 0 else np.full(dim, offset + span / 2)
        members.append((v * mu) @ v_inv)

    family = CommutingFamily(basis=as_matrix(seed_matrix), eigenvectors=v,
                             seed_eigenvalues=lam, members=tuple(members))
    logger.debug(f"Drew commuting family (dim={dim}, count={count}, "
                 f"max commutator {family.max_commutator_norm():.2e})")
    return family
