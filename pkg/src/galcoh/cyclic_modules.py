"""Modules over GF(p)[G] for G cyclic of order p.

A module is a finite-dimensional GF(p) space together with the matrix of a
chosen generator sigma of G.  Since sigma^p = 1, the operator (sigma - 1) is
nilpotent, and the module decomposes into Jordan blocks of (sigma - 1) of
sizes 1..p; freeness means all blocks have size p, triviality means all have
size 1.  The decomposition is computed from the rank sequence of powers of
(sigma - 1), so no polynomial factorization is ever needed.

The zero-dimensional module is legal and counts as both free and trivial.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from . import fplinalg as fpl
from .errors import DimensionMismatch, InvalidInput
from .fplinalg import PrimeField, Subspace


@dataclass(frozen=True)
class BlockDecomposition:
    """Multiset of indecomposable block lengths, each in [1, p]."""

    lengths: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "lengths", tuple(sorted(self.lengths, reverse=True)))

    @property
    def block_count(self) -> int:
        return len(self.lengths)

    @property
    def total_dim(self) -> int:
        return sum(self.lengths)


class CyclicGroupModule:
    """GF(p)[G]-module given by the matrix of the generator sigma.

    Construction rejects sigma with sigma^p != 1 rather than silently
    projecting; garbage in must fail loudly.
    """

    __slots__ = ("p", "dim", "sigma")

    def __init__(self, p: int, sigma) -> None:
        field = PrimeField(p)
        sigma = np.asarray(sigma, dtype=np.int64)
        if sigma.ndim != 2 or sigma.shape[0] != sigma.shape[1]:
            raise InvalidInput(f"sigma must be square, got shape {sigma.shape}")
        self.p = field.p
        self.dim = sigma.shape[0]
        self.sigma = fpl.as_matrix(sigma, self.p)
        if not np.array_equal(fpl.mat_pow(self.sigma, self.p, self.p), fpl.identity(self.dim)):
            raise InvalidInput(f"sigma^{self.p} is not the identity")

    @classmethod
    def trivial(cls, p: int, dim: int) -> "CyclicGroupModule":
        return cls(p, fpl.identity(dim))

    @classmethod
    def from_blocks(cls, p: int, lengths) -> "CyclicGroupModule":
        """Direct sum of unipotent Jordan blocks of the given lengths."""
        dim = sum(lengths)
        sigma = fpl.identity(dim)
        offset = 0
        for length in lengths:
            if not 1 <= length <= p:
                raise InvalidInput(f"block length {length} outside [1, {p}]")
            for i in range(length - 1):
                sigma[offset + i + 1, offset + i] = 1
            offset += length
        return cls(p, sigma)

    def _sigma_minus_one(self) -> np.ndarray:
        return (self.sigma - fpl.identity(self.dim)) % self.p

    def fixed_points(self) -> Subspace:
        """The subspace fixed by sigma, i.e. the kernel of (sigma - 1)."""
        return fpl.kernel(self._sigma_minus_one(), self.p)

    def norm_operator(self) -> np.ndarray:
        """(sigma-1)^(p-1), which equals 1 + sigma + ... + sigma^(p-1)."""
        a = fpl.mat_pow(self._sigma_minus_one(), self.p - 1, self.p)
        b = fpl.zeros(self.dim, self.dim)
        power = fpl.identity(self.dim)
        for _ in range(self.p):
            b = (b + power) % self.p
            power = fpl.matmul(power, self.sigma, self.p)
        if not np.array_equal(a, b):  # identity in GF(p)[x], so this is a sanity net
            raise AssertionError("norm operator identity violated")
        return a

    def norm_image(self) -> Subspace:
        return fpl.image(self.norm_operator(), self.p)

    def is_free(self) -> bool:
        """True iff the fixed subspace equals the image of the norm operator."""
        return self.fixed_points() == self.norm_image()

    def is_trivial(self) -> bool:
        """True iff sigma acts as the identity."""
        return np.array_equal(self.sigma, fpl.identity(self.dim))

    def decompose(self) -> BlockDecomposition:
        """Block lengths from the rank sequence of powers of (sigma - 1)."""
        s = self._sigma_minus_one()
        ranks = []
        power = fpl.identity(self.dim)
        for _ in range(self.p + 1):
            ranks.append(fpl.rank(power, self.p))
            power = fpl.matmul(power, s, self.p)
        # number of blocks of length >= i is ranks[i-1] - ranks[i]
        count_ge = [ranks[i - 1] - ranks[i] for i in range(1, self.p + 1)] + [0]
        lengths = []
        for length in range(1, self.p + 1):
            lengths.extend([length] * (count_ge[length - 1] - count_ge[length]))
        decomposition = BlockDecomposition(tuple(lengths))
        if decomposition.total_dim != self.dim:
            raise AssertionError("block lengths do not sum to the dimension")
        if decomposition.block_count != self.fixed_points().dim:
            raise AssertionError("block count does not match the fixed subspace")
        return decomposition

    def cyclic_length(self, gamma) -> int:
        """Dimension of the cyclic submodule generated by ``gamma``.

        Also verifies the defining identities of the length: applying
        (sigma-1) one time fewer than the length lands exactly on the fixed
        line of the submodule, one more application kills it.
        """
        gamma = fpl.as_vector(gamma, self.p, self.dim)
        orbit = [gamma]
        for _ in range(self.p - 1):
            orbit.append((self.sigma @ orbit[-1]) % self.p)
        span = Subspace.from_rows(self.p, self.dim, np.vstack(orbit))
        length = span.dim
        if length > 0:
            s = self._sigma_minus_one()
            shifted = Subspace.from_rows(
                self.p,
                self.dim,
                (fpl.mat_pow(s, length - 1, self.p) @ span.basis.T).T % self.p,
            )
            killed = Subspace.from_rows(
                self.p,
                self.dim,
                (fpl.mat_pow(s, length, self.p) @ span.basis.T).T % self.p,
            )
            fixed_line = span.intersect(self.fixed_points())
            if shifted != fixed_line or shifted.is_zero or not killed.is_zero:
                raise AssertionError("cyclic length identities violated")
        return length

    def h2_dim(self) -> int:
        """dim of fixed points modulo norm image; 0 exactly for free modules."""
        return self.fixed_points().dim - self.norm_image().dim

    def conjugate(self, q: np.ndarray) -> "CyclicGroupModule":
        """Change of basis: the module with action q sigma q^-1."""
        q = fpl.as_matrix(q, self.p, self.dim, self.dim)
        q_inv = _invert(q, self.p)
        return CyclicGroupModule(self.p, fpl.matmul(fpl.matmul(q, self.sigma, self.p), q_inv, self.p))

    def __repr__(self) -> str:
        return f"CyclicGroupModule(p={self.p}, dim={self.dim})"


def _invert(mat: np.ndarray, p: int) -> np.ndarray:
    n = mat.shape[0]
    if mat.shape[1] != n:
        raise DimensionMismatch("only square matrices can be inverted")
    aug = np.hstack([np.asarray(mat) % p, fpl.identity(n)])
    r, pivots = fpl.rref(aug, p)
    if pivots[:n] != list(range(n)) or len(pivots) != n:
        raise InvalidInput("matrix is not invertible mod p")
    return r[:, n:]
