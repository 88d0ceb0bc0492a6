"""Exact linear algebra over prime fields GF(p).

Matrices are numpy ``int64`` arrays with entries normalized to ``[0, p)``;
all arithmetic is exact modular arithmetic, never floating point.  Subspaces
are stored through their reduced row-echelon basis, which is unique, so two
equal subspaces always have byte-identical representations.

Zero-dimensional ambient spaces and empty matrices are legal everywhere.
All values are immutable after construction and all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from .errors import DimensionMismatch, InvalidInput


def is_prime(n: int) -> bool:
    """Primality by trial division; intended for small moduli."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    """The prime field GF(p); construction verifies that p is prime."""

    p: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, (int, np.integer)) or not is_prime(int(self.p)):
            raise InvalidInput(f"modulus {self.p!r} is not a prime")
        object.__setattr__(self, "p", int(self.p))


def as_matrix(entries, p: int, rows: int | None = None, cols: int | None = None) -> np.ndarray:
    """Normalize ``entries`` to an immutable int64 matrix with values in [0, p).

    Args:
        entries: Anything ``np.asarray`` accepts; must be 2-dimensional.
        p: Prime modulus.
        rows, cols: Optional shape that the matrix must have.

    Returns:
        A read-only ``(rows, cols)`` array reduced mod p.
    """
    a = np.asarray(entries, dtype=np.int64)
    if a.ndim != 2:
        raise InvalidInput(f"expected a matrix, got array of ndim {a.ndim}")
    if rows is not None and a.shape[0] != rows:
        raise DimensionMismatch(f"expected {rows} rows, got {a.shape[0]}")
    if cols is not None and a.shape[1] != cols:
        raise DimensionMismatch(f"expected {cols} columns, got {a.shape[1]}")
    a = a % p
    a.setflags(write=False)
    return a


def as_vector(entries, p: int, length: int | None = None) -> np.ndarray:
    """Normalize ``entries`` to an immutable 1-d int64 vector mod p."""
    v = np.asarray(entries, dtype=np.int64)
    if v.ndim != 1:
        raise InvalidInput(f"expected a vector, got array of ndim {v.ndim}")
    if length is not None and v.shape[0] != length:
        raise DimensionMismatch(f"expected length {length}, got {v.shape[0]}")
    v = v % p
    v.setflags(write=False)
    return v


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact matrix product mod p."""
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return (a @ b) % p


def mat_pow(a: np.ndarray, k: int, p: int) -> np.ndarray:
    """k-th power of a square matrix mod p (k >= 0)."""
    if a.shape[0] != a.shape[1]:
        raise DimensionMismatch("matrix power requires a square matrix")
    out = identity(a.shape[0])
    for _ in range(k):
        out = matmul(out, a, p)
    return out


def rref(mat: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """Reduced row-echelon form over GF(p).

    Pivots are normalized to 1, pivot columns are cleared above and below,
    and pivot columns are strictly increasing, so the output is the unique
    canonical form of the row space.

    Returns:
        (R, pivot_cols) where R has the same shape as ``mat``.
    """
    a = np.array(mat, dtype=np.int64) % p
    n_rows, n_cols = a.shape
    pivots: List[int] = []
    row = 0
    for col in range(n_cols):
        if row >= n_rows:
            break
        nz = np.nonzero(a[row:, col])[0]
        if nz.size == 0:
            continue
        piv = nz[0] + row
        if piv != row:
            a[[row, piv]] = a[[piv, row]]
        inv = pow(int(a[row, col]), p - 2, p) if p > 2 else 1
        if inv != 1:
            a[row] = (a[row] * inv) % p
        for r in range(n_rows):
            if r != row and a[r, col]:
                a[r] = (a[r] - a[r, col] * a[row]) % p
        pivots.append(col)
        row += 1
    a.setflags(write=False)
    return a, pivots


def rank(mat: np.ndarray, p: int) -> int:
    return len(rref(mat, p)[1])


def kernel_matrix(mat: np.ndarray, p: int) -> np.ndarray:
    """Rows form a basis of the right null space {v : mat @ v = 0}."""
    n_cols = mat.shape[1]
    r, pivots = rref(mat, p)
    pivot_set = set(pivots)
    free = [j for j in range(n_cols) if j not in pivot_set]
    basis = zeros(len(free), n_cols)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, c in enumerate(pivots):
            basis[k, c] = (-r[i, f]) % p
    return basis


class Subspace:
    """A subspace of GF(p)^n, held in canonical reduced row-echelon form.

    Equality of subspaces is equality of their canonical bases, which makes
    it a plain array comparison.
    """

    __slots__ = ("p", "ambient_dim", "basis")

    def __init__(self, p: int, ambient_dim: int, canonical_basis: np.ndarray):
        # Internal constructor: callers must supply an already-canonical basis.
        self.p = p
        self.ambient_dim = ambient_dim
        self.basis = canonical_basis

    @classmethod
    def from_rows(cls, p: int, ambient_dim: int, rows) -> "Subspace":
        """Span of the given row vectors, canonicalized."""
        a = np.asarray(rows, dtype=np.int64).reshape(-1, ambient_dim) % p
        r, pivots = rref(a, p)
        basis = r[: len(pivots)].copy()
        basis.setflags(write=False)
        return cls(p, ambient_dim, basis)

    @classmethod
    def zero(cls, p: int, ambient_dim: int) -> "Subspace":
        return cls.from_rows(p, ambient_dim, zeros(0, ambient_dim))

    @classmethod
    def full(cls, p: int, ambient_dim: int) -> "Subspace":
        return cls.from_rows(p, ambient_dim, identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def is_zero(self) -> bool:
        return self.dim == 0

    @property
    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def _check_compatible(self, other: "Subspace") -> None:
        if self.p != other.p:
            raise DimensionMismatch("subspaces over different primes")
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(
                f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}"
            )

    def contains_vector(self, v) -> bool:
        v = as_vector(v, self.p, self.ambient_dim)
        stacked = np.vstack([self.basis, v.reshape(1, -1)])
        return rank(stacked, self.p) == self.dim

    def contains(self, other: "Subspace") -> bool:
        self._check_compatible(other)
        if other.dim == 0:
            return True
        stacked = np.vstack([self.basis, other.basis])
        return rank(stacked, self.p) == self.dim

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        return Subspace.from_rows(
            self.p, self.ambient_dim, np.vstack([self.basis, other.basis])
        )

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        # span(U) = {x : K_U x = 0} where K_U spans the null space of U, so
        # the intersection is the joint null space of the two K's.
        k_self = kernel_matrix(self.basis, self.p)
        k_other = kernel_matrix(other.basis, self.p)
        joint = np.vstack([k_self, k_other])
        return Subspace.from_rows(
            self.p, self.ambient_dim, kernel_matrix(joint, self.p)
        )

    def vectors(self) -> Iterable[np.ndarray]:
        """Enumerate every vector of the subspace (tests only; p^dim of them)."""
        from itertools import product

        for coeffs in product(range(self.p), repeat=self.dim):
            yield (np.asarray(coeffs, dtype=np.int64) @ self.basis) % self.p

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.p == other.p
            and self.ambient_dim == other.ambient_dim
            and self.basis.shape == other.basis.shape
            and np.array_equal(self.basis, other.basis)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.ambient_dim, self.basis.tobytes()))

    def __repr__(self) -> str:
        return f"Subspace(p={self.p}, dim={self.dim}, ambient={self.ambient_dim})"

    def to_lists(self) -> List[List[int]]:
        return [[int(x) for x in row] for row in self.basis]


def kernel(mat: np.ndarray, p: int) -> Subspace:
    """{v : mat @ v = 0} as a canonical subspace of GF(p)^cols."""
    return Subspace.from_rows(p, mat.shape[1], kernel_matrix(mat, p))


def image(mat: np.ndarray, p: int) -> Subspace:
    """Column space of ``mat`` as a canonical subspace of GF(p)^rows."""
    return Subspace.from_rows(p, mat.shape[0], np.asarray(mat).T)


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    return u.sum(v)


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    return u.intersect(v)


def subspace_contains(u: Subspace, v: Subspace) -> bool:
    """True iff v is contained in u."""
    return u.contains(v)


def solve(mat: np.ndarray, rhs: Sequence[int], p: int) -> np.ndarray | None:
    """One solution of ``mat @ x = rhs`` mod p, or None if inconsistent."""
    rhs = as_vector(rhs, p, mat.shape[0])
    aug = np.hstack([np.asarray(mat) % p, rhs.reshape(-1, 1)])
    r, pivots = rref(aug, p)
    n = mat.shape[1]
    if n in pivots:
        return None
    x = np.zeros(n, dtype=np.int64)
    for i, c in enumerate(pivots):
        x[c] = r[i, n]
    return x
