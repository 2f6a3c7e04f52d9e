"""
Exact dense linear algebra over the rationals.

Matrices are numpy arrays of dtype ``object`` whose entries are Python
``int`` (when integral) or ``fractions.Fraction``.  Both are exact, and
keeping integral entries as ``int`` makes the object-array arithmetic an
order of magnitude faster than an all-``Fraction`` representation.

Rank uses fraction-free (Bareiss) elimination.  Kernels and spans use a
fraction-free Gauss-Jordan sweep whose rows are kept primitive, so the
bases returned are integer vectors with coprime entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

import numpy as np

Rational = Fraction


def to_rational(x):
    """Canonical exact scalar: ``int`` if integral, else a reduced ``Fraction``."""
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, str):
        x = Fraction(x)
    elif not isinstance(x, Fraction):
        if isinstance(x, float) and not x.is_integer():
            raise TypeError("floats are not accepted; pass a Fraction or a 'p/q' string")
        x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


_canon = np.frompyfunc(to_rational, 1, 1)


def ratmat(data) -> np.ndarray:
    """Build an exact matrix (2-d object array) from nested sequences."""
    a = np.array(data, dtype=object)
    if a.ndim == 1:
        a = a.reshape(-1, 1)
    if a.ndim != 2:
        raise ValueError("expected a 2-d array")
    if a.size == 0:
        return a
    return _canon(a).astype(object)


def zeros(rows: int, cols: int | None = None) -> np.ndarray:
    cols = rows if cols is None else cols
    a = np.empty((rows, cols), dtype=object)
    a.fill(0)
    return a


def identity(n: int) -> np.ndarray:
    a = zeros(n)
    for i in range(n):
        a[i, i] = 1
    return a


def unit(n: int, i: int, j: int) -> np.ndarray:
    """The matrix unit e_{ij} (0-based indices)."""
    a = zeros(n)
    a[i, j] = 1
    return a


def canonical(a: np.ndarray) -> np.ndarray:
    """Demote integral ``Fraction`` entries back to ``int``."""
    if a.size == 0:
        return a.astype(object)
    return _canon(a).astype(object)


def is_zero(a: np.ndarray) -> bool:
    return not np.any(a != 0)


def trace(a: np.ndarray):
    return to_rational(sum(a[i, i] for i in range(a.shape[0])))


def _row_denominator(row) -> int:
    dens = [x.denominator for x in row if isinstance(x, Fraction)]
    return reduce(lcm, dens, 1)


def integer_rows(M: np.ndarray) -> np.ndarray:
    """Scale each row by the lcm of its denominators; rank and row span are preserved."""
    M = np.asarray(M, dtype=object)
    out = M.copy()
    for i in range(M.shape[0]):
        d = _row_denominator(M[i])
        if d != 1:
            out[i] = [int(x * d) for x in M[i]]
    return out


def primitive(v) -> np.ndarray:
    """Integer multiple of ``v`` with coprime entries and positive leading entry."""
    v = np.asarray(v, dtype=object).ravel()
    d = _row_denominator(v)
    w = [int(x * d) for x in v]
    g = reduce(gcd, w, 0)
    if g == 0:
        return np.array(w, dtype=object)
    lead = next(x for x in w if x != 0)
    if lead < 0:
        g = -g
    return np.array([x // g for x in w], dtype=object)


def _pick_pivot(col) -> int:
    best, best_abs = -1, None
    for i, x in enumerate(col):
        if x != 0:
            ax = abs(x)
            if best_abs is None or ax < best_abs:
                best, best_abs = i, ax
                if ax == 1:
                    break
    return best


def rank(M) -> int:
    """Exact rank over Q by Bareiss elimination (smallest-magnitude pivot)."""
    A = integer_rows(np.asarray(M, dtype=object))
    if A.ndim != 2 or A.size == 0:
        return 0
    A = A[np.any(A != 0, axis=1)]
    rows, cols = A.shape
    if rows == 0:
        return 0
    A = A.copy()
    r, prev = 0, 1
    for c in range(cols):
        if r == rows:
            break
        p = _pick_pivot(A[r:, c])
        if p < 0:
            continue
        p += r
        if p != r:
            A[[r, p]] = A[[p, r]]
        piv = A[r, c]
        if r + 1 < rows:
            below = A[r + 1:, c]
            A[r + 1:, c + 1:] = (piv * A[r + 1:, c + 1:]
                                 - np.multiply.outer(below, A[r, c + 1:])) // prev
            A[r + 1:, c] = 0
        prev = piv
        r += 1
    return r


def echelon(M) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form with primitive integer rows.

    Returns ``(R, pivots)`` where ``R`` has one row per pivot, each pivot
    column is zero outside its own row, and rows are primitive integer
    vectors.  Pivot entries are positive but need not equal 1.
    """
    A = integer_rows(np.asarray(M, dtype=object))
    if A.size == 0:
        return zeros(0, A.shape[1] if A.ndim == 2 else 0), []
    A = A[np.any(A != 0, axis=1)].copy()
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = _pick_pivot(A[r:, c])
        if p < 0:
            continue
        p += r
        if p != r:
            A[[r, p]] = A[[p, r]]
        piv = A[r, c]
        others = np.nonzero(A[:, c] != 0)[0]
        others = others[others != r]
        if len(others):
            sub = piv * A[others] - np.multiply.outer(A[others, c], A[r])
            g = np.gcd.reduce(sub, axis=1)
            g[g == 0] = 1
            A[others] = sub // g[:, None]
        pivots.append(c)
        r += 1
    R = A[:r]
    for i, c in enumerate(pivots):
        R[i] = primitive(R[i])
        if R[i, c] < 0:
            R[i] = -R[i]
    return R, pivots


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of Q^ambient_dim, stored as independent row vectors."""

    ambient_dim: int
    basis: np.ndarray  # shape (dim, ambient_dim)

    def __post_init__(self):
        if self.basis.shape != (self.basis.shape[0], self.ambient_dim):
            raise ValueError("basis width does not match ambient dimension")

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @classmethod
    def span(cls, vectors: Iterable, ambient_dim: int) -> "Subspace":
        rows = [np.asarray(v, dtype=object).ravel() for v in vectors]
        if not rows:
            return cls.zero(ambient_dim)
        R, _ = echelon(np.vstack(rows))
        return cls(ambient_dim, R)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, zeros(0, ambient_dim))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, identity(ambient_dim))

    def contains(self, v) -> bool:
        v = np.asarray(v, dtype=object).ravel()
        if is_zero(v):
            return True
        if self.dim == 0:
            return False
        return rank(np.vstack([self.basis, v])) == self.dim

    def columns(self) -> np.ndarray:
        """Basis as columns, shape (ambient_dim, dim)."""
        return self.basis.T.copy()


def kernel_basis(M) -> Subspace:
    """Basis of {v : M v = 0}, as primitive integer vectors."""
    M = np.asarray(M, dtype=object)
    cols = M.shape[1]
    R, pivots = echelon(M)
    free = [c for c in range(cols) if c not in set(pivots)]
    vecs = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            if R[i, f] != 0:
                v[p] = Fraction(-R[i, f], R[i, p])
        vecs.append(primitive(v))
    basis = np.vstack(vecs) if vecs else zeros(0, cols)
    return Subspace(cols, basis)


def solve(M, b):
    """One exact solution x of M x = b, or None if the system is inconsistent."""
    M = np.asarray(M, dtype=object)
    b = np.asarray(b, dtype=object).reshape(-1, 1)
    aug = np.hstack([M, b])
    R, pivots = echelon(aug)
    n = M.shape[1]
    if n in pivots:
        return None
    x = [0] * n
    for i, p in enumerate(pivots):
        x[p] = to_rational(Fraction(R[i, n], R[i, p]))
    return np.array(x, dtype=object).reshape(-1, 1)


def inverse(M) -> np.ndarray:
    M = np.asarray(M, dtype=object)
    n = M.shape[0]
    if M.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    R, pivots = echelon(np.hstack([M, identity(n)]))
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("matrix is singular")
    out = zeros(n)
    for i in range(n):
        for j in range(n):
            out[i, j] = to_rational(Fraction(R[i, n + j], R[i, i]))
    return out


def _check_ambient(A: Subspace, B: Subspace):
    if A.ambient_dim != B.ambient_dim:
        raise ValueError(f"ambient mismatch: {A.ambient_dim} != {B.ambient_dim}")


def sum_dim(A: Subspace, B: Subspace) -> int:
    _check_ambient(A, B)
    if A.dim + B.dim == 0:
        return 0
    return rank(np.vstack([A.basis, B.basis]))


def sum_space(A: Subspace, B: Subspace) -> Subspace:
    _check_ambient(A, B)
    return Subspace.span(list(A.basis) + list(B.basis), A.ambient_dim)


def intersection_basis(A: Subspace, B: Subspace) -> Subspace:
    _check_ambient(A, B)
    if A.dim == 0 or B.dim == 0:
        return Subspace.zero(A.ambient_dim)
    # x A = y B  <=>  (x, -y) in ker [A; B]^T
    K = kernel_basis(np.vstack([A.basis, -B.basis]).T)
    vecs = [K.basis[i, :A.dim].dot(A.basis) for i in range(K.dim)]
    return Subspace.span(vecs, A.ambient_dim)


def make_rng(seed: int | Sequence[int]) -> np.random.Generator:
    """Deterministic generator; a tuple seed derives an independent child stream."""
    if isinstance(seed, (int, np.integer)):
        seed = [int(seed)]
    return np.random.default_rng(np.random.SeedSequence([int(s) & 0xFFFFFFFFFFFFFFFF for s in seed]))


def random_vector(dim: int, height: int, rng: np.random.Generator) -> np.ndarray:
    """Column vector with integer entries uniform in [-height, height]."""
    if height < 1:
        raise ValueError("height must be >= 1")
    vals = rng.integers(-height, height + 1, size=dim)
    return np.array([int(v) for v in vals], dtype=object).reshape(dim, 1)


def random_matrix(rows: int, cols: int, height: int, rng: np.random.Generator) -> np.ndarray:
    return random_vector(rows * cols, height, rng).reshape(rows, cols)


def random_invertible(n: int, height: int, rng: np.random.Generator, tries: int = 100) -> np.ndarray:
    for _ in range(tries):
        g = random_matrix(n, n, height, rng)
        if rank(g) == n:
            return g
    raise RuntimeError("failed to sample an invertible matrix")


def format_rational(x) -> str:
    x = to_rational(x)
    return str(x)
