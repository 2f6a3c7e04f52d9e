"""
gl_n and sl_n as concrete matrix Lie algebras.

Subalgebras are handled through explicit bases of n x n rational matrices.
Linear functionals on gl_n are represented by matrices via the trace
pairing xi(y) = tr(M y); for sl_n the matrix is defined modulo scalars.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import ratlin
from .partitions import Partition
from .ratlin import Subspace, identity, rank, zeros

GL, SL = "GL", "SL"


@dataclass(frozen=True)
class AlgebraKind:
    family: str
    n: int

    def __post_init__(self):
        if self.family not in (GL, SL):
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 2:
            raise ValueError("n must be >= 2")

    @property
    def dim(self) -> int:
        return self.n ** 2 - (1 if self.family == SL else 0)

    def __str__(self):
        return f"{self.family.lower()}_{self.n}"


def gl(n: int) -> AlgebraKind:
    return AlgebraKind(GL, n)


def sl(n: int) -> AlgebraKind:
    return AlgebraKind(SL, n)


def vec(m: np.ndarray) -> np.ndarray:
    return np.asarray(m, dtype=object).reshape(-1)


def unvec(v, n: int) -> np.ndarray:
    return np.asarray(v, dtype=object).reshape(n, n)


def _int_stack(mats: Sequence[np.ndarray]) -> np.ndarray:
    """Stack of primitive integer rescalings; int64 when small enough."""
    n = mats[0].shape[0]
    rows = np.vstack([ratlin.primitive(vec(m)) for m in mats]) if mats else zeros(0, 0)
    big = max((abs(int(x)) for x in rows.ravel()), default=0)
    if big < 2 ** 20:
        rows = rows.astype(np.int64)
    return rows.reshape(len(mats), n, n)


def _bracket_tensor(S: np.ndarray) -> np.ndarray:
    """C[a, b] = [S_a, S_b] for a stack S of shape (d, n, n)."""
    P = np.einsum("aij,bjk->abik", S, S)
    return P - P.transpose(1, 0, 2, 3)


@dataclass(eq=False)
class SubalgebraBasis:
    """A linearly independent family of n x n matrices spanning a subalgebra of gl_n or sl_n."""

    kind: AlgebraKind
    mats: tuple
    label: str = ""
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return len(self.mats)

    @property
    def n(self) -> int:
        return self.kind.n

    @classmethod
    def span(cls, kind: AlgebraKind, mats, label: str = "") -> "SubalgebraBasis":
        """Basis of the linear span of ``mats`` (dependencies removed, integer entries)."""
        mats = list(mats)
        n = kind.n
        if not mats:
            return cls(kind, (), label)
        for m in mats:
            if m.shape != (n, n):
                raise ValueError(f"expected {n}x{n} matrices, got {m.shape}")
            if kind.family == SL and ratlin.trace(m) != 0:
                raise ValueError("sl_n subalgebra with a non-traceless matrix")
        space = Subspace.span([vec(m) for m in mats], n * n)
        return cls(kind, tuple(unvec(v, n) for v in space.basis), label)

    def vectors(self) -> np.ndarray:
        if self.dim == 0:
            return zeros(0, self.n ** 2)
        return np.vstack([vec(m) for m in self.mats])

    def subspace(self) -> Subspace:
        if "space" not in self._cache:
            self._cache["space"] = Subspace.span(list(self.vectors()), self.n ** 2)
        return self._cache["space"]

    def int_stack(self) -> np.ndarray:
        if "stack" not in self._cache:
            self._cache["stack"] = _int_stack(list(self.mats))
        return self._cache["stack"]

    def bracket_tensor(self) -> np.ndarray:
        if "brackets" not in self._cache:
            self._cache["brackets"] = _bracket_tensor(self.int_stack())
        return self._cache["brackets"]

    def contains(self, m) -> bool:
        return self.subspace().contains(vec(m))

    def conjugate(self, g: np.ndarray, g_inv: np.ndarray | None = None) -> "SubalgebraBasis":
        """g h g^{-1}."""
        g_inv = ratlin.inverse(g) if g_inv is None else g_inv
        return SubalgebraBasis.span(self.kind, [g.dot(m).dot(g_inv) for m in self.mats],
                                    self.label)

    def with_kind(self, kind: AlgebraKind) -> "SubalgebraBasis":
        return SubalgebraBasis(kind, self.mats, self.label)


def bracket(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    X, Y = np.asarray(X, dtype=object), np.asarray(Y, dtype=object)
    if X.shape != Y.shape or X.shape[0] != X.shape[1]:
        raise ValueError(f"bracket of incompatible shapes {X.shape}, {Y.shape}")
    return ratlin.canonical(X.dot(Y) - Y.dot(X))


def _normalized_unique_rows(V: np.ndarray) -> np.ndarray:
    """Drop zero rows and rows equal up to a nonzero scalar (integer input)."""
    if V.dtype != object:
        V = V[np.any(V != 0, axis=1)]
        if len(V) == 0:
            return V.astype(object)
        g = np.gcd.reduce(V, axis=1)
        V = V // g[:, None]
        lead = V[np.arange(len(V)), np.argmax(V != 0, axis=1)]
        V = V * np.sign(lead)[:, None]
        return np.unique(V, axis=0).astype(object)
    seen = {}
    for row in V:
        if np.any(row != 0):
            p = ratlin.primitive(row)
            seen.setdefault(tuple(p), p)
    if not seen:
        return zeros(0, V.shape[1])
    return np.vstack(list(seen.values()))


def is_subalgebra(mats) -> bool:
    """True iff the span of ``mats`` is closed under the commutator.

    Raises ValueError when the given matrices are linearly dependent.
    """
    if isinstance(mats, SubalgebraBasis):
        mats = list(mats.mats)
    mats = [np.asarray(m, dtype=object) for m in mats]
    if not mats:
        return True
    n = mats[0].shape[0]
    d = len(mats)
    V = np.vstack([vec(m) for m in mats])
    if rank(V) != d:
        raise ValueError("input basis is linearly dependent")
    C = _bracket_tensor(_int_stack(mats))
    iu = np.triu_indices(d, 1)
    W = _normalized_unique_rows(C[iu].reshape(-1, n * n))
    if len(W) == 0:
        return True
    return rank(np.vstack([ratlin.integer_rows(V), W])) == d


def full_algebra(kind: AlgebraKind) -> SubalgebraBasis:
    n = kind.n
    mats = [ratlin.unit(n, i, j) for i in range(n) for j in range(n) if i != j]
    if kind.family == GL:
        mats += [ratlin.unit(n, i, i) for i in range(n)]
    else:
        mats += [ratlin.unit(n, i, i) - ratlin.unit(n, i + 1, i + 1) for i in range(n - 1)]
    return SubalgebraBasis.span(kind, mats, str(kind))


def gl_to_sl(h: SubalgebraBasis) -> SubalgebraBasis:
    """(h + kI) intersected with sl_n."""
    n = h.n
    I = identity(n)
    mats = [ratlin.canonical(m - Fraction(ratlin.trace(m), n) * I) for m in h.mats]
    mats = [m for m in mats if not ratlin.is_zero(m)]
    return SubalgebraBasis.span(sl(n), mats, h.label)


def sl_to_gl(h: SubalgebraBasis) -> SubalgebraBasis:
    return SubalgebraBasis.span(gl(h.n), h.mats, h.label)


def derived_series_dims(h: SubalgebraBasis) -> list[int]:
    """Dimensions of h, [h,h], [[h,h],[h,h]], ... until stable."""
    dims = [h.dim]
    cur = h
    while cur.dim:
        C = cur.bracket_tensor()
        d = cur.dim
        iu = np.triu_indices(d, 1)
        W = C[iu].reshape(-1, h.n ** 2)
        W = _normalized_unique_rows(W)
        nxt = SubalgebraBasis.span(h.kind, [unvec(w, h.n) for w in W]) if len(W) else \
            SubalgebraBasis(h.kind, ())
        if nxt.dim == cur.dim:
            break
        dims.append(nxt.dim)
        cur = nxt
    return dims


def is_solvable(h: SubalgebraBasis) -> bool:
    return derived_series_dims(h)[-1] == 0


def jordan_nilpotent(lam: Partition) -> np.ndarray:
    """Block-diagonal Jordan matrix with superdiagonal ones: x v_j = v_{j-1} in each block."""
    lam = Partition(lam)
    n = lam.n
    e = zeros(n)
    start = 0
    for size in lam:
        for j in range(start + 1, start + size):
            e[j - 1, j] = 1
        start += size
    return e


def block_starts(lam: Partition) -> list[int]:
    out, s = [], 0
    for p in Partition(lam):
        out.append(s)
        s += p
    return out


def commutant_equations(A: np.ndarray) -> np.ndarray:
    """Matrix L with L vec(X) = vec(XA - AX) (row-major vec)."""
    A = np.asarray(A, dtype=object)
    n = A.shape[0]
    I = identity(n)
    return np.kron(I, A.T) - np.kron(A, I)


def trace_row(n: int) -> np.ndarray:
    return vec(identity(n)).reshape(1, -1)


def centralizer_basis(e: np.ndarray, kind: AlgebraKind) -> SubalgebraBasis:
    """Basis of {X : Xe = eX}, intersected with sl_n when kind is SL."""
    n = kind.n
    L = commutant_equations(e)
    if kind.family == SL:
        L = np.vstack([L, trace_row(n)])
    K = ratlin.kernel_basis(L)
    return SubalgebraBasis(kind, tuple(unvec(v, n) for v in K.basis), "centralizer")


@dataclass(frozen=True)
class Sl2Triple:
    e: np.ndarray
    h: np.ndarray
    f: np.ndarray

    def relations_hold(self) -> bool:
        return (np.array_equal(bracket(self.h, self.e), 2 * self.e)
                and np.array_equal(bracket(self.h, self.f), -2 * self.f)
                and np.array_equal(bracket(self.e, self.f), self.h))


def sl2_triple(lam: Partition) -> Sl2Triple:
    """Standard sl2-triple through jordan_nilpotent(lam)."""
    lam = Partition(lam)
    n = lam.n
    e = jordan_nilpotent(lam)
    h, f = zeros(n), zeros(n)
    for s, size in zip(block_starts(lam), lam):
        for i in range(size):
            h[s + i, s + i] = size - 1 - 2 * i
        for i in range(1, size):
            f[s + i, s + i - 1] = i * (size - i)
    return Sl2Triple(e, h, f)


@dataclass(frozen=True)
class Functional:
    """xi(y) = tr(xi_matrix . y) on gl_n or sl_n."""

    kind: AlgebraKind
    xi_matrix: np.ndarray

    def __call__(self, y) -> Fraction:
        return ratlin.trace(self.xi_matrix.dot(y))


def kirillov_form_matrix(h: SubalgebraBasis, xi: Functional) -> np.ndarray:
    """M_ij = xi([m_i, m_j]) on the stored basis of h."""
    if xi.kind.n != h.n:
        raise ValueError("functional and subalgebra live in different gl_n")
    d = h.dim
    if d == 0:
        return zeros(0, 0)
    out = zeros(d)
    for i in range(d):
        for j in range(i + 1, d):
            v = xi(bracket(h.mats[i], h.mats[j]))
            out[i, j], out[j, i] = v, -v
    return out


def _kirillov_rank_integer(h: SubalgebraBasis, M: np.ndarray) -> int:
    """Rank of the Kirillov form on the integer rescaled basis (same rank as on h)."""
    C = h.bracket_tensor()
    d, n = h.dim, h.n
    Mt = np.asarray(M, dtype=object).T
    if C.dtype != object and max(abs(int(x)) for x in Mt.ravel()) < 2 ** 20:
        K = C.reshape(d, d, n * n).dot(np.asarray(Mt, dtype=np.int64).reshape(-1))
        K = K.astype(object)
    else:
        K = C.astype(object).reshape(d, d, n * n).dot(Mt.reshape(-1))
    return rank(K)


@dataclass(frozen=True)
class IndexEstimate:
    upper_bound_on_index: int
    max_rank_seen: int
    dim: int
    trials_run: int
    ranks: tuple


def trial_rng(root: int, *keys) -> np.random.Generator:
    return ratlin.make_rng((root, *keys))


def _root_seed(rng) -> int:
    if isinstance(rng, np.random.Generator):
        return int(rng.integers(0, 2 ** 62))
    return int(rng)


def index_monte_carlo(h: SubalgebraBasis, trials: int = 8, height: int = 10, rng=1,
                      early_stop: bool = True) -> IndexEstimate:
    """Upper bound for ind h = dim h - max rank of the Kirillov form over random xi.

    Trial t uses an independent generator derived from (root seed, t), so the
    bound can only decrease as ``trials`` grows.  With ``early_stop`` the loop
    ends once the bound equals dim h mod 2, which no further trial can beat.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    root = _root_seed(rng)
    d, n = h.dim, h.n
    best = 0
    ranks = []
    floor_ = d % 2
    for t in range(trials):
        M = ratlin.random_matrix(n, n, height, trial_rng(root, t))
        r = _kirillov_rank_integer(h, M) if d else 0
        ranks.append(r)
        best = max(best, r)
        if early_stop and d - best == floor_:
            break
    return IndexEstimate(d - best, best, d, len(ranks), tuple(ranks))


def centralizer_of_functional(xi: Functional) -> SubalgebraBasis:
    """Stabiliser of xi: the matrix centraliser of xi_matrix (traceless for SL)."""
    return centralizer_basis(xi.xi_matrix, xi.kind)


def partition_of_nilpotent(e: np.ndarray) -> Partition:
    """Jordan type of a nilpotent matrix from the ranks of its powers."""
    e = np.asarray(e, dtype=object)
    n = e.shape[0]
    ranks = [n]
    p = identity(n)
    while ranks[-1] > 0:
        p = p.dot(e)
        r = rank(p)
        if r == ranks[-1]:
            raise ValueError("matrix is not nilpotent")
        ranks.append(r)
    # number of blocks of size >= j is rank(e^{j-1}) - rank(e^j)
    ge = [ranks[j - 1] - ranks[j] for j in range(1, len(ranks))]
    return Partition(_from_ge(ge))


def _from_ge(ge: list[int]) -> list[int]:
    parts = []
    for j in range(len(ge)):
        exactly = ge[j] - (ge[j + 1] if j + 1 < len(ge) else 0)
        parts += [j + 1] * exactly
    return parts
