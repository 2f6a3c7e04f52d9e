"""
Complement checks g = g^xi (+) h, the (a, b) invariants, and flag stabilisers.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .. import ratlin
from ..lie import (SL, AlgebraKind, Functional, SubalgebraBasis, centralizer_of_functional,
                  is_subalgebra, jordan_nilpotent, partition_of_nilpotent, trace_row, unvec)
from ..partitions import Partition, orbit_dim
from ..ratlin import Subspace, rank


@dataclass(frozen=True)
class FlagSpec:
    """Nested subspaces V_1 < V_2 < ... of Q^n, dims strictly increasing and < n."""

    n: int
    spaces: tuple

    def __post_init__(self):
        spaces = tuple(self.spaces)
        dims = [V.dim for V in spaces]
        if any(V.ambient_dim != self.n for V in spaces):
            raise ValueError("flag subspaces must live in Q^n")
        if any(not 0 < d < self.n for d in dims) or dims != sorted(set(dims)):
            raise ValueError(f"flag dims must be strictly increasing in (0, n): {dims}")
        for V, W in zip(spaces, spaces[1:]):
            if any(not W.contains(v) for v in V.basis):
                raise ValueError("flag is not nested")
        object.__setattr__(self, "spaces", spaces)

    @classmethod
    def from_vectors(cls, n: int, *levels) -> "FlagSpec":
        """Each level is a list of vectors spanning V_i (given cumulatively)."""
        return cls(n, tuple(Subspace.span(vs, n) for vs in levels))

    @property
    def dims(self) -> tuple:
        return tuple(V.dim for V in self.spaces)

    def composition(self) -> tuple:
        cuts = (0,) + self.dims + (self.n,)
        return tuple(b - a for a, b in zip(cuts, cuts[1:]))

    def adapted_basis(self) -> np.ndarray:
        """Invertible g whose first dim V_i columns span V_i for every i."""
        cols = []
        for V in self.spaces:
            for v in V.basis:
                if rank(np.vstack(cols + [v])) > len(cols):
                    cols.append(v)
        for i in range(self.n):
            e = ratlin.zeros(1, self.n)[0]
            e[i] = 1
            if len(cols) == self.n:
                break
            if rank(np.vstack(cols + [e])) > len(cols):
                cols.append(e)
        return np.vstack(cols).T.copy()

    def to_json(self) -> dict:
        return {"n": self.n, "dims": list(self.dims),
                "spaces": [[[str(x) for x in v] for v in V.basis] for V in self.spaces]}


def flag_stabilizer(flag: FlagSpec, kind: AlgebraKind) -> SubalgebraBasis:
    """{X : X V_i <= V_i for all i}, traceless for SL."""
    n = flag.n
    if kind.n != n:
        raise ValueError("flag and algebra sizes differ")
    rows = []
    for V in flag.spaces:
        ann = ratlin.kernel_basis(V.basis)  # w with w . v = 0 for v in V
        for w in ann.basis:
            for v in V.basis:
                rows.append(np.multiply.outer(w, v).reshape(-1))
    if kind.family == SL:
        rows.append(trace_row(n)[0])
    if rows:
        K = ratlin.kernel_basis(np.vstack(rows))
        mats = tuple(unvec(b, n) for b in K.basis)
    else:
        mats = tuple(unvec(b, n) for b in ratlin.identity(n * n))
    return SubalgebraBasis(kind, mats, f"stab flag {list(flag.dims)}")


def flag_type_dim(composition, family: str = SL) -> int:
    c = list(composition)
    d = sum(c[i] * c[j] for i in range(len(c)) for j in range(i, len(c)))
    return d - 1 if family == SL else d


def ab_invariants(xi: Functional, h: SubalgebraBasis) -> tuple[int, int]:
    """a = codim(g^xi + h), b = dim(g^xi intersect h) inside g = h.kind."""
    if xi.kind != h.kind:
        raise ValueError(f"ambient mismatch: {xi.kind} vs {h.kind}")
    gx = centralizer_of_functional(xi).subspace()
    s = ratlin.sum_dim(gx, h.subspace())
    a = h.kind.dim - s
    b = gx.dim + h.dim - s
    return a, b


def intersection_dim(A: SubalgebraBasis, B: SubalgebraBasis) -> int:
    if A.dim == 0 or B.dim == 0:
        return 0
    return A.dim + B.dim - rank(np.vstack([A.vectors(), B.vectors()]))


@dataclass(frozen=True)
class PairReport:
    dim_g: int
    dim_orbit: int
    dim_h: int
    a: int
    b: int
    is_strange_pair: bool
    h_is_subalgebra: bool

    @property
    def intersection_dim(self) -> int:
        return self.b

    def to_json(self) -> dict:
        d = asdict(self)
        d["intersection_dim"] = self.b
        return d


def check_pair(lam: Partition, h: SubalgebraBasis, kind: AlgebraKind | None = None,
               e: np.ndarray | None = None) -> PairReport:
    """Full complement report for the nilpotent orbit of type lam and the subalgebra h.

    ``e`` defaults to jordan_nilpotent(lam); any other representative must
    have Jordan type lam.
    """
    lam = Partition(lam)
    kind = h.kind if kind is None else kind
    if h.n != lam.n or kind.n != lam.n:
        raise ValueError("h, kind and partition disagree on n")
    if e is None:
        e = jordan_nilpotent(lam)
    elif partition_of_nilpotent(e) != lam:
        raise ValueError("e does not have Jordan type lam")
    try:
        closed = is_subalgebra(h)
    except ValueError:
        closed = False
    a, b = ab_invariants(Functional(kind, e), h.with_kind(kind))
    dim_o = orbit_dim(lam)
    strange = closed and a == 0 and b == 0 and h.dim == dim_o
    return PairReport(kind.dim, dim_o, h.dim, a, b, strange, closed)


def is_complement(gx: SubalgebraBasis, h: SubalgebraBasis) -> bool:
    """g^x (+) h = g, from dimensions and a trivial intersection."""
    if gx.dim + h.dim != h.kind.dim:
        return False
    return intersection_dim(gx, h) == 0
