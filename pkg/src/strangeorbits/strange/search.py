"""
Randomised searches for complementary subalgebras.

The complement condition is Zariski-open in the conjugating matrix, so once
one conjugate of h0 works almost all of them do; a handful of integer trials
is usually enough.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .. import ratlin
from ..lie import SL, AlgebraKind, SubalgebraBasis, centralizer_basis, is_subalgebra, jordan_nilpotent
from ..partitions import Partition, orbit_dim
from ..ratlin import rank, unit
from ..seaweed import composition_from_A, seaweed_positions, SeaweedSpec, Composition


@dataclass(frozen=True)
class SearchHit:
    h: SubalgebraBasis
    g: np.ndarray
    trial: int


def _meets_trivially(gx_vectors: np.ndarray, gx_dim: int, h: SubalgebraBasis) -> bool:
    return rank(np.vstack([gx_vectors, h.vectors()])) == gx_dim + h.dim


def conjugate_search(lam: Partition, h0: SubalgebraBasis, trials: int, height: int,
                     rng: np.random.Generator) -> SearchHit | None:
    """Like random_conjugate_search, but also reports the conjugator and trial number."""
    lam = Partition(lam)
    if h0.dim != orbit_dim(lam) or h0.n != lam.n:
        return None
    gx = centralizer_basis(jordan_nilpotent(lam), h0.kind)
    gxv = gx.vectors()
    for t in range(trials):
        g = ratlin.random_invertible(lam.n, height, rng)
        h = h0.conjugate(g)
        if _meets_trivially(gxv, gx.dim, h):
            return SearchHit(h, g, t)
    return None


def random_conjugate_search(lam: Partition, h0: SubalgebraBasis, trials: int, height: int,
                            rng: np.random.Generator) -> SubalgebraBasis | None:
    """First conjugate g h0 g^{-1} meeting the centraliser of jordan_nilpotent(lam) trivially."""
    hit = conjugate_search(lam, h0, trials, height, rng)
    return None if hit is None else hit.h


def hook_candidate(n: int, kind: AlgebraKind, rng: np.random.Generator,
                   height: int = 10) -> SubalgebraBasis:
    """T-stable candidate of dimension dim O(3,1^(n-3)) built from root spaces.

    Nilradical of the parabolic with Levi roots alpha_3..alpha_{n-3}, the root
    space of -alpha_1, and a random 3-dimensional slice of the diagonal that
    contains the coroot of alpha_1 (needed for closure).
    """
    if n < 4:
        raise ValueError("need n >= 4")
    A = range(3, n - 2)
    c = composition_from_A(A, n)
    spec = SeaweedSpec(c, Composition((n,)))
    blocks = c.block_of()
    mats = [unit(n, i, j) for i, j in seaweed_positions(spec) if blocks[i] < blocks[j]]
    mats.append(unit(n, 1, 0))
    coroot = unit(n, 0, 0) - unit(n, 1, 1)
    mats.append(coroot)
    diag = [unit(n, i, i) - unit(n, i + 1, i + 1) for i in range(n - 1)] if kind.family == SL \
        else [unit(n, i, i) for i in range(n)]
    for _ in range(2):
        coeffs = ratlin.random_vector(len(diag), height, rng).ravel()
        mats.append(sum((int(a) * d for a, d in zip(coeffs, diag)), ratlin.zeros(n)))
    h = SubalgebraBasis.span(kind, mats, "hook T-stable")
    return h


def hook_search(lam: Partition, kind: AlgebraKind, trials: int, height: int,
                rng: np.random.Generator, tori: int = 5) -> SearchHit | None:
    """Search over random tori and random conjugates for lam = (3, 1^(n-3))."""
    lam = Partition(lam)
    n = lam.n
    if lam != Partition([3] + [1] * (n - 3)):
        return None
    for _ in range(tori):
        h0 = hook_candidate(n, kind, rng, height)
        if h0.dim != orbit_dim(lam) or not is_subalgebra(h0):
            continue
        hit = conjugate_search(lam, h0, trials, height, rng)
        if hit is not None:
            return hit
    return None
