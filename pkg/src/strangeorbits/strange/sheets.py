"""
Propagating a complement along the Slodowy slice x + g^y through a nilpotent x.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import sympy

from .. import ratlin
from ..lie import SubalgebraBasis, centralizer_basis, sl2_triple
from ..partitions import Partition
from .pairs import intersection_dim


@dataclass
class SheetReport:
    samples: int
    samples_ok: int
    resampled: int
    regular_semisimple_hit: bool
    failures: list = field(default_factory=list)

    @property
    def all_ok(self) -> bool:
        return self.samples_ok == self.samples

    def to_json(self) -> dict:
        return {"samples": self.samples, "samples_ok": self.samples_ok,
                "resampled": self.resampled,
                "regular_semisimple_hit": self.regular_semisimple_hit}


def is_regular_semisimple(z: np.ndarray) -> bool:
    """Distinct eigenvalues, i.e. a squarefree characteristic polynomial."""
    lam = sympy.Symbol("lam")
    p = sympy.Matrix(z.tolist()).charpoly(lam).as_expr()
    return sympy.degree(sympy.gcd(p, sympy.diff(p, lam)), lam) == 0


def complement_at(z: np.ndarray, h: SubalgebraBasis) -> bool:
    """g^z meets h trivially (the dimension half of the complement test)."""
    return intersection_dim(centralizer_basis(z, h.kind), h) == 0


def slice_point(lam: Partition, coeffs, kind) -> np.ndarray:
    """x + sum c_i y_i over the stored basis y_i of the centraliser of f."""
    tr = sl2_triple(lam)
    ys = centralizer_basis(tr.f, kind).mats
    z = tr.e.copy()
    for c, y in zip(coeffs, ys):
        z = z + int(c) * y
    return z


def sheet_check(lam: Partition, h: SubalgebraBasis, samples: int, rng: np.random.Generator,
                height: int = 10, extra_points=()) -> SheetReport:
    """Test the complement condition at random slice points (plus any given points).

    A failing random sample gets one fresh replacement before it counts as a
    failure: the condition is generic, so it can fail on a closed subset.
    """
    lam = Partition(lam)
    kind = h.kind
    nbasis = centralizer_basis(sl2_triple(lam).f, kind).dim
    ok = resampled = 0
    rs_hit = False
    failures = []
    points = [(z, False) for z in extra_points]
    points += [(None, True)] * samples
    for z, random_point in points:
        tries = 2 if random_point else 1
        good = False
        for attempt in range(tries):
            if random_point:
                z = slice_point(lam, ratlin.random_vector(nbasis, height, rng).ravel(), kind)
                resampled += attempt
            if complement_at(z, h):
                good = True
                break
        if good:
            ok += 1
            rs_hit = rs_hit or is_regular_semisimple(z)
        else:
            failures.append(z)
    return SheetReport(len(points), ok, resampled, rs_hit, failures)
