"""
Explicit complementary subalgebras for nilpotent orbits in gl_n / sl_n.

Vectors v_1..v_n of the flag constructions are the Jordan basis of
jordan_nilpotent(lam): blocks in decreasing size, x v_j = v_{j-1} inside a
block.  Indices in the docstrings are 1-based to match that convention.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .. import ratlin
from ..lie import (GL, AlgebraKind, SubalgebraBasis, gl, gl_to_sl, jordan_nilpotent)
from ..partitions import Partition, power_partition, three_part_partition, tilde_orbit
from ..ratlin import unit, zeros
from .pairs import FlagSpec, flag_stabilizer


def power_nilpotent(n: int, k: int) -> np.ndarray:
    """k-th power of the regular nilpotent sum e_{j,j+1}: the identity block I_{n-k} in the north-east."""
    e = zeros(n)
    for i in range(n - k):
        e[i, i + k] = 1
    return e


def witness_fig1(n: int, k: int) -> SubalgebraBasis:
    """Complement in gl_n to the centraliser of the k-th power of a regular nilpotent.

    With n = kl + q (0 <= q < k): the first q rows vanish, the next k - q rows
    vanish outside the first q columns, the last n - k rows are free.
    """
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    q = n % k
    mats = [unit(n, i, j) for i in range(k, n) for j in range(n)]
    mats += [unit(n, i, j) for i in range(q, k) for j in range(q)]
    if not mats:
        return SubalgebraBasis(gl(n), (), f"fig1 n={n} k={k}")
    return SubalgebraBasis.span(gl(n), mats, f"fig1 n={n} k={k}")


def witness_solvable_spherical(n: int, k: int) -> SubalgebraBasis:
    """Solvable complement for the spherical powers (2k >= n).

    Blocks of sizes (r, 2k - n, r) with r = n - k:
        [[D1, 0, 0], [*, 0, 0], [*, *, D2]]
    D1 lower triangular with diagonal t, D2 upper triangular with diagonal -t.
    """
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    if 2 * k < n:
        raise ValueError("solvable variant needs 2k >= n (l = 1 or k = n/2)")
    r = n - k
    B1, B2, B3 = range(0, r), range(r, k), range(k, n)
    mats = [unit(n, i, j) for i in B1 for j in B1 if i > j]
    mats += [unit(n, i, i) - unit(n, k + i, k + i) for i in range(r)]
    mats += [unit(n, i, j) for i in B2 for j in B1]
    mats += [unit(n, i, j) for i in B3 for j in B1]
    mats += [unit(n, i, j) for i in B3 for j in B2]
    mats += [unit(n, i, j) for i in B3 for j in B3 if i < j]
    if not mats:
        return SubalgebraBasis(gl(n), (), f"solvable n={n} k={k}")
    return SubalgebraBasis.span(gl(n), mats, f"solvable n={n} k={k}")


def _v(n: int, *idx) -> np.ndarray:
    """Sum of basis vectors v_i (1-based)."""
    out = zeros(1, n)[0]
    for i in idx:
        out[i - 1] += 1
    return out


def witness_flag_two_part(n: int) -> FlagSpec:
    """Flag for the tilde orbit: (m+1, m-1) if n = 2m, (m+2, m-1) if n = 2m+1.

    n = 2m:   V1 = <v_{m+1}>,  V2 = <v_{m+1}, v_m + v_{2m}>
    n = 2m+1: V2 = <v_{m+2}, v_{m+1} + v_{2m+1}>
    """
    if n < 4:
        raise ValueError("need n >= 4")
    m, r = divmod(n, 2)
    if r == 0:
        a = _v(n, m + 1)
        return FlagSpec.from_vectors(n, [a], [a, _v(n, m, 2 * m)])
    return FlagSpec.from_vectors(n, [_v(n, m + 2), _v(n, m + 1, 2 * m + 1)])


def witness_flag_three_part(n: int) -> FlagSpec:
    """Flag for the three-part orbit selected by n mod 3.

    n = 3m:   V1 = <v_{m+2}>, V3 = <v_{m+2}, v_{m+1}+v_{2m+1}, v_m+v_{3m}>
    n = 3m+1: V3 = <v_{m+3}, v_{m+2}+v_{2m+2}, v_{m+1}+v_{3m+1}>
    n = 3m+2: V3 = <v_{m+3}, v_{m+1}+v_{2m+3}, v_{m+2}+v_{3m+2}>
    """
    if n < 4:
        raise ValueError("need n >= 4")
    if three_part_partition(n) is None:
        raise ValueError(f"the three-part partition for n={n} has a nonpositive part")
    m, r = divmod(n, 3)
    if r == 0:
        a = _v(n, m + 2)
        return FlagSpec.from_vectors(n, [a], [a, _v(n, m + 1, 2 * m + 1), _v(n, m, 3 * m)])
    if r == 1:
        return FlagSpec.from_vectors(
            n, [_v(n, m + 3), _v(n, m + 2, 2 * m + 2), _v(n, m + 1, 3 * m + 1)])
    return FlagSpec.from_vectors(
        n, [_v(n, m + 3), _v(n, m + 1, 2 * m + 3), _v(n, m + 2, 3 * m + 2)])


@dataclass
class Witness:
    """A candidate complement together with the nilpotent it is complementary to."""

    tag: str
    partition: Partition
    h: SubalgebraBasis
    e: np.ndarray
    data: dict = field(default_factory=dict)
    flag: FlagSpec | None = None

    def to_json(self) -> dict:
        out = {"kind": self.tag, "algebra": str(self.h.kind), **self.data}
        if self.flag is not None:
            out["flag"] = self.flag.to_json()
        else:
            out["basis"] = [[[str(x) for x in row] for row in m] for m in self.h.mats]
            out["e"] = [[str(x) for x in row] for row in self.e]
        return out


def _in_kind(h: SubalgebraBasis, kind: AlgebraKind) -> SubalgebraBasis:
    if kind.family == GL:
        return h
    return gl_to_sl(h)


def fig1_witness(n: int, k: int, kind: AlgebraKind) -> Witness:
    h = _in_kind(witness_fig1(n, k), kind)
    return Witness("fig1", power_partition(n, k), h, power_nilpotent(n, k), {"n": n, "k": k})


def solvable_witness(n: int, k: int, kind: AlgebraKind) -> Witness:
    # traceless already: diagonal entries come in pairs t, -t
    h = witness_solvable_spherical(n, k)
    if kind.family != GL:
        h = SubalgebraBasis.span(kind, h.mats, h.label)
    return Witness("solvable", power_partition(n, k), h, power_nilpotent(n, k), {"n": n, "k": k})


def flag2_witness(n: int, kind: AlgebraKind) -> Witness:
    flag = witness_flag_two_part(n)
    lam = tilde_orbit(n)
    return Witness("flag2", lam, flag_stabilizer(flag, kind), jordan_nilpotent(lam), {"n": n}, flag)


def flag3_witness(n: int, kind: AlgebraKind) -> Witness:
    flag = witness_flag_three_part(n)
    lam = three_part_partition(n)
    return Witness("flag3", lam, flag_stabilizer(flag, kind), jordan_nilpotent(lam), {"n": n}, flag)


def parabolic_conjugated_to_flag(flag: FlagSpec, kind: AlgebraKind) -> SubalgebraBasis:
    """g p g^{-1} for the standard parabolic of the flag type and g an adapted basis."""
    from ..seaweed import Composition, SeaweedSpec, seaweed_basis

    p = seaweed_basis(SeaweedSpec(Composition(flag.composition()), Composition((flag.n,))), kind)
    g = flag.adapted_basis()
    return p.conjugate(g)


def matrices_from_json(rows) -> list[np.ndarray]:
    return [ratlin.ratmat(m) for m in rows]
