"""
Partitions of n and the orbit/centraliser dimension formulas for nilpotent
orbits in sl_n.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering


@total_ordering
class Partition:
    """Weakly decreasing tuple of positive parts.  Canonicalised on construction."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        if isinstance(parts, Partition):
            parts = parts.parts
        ps = []
        for p in parts:
            p = int(p)
            if p < 0:
                raise ValueError(f"negative part {p}")
            if p:
                ps.append(p)
        if not ps:
            raise ValueError("a partition needs at least one positive part")
        self.parts = tuple(sorted(ps, reverse=True))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse '5,2,2' or exponent shorthand '3,1^4'."""
        parts = []
        for tok in re.split(r"[,\s]+", text.strip().strip("()")):
            if not tok:
                continue
            if "^" in tok:
                base, exp = tok.split("^")
                parts += [int(base)] * int(exp)
            else:
                parts.append(int(tok))
        return cls(parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == other
        return NotImplemented

    def __lt__(self, other):
        return self.parts < Partition(other).parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition({self.parts})"

    def __str__(self):
        return ",".join(map(str, self.parts))

    def compact(self) -> str:
        """Exponent notation, e.g. '3,2^2,1'."""
        out, i = [], 0
        while i < len(self.parts):
            j = i
            while j < len(self.parts) and self.parts[j] == self.parts[i]:
                j += 1
            out.append(str(self.parts[i]) if j - i == 1 else f"{self.parts[i]}^{j - i}")
            i = j
        return ",".join(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order, (n) first."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []

    def rec(rest, cap, acc):
        if rest == 0:
            out.append(Partition(acc))
            return
        for p in range(min(rest, cap), 0, -1):
            rec(rest - p, p, acc + [p])

    rec(n, n, [])
    return out


def dual(lam: Partition) -> Partition:
    """Conjugate partition: mu_j = #{i : lam_i >= j}."""
    lam = Partition(lam)
    return Partition([sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1)])


def centralizer_dim_minsum(lam: Partition) -> int:
    """sum_{i,j} min(lam_i, lam_j): dimension of the gl_n centraliser of a Jordan matrix."""
    lam = Partition(lam)
    return sum(min(a, b) for a in lam for b in lam)


@dataclass(frozen=True)
class OrbitStats:
    partition: Partition
    orbit_dim: int
    centralizer_dim_gl: int
    centralizer_dim_sl: int
    spherical: bool
    rank_of_e: int


def orbit_dim(lam: Partition) -> int:
    lam = Partition(lam)
    return lam.n ** 2 - sum(m * m for m in dual(lam))


def orbit_stats(lam: Partition) -> OrbitStats:
    lam = Partition(lam)
    n = lam.n
    cgl = sum(m * m for m in dual(lam))
    return OrbitStats(
        partition=lam,
        orbit_dim=n * n - cgl,
        centralizer_dim_gl=cgl,
        centralizer_dim_sl=cgl - 1,
        spherical=lam[0] <= 2,
        rank_of_e=n - len(lam),
    )


def dominates(lam: Partition, nu: Partition) -> bool:
    """Dominance order: every prefix sum of lam is >= that of nu."""
    lam, nu = Partition(lam), Partition(nu)
    if lam.n != nu.n:
        raise ValueError(f"partitions of different n: {lam.n} vs {nu.n}")
    a = b = 0
    for j in range(max(len(lam), len(nu))):
        a += lam[j] if j < len(lam) else 0
        b += nu[j] if j < len(nu) else 0
        if a < b:
            return False
    return True


def power_partition(n: int, k: int) -> Partition:
    """Jordan type of the k-th power of a regular nilpotent in gl_n: ((l+1)^q, l^(k-q))."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    l, q = divmod(n, k)
    return Partition([l + 1] * q + [l] * (k - q))


def power_orbit_dim(n: int, k: int) -> int:
    l, q = divmod(n, k)
    return n * (n - k) + q * (k - q)


def is_power_partition(lam: Partition) -> int | None:
    """Smallest k with power_partition(n, k) == lam, or None."""
    lam = Partition(lam)
    for k in range(1, lam.n + 1):
        if power_partition(lam.n, k) == lam:
            return k
    return None


def tilde_orbit(n: int) -> Partition:
    """(m+1, m-1) for n = 2m and (m+2, m-1) for n = 2m+1."""
    if n < 4:
        raise ValueError("tilde orbit needs n >= 4")
    m, r = divmod(n, 2)
    return Partition((m + 1, m - 1) if r == 0 else (m + 2, m - 1))


def three_part_partition(n: int) -> Partition | None:
    """The three-part partition of n carrying a flag witness, by n mod 3.

    n = 3m: (m+2, m-1, m-1);  n = 3m+1: (m+3, m-1, m-1);  n = 3m+2: (m+3, m, m-1).
    None when a part would be nonpositive.
    """
    m, r = divmod(n, 3)
    parts = [(m + 2, m - 1, m - 1), (m + 3, m - 1, m - 1), (m + 3, m, m - 1)][r]
    if min(parts) < 1:
        return None
    return Partition(parts)


def thm62_excluded(lam: Partition) -> bool:
    """Dimension obstruction: non-principal and strictly larger than the tilde orbit."""
    lam = Partition(lam)
    n = lam.n
    if n < 4:
        raise ValueError("obstruction is stated for n >= 4")
    if lam == Partition([n]):
        return False
    return orbit_dim(lam) > orbit_dim(tilde_orbit(n))


def conj75_partition(n: int) -> Partition:
    """Unique orbit with lam_1 = 3, lam_2 < 3 and dim = dim b + ind b."""
    if n < 3:
        raise ValueError("need n >= 3")
    k, r = divmod(n, 2)
    if r == 0:
        return Partition([3] + [2] * (k - 2) + [1])
    return Partition([3] + [2] * (k - 1))
