"""
Standard parabolic and seaweed subalgebras of gl_n / sl_n, meander graphs,
and the meander count for the seaweed index.

Conventions: the top composition defines a block upper-triangular parabolic,
the bottom one a block lower-triangular parabolic; the seaweed is their
intersection.  Vertices of the meander are 1..n; inside a block occupying
positions s..t, vertex j is joined to s + t - j, outermost arc first.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

import numpy as np

from .lie import GL, SL, AlgebraKind, SubalgebraBasis
from .ratlin import unit


@dataclass(frozen=True)
class Composition:
    blocks: tuple

    def __post_init__(self):
        b = tuple(int(x) for x in self.blocks)
        if not b or min(b) < 1:
            raise ValueError(f"invalid composition {self.blocks!r}")
        object.__setattr__(self, "blocks", b)

    @classmethod
    def parse(cls, text: str) -> "Composition":
        return cls(tuple(int(t) for t in re.split(r"[|,\s]+", text.strip()) if t))

    @property
    def n(self) -> int:
        return sum(self.blocks)

    def block_of(self) -> list[int]:
        """Block index of each position 0..n-1."""
        return [b for b, size in enumerate(self.blocks) for _ in range(size)]

    def intervals(self) -> list[tuple[int, int]]:
        """1-based (start, end) of each block."""
        out, s = [], 1
        for size in self.blocks:
            out.append((s, s + size - 1))
            s += size
        return out

    def __str__(self):
        return "|".join(map(str, self.blocks))


@dataclass(frozen=True)
class SeaweedSpec:
    top: Composition
    bottom: Composition

    def __post_init__(self):
        if not isinstance(self.top, Composition):
            object.__setattr__(self, "top", Composition(tuple(self.top)))
        if not isinstance(self.bottom, Composition):
            object.__setattr__(self, "bottom", Composition(tuple(self.bottom)))
        if self.top.n != self.bottom.n:
            raise ValueError("top and bottom compositions must have the same sum")

    @classmethod
    def parse(cls, text: str) -> "SeaweedSpec":
        """'1|2|6 / 9'."""
        top, _, bottom = text.partition("/")
        if not bottom.strip():
            raise ValueError(f"seaweed spec needs 'top / bottom': {text!r}")
        return cls(Composition.parse(top), Composition.parse(bottom))

    @property
    def n(self) -> int:
        return self.top.n

    def reversed(self) -> "SeaweedSpec":
        return SeaweedSpec(Composition(self.top.blocks[::-1]), Composition(self.bottom.blocks[::-1]))

    def __str__(self):
        return f"{self.top} / {self.bottom}"


def composition_from_A(A, n: int) -> Composition:
    """Levi composition of p_A: cut after every i in [n-1] \\ A."""
    A = set(A)
    if any(not 1 <= a <= n - 1 for a in A):
        raise ValueError(f"A must be a subset of 1..{n - 1}")
    blocks, size = [], 0
    for i in range(1, n + 1):
        size += 1
        if i == n or i not in A:
            blocks.append(size)
            size = 0
    return Composition(tuple(blocks))


def A_from_composition(c: Composition) -> frozenset:
    cuts = set(itertools.accumulate(c.blocks[:-1]))
    return frozenset(i for i in range(1, c.n) if i not in cuts)


def seaweed_positions(spec: SeaweedSpec) -> list[tuple[int, int]]:
    tb, bb = spec.top.block_of(), spec.bottom.block_of()
    n = spec.n
    return [(i, j) for i in range(n) for j in range(n) if tb[i] <= tb[j] and bb[i] >= bb[j]]


def seaweed_dim(spec: SeaweedSpec, kind_family: str = SL) -> int:
    d = len(seaweed_positions(spec))
    return d - 1 if kind_family == SL else d


def seaweed_basis(spec: SeaweedSpec, kind: AlgebraKind) -> SubalgebraBasis:
    n = spec.n
    if kind.n != n:
        raise ValueError("seaweed size does not match the algebra")
    mats = [unit(n, i, j) for i, j in seaweed_positions(spec) if i != j]
    if kind.family == GL:
        mats += [unit(n, i, i) for i in range(n)]
    else:
        mats += [unit(n, i, i) - unit(n, i + 1, i + 1) for i in range(n - 1)]
    return SubalgebraBasis.span(kind, mats, f"seaweed {spec}")


def parabolic_from_A(A, n: int, kind: AlgebraKind) -> SubalgebraBasis:
    c = composition_from_A(A, n)
    h = seaweed_basis(SeaweedSpec(c, Composition((n,))), kind)
    h.label = f"p_A A={sorted(set(A))}"
    return h


def borel(kind: AlgebraKind) -> SubalgebraBasis:
    return parabolic_from_A((), kind.n, kind)


@dataclass(frozen=True)
class MeanderGraph:
    n: int
    top_arcs: tuple
    bottom_arcs: tuple
    cycles: int
    paths: int
    components: tuple

    def to_json(self) -> dict:
        return {"n": self.n, "top_arcs": [list(a) for a in self.top_arcs],
                "bottom_arcs": [list(a) for a in self.bottom_arcs],
                "cycles": self.cycles, "paths": self.paths}

    def render(self) -> str:
        lines = ["vertices: " + " ".join(str(v) for v in range(1, self.n + 1)),
                 "top:      " + (" ".join(f"{a}-{b}" for a, b in self.top_arcs) or "-"),
                 "bottom:   " + (" ".join(f"{a}-{b}" for a, b in self.bottom_arcs) or "-")]
        for comp in self.components:
            kind, verts = comp
            lines.append(f"{kind:5s} " + " ".join(map(str, verts)))
        lines.append(f"cycles={self.cycles} paths={self.paths}")
        return "\n".join(lines)


def _arcs(c: Composition) -> tuple:
    arcs = []
    for s, t in c.intervals():
        for j in range(s, (s + t + 1) // 2):
            if j < s + t - j:
                arcs.append((j, s + t - j))
    return tuple(arcs)


def meander(spec: SeaweedSpec) -> MeanderGraph:
    n = spec.n
    top, bottom = _arcs(spec.top), _arcs(spec.bottom)
    adj = {v: [] for v in range(1, n + 1)}
    for a, b in top + bottom:
        adj[a].append(b)
        adj[b].append(a)
    seen, comps = set(), []
    cycles = paths = 0
    for v in range(1, n + 1):
        if v in seen:
            continue
        stack, verts, degsum = [v], [], 0
        seen.add(v)
        while stack:
            u = stack.pop()
            verts.append(u)
            degsum += len(adj[u])
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        edges = degsum // 2
        if edges == len(verts):
            cycles += 1
            comps.append(("cycle", tuple(sorted(verts))))
        else:
            paths += 1
            comps.append(("path", tuple(sorted(verts))))
    return MeanderGraph(n, top, bottom, cycles, paths, tuple(comps))


def dk_index(spec: SeaweedSpec, kind: AlgebraKind | str = SL) -> int:
    """Index from the meander census: 2 cycles + paths for gl_n, one less for sl_n."""
    family = kind.family if isinstance(kind, AlgebraKind) else kind
    g = meander(spec)
    ind = 2 * g.cycles + g.paths
    return ind - 1 if family == SL else ind


def parabolic_spec(A, n: int) -> SeaweedSpec:
    return SeaweedSpec(composition_from_A(A, n), Composition((n,)))


def all_subsets(n: int):
    for r in range(n):
        for A in itertools.combinations(range(1, n), r):
            yield frozenset(A)


def frobenius_parabolics(n: int) -> list[frozenset]:
    """All A with ind p_A(sl_n) = 0, ordered by (dim, sorted A)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    out = [A for A in all_subsets(n) if dk_index(parabolic_spec(A, n), SL) == 0]
    return sorted(out, key=lambda A: (seaweed_dim(parabolic_spec(A, n)), sorted(A)))


def frobenius_parabolic_dims(n: int) -> set[int]:
    return {seaweed_dim(parabolic_spec(A, n)) for A in frobenius_parabolics(n)}


def minimal_frobenius_A(n: int) -> frozenset:
    """Levi set of a Frobenius parabolic of minimal dimension in sl_n."""
    if n < 3:
        raise ValueError("need n >= 3")
    if n % 2 == 1:
        k = n // 2
        return frozenset(range(2, 2 * k + 1, 2))
    if n % 4 == 0:
        p = n // 4
        return frozenset(list(range(2, 2 * p - 1, 2)) + list(range(2 * p + 1, 4 * p, 2)))
    p = (n - 2) // 4
    return frozenset(list(range(2, 2 * p + 1, 2)) + list(range(2 * p + 3, 4 * p + 2, 2)))


def borel_index(n: int) -> int:
    return (n - 1) // 2


def random_composition(n: int, rng: np.random.Generator) -> Composition:
    cuts = [i for i in range(1, n) if rng.integers(0, 2)]
    bounds = [0] + cuts + [n]
    return Composition(tuple(b - a for a, b in zip(bounds, bounds[1:])))


def random_seaweed(n: int, rng: np.random.Generator) -> SeaweedSpec:
    return SeaweedSpec(random_composition(n, rng), random_composition(n, rng))


def levi_derived_blocks(A, n: int) -> list[int]:
    """Sizes of the sl_c summands of [l_A, l_A] (blocks of size >= 2)."""
    return [c for c in composition_from_A(A, n).blocks if c >= 2]
