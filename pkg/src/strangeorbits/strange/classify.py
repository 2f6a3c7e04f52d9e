"""
Orbit-by-orbit classification of nilpotent orbits of sl_n (or gl_n) as
strange / not strange, with witnesses that can be rebuilt and re-checked.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .. import ratlin
from ..lie import (GL, SL, AlgebraKind, SubalgebraBasis, gl, index_monte_carlo, is_subalgebra, sl,
                  sl_to_gl)
from ..partitions import (Partition, conj75_partition, is_power_partition, orbit_dim,
                          partitions_of, thm62_excluded, three_part_partition, tilde_orbit)
from ..seaweed import (frobenius_parabolic_dims, frobenius_parabolics,
                       dk_index, minimal_frobenius_A, parabolic_from_A, parabolic_spec, seaweed_dim)
from .pairs import check_pair
from .search import conjugate_search, hook_candidate
from .witnesses import fig1_witness, flag2_witness, flag3_witness

STRANGE, NOT_STRANGE, UNKNOWN = "Strange", "NotStrange", "Unknown"


@dataclass
class SearchConfig:
    trials: int = 200
    height: int = 10
    hook_max_n: int = 6
    hook_tori: int = 5


@dataclass
class ClassificationVerdict:
    partition: Partition
    kind: AlgebraKind
    status: str
    reason: str
    witness: dict | None = None
    checks: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"partition": str(self.partition), "n": self.partition.n,
                "algebra": str(self.kind), "status": self.status,
                "witness": self.witness, "reason": self.reason, "checks": self.checks}


def _mat_json(m: np.ndarray) -> list:
    return [[str(ratlin.to_rational(x)) for x in row] for row in m]


def _mat_from_json(rows) -> np.ndarray:
    return ratlin.ratmat([[ratlin.Rational(x) for x in row] for row in rows])


def _kind(family: str, n: int) -> AlgebraKind:
    return gl(n) if family == GL else sl(n)


def _lift(h: SubalgebraBasis, kind: AlgebraKind) -> SubalgebraBasis:
    # a traceless complement in sl_n is also one in gl_n: the extra scalar
    # direction lies in every centraliser
    return sl_to_gl(h) if kind.family == GL and h.kind.family == SL else h


def rebuild_witness(w: dict, kind: AlgebraKind) -> tuple[SubalgebraBasis, np.ndarray | None]:
    """Reconstruct h (and the orbit point it complements, if not the Jordan form)."""
    n = kind.n
    tag = w["kind"]
    if tag == "fig1":
        fw = fig1_witness(n, w["k"], kind)
        return fw.h, fw.e
    if tag == "flag2":
        return _lift(flag2_witness(n, sl(n)).h, kind), None
    if tag == "flag3":
        return _lift(flag3_witness(n, sl(n)).h, kind), None
    g = _mat_from_json(w["conjugator"])
    if tag == "parabolic-conjugate":
        return _lift(parabolic_from_A(w["A"], n, sl(n)).conjugate(g), kind), None
    if tag == "tstable-conjugate":
        mats = [_mat_from_json(m) for m in w["basis_before_conjugation"]]
        return _lift(SubalgebraBasis.span(sl(n), mats).conjugate(g), kind), None
    raise ValueError(f"unknown witness kind {tag!r}")


def _checks(lam: Partition, h: SubalgebraBasis, rng, e=None) -> tuple[dict, bool]:
    rep = check_pair(lam, h, e=e)
    est = index_monte_carlo(h, trials=8, height=10, rng=rng)
    return ({"dim_orbit": rep.dim_orbit, "dim_h": rep.dim_h, "intersection_dim": rep.b,
             "a": rep.a, "b": rep.b, "index_upper_bound": est.upper_bound_on_index},
            rep.is_strange_pair)


def _orbit_rng(seed: int, lam: Partition) -> np.random.Generator:
    return ratlin.make_rng((seed, len(lam), *lam.parts))


def _search_parabolics(lam, kind, candidates, cfg, rng):
    for A in candidates:
        hit = conjugate_search(lam, parabolic_from_A(A, kind.n, kind), cfg.trials, cfg.height, rng)
        if hit is not None:
            return A, hit
    return None


def classify_orbit(lam: Partition, family: str = SL, seed: int = 1,
                   config: SearchConfig | None = None) -> ClassificationVerdict:
    """Decision cascade: named constructions, the dimension obstruction, then searches."""
    lam = Partition(lam)
    n = lam.n
    cfg = config or SearchConfig()
    if n < 2 or lam == Partition([1] * n):
        raise ValueError("classification needs n >= 2 and a nonzero orbit")
    kind = _kind(family, n)
    rng = _orbit_rng(seed, lam)

    def verdict(witness: dict, h: SubalgebraBasis, reason: str, e=None) -> ClassificationVerdict:
        h = _lift(h, kind)
        checks, ok = _checks(lam, h, rng, e)
        if not ok:
            return ClassificationVerdict(lam, kind, UNKNOWN, f"{reason}: witness failed", None, checks)
        return ClassificationVerdict(lam, kind, STRANGE, reason, witness, checks)

    k = is_power_partition(lam)
    if k is not None:
        w = fig1_witness(n, k, kind)
        return verdict({"kind": "fig1", "n": n, "k": k}, w.h,
                       "power of a regular nilpotent", w.e)
    if n >= 4 and lam == tilde_orbit(n):
        w = flag2_witness(n, sl(n))
        return verdict({"kind": "flag2", "n": n, "flag": w.flag.to_json()}, w.h,
                       "two-part flag stabiliser")
    if three_part_partition(n) == lam:
        w = flag3_witness(n, sl(n))
        return verdict({"kind": "flag3", "n": n, "flag": w.flag.to_json()}, w.h,
                       "three-part flag stabiliser")
    if n >= 4 and thm62_excluded(lam):
        return ClassificationVerdict(
            lam, kind, NOT_STRANGE,
            "dimension obstruction: non-principal orbit larger than the tilde orbit")

    target = orbit_dim(lam)
    candidates = []
    if n >= 3 and lam == conj75_partition(n):
        candidates.append(minimal_frobenius_A(n))
    if target in frobenius_parabolic_dims(n):
        candidates += [A for A in frobenius_parabolics(n)
                       if seaweed_dim(parabolic_spec(A, n)) == target
                       and A not in candidates]
    found = _search_parabolics(lam, sl(n), candidates, cfg, rng)
    if found is not None:
        A, hit = found
        w = {"kind": "parabolic-conjugate", "A": sorted(A), "trial": hit.trial,
             "conjugator": _mat_json(hit.g)}
        return verdict(w, hit.h, "conjugate of a Frobenius parabolic")

    if n <= cfg.hook_max_n and lam == Partition([3] + [1] * (n - 3)):
        for _ in range(cfg.hook_tori):
            h0 = hook_candidate(n, sl(n), rng, cfg.height)
            if h0.dim != target or not is_subalgebra(h0):
                continue
            hit = conjugate_search(lam, h0, cfg.trials, cfg.height, rng)
            if hit is not None:
                w = {"kind": "tstable-conjugate", "trial": hit.trial,
                     "basis_before_conjugation": [_mat_json(m) for m in h0.mats],
                     "conjugator": _mat_json(hit.g)}
                return verdict(w, hit.h, "conjugate of a torus-stable root-space subalgebra")
    return ClassificationVerdict(lam, kind, UNKNOWN, "no witness found; search failures prove nothing")


def verify_verdict(v: ClassificationVerdict) -> bool:
    """Re-check a verdict from its stored data alone."""
    if v.status == STRANGE:
        if v.witness is None:
            return False
        h, e = rebuild_witness(v.witness, v.kind)
        return check_pair(v.partition, h, e=e).is_strange_pair
    if v.status == NOT_STRANGE:
        return v.partition.n >= 4 and thm62_excluded(v.partition)
    return v.witness is None


@dataclass(frozen=True)
class Numerology:
    n: int
    M_sph: int
    dim_b: int
    ind_b: int
    max_frobenius_parabolic_dim: int

    def to_json(self) -> dict:
        return {"n": self.n, "M_sph": self.M_sph, "dim_b": self.dim_b, "ind_b": self.ind_b,
                "max_frobenius_parabolic_dim": self.max_frobenius_parabolic_dim}


def numerology(n: int) -> Numerology:
    if n < 2:
        raise ValueError("need n >= 2")
    dim_b = n * (n + 1) // 2 - 1
    ind_b = dk_index(parabolic_spec((), n), SL)
    return Numerology(n, dim_b - ind_b, dim_b, ind_b, max(frobenius_parabolic_dims(n)))


def _classify_job(args):
    lam, family, seed, cfg = args
    return classify_orbit(lam, family, seed, cfg)


def survey(n: int, seed: int = 1, family: str = SL, parallel: bool = False,
           config: SearchConfig | None = None) -> list[ClassificationVerdict]:
    """Verdicts for every nonzero nilpotent orbit, in partitions_of(n) order."""
    lams = [lam for lam in partitions_of(n) if lam != Partition([1] * n)]
    jobs = [(lam, family, seed, config) for lam in lams]
    if parallel and len(jobs) > 1:
        with ProcessPoolExecutor() as ex:
            return list(ex.map(_classify_job, jobs))
    return [_classify_job(j) for j in jobs]


def summary(verdicts) -> dict:
    out = {STRANGE: 0, NOT_STRANGE: 0, UNKNOWN: 0}
    for v in verdicts:
        out[v.status] += 1
    return out
