"""One test per acceptance criterion; each reports a single pass/fail line."""

import time

from conftest import ACCEPTANCE_LINES

from strangeorbits import ratlin
from strangeorbits.lie import (Functional, centralizer_basis, gl, index_monte_carlo, is_subalgebra,
                               jordan_nilpotent, sl)
from strangeorbits.partitions import (Partition, centralizer_dim_minsum, conj75_partition,
                                      dominates, dual, orbit_dim, partitions_of, power_orbit_dim,
                                      three_part_partition, tilde_orbit)
from strangeorbits.ratlin import unit
from strangeorbits.seaweed import (borel, borel_index, dk_index, frobenius_parabolic_dims,
                                   levi_derived_blocks, minimal_frobenius_A, parabolic_from_A,
                                   parabolic_spec, random_seaweed, seaweed_basis, seaweed_dim)
from strangeorbits.strange import (ab_invariants, check_pair, conjugate_search, fig1_witness,
                                   flag3_witness, flag_stabilizer, intersection_dim,
                                   sheet_check, survey, verify_verdict, witness_fig1,
                                   witness_flag_two_part)
from strangeorbits.strange.witnesses import power_nilpotent


def report(num: int, ok: bool, detail: str, started: float) -> None:
    status = "PASS" if ok else "FAIL"
    line = f"[{status}] criterion {num}: {detail} ({time.perf_counter() - started:.2f}s)"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_c1_borel_index():
    t0 = time.perf_counter()
    bad = []
    for n in range(2, 11):
        dk = dk_index(parabolic_spec((), n))
        mc = index_monte_carlo(borel(sl(n)), trials=8, height=10, rng=1).upper_bound_on_index
        if not dk == mc == (n - 1) // 2:
            bad.append((n, dk, mc))
    elapsed = time.perf_counter() - t0
    report(1, not bad and elapsed < 5, f"Borel index floor((n-1)/2), n=2..10, mismatches={bad}", t0)


def test_c2_frobenius_parabolic_dims():
    t0 = time.perf_counter()
    d6 = frobenius_parabolic_dims(6)
    d9 = frobenius_parabolic_dims(9)
    gaps = {d for d in range(48, 73, 2) if d not in d9}
    elapsed = time.perf_counter() - t0
    ok = d6 == {22, 24, 26, 30} and gaps == {58, 62, 64, 68, 70} and elapsed < 30
    report(2, ok, f"n=6 dims {sorted(d6)}, n=9 gaps {sorted(gaps)}", t0)


def test_c3_power_orbit_sweep():
    t0 = time.perf_counter()
    bad = []
    for n in range(2, 11):
        for k in range(1, n):
            h = witness_fig1(n, k)
            gx = centralizer_basis(power_nilpotent(n, k), h.kind)
            q = n % k
            if not (is_subalgebra(h) and h.dim == n * (n - k) + q * (k - q) == power_orbit_dim(n, k)
                    and intersection_dim(gx, h) == 0):
                bad.append((n, k))
    elapsed = time.perf_counter() - t0
    report(3, not bad and elapsed < 60, f"45 power-orbit complements, failures={bad}", t0)


def test_c4_two_part_flags():
    t0 = time.perf_counter()
    bad = []
    for n in range(4, 13):
        g = sl(n)
        h = flag_stabilizer(witness_flag_two_part(n), g)
        lam = tilde_orbit(n)
        gx = centralizer_basis(jordan_nilpotent(lam), g)
        if not (h.dim == orbit_dim(lam) and intersection_dim(gx, h) == 0):
            bad.append(n)
    report(4, not bad, f"two-part flag stabilisers n=4..12, failures={bad}", t0)


def test_c5_three_part_flags():
    t0 = time.perf_counter()
    bad = []
    for n in range(6, 12):
        w = flag3_witness(n, sl(n))
        if w.partition != three_part_partition(n) or not check_pair(w.partition, w.h).is_strange_pair:
            bad.append(n)
    w9 = flag3_witness(9, sl(9))
    gx = centralizer_basis(jordan_nilpotent(w9.partition), sl(9))
    worked = w9.partition == Partition((5, 2, 2)) and w9.h.dim == 60 and gx.dim == 20
    report(5, not bad and worked,
           f"three-part flags n=6..11 failures={bad}; sl_9 (5,2,2) stab={w9.h.dim} cent={gx.dim}", t0)


def test_c6_surveys():
    t0 = time.perf_counter()
    problems = []
    for n in (3, 4, 5, 6):
        for v in survey(n, seed=1):
            want = "NotStrange" if (n, str(v.partition)) == (6, "5,1") else "Strange"
            if v.status != want or not verify_verdict(v):
                problems.append(f"{v.partition}:{v.status}")
    again = [v.to_json() for v in survey(6, seed=1)]
    deterministic = again == [v.to_json() for v in survey(6, seed=1)]
    elapsed = time.perf_counter() - t0

    # both search-based cases succeed through conjugation within 200 trials;
    # for (4,1,1) every Frobenius parabolic of dim 24 is tried, and mirror
    # images A -> 6 - A must behave alike
    rng = ratlin.make_rng(1)
    hit321 = conjugate_search(Partition((3, 2, 1)), parabolic_from_A({2, 5}, 6, sl(6)), 200, 10, rng)
    hits411 = {}
    for A in ((1, 2, 4), (1, 2, 5), (1, 3, 4), (1, 4, 5), (2, 3, 5), (2, 4, 5)):
        h0 = parabolic_from_A(A, 6, sl(6))
        assert h0.dim == 24
        hit = conjugate_search(Partition((4, 1, 1)), h0, 200, 10, ratlin.make_rng((1, *A)))
        hits411[A] = None if hit is None else hit.trial
    mirrored = all((hits411[A] is None) == (hits411[tuple(sorted(6 - a for a in A))] is None)
                   for A in hits411)
    found411 = [A for A, t in hits411.items() if t is not None]
    search_ok = hit321 is not None and bool(found411) and mirrored
    ok = not problems and deterministic and elapsed < 120 and search_ok
    report(6, ok, f"surveys n=3..6 problems={problems}; (3,2,1) hit at trial "
                  f"{hit321.trial if hit321 else None}; (4,1,1) hits for A in {found411}", t0)


def test_c7_index_bound():
    t0 = time.perf_counter()
    rng = ratlin.make_rng((1, 23))
    violations = 0
    for _ in range(100):
        n = int(rng.integers(2, 7))
        spec = random_seaweed(n, rng)
        lams = partitions_of(n)
        lam = lams[int(rng.integers(0, len(lams)))]
        h = seaweed_basis(spec, sl(n))
        e = jordan_nilpotent(lam)
        best = min(sum(ab_invariants(Functional(sl(n), g.dot(e).dot(ratlin.inverse(g))), h))
                   for g in (ratlin.random_invertible(n, 10, rng) for _ in range(5)))
        violations += dk_index(spec) > best
    report(7, violations == 0, f"index <= min(a+b) on 100 pairs, violations={violations}", t0)


def test_c8_centralizer_index():
    t0 = time.perf_counter()
    bad = []
    for n in range(2, 8):
        for lam in partitions_of(n):
            gx = centralizer_basis(jordan_nilpotent(lam), sl(n))
            est = index_monte_carlo(gx, trials=20, height=10, rng=ratlin.make_rng((1, n, *lam.parts)))
            if est.upper_bound_on_index != n - 1:
                bad.append(str(lam))
    report(8, not bad, f"centraliser index n-1 for all partitions n<=7, exceptions={bad}", t0)


def test_c9_sheet_propagation():
    t0 = time.perf_counter()
    bad = []
    for n in range(2, 9):
        w = fig1_witness(n, 1, gl(n))
        z = w.e + unit(n, n - 1, 0)
        rep = sheet_check(Partition([n]), w.h, 20, ratlin.make_rng((1, n)), 10, extra_points=[z])
        if not rep.all_ok or rep.samples != 21:
            bad.append(n)
    report(9, not bad, f"explicit point + 20 slice samples, n=2..8, failures={bad}", t0)


def test_c10_minimal_frobenius_parabolic():
    t0 = time.perf_counter()
    bad = []
    for n in range(3, 8):
        A = minimal_frobenius_A(n)
        spec = parabolic_spec(A, n)
        ind_b = borel_index(n)
        dim_b = n * (n + 1) // 2 - 1
        if not (dk_index(spec) == 0 and seaweed_dim(spec) == dim_b + ind_b
                and levi_derived_blocks(A, n) == [2] * ind_b):
            bad.append(f"n={n} structure")
        hit = conjugate_search(conj75_partition(n), parabolic_from_A(A, n, sl(n)), 200, 10,
                               ratlin.make_rng((1, 75, n)))
        if hit is None:
            bad.append(f"n={n} no complement")
    report(10, not bad, f"minimal Frobenius parabolics n=3..7, failures={bad}", t0)


def test_c11_cross_engine():
    t0 = time.perf_counter()
    rng = ratlin.make_rng((1, 11))
    bad = 0
    for i in range(200):
        n = int(rng.integers(2, 8))
        spec = random_seaweed(n, rng)
        mc = index_monte_carlo(seaweed_basis(spec, sl(n)), trials=8, height=10,
                               rng=ratlin.make_rng((1, 11, i)))
        bad += dk_index(spec) != mc.upper_bound_on_index
    report(11, bad == 0, f"meander vs Monte-Carlo on 200 seaweeds, disagreements={bad}", t0)


def test_c12_structural_identities():
    t0 = time.perf_counter()
    bad = []
    for n in range(1, 13):
        lams = partitions_of(n)
        for lam in lams:
            mu = dual(lam)
            if dual(mu) != lam or centralizer_dim_minsum(lam) != sum(m * m for m in mu) \
                    or orbit_dim(lam) % 2:
                bad.append(str(lam))
        dims = {lam: orbit_dim(lam) for lam in lams}
        bad += [f"{a}>{b}" for a in lams for b in lams
                if a != b and dominates(a, b) and dims[a] <= dims[b]]
    report(12, not bad, f"dual, min-sum, parity, monotonicity for n<=12, exceptions={bad[:5]}", t0)
