import pytest
from hypothesis import given
from hypothesis import strategies as st

from strangeorbits.lie import full_algebra, gl, index_monte_carlo, is_subalgebra, sl
from strangeorbits.ratlin import make_rng
from strangeorbits.seaweed import (A_from_composition, Composition, SeaweedSpec, all_subsets,
                                   borel, borel_index, composition_from_A, dk_index,
                                   frobenius_parabolic_dims, levi_derived_blocks, meander,
                                   minimal_frobenius_A, parabolic_from_A, parabolic_spec,
                                   random_seaweed, seaweed_basis, seaweed_dim)


def spec(text):
    return SeaweedSpec.parse(text)


def compositions(n):
    return st.lists(st.booleans(), min_size=n - 1, max_size=n - 1).map(
        lambda cuts: Composition(tuple(
            b - a for a, b in zip([0] + [i + 1 for i, c in enumerate(cuts) if c],
                                  [i + 1 for i, c in enumerate(cuts) if c] + [n]))))


def seaweeds(max_n=7):
    return st.integers(2, max_n).flatmap(
        lambda n: st.builds(SeaweedSpec, compositions(n), compositions(n)))


def test_parse():
    s = spec("1|2|6 / 9")
    assert s.top.blocks == (1, 2, 6) and s.bottom.blocks == (9,)
    assert str(s) == "1|2|6 / 9"
    with pytest.raises(ValueError):
        spec("1|2")
    with pytest.raises(ValueError):
        spec("1|2 / 4")
    with pytest.raises(ValueError):
        Composition((2, 0))


def test_composition_A_roundtrip():
    assert composition_from_A({2, 3, 4}, 5).blocks == (1, 4)
    assert composition_from_A(set(), 3).blocks == (1, 1, 1)
    assert A_from_composition(Composition((1, 2, 6))) == frozenset({2, 4, 5, 6, 7, 8})
    with pytest.raises(ValueError):
        composition_from_A({5}, 5)


def test_parabolic_examples():
    n = 5
    assert parabolic_from_A(range(1, n), n, sl(n)).dim == full_algebra(sl(n)).dim
    assert parabolic_from_A((), n, sl(n)).dim == n * (n + 1) // 2 - 1
    for i in range(1, n):
        A = set(range(1, n)) - {i}
        assert parabolic_from_A(A, n, sl(n)).dim == n * n - 1 - i * (n - i)


def test_seaweed_basis_examples():
    assert seaweed_basis(spec("4 / 4"), gl(4)).dim == 16
    assert seaweed_basis(spec("1|1|1|1 / 4"), sl(4)).dim == borel(sl(4)).dim
    h = seaweed_basis(spec("1|2|6 / 9"), sl(9))
    assert h.dim == 60 == seaweed_dim(spec("1|2|6 / 9"))


def test_meander_examples():
    g = meander(spec("1|1|1|1 / 1|1|1|1"))
    assert (g.cycles, g.paths) == (0, 4)
    g = meander(spec("2 / 1|1"))
    assert (g.cycles, g.paths) == (0, 1)
    g = meander(spec("1|2|6 / 9"))
    assert g.top_arcs == ((2, 3), (4, 9), (5, 8), (6, 7))
    assert g.bottom_arcs == ((1, 9), (2, 8), (3, 7), (4, 6))
    assert "cycles=0 paths=1" in g.render()


def test_dk_index_examples():
    assert dk_index(spec("5 / 5"), gl(5)) == 5
    for n in range(2, 9):
        assert dk_index(spec(f"1|{n - 1} / {n}"), sl(n)) == 0
    assert dk_index(parabolic_spec((), 6)) == 2


def test_frobenius_dims():
    assert frobenius_parabolic_dims(2) == {2}
    assert frobenius_parabolic_dims(6) == {22, 24, 26, 30}
    assert len(list(all_subsets(9))) == 256


def test_minimal_frobenius_examples():
    assert minimal_frobenius_A(5) == {2, 4}
    assert minimal_frobenius_A(8) == {2, 5, 7}
    assert minimal_frobenius_A(6) == {2, 5}
    with pytest.raises(ValueError):
        minimal_frobenius_A(2)


@pytest.mark.parametrize("n", range(3, 10))
def test_minimal_frobenius_properties(n):
    A = minimal_frobenius_A(n)
    ind_b = borel_index(n)
    dim_b = n * (n + 1) // 2 - 1
    s = parabolic_spec(A, n)
    assert len(A) == ind_b
    assert dk_index(s) == 0
    assert seaweed_dim(s) == dim_b + ind_b
    assert levi_derived_blocks(A, n) == [2] * ind_b


@given(seaweeds())
def test_meander_degree_and_partition(s):
    g = meander(s)
    for arcs in (g.top_arcs, g.bottom_arcs):
        ends = [v for a in arcs for v in a]
        assert len(ends) == len(set(ends))
    verts = sorted(v for _, vs in g.components for v in vs)
    assert verts == list(range(1, s.n + 1))


@given(seaweeds())
def test_reversal_symmetry(s):
    assert dk_index(s, gl(s.n)) == dk_index(s.reversed(), gl(s.n))
    assert dk_index(s, sl(s.n)) == dk_index(s, gl(s.n)) - 1


@given(seaweeds(max_n=6), st.integers(0, 2 ** 32))
def test_dk_matches_monte_carlo(s, seed):
    h = seaweed_basis(s, sl(s.n))
    assert is_subalgebra(h)
    assert index_monte_carlo(h, rng=seed).upper_bound_on_index == dk_index(s, sl(s.n))


def test_random_seaweed_deterministic():
    a = [random_seaweed(7, make_rng(3)) for _ in range(2)]
    assert a[0] == a[1]
