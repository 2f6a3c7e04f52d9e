import json
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from strangeorbits import ratlin
from strangeorbits.lie import commutant_equations, gl, jordan_nilpotent
from strangeorbits.ratlin import (Subspace, identity, intersection_basis, kernel_basis,
                                  make_rng, random_vector, rank, ratmat, solve, sum_dim, zeros)
from strangeorbits.strange import power_nilpotent, witness_fig1
from strangeorbits.lie import centralizer_basis

DATA = Path(__file__).parent / "data"

small_ints = st.integers(-6, 6)


def matrices(max_rows=6, max_cols=6):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small_ints, min_size=c, max_size=c),
                               min_size=r, max_size=r)))


def test_to_rational_canonical():
    assert ratlin.to_rational(Fraction(4, 2)) == 2
    assert type(ratlin.to_rational(Fraction(4, 2))) is int
    assert ratlin.to_rational("3/6") == Fraction(1, 2)
    assert ratlin.to_rational(Fraction(0, 5)) == 0
    with pytest.raises(TypeError):
        ratlin.to_rational(0.5)


def test_rank_examples():
    assert rank(identity(3)) == 3
    assert rank(ratmat([[1, 2], [2, 4]])) == 1
    assert rank(zeros(2, 3)) == 0
    assert rank(ratmat([[Fraction(1, 2), Fraction(1, 3)], [3, 2]])) == 1


def test_kernel_examples():
    assert kernel_basis(identity(3)).dim == 0
    assert kernel_basis(zeros(2, 3)).dim == 3
    # commutant of the (2,1) Jordan matrix in gl_3
    K = kernel_basis(commutant_equations(jordan_nilpotent((2, 1))))
    assert K.dim == 5


def test_sum_and_intersection_examples():
    A = Subspace.span([[1, 0]], 2)
    B = Subspace.span([[1, 1]], 2)
    assert sum_dim(A, A) == 1
    assert sum_dim(A, B) == 2
    assert intersection_basis(A, A).dim == 1
    assert intersection_basis(A, B).dim == 0
    with pytest.raises(ValueError):
        sum_dim(A, Subspace.zero(3))
    with pytest.raises(ValueError):
        intersection_basis(A, Subspace.zero(3))


@pytest.mark.parametrize("n,k,expected_sum", [(4, 2, 16), (6, 2, 36)])
def test_fig1_pair_spans_gl(n, k, expected_sum):
    h = witness_fig1(n, k).subspace()
    gx = centralizer_basis(power_nilpotent(n, k), gl(n)).subspace()
    assert sum_dim(gx, h) == expected_sum
    assert intersection_basis(gx, h).dim == 0


def test_random_vector_contract():
    with pytest.raises(ValueError):
        random_vector(3, 0, make_rng(1))
    a = random_vector(5, 10, make_rng(7))
    b = random_vector(5, 10, make_rng(7))
    assert a.shape == (5, 1)
    assert np.array_equal(a, b)
    assert all(-10 <= x <= 10 for x in a.ravel())


def test_random_vector_golden():
    golden = json.loads((DATA / "golden_random_vector.json").read_text())
    v = random_vector(golden["dim"], golden["height"], make_rng(golden["seed"]))
    assert v.ravel().tolist() == golden["vector"]


def test_inverse_and_solve():
    M = ratmat([[2, 1], [7, 4]])
    assert np.array_equal(M.dot(ratlin.inverse(M)), identity(2))
    with pytest.raises(ZeroDivisionError):
        ratlin.inverse(ratmat([[1, 2], [2, 4]]))
    assert solve(ratmat([[1, 1], [1, 1]]), [1, 2]) is None


@given(matrices())
def test_rank_matches_sympy_and_transpose(rows):
    M = ratmat(rows)
    r = rank(M)
    assert r == sympy.Matrix(rows).rank()
    assert r == rank(M.T)


@given(matrices())
def test_kernel_vectors_annihilate(rows):
    M = ratmat(rows)
    K = kernel_basis(M)
    assert K.dim + rank(M) == M.shape[1]
    for v in K.basis:
        assert not np.any(M.dot(v) != 0)


@given(matrices(), st.data())
def test_solve_on_column_space(rows, data):
    M = ratmat(rows)
    v = ratmat(data.draw(st.lists(small_ints, min_size=M.shape[1], max_size=M.shape[1])))
    b = M.dot(v)
    x = solve(M, b)
    assert x is not None
    assert np.array_equal(M.dot(x), b)


@given(st.integers(1, 10), st.data())
def test_modular_law(n, data):
    def sub():
        k = data.draw(st.integers(0, n))
        vs = [data.draw(st.lists(small_ints, min_size=n, max_size=n)) for _ in range(k)]
        return Subspace.span(vs, n)

    A, B = sub(), sub()
    assert intersection_basis(A, B).dim + sum_dim(A, B) == A.dim + B.dim
    for v in intersection_basis(A, B).basis:
        assert A.contains(v) and B.contains(v)
