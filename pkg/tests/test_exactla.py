from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from homlie.errors import DimensionMismatch
from homlie.exactla import (
    Matrix, QuotientSpace, Subspace, as_fraction, format_fraction, image, is_invariant, kernel,
    largest_invariant_subspace, outer, preimage, rref, subspace_intersect, subspace_leq,
    subspace_sum, unit_vector,
)

F = Fraction
small = st.integers(min_value=-3, max_value=3)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


def test_fraction_parsing():
    assert as_fraction("3/6") == F(1, 2)
    assert as_fraction(-4) == F(-4)
    assert format_fraction(F(6, 4)) == "3/2"
    assert format_fraction(F(-2)) == "-2"
    with pytest.raises(TypeError):
        as_fraction(0.5)
    with pytest.raises(TypeError):
        as_fraction(True)


def test_matrix_basics():
    A = Matrix([[1, 2], [3, 4]])
    assert A @ Matrix.identity(2) == A
    assert A.transpose().rows == ((1, 3), (2, 4))
    assert A.apply((1, 1)) == (3, 7)
    assert A.rank() == 2
    assert Matrix([[1, 2], [2, 4]]).rank() == 1
    assert A.power(0).is_identity()
    assert A.power(2) == A @ A
    with pytest.raises(DimensionMismatch):
        A @ Matrix([[1, 2, 3]])


def test_rref_and_kernel():
    R = rref(Matrix([[2, 4, 6], [1, 2, 4]]))
    assert R.rows[0] == (1, 2, 0)
    assert R.rows[1] == (0, 0, 1)
    K = kernel(Matrix([[1, 2, 3], [2, 4, 6]]))
    assert K.dim == 2
    assert all(not any(Matrix([[1, 2, 3]]).apply(v)) for v in K.basis)


def test_subspace_canonical_equality():
    a = Subspace.span([(1, 1, 0), (0, 1, 1)])
    b = Subspace.span([(1, 2, 1), (1, 0, -1)])
    assert a == b and hash(a) == hash(b)
    assert (1, 0, -1) in a
    assert (1, 0, 0) not in a
    assert a.coordinates((2, 3, 1)) == (2, 3)  # RREF basis (1, 0, -1), (0, 1, 1)


def test_intersection_and_sum():
    a = Subspace.span([(1, 0, 0), (0, 1, 0)])
    b = Subspace.span([(1, 1, 1), (0, 0, 1)])
    assert subspace_intersect(a, b) == Subspace.span([(1, 1, 0)])
    assert subspace_sum(a, b).is_full()
    assert subspace_leq(subspace_intersect(a, b), a)


def test_quotient_section_picks_basis_vectors():
    K = Subspace.span([(1, -1, 0)])
    q = QuotientSpace(K)
    assert q.dim == 2
    assert q.representative_columns == (1, 2)
    assert q.project((1, 0, 0)) == q.project((0, 1, 0))
    assert (q.projection @ q.section).is_identity()


def test_preimage():
    a = Matrix([[0, 1], [0, 0]])
    assert preimage(a, Subspace.zero(2)) == Subspace.span([(1, 0)])


def test_largest_invariant_subspace_fixture():
    # e1 -> 0, e2 -> e3, e3 -> e3, e4 -> 0 inside span{e1, e2}: only e1 survives
    a = Matrix.from_columns([(0, 0, 0, 0), (0, 0, 1, 0), (0, 0, 1, 0), (0, 0, 0, 0)], 4)
    c = Subspace.span([(1, 0, 0, 0), (0, 1, 0, 0)])
    assert largest_invariant_subspace(a, c) == Subspace.span([(1, 0, 0, 0)])


def brute_invariant(a, c):
    """{x : a^k x in C for k = 0..n}, by stacking projections of the powers."""
    n = a.ncols
    q = QuotientSpace(c)
    rows = []
    p = Matrix.identity(n)
    for _ in range(n + 1):
        rows.extend((q.projection @ p).rows)
        p = a @ p
    if not rows or q.dim == 0:
        return Subspace.full(n)
    return kernel(Matrix(rows, n))


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n),
    st.lists(st.lists(small, min_size=n, max_size=n), min_size=0, max_size=n))))
def test_invariant_fixpoint_matches_power_iteration(data):
    rows, gens = data
    n = len(rows)
    a = Matrix(rows, n)
    c = Subspace.span(gens, n)
    w = largest_invariant_subspace(a, c)
    assert w == brute_invariant(a, c)
    assert is_invariant(a, w) and subspace_leq(w, c)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_nullity(rows):
    A = Matrix(rows, len(rows[0]))
    assert A.rank() + kernel(A).dim == A.ncols
    assert image(A).dim == A.rank()


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.lists(st.lists(small, min_size=n, max_size=n), max_size=4),
    st.lists(st.lists(small, min_size=n, max_size=n), max_size=4),
    st.just(n))))
def test_dimension_formula(data):
    ga, gb, n = data
    a, b = Subspace.span(ga, n), Subspace.span(gb, n)
    assert subspace_sum(a, b).dim + subspace_intersect(a, b).dim == a.dim + b.dim


def test_intersection_brute_force_small():
    # all subspaces spanned by vectors with entries in {0, 1} of Q^3: compare with membership
    vecs = [v for v in product((0, 1), repeat=3) if any(v)]
    for u, v in product(vecs, repeat=2):
        a, b = Subspace.span([u]), Subspace.span([v, (0, 0, 1)])
        meet = subspace_intersect(a, b)
        if u in b:
            assert meet == a
        else:
            assert meet.is_zero()


def test_outer_index_layout():
    assert outer((1, 2), (3, 0, 1)) == [3, 0, 1, 6, 0, 2]
    assert unit_vector(3, 1) == (0, 1, 0)
