import pytest
from hypothesis import given
from hypothesis import strategies as st

from frolicher.errors import AmbientMismatchError, NotSubquotientError
from frolicher.linalg import (Coordinates, Mat, Subspace, image, image_of, intersection, inverse, kernel,
                              preimage, quotient_dim, rank, solve, sum_)
from frolicher.scalar import I, ONE, ZERO, Scalar

from conftest import matrices


def test_kernel_of_one_by_two():
    k = kernel(Mat.from_rows([[ONE, I]], 2))
    assert k.dim == 1
    assert k.same_as(Subspace.span([(-I, ONE)], 2))


def test_image_picks_pivot_columns():
    m = Mat.from_rows([[1, 1], [I, I]], 2)
    assert image(m).vectors == ((ONE, I),)


def test_rank_of_duplicate_rows():
    assert rank(Mat.from_rows([[1, 0, 2], [1, 0, 2]], 3)) == 1
    assert rank(Mat.zero(3, 0)) == 0


def test_inverse_and_singular():
    m = Mat.from_rows([[1, I], [0, 2]], 2)
    assert m @ inverse(m) == Mat.identity(2)
    with pytest.raises(ZeroDivisionError):
        inverse(Mat.from_rows([[1, 2], [2, 4]], 2))


def test_quotient_requires_containment():
    a = Subspace.span([(1, 0)], 2)
    b = Subspace.span([(0, 1)], 2)
    with pytest.raises(NotSubquotientError):
        quotient_dim(a, b)
    with pytest.raises(AmbientMismatchError):
        sum_(a, Subspace.zero(3))


@given(matrices())
def test_rank_nullity(m):
    assert rank(m) + kernel(m).dim == m.cols
    assert image(m).dim == rank(m)


@given(matrices())
def test_kernel_is_killed(m):
    for v in kernel(m).vectors:
        assert not any(m.apply(v))


@given(matrices())
def test_rank_of_transpose_and_conjugate(m):
    assert rank(m.transpose()) == rank(m) == rank(m.conjugate())


@given(st.data())
def test_sum_and_intersection_dimensions(data):
    n = data.draw(st.integers(1, 5))
    a = kernel(data.draw(matrices(cols=n)))
    b = image(data.draw(matrices(rows=n)))
    s, i = sum_(a, b), intersection(a, b)
    assert s.dim + i.dim == a.dim + b.dim
    assert s.contains(a) and s.contains(b)
    assert a.contains(i) and b.contains(i)
    assert quotient_dim(s, a) == b.dim - i.dim


@given(st.data())
def test_preimage_and_image_of(data):
    m = data.draw(matrices(max_rows=4, max_cols=4))
    b = image(data.draw(matrices(rows=m.rows, max_cols=3)))
    pre = preimage(m, b)
    assert pre.contains(kernel(m))
    assert b.contains(image_of(m, pre))


@given(matrices(max_rows=4, max_cols=4), st.data())
def test_solve_finds_solutions(m, data):
    x = tuple(data.draw(st.lists(st.integers(-3, 3), min_size=m.cols, max_size=m.cols)))
    b = m.apply(tuple(Scalar(v) for v in x))
    y = solve(m, b)
    assert y is not None and m.apply(y) == b


def test_coordinates():
    vs = [(ONE, ZERO, I), (ZERO, ONE, ONE)]
    c = Coordinates(vs, 3)
    v = tuple(2 * a + I * b for a, b in zip(*vs))
    assert c.of(v) == (Scalar(2), I)
