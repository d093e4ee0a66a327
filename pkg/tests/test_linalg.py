import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ospfock.linalg import nullspace, rank


def matvec(rows, x):
    return [sum(a * b for a, b in zip(r, x)) for r in rows]


def test_small_example():
    rows = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    assert nullspace(rows, 3) == [[1, 1, -1]]
    assert rank(rows, 3) == 2


def test_zero_matrix_has_full_nullspace():
    assert nullspace([[0, 0]], 2) == [[1, 0], [0, 1]]
    assert rank([], 3) == 0


@settings(max_examples=200)
@given(st.integers(1, 5).flatmap(lambda c: st.tuples(
    st.just(c), st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), max_size=5))))
def test_nullspace_is_exact_and_complete(data):
    ncols, rows = data
    basis = nullspace(rows, ncols)
    for x in basis:
        assert all(v == 0 for v in matvec(rows, x))
    assert len(basis) == ncols - rank(rows, ncols)
    # the kernel vectors are independent
    assert rank(basis, ncols) == len(basis)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(st.integers(-6, 6), min_size=4, max_size=4), min_size=1, max_size=6))
def test_rank_agrees_with_sympy(rows):
    sympy = pytest.importorskip("sympy")
    assert rank(rows, 4) == sympy.Matrix(rows).rank()
