from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from splinedim.linalg import nullspace, rank, rref


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_cols).flatmap(
        lambda nc: st.lists(
            st.lists(st.fractions(min_value=-5, max_value=5,
                                  max_denominator=4).map(mpq),
                     min_size=nc, max_size=nc),
            min_size=1, max_size=max_rows,
        ).map(lambda rows: (rows, nc))
    )


def mat_vec(rows, v):
    return [sum((c * a for c, a in zip(row, v)), mpq(0)) for row in rows]


def test_rank_known():
    assert rank([[1, 2], [2, 4]], 2) == 1
    assert rank([[1, 0], [0, 1]], 2) == 2
    assert rank([[0, 0], [0, 0]], 2) == 0
    assert rank([[mpq(1, 2), mpq(1, 3)], [mpq(3, 2), 1]], 2) == 1


def test_rank_rectangular():
    rows = [[1, 2, 3], [4, 5, 6], [7, 8, 9]]
    assert rank(rows, 3) == 2


def test_nullspace_known():
    rows = [[1, 2, 3], [4, 5, 6]]
    basis = nullspace(rows, 3)
    assert len(basis) == 1
    assert mat_vec(rows, basis[0]) == [0, 0]


def test_nullspace_empty_for_full_rank():
    assert nullspace([[1, 0], [0, 1]], 2) == []


def test_rref_idempotent():
    pivots, reduced = rref([[2, 4, 6], [1, 1, 1]], 3)
    assert rref(reduced, 3) == (pivots, reduced)
    for p, row in zip(pivots, reduced):
        assert row[p] == 1


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity(data):
    rows, ncols = data
    r = rank(rows, ncols)
    basis = nullspace(rows, ncols)
    assert r + len(basis) == ncols
    for v in basis:
        assert mat_vec(rows, v) == [0] * len(rows)


@settings(max_examples=40, deadline=None)
@given(matrices())
def test_rank_invariant_under_row_scaling(data):
    rows, ncols = data
    scaled = [[mpq(3, 7) * c for c in row] for row in rows]
    assert rank(scaled, ncols) == rank(rows, ncols)


@settings(max_examples=40, deadline=None)
@given(matrices())
def test_nullspace_vectors_independent(data):
    rows, ncols = data
    basis = nullspace(rows, ncols)
    if basis:
        assert rank(basis, ncols) == len(basis)
