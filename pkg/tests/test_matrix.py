"""Tests for echelon forms and row-module membership."""
import math
from typing import Final

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from submodule_codes.errors import RingMismatchError, ShapeError
from submodule_codes.matrix import (
    Matrix,
    add_rows,
    as_echelon,
    is_row_echelon,
    leading_position,
    member,
    row_echelon,
    rref,
    scale_row,
    stack,
)
from submodule_codes.utils.sampling import random_invertible, random_matrix

from .shared import (
    SMALL_RINGS,
    SWEEP_RINGS,
    Z4_M_ROWS,
    Z4_N_ROWS,
    Z4_SUM_RREF,
    Z6_ROWS,
    Z8_CANONICAL_ROWS,
    Z8_RREF,
    brute_span,
    matrices,
    matrix,
    ring,
)

UNIQUENESS_PAIRS: Final = 1000


def test_z6_echelon_form() -> None:
    m = matrix("Z6", Z6_ROWS)
    echelon = row_echelon(m)
    assert echelon.rows == ((2, 1, 3), (0, 5, 2), (0, 0, 3))
    assert echelon.pivot_cols == (0, 1, 2)
    assert is_row_echelon(echelon)

    reduced = rref(m)
    assert reduced.rows == ((2, 0, 2), (0, 1, 1), (0, 0, 3))
    assert reduced.pivots == (2, 1, 3)
    assert reduced.reduced


def test_z6_input_is_not_echelon() -> None:
    verdict = is_row_echelon(matrix("Z6", Z6_ROWS))
    assert not verdict
    assert verdict.reason == (
        "leading positions of rows 1 and 2 are not strictly increasing"
    )
    assert as_echelon(matrix("Z6", Z6_ROWS)) is None


def test_echelon_check_reasons() -> None:
    # 2 does not divide 1, so (0, 2) escapes the rows below
    verdict = is_row_echelon(matrix("Z4", [[2, 1]]))
    assert not verdict
    assert verdict.reason == (
        "pivot 2 of the last row does not divide all of its entries"
    )

    verdict = is_row_echelon(matrix("Z4", [[2, 1, 0], [0, 0, 1]]))
    assert not verdict
    assert verdict.reason.startswith("ann(pivot) * row 1")

    verdict = is_row_echelon(matrix("Z4", [[1, 0], [0, 0]]))
    assert verdict.reason == "row 2 is zero"

    assert is_row_echelon(matrix("Z4", [[2, 1], [0, 2]]))


def test_z4_sum() -> None:
    stacked = stack(matrix("Z4", Z4_M_ROWS), matrix("Z4", Z4_N_ROWS))
    assert rref(stacked).rows == tuple(tuple(row) for row in Z4_SUM_RREF)


def test_z8_canonical_form() -> None:
    reduced = rref(matrix("Z8", Z8_CANONICAL_ROWS))
    assert reduced.rows == tuple(tuple(row) for row in Z8_RREF)
    assert reduced.pivot_cols == (0, 1, 2, 3)


def test_empty_and_zero_matrices() -> None:
    r = ring("Z4")
    assert rref(Matrix(ring=r, cols=3)).nrows == 0
    assert rref(Matrix.zeros(r, 2, 3)).nrows == 0
    assert is_row_echelon(Matrix(ring=r, cols=3))


def test_leading_position() -> None:
    r = ring("Z6")
    assert leading_position(r, (0, 3, 0)) == 1
    assert leading_position(r, (0, 0, 0)) == math.inf


def test_member() -> None:
    r = ring("Z4")
    echelon = rref(matrix("Z4", Z4_M_ROWS))

    found = member((0, 0, 2, 0), echelon)
    assert found
    assert found.coefficients is not None

    total = (0, 0, 0, 0)
    for c, row in zip(found.coefficients, echelon.rows):
        total = add_rows(r, total, scale_row(r, c, row))

    assert total == (0, 0, 2, 0)
    assert not member((0, 0, 1, 0), echelon)

    with pytest.raises(ShapeError):
        member((0, 0, 1), echelon)


def test_shape_errors() -> None:
    with pytest.raises(ShapeError):
        matrix("Z4", [[1, 2], [1]])

    with pytest.raises(ShapeError):
        matrix("Z4", [[1, 2]]) @ matrix("Z4", [[1, 2]])

    with pytest.raises(ShapeError):
        stack(matrix("Z4", [[1, 2]]), matrix("Z4", [[1]]))

    with pytest.raises(RingMismatchError):
        matrix("Z4", [[1]]) @ matrix("Z6", [[1]])


# -----------------------------------------------------------------------------


@settings(
    max_examples=150,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
@given(data=st.data())
def test_echelon_properties(data) -> None:
    r = ring(data.draw(st.sampled_from(SMALL_RINGS)))
    m = data.draw(matrices(r, max_rows=3, max_cols=2))

    echelon = row_echelon(m)
    assert is_row_echelon(echelon)

    reduced = rref(echelon)
    assert is_row_echelon(reduced)
    assert all(r.canonical_generator(p) == p for p in reduced.pivots)

    # Same row module as the input
    assert brute_span(r, reduced.rows, m.cols) == brute_span(r, m.rows, m.cols)

    # Unique: reducing the reduced rows again changes nothing
    assert rref(reduced.base).rows == reduced.rows

    for row in m.rows:
        assert member(row, reduced)


@pytest.mark.parametrize("spec", SWEEP_RINGS)
def test_rref_is_invariant_under_invertible_transforms(spec: str) -> None:
    r = ring(spec)
    rng = np.random.default_rng(2024)
    for _ in range(UNIQUENESS_PAIRS):
        nrows = int(rng.integers(1, 5))
        cols = int(rng.integers(1, 5))
        m = random_matrix(r, nrows, cols, rng)
        p = random_invertible(r, nrows, rng)

        assert rref(p @ m).rows == rref(m).rows, (m, p)


@pytest.mark.parametrize("spec", SWEEP_RINGS)
def test_redundant_rows_do_not_change_rref(spec: str) -> None:
    r = ring(spec)
    rng = np.random.default_rng(7)
    for _ in range(100):
        m = random_matrix(r, 2, 3, rng)
        combination = random_matrix(r, 2, 2, rng) @ m
        assert rref(stack(m, combination)).rows == rref(m).rows
