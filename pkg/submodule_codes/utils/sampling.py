"""Seeded random matrices over finite rings."""
from functools import lru_cache
from typing import List, Tuple

import numpy as np

from ..matrix import Matrix, Row, add_rows, scale_row
from ..rings import Ring, Value


@lru_cache(maxsize=None)
def _units(ring: Ring) -> Tuple[Value, ...]:
    return tuple(ring.units())


def random_unit(ring: Ring, rng: np.random.Generator) -> Value:
    units = _units(ring)
    return units[int(rng.integers(len(units)))]


def random_matrix(
    ring: Ring, nrows: int, cols: int, rng: np.random.Generator
) -> Matrix:
    return Matrix(
        ring=ring,
        cols=cols,
        rows=tuple(
            tuple(ring.random_element(rng) for _ in range(cols)) for _ in range(nrows)
        ),
    )


def random_invertible(ring: Ring, size: int, rng: np.random.Generator) -> Matrix:
    """Product of about size^2 elementary unimodular row operations."""
    rows: List[Row] = list(Matrix.identity(ring, size).rows)

    for _ in range(size * size):
        i = int(rng.integers(size))
        j = int(rng.integers(size))
        operation = int(rng.integers(4)) if i != j else 0

        if operation == 0:
            rows[i] = scale_row(ring, random_unit(ring, rng), rows[i])
        elif operation == 1:
            rows[i], rows[j] = rows[j], rows[i]
        elif operation == 2:
            rows[i] = add_rows(
                ring, rows[i], scale_row(ring, ring.random_element(rng), rows[j])
            )
        else:
            x, y, z, t, _g = ring.stab2(
                ring.random_element(rng), ring.random_element(rng)
            )
            rows[i], rows[j] = (
                add_rows(ring, scale_row(ring, x, rows[i]), scale_row(ring, y, rows[j])),
                add_rows(ring, scale_row(ring, z, rows[i]), scale_row(ring, t, rows[j])),
            )

    return Matrix(ring=ring, cols=size, rows=tuple(rows))


def random_free_rows(
    ring: Ring, nrows: int, cols: int, rng: np.random.Generator
) -> Matrix:
    """nrows x cols matrix whose row module is free of rank nrows (Q [I | B] P)."""
    assert nrows <= cols, (nrows, cols)
    if nrows == 0:
        return Matrix(ring=ring, cols=cols)

    tail = random_matrix(ring, nrows, cols - nrows, rng)
    identity = Matrix.identity(ring, nrows)
    systematic = [
        identity_row + tail_row
        for identity_row, tail_row in zip(identity.rows, tail.rows)
    ]

    order = rng.permutation(cols)
    permuted = tuple(tuple(row[int(col)] for col in order) for row in systematic)

    return random_invertible(ring, nrows, rng) @ Matrix(
        ring=ring, cols=cols, rows=permuted
    )
