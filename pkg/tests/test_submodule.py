"""Tests for submodules, lengths and the submodule distance."""
from typing import Final

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from submodule_codes.bounds import count_submodules_zpm
from submodule_codes.errors import AmbientError, CapExceededError, UnsupportedRingError
from submodule_codes.matrix import Matrix
from submodule_codes.submodule import (
    Ambient,
    SubModule,
    count_submodules,
    enumerate_submodules,
    intersection_oracle,
    loss_and_error,
    shape,
    span,
)

from .shared import (
    SWEEP_RINGS,
    Z4_M_ROWS,
    Z4_N_ROWS,
    Z6_ROWS,
    brute_length,
    brute_span,
    matrices,
    module,
    random_rows,
    ring,
)

METRIC_TRIPLES: Final = 500
ORACLE_PAIRS: Final = 500
TINY_RINGS: Final = ("Z4", "Z6", "Z8", "Zi2", "product(Z2,Z3)")


def _random_module(spec: str, n: int, rng: np.random.Generator) -> SubModule:
    r = ring(spec)
    rows = random_rows(r, int(rng.integers(0, n + 1)), n, rng)
    return span(Ambient.full(r, n), rows)


def test_z6_length() -> None:
    m = module("Z6", Z6_ROWS)
    assert m.length == 4
    assert m.size == 36
    assert set(m.elements()) == brute_span(ring("Z6"), m.basis.rows, 3)
    assert m.size == len(brute_span(ring("Z6"), [tuple(row) for row in Z6_ROWS], 3))


def test_z4_distance() -> None:
    m = module("Z4", Z4_M_ROWS)
    n = module("Z4", Z4_N_ROWS)

    assert m.length == 4
    assert n.length == 4
    assert (m + n).length == 5
    assert m.distance(n) == 2
    assert m.intersection_length(n) == 3
    assert loss_and_error(m, n) == (1, 1)

    common = intersection_oracle(m, n)
    assert common.length == 3
    assert common.is_submodule_of(m)
    assert common.is_submodule_of(n)


def test_containment() -> None:
    m = module("Z4", Z4_M_ROWS)
    assert (0, 0, 2, 0) in m
    assert (0, 0, 1, 0) not in m
    assert m.scaled(2).is_submodule_of(m)
    assert m.scaled(2).length == 2
    assert SubModule.zero(m.ambient).length == 0


def test_restricted_ambient() -> None:
    z4 = ring("Z4")
    ambient = Ambient.chain(z4, [1])
    assert ambient.column_ideals == (1, 2)
    assert ambient.length == 3
    assert ambient.size == 8
    assert ambient.chain_exponents() == (0, 1)
    assert ambient.contains((3, 2))
    assert not ambient.contains((1, 1))
    assert not ambient.is_full

    with pytest.raises(AmbientError):
        span(ambient, [(1, 1)])

    with pytest.raises(UnsupportedRingError):
        Ambient.chain(ring("Z6"), [1])


def test_ambient_mismatch() -> None:
    m = module("Z4", Z4_M_ROWS)
    other = span(Ambient.chain(ring("Z4"), [0, 0, 1]), [(1, 0, 0, 0)])

    with pytest.raises(AmbientError):
        _ = m + other

    with pytest.raises(AmbientError):
        SubModule.from_generators(
            Ambient.full(ring("Z4"), 3), Matrix.of(ring("Z4"), Z4_M_ROWS)
        )


def test_enumerate_z12() -> None:
    found = enumerate_submodules(Ambient.full(ring("Z12"), 2), 1)
    assert [m.basis.rows for m in found] == [
        ((4, 0),),
        ((4, 4),),
        ((4, 8),),
        ((6, 0),),
        ((6, 6),),
        ((0, 4),),
        ((0, 6),),
    ]

    with pytest.raises(CapExceededError):
        enumerate_submodules(Ambient.full(ring("Z12"), 4), 1)


@pytest.mark.parametrize(
    ("spec", "p"), [("product(Z2,Z2)", 2), ("product(Z3,Z3)", 3)]
)
def test_count_matches_closed_form(spec: str, p: int) -> None:
    r = ring(spec)
    ambient = Ambient.full(r, 2)
    idempotents = r.idempotents()
    assert len(idempotents) == 2

    for total in range(ambient.length + 1):
        for m in enumerate_submodules(ambient, total):
            dims = [m.scaled(e).length for e in idempotents]
            assert sum(dims) == total

            for length in range(total + 1):
                expected = count_submodules_zpm(dims, length, p)
                assert count_submodules(m, length) == expected


def test_shape() -> None:
    assert shape(module("Z4", [[1, 0], [0, 1]])) == (2, 2)
    assert shape(module("Z4", [[1, 0], [0, 2]])) == (1, 2)
    assert shape(module("Z4", [[2, 0]])) == (0, 1)

    m = module("Z8", [[1, 2, 0], [0, 4, 2], [0, 0, 4]])
    assert sum(shape(m)) == m.length

    with pytest.raises(UnsupportedRingError):
        shape(module("Z6", Z6_ROWS))


# -----------------------------------------------------------------------------


@settings(
    max_examples=50,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
@given(data=st.data())
def test_length_matches_composition_series(data) -> None:
    r = ring(data.draw(st.sampled_from(TINY_RINGS)))
    m = data.draw(matrices(r, max_rows=3, max_cols=2))
    sub = SubModule.from_generators(Ambient.full(r, m.cols), m)

    assert sub.length == brute_length(r, m.rows, m.cols)
    assert sub.size == len(brute_span(r, m.rows, m.cols))


@pytest.mark.parametrize("spec", SWEEP_RINGS)
def test_distance_is_a_metric(spec: str) -> None:
    rng = np.random.default_rng(11)
    for _ in range(METRIC_TRIPLES):
        a, b, c = (_random_module(spec, 3, rng) for _ in range(3))

        assert a.distance(a) == 0
        assert a.distance(b) == b.distance(a)
        assert a.distance(c) <= a.distance(b) + b.distance(c)
        assert (a.distance(b) == 0) == (a.basis == b.basis)

        # Modular law: (s + a) n c = s + (a n c) for s inside c
        s = c.scaled(ring(spec).random_element(rng))
        assert s.is_submodule_of(c)
        assert (s + a).intersection_length(c) == (
            s.length + a.intersection_length(c) - s.intersection_length(a)
        )


@pytest.mark.parametrize("spec", SWEEP_RINGS)
def test_intersection_oracle(spec: str) -> None:
    rng = np.random.default_rng(5)
    for _ in range(ORACLE_PAIRS):
        a = _random_module(spec, 2, rng)
        b = _random_module(spec, 2, rng)

        common = intersection_oracle(a, b)
        assert common.length == a.intersection_length(b)
        assert common.is_submodule_of(a) and common.is_submodule_of(b)

        error_free, errors = loss_and_error(a, b)
        assert error_free + errors == a.distance(b)
