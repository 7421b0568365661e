"""Tests for ring arithmetic and ideal structure."""
import itertools
from typing import Final

import pytest

from submodule_codes.errors import (
    CapExceededError,
    NotDivisibleError,
    RingMismatchError,
    UnsupportedRingError,
)
from submodule_codes.formats import parse_ring
from submodule_codes.rings import (
    ChainComponent,
    GaussianLocalRing,
    GaussianSplitRing,
    IntegerResidueRing,
    classify,
    enumerate_elements,
    gaussian_residue_ring,
)
from submodule_codes.settings import EnumerationLimits

from .shared import ring

PAIR_RINGS: Final = (
    "Z4",
    "Z6",
    "Z8",
    "Z12",
    "Zi2",
    "Zi3",
    "Zi5",
    "product(Z2,Z3)",
    "product(Z4,Zi2)",
)

CHAIN_RINGS: Final = ("Z4", "Z9", "Zi2", "Zi3", "Z7")


def test_integer_ring_structure() -> None:
    z12 = ring("Z12")
    structure = classify(z12)
    assert structure.components == (
        ChainComponent(modulus=4, q=2, e=2),
        ChainComponent(modulus=3, q=3, e=1),
    )
    assert structure.length == 3
    assert not structure.is_chain

    assert ring("Z8").is_chain
    assert not ring("Z8").is_field
    assert ring("Z7").is_field


def test_integer_ring_ideals() -> None:
    z6 = ring("Z6")
    assert z6.canonical_generator(4) == 2
    assert z6.ideal(4).length == 1
    assert z6.annihilator(2).generator == 3
    assert z6.divide(4, 2) == 2
    assert z6.is_unit(5)
    assert not z6.is_unit(3)
    assert z6.units() == [1, 5]

    with pytest.raises(NotDivisibleError):
        z6.divide(1, 2)


def test_integer_ring_idempotents() -> None:
    z12 = ring("Z12")
    assert z12.idempotents() == [9, 4]
    assert z12.factors() == (IntegerResidueRing(4), IntegerResidueRing(3))
    assert z12.project(7, 0) == 3
    assert z12.project(7, 1) == 1


def test_gaussian_classification() -> None:
    assert isinstance(gaussian_residue_ring(5), GaussianSplitRing)
    assert isinstance(gaussian_residue_ring(3), GaussianLocalRing)
    assert isinstance(gaussian_residue_ring(2), GaussianLocalRing)

    zi2 = ring("Zi2")
    assert zi2.components == (ChainComponent(modulus=2, q=2, e=2),)
    assert zi2.uniformizer() == (1, 1)
    assert zi2.ideal_length((1, 1)) == 1

    zi3 = ring("Zi3")
    assert zi3.is_field
    assert zi3.components == (ChainComponent(modulus=3, q=9, e=1),)


def test_split_gaussian_ring() -> None:
    zi5 = ring("Zi5")
    structure = classify(zi5)
    assert structure.length == 2
    assert structure.square_roots == (2, 3)

    # (2+i) and (2-i) are the two maximal ideals
    plus = zi5.ideal((2, 1))
    minus = zi5.ideal((2, 4))
    assert plus.length == minus.length == 1
    assert plus.generator != minus.generator

    length_one = {
        zi5.canonical_generator(a) for a in zi5.elements() if zi5.ideal_length(a) == 1
    }
    assert length_one == {plus.generator, minus.generator}

    assert zi5.idempotents() == [(3, 4), (3, 1)]
    assert zi5.format_element((3, 4)) == "3+4i"


@pytest.mark.parametrize("spec", ["Z1", "Zi4", "Zi9"])
def test_unsupported_ring_specs(spec: str) -> None:
    with pytest.raises(UnsupportedRingError):
        parse_ring(spec)


def test_unsupported_ring_constructors() -> None:
    with pytest.raises(UnsupportedRingError):
        IntegerResidueRing(1)

    with pytest.raises(UnsupportedRingError):
        GaussianLocalRing(5)

    with pytest.raises(UnsupportedRingError):
        GaussianSplitRing(3)

    with pytest.raises(UnsupportedRingError):
        ring("Z6").uniformizer()

    with pytest.raises(UnsupportedRingError):
        ring("Zi5").residue_field()


# -----------------------------------------------------------------------------


@pytest.mark.parametrize("spec", PAIR_RINGS)
def test_stab2(spec: str) -> None:
    r = ring(spec)
    for a, b in itertools.product(r.elements(), repeat=2):
        x, y, z, t, g = r.stab2(a, b)
        assert r.add(r.mul(x, a), r.mul(y, b)) == g, (a, b)
        assert r.add(r.mul(z, a), r.mul(t, b)) == r.zero, (a, b)
        assert r.sub(r.mul(x, t), r.mul(y, z)) == r.one, (a, b)
        assert r.divides(g, a) and r.divides(g, b)


@pytest.mark.parametrize("spec", PAIR_RINGS)
def test_divide_and_residue(spec: str) -> None:
    r = ring(spec)
    elements = list(r.elements())
    for a, g in itertools.product(elements, repeat=2):
        if r.divides(g, a):
            assert r.mul(r.divide(a, g), g) == a

        remainder = r.residue(a, g)
        assert r.divides(g, r.sub(remainder, a))

    # Same coset, same representative
    for a, g, c in itertools.islice(itertools.product(elements, repeat=3), 2000):
        assert r.residue(r.add(a, r.mul(c, g)), g) == r.residue(a, g)


@pytest.mark.parametrize("spec", PAIR_RINGS)
def test_divides_matches_exhaustive_search(spec: str) -> None:
    r = ring(spec)
    elements = list(r.elements())
    for a in elements:
        multiples = {r.mul(c, a) for c in elements}
        for b in elements:
            assert r.divides(a, b) == (b in multiples), (a, b)


def test_ideal_gcd_examples() -> None:
    z6 = ring("Z6")
    assert z6.ideal_gcd([2, 3]).generator == 1

    z12 = ring("Z12")
    found = z12.ideal_gcd([4, 6])
    assert found.generator == 2
    assert found.length == 2
    assert z12.ideal_gcd([0, 0]).generator == 0

    zi5 = ring("Zi5")
    unit = zi5.ideal_gcd([(2, 1), (2, 4)])
    assert unit.generator == zi5.one
    assert unit.length == zi5.length


@pytest.mark.parametrize("spec", PAIR_RINGS)
def test_ideal_invariants(spec: str) -> None:
    r = ring(spec)
    elements = list(r.elements())
    for a in elements:
        multiples = {r.mul(a, c) for c in elements}
        assert r.ideal_size(a) == len(multiples)
        assert r.canonical_generator(a) in multiples

        unit = r.normalizing_unit(a)
        assert r.is_unit(unit)
        assert r.mul(unit, a) == r.canonical_generator(a)

        annihilator = r.annihilator_generator(a)
        assert r.mul(a, annihilator) == r.zero
        assert r.ideal_length(a) + r.ideal_length(annihilator) == r.length


@pytest.mark.parametrize("spec", PAIR_RINGS)
def test_idempotents_sum_to_one(spec: str) -> None:
    r = ring(spec)
    idempotents = r.idempotents()
    assert len(idempotents) == len(r.components)

    total = r.zero
    for i, e in enumerate(idempotents):
        assert r.mul(e, e) == e
        for j, f in enumerate(idempotents):
            if i != j:
                assert r.mul(e, f) == r.zero

        total = r.add(total, e)

    assert total == r.one


@pytest.mark.parametrize("spec", CHAIN_RINGS)
def test_residue_field(spec: str) -> None:
    r = ring(spec)
    residue = r.residue_field()
    field = residue.field
    assert residue.order == r.components[0].q

    for x in range(residue.order):
        assert residue.reduce(residue.lift(x)) == x

    for a, b in itertools.product(r.elements(), repeat=2):
        fa, fb = field(residue.reduce(a)), field(residue.reduce(b))
        assert residue.reduce(r.add(a, b)) == int(fa + fb)
        assert residue.reduce(r.mul(a, b)) == int(fa * fb)

    # The uniformizer maps to zero
    assert residue.reduce(r.uniformizer()) == 0


def test_element_arithmetic() -> None:
    z6 = ring("Z6")
    assert str(z6.element(4) + z6.element(5)) == "3"
    assert str(z6.element(4) - z6.element(5)) == "5"
    assert str(-z6.element(1)) == "5"

    zi5 = ring("Zi5")
    assert zi5.element((2, 1)) * zi5.element((2, 4)) == zi5.element(0)

    with pytest.raises(RingMismatchError):
        _ = ring("Z4").element(1) + z6.element(1)


def test_enumerate_elements_cap() -> None:
    assert list(enumerate_elements(ring("Z12"))) == list(range(12))

    with pytest.raises(CapExceededError):
        enumerate_elements(ring("Z12"), EnumerationLimits(max_ring_elements=10))


def test_product_ring() -> None:
    r = ring("product(Z2,Z3)")
    assert r.size == 6
    assert r.format_element((1, 2)) == "(1,2)"
    assert r.canonical_generator((1, 2)) == (1, 1)
    assert r.ideal_length((0, 2)) == 1
    assert r.inject(2, 1) == (0, 2)

    with pytest.raises(ValueError):
        r.coerce((1, 2, 3))
