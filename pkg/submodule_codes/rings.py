"""Exact arithmetic over finite principal ideal rings.

Three families are supported, all with canonical element representatives:

* ``Z<m>``: integers modulo m (values are ints in [0, m))
* ``Zi<p>``: Gaussian integers modulo a prime p (values are pairs (a, b) for a + bi)
* ``product(...)``: direct products (values are tuples of component values)

Every ring exposes the ideal structure needed by the echelon algorithms: canonical
ideal generators, lengths, annihilators, division, residues and the 2x2 gcd
transform.
"""
import itertools
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from math import gcd, prod
from typing import Any, Callable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

import galois
import numpy as np
from sympy import factorint, isprime
from sympy.ntheory import sqrt_mod
from sympy.ntheory.modular import crt

from .errors import (
    CapExceededError,
    NotDivisibleError,
    RingMismatchError,
    SubmoduleCodesError,
    UnsupportedRingError,
)
from .settings import DEFAULT_LIMITS, EnumerationLimits

_LOGGER = logging.getLogger()

Value = Any
"""Canonical representative of a ring element."""


@lru_cache(maxsize=None)
def _omega(number: int) -> int:
    """Number of prime factors counted with multiplicity."""
    return sum(factorint(number).values())


@dataclass(frozen=True)
class ChainComponent:
    """Local factor of a finite principal ideal ring."""

    modulus: int
    """Characteristic of the component (p^k for Z/p^k)."""

    q: int
    """Order of the residue field."""

    e: int
    """Nilpotency index of the maximal ideal (chain length)."""


@dataclass(frozen=True)
class RingStructure:
    """Chain decomposition of a ring."""

    spec: str
    components: Tuple[ChainComponent, ...]

    square_roots: Optional[Tuple[int, int]] = None
    """Roots of x^2 + 1 mod p used to split Z_p[i] when p = 1 mod 4."""

    @property
    def length(self) -> int:
        """Length of the ring as a module over itself."""
        return sum(component.e for component in self.components)

    @property
    def is_chain(self) -> bool:
        return len(self.components) == 1

    @property
    def is_field(self) -> bool:
        return self.is_chain and (self.components[0].e == 1)


@dataclass(frozen=True)
class IdealHandle:
    """Principal ideal given by its canonical generator."""

    generator: Value
    length: int


class Stab2(NamedTuple):
    """Unimodular transform [[x, y], [z, t]] taking (a, b) to (g, 0)."""

    x: Value
    y: Value
    z: Value
    t: Value
    g: Value


@dataclass(frozen=True)
class ResidueField:
    """Residue field of a chain ring with a set-theoretic section."""

    field: Any
    """galois field class GF(q)."""

    lift: Callable[[int], Value]
    """Section: field element (as int) to ring representative."""

    reduce: Callable[[Value], int]
    """Projection: ring element to field element (as int)."""

    @property
    def order(self) -> int:
        return int(self.field.order)


class Ring(ABC):
    """Finite principal ideal ring with canonical representatives."""

    @property
    @abstractmethod
    def spec(self) -> str:
        """Text form of the ring (Z6, Zi5, product(Z2,Z2))."""

    @property
    @abstractmethod
    def size(self) -> int:
        """Number of elements."""

    @property
    @abstractmethod
    def zero(self) -> Value:
        pass

    @property
    @abstractmethod
    def one(self) -> Value:
        pass

    @abstractmethod
    def add(self, a: Value, b: Value) -> Value:
        pass

    @abstractmethod
    def neg(self, a: Value) -> Value:
        pass

    @abstractmethod
    def mul(self, a: Value, b: Value) -> Value:
        pass

    def sub(self, a: Value, b: Value) -> Value:
        return self.add(a, self.neg(b))

    @abstractmethod
    def coerce(self, value: Any) -> Value:
        """Canonical representative of an int/tuple literal (ValueError if invalid)."""

    @abstractmethod
    def elements(self) -> Iterator[Value]:
        """All elements in a fixed order."""

    @abstractmethod
    def random_element(self, rng: np.random.Generator) -> Value:
        pass

    @abstractmethod
    def format_element(self, a: Value) -> str:
        pass

    @abstractmethod
    def canonical_generator(self, a: Value) -> Value:
        """Canonical generator of the ideal (a)."""

    @abstractmethod
    def ideal_length(self, a: Value) -> int:
        """Length of the ideal (a)."""

    @abstractmethod
    def ideal_size(self, a: Value) -> int:
        """Number of elements of the ideal (a)."""

    @abstractmethod
    def annihilator_generator(self, a: Value) -> Value:
        """Canonical generator of ann(a)."""

    @abstractmethod
    def divides(self, a: Value, b: Value) -> bool:
        """True if b is in (a)."""

    @abstractmethod
    def divide(self, b: Value, g: Value) -> Value:
        """Deterministic h with h * g = b."""

    @abstractmethod
    def residue(self, a: Value, g: Value) -> Value:
        """Canonical representative of a + (g)."""

    @abstractmethod
    def normalizing_unit(self, a: Value) -> Value:
        """Unit u with u * a equal to the canonical generator of (a)."""

    @abstractmethod
    def stab2(self, a: Value, b: Value) -> Stab2:
        """2x2 transform with x*a + y*b = g, z*a + t*b = 0, x*t - y*z = 1."""

    @property
    @abstractmethod
    def components(self) -> Tuple[ChainComponent, ...]:
        """Chain components in canonical order."""

    # -------------------------------------------------------------------------

    def square_roots(self) -> Optional[Tuple[int, int]]:
        return None

    @property
    def structure(self) -> RingStructure:
        return RingStructure(
            spec=self.spec,
            components=self.components,
            square_roots=self.square_roots(),
        )

    @property
    def length(self) -> int:
        """Length of the ring over itself."""
        return sum(component.e for component in self.components)

    @property
    def is_chain(self) -> bool:
        return len(self.components) == 1

    @property
    def is_field(self) -> bool:
        return self.is_chain and (self.components[0].e == 1)

    def is_unit(self, a: Value) -> bool:
        return self.canonical_generator(a) == self.one

    def units(self) -> List[Value]:
        return [a for a in self.elements() if self.is_unit(a)]

    def annihilator(self, a: Value) -> IdealHandle:
        generator = self.annihilator_generator(a)
        return IdealHandle(generator=generator, length=self.ideal_length(generator))

    def ideal(self, a: Value) -> IdealHandle:
        generator = self.canonical_generator(a)
        return IdealHandle(generator=generator, length=self.ideal_length(generator))

    def ideal_gcd(self, values: Sequence[Value]) -> IdealHandle:
        """Canonical generator of the ideal sum (a_1) + ... + (a_s)."""
        if not values:
            raise SubmoduleCodesError("ideal_gcd needs at least one element")

        result = values[0]
        for value in values[1:]:
            if value == self.zero:
                continue

            if result == self.zero:
                result = value
            else:
                result = self.stab2(result, value).g

        return self.ideal(result)

    def factors(self) -> Tuple["Ring", ...]:
        """Direct factors of the ring (the ring itself when it is local)."""
        return (self,)

    def project(self, a: Value, index: int) -> Value:
        """Component of a in factor index."""
        assert index == 0, index
        return a

    def inject(self, a: Value, index: int) -> Value:
        """Element with component a in factor index and zero elsewhere."""
        assert index == 0, index
        return a

    def idempotents(self) -> List[Value]:
        """Orthogonal idempotents summing to one, one per chain component."""
        return [self.inject(factor.one, i) for i, factor in enumerate(self.factors())]

    def uniformizer(self) -> Value:
        """Generator of the maximal ideal of a chain ring."""
        raise UnsupportedRingError(f"{self.spec} is not a chain ring")

    def residue_field(self) -> ResidueField:
        raise UnsupportedRingError(f"{self.spec} is not a chain ring")

    def power(self, a: Value, exponent: int) -> Value:
        result = self.one
        for _ in range(exponent):
            result = self.mul(result, a)

        return result

    def element(self, value: Any) -> "Element":
        return Element(self, self.coerce(value))

    def __str__(self) -> str:
        return self.spec


# -----------------------------------------------------------------------------


@dataclass(frozen=True)
class IntegerResidueRing(Ring):
    """Integers modulo m."""

    m: int

    def __post_init__(self) -> None:
        if self.m < 2:
            raise UnsupportedRingError(f"Modulus must be at least 2, got {self.m}")

    @property
    def spec(self) -> str:
        return f"Z{self.m}"

    @property
    def size(self) -> int:
        return self.m

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.m

    def neg(self, a: int) -> int:
        return (-a) % self.m

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.m

    def coerce(self, value: Any) -> int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValueError(f"Expected an integer for {self.spec}, got {value!r}")

        return value % self.m

    def elements(self) -> Iterator[int]:
        return iter(range(self.m))

    def random_element(self, rng: np.random.Generator) -> int:
        return int(rng.integers(self.m))

    def format_element(self, a: int) -> str:
        return str(a)

    def canonical_generator(self, a: int) -> int:
        return gcd(a, self.m) % self.m

    def ideal_length(self, a: int) -> int:
        return _omega(self.m // gcd(a, self.m))

    def ideal_size(self, a: int) -> int:
        return self.m // gcd(a, self.m)

    def annihilator_generator(self, a: int) -> int:
        return (self.m // gcd(a, self.m)) % self.m

    def divides(self, a: int, b: int) -> bool:
        return gcd(b, self.m) % gcd(a, self.m) == 0

    def divide(self, b: int, g: int) -> int:
        if not self.divides(g, b):
            raise NotDivisibleError(f"{g} does not divide {b} in {self.spec}")

        if b == 0:
            return 0

        divisor = gcd(g, self.m)
        modulus = self.m // divisor
        return ((b // divisor) * pow(g // divisor, -1, modulus)) % modulus

    def residue(self, a: int, g: int) -> int:
        divisor = self.canonical_generator(g)
        if divisor == 0:
            return a

        return a % divisor

    def normalizing_unit(self, a: int) -> int:
        divisor = gcd(a, self.m)
        if divisor == self.m:
            return 1

        modulus = self.m // divisor
        unit = pow(a // divisor, -1, modulus) if modulus > 1 else 1
        while gcd(unit, self.m) != 1:
            unit += modulus

        return unit % self.m

    def stab2(self, a: int, b: int) -> Stab2:
        if b == 0:
            return Stab2(1, 0, 0, 1, a)

        if a == 0:
            return Stab2(0, 1, self.m - 1, 0, b)

        eta = gcd(gcd(a, b), self.m)
        alpha = a // eta
        gamma = self.m // eta
        common = gcd(gamma, alpha)
        while common != 1:
            gamma //= common
            common = gcd(gamma, alpha)

        c = gamma % self.m
        g = (a + c * b) % self.m
        h = self.divide(b, g)
        return Stab2(1, c, (-h) % self.m, (1 - c * h) % self.m, g)

    @cached_property
    def components(self) -> Tuple[ChainComponent, ...]:  # type: ignore[override]
        return tuple(
            ChainComponent(modulus=p**k, q=p, e=k)
            for p, k in sorted(factorint(self.m).items())
        )

    def factors(self) -> Tuple[Ring, ...]:
        if self.is_chain:
            return (self,)

        return tuple(IntegerResidueRing(c.modulus) for c in self.components)

    @cached_property
    def _crt_idempotents(self) -> Tuple[int, ...]:
        moduli = [c.modulus for c in self.components]
        values: List[int] = []
        for i in range(len(moduli)):
            residues = [1 if j == i else 0 for j in range(len(moduli))]
            solution = crt(moduli, residues)
            assert solution is not None
            values.append(int(solution[0]) % self.m)

        return tuple(values)

    def project(self, a: int, index: int) -> int:
        return a % self.components[index].modulus

    def inject(self, a: int, index: int) -> int:
        if self.is_chain:
            return super().inject(a, index)

        return (self._crt_idempotents[index] * a) % self.m

    def uniformizer(self) -> int:
        if not self.is_chain:
            return super().uniformizer()

        return self.components[0].q % self.m

    def residue_field(self) -> ResidueField:
        if not self.is_chain:
            return super().residue_field()

        p = self.components[0].q
        return ResidueField(
            field=galois.GF(p), lift=int, reduce=lambda a: int(a) % p
        )


# -----------------------------------------------------------------------------


@dataclass(frozen=True)
class GaussianResidueRing(Ring):
    """Base class for Z_p[i]; use gaussian_residue_ring(p) to construct."""

    p: int

    def __post_init__(self) -> None:
        if not isprime(self.p):
            raise UnsupportedRingError(f"Zi needs a prime, got {self.p}")

    @property
    def spec(self) -> str:
        return f"Zi{self.p}"

    @property
    def size(self) -> int:
        return self.p * self.p

    @property
    def zero(self) -> Tuple[int, int]:
        return (0, 0)

    @property
    def one(self) -> Tuple[int, int]:
        return (1, 0)

    def add(self, a: Tuple[int, int], b: Tuple[int, int]) -> Tuple[int, int]:
        return ((a[0] + b[0]) % self.p, (a[1] + b[1]) % self.p)

    def neg(self, a: Tuple[int, int]) -> Tuple[int, int]:
        return ((-a[0]) % self.p, (-a[1]) % self.p)

    def mul(self, a: Tuple[int, int], b: Tuple[int, int]) -> Tuple[int, int]:
        return (
            (a[0] * b[0] - a[1] * b[1]) % self.p,
            (a[0] * b[1] + a[1] * b[0]) % self.p,
        )

    def norm(self, a: Tuple[int, int]) -> int:
        return (a[0] * a[0] + a[1] * a[1]) % self.p

    def coerce(self, value: Any) -> Tuple[int, int]:
        if isinstance(value, int) and not isinstance(value, bool):
            return (value % self.p, 0)

        if (
            isinstance(value, (tuple, list))
            and (len(value) == 2)
            and all(isinstance(v, int) for v in value)
        ):
            return (value[0] % self.p, value[1] % self.p)

        raise ValueError(f"Expected a + bi for {self.spec}, got {value!r}")

    def elements(self) -> Iterator[Tuple[int, int]]:
        return itertools.product(range(self.p), repeat=2)

    def random_element(self, rng: np.random.Generator) -> Tuple[int, int]:
        return (int(rng.integers(self.p)), int(rng.integers(self.p)))

    def format_element(self, a: Tuple[int, int]) -> str:
        real, imag = a
        if imag == 0:
            return str(real)

        imag_text = "i" if imag == 1 else f"{imag}i"
        if real == 0:
            return imag_text

        return f"{real}+{imag_text}"


@dataclass(frozen=True)
class GaussianLocalRing(GaussianResidueRing):
    """Z_p[i] for p = 2 (chain ring with uniformizer 1+i) or p = 3 mod 4 (field)."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.p % 4 == 1:
            raise UnsupportedRingError(f"Zi{self.p} is not local")

    @property
    def _e(self) -> int:
        return 2 if self.p == 2 else 1

    @property
    def _pi(self) -> Tuple[int, int]:
        return (1, 1) if self.p == 2 else (0, 0)

    def valuation(self, a: Tuple[int, int]) -> int:
        if a == self.zero:
            return self._e

        if self.norm(a) != 0:
            return 0

        # Only 1 + i when p = 2
        return 1

    def _pi_power(self, exponent: int) -> Tuple[int, int]:
        if exponent <= 0:
            return self.one

        if exponent >= self._e:
            return self.zero

        return self._pi

    def inverse(self, a: Tuple[int, int]) -> Tuple[int, int]:
        norm_inverse = pow(self.norm(a), -1, self.p)
        return ((a[0] * norm_inverse) % self.p, (-a[1] * norm_inverse) % self.p)

    def canonical_generator(self, a: Tuple[int, int]) -> Tuple[int, int]:
        return self._pi_power(self.valuation(a))

    def ideal_length(self, a: Tuple[int, int]) -> int:
        return self._e - self.valuation(a)

    def ideal_size(self, a: Tuple[int, int]) -> int:
        return self.components[0].q ** self.ideal_length(a)

    def annihilator_generator(self, a: Tuple[int, int]) -> Tuple[int, int]:
        return self._pi_power(self._e - self.valuation(a))

    def divides(self, a: Tuple[int, int], b: Tuple[int, int]) -> bool:
        return self.valuation(a) <= self.valuation(b)

    def divide(self, b: Tuple[int, int], g: Tuple[int, int]) -> Tuple[int, int]:
        if not self.divides(g, b):
            raise NotDivisibleError(
                f"{self.format_element(g)} does not divide "
                f"{self.format_element(b)} in {self.spec}"
            )

        if b == self.zero:
            return self.zero

        if self.valuation(g) == 0:
            return self.mul(b, self.inverse(g))

        # Smallest solution
        return next(h for h in self.elements() if self.mul(h, g) == b)

    def residue(self, a: Tuple[int, int], g: Tuple[int, int]) -> Tuple[int, int]:
        valuation = self.valuation(g)
        if valuation == 0:
            return self.zero

        if valuation >= self._e:
            return a

        return min(self.add(a, self.mul(g, r)) for r in self.elements())

    def normalizing_unit(self, a: Tuple[int, int]) -> Tuple[int, int]:
        if a == self.zero:
            return self.one

        if self.valuation(a) == 0:
            return self.inverse(a)

        target = self.canonical_generator(a)
        return next(
            u
            for u in self.elements()
            if (self.norm(u) != 0) and (self.mul(u, a) == target)
        )

    def stab2(self, a: Tuple[int, int], b: Tuple[int, int]) -> Stab2:
        if b == self.zero:
            return Stab2(self.one, self.zero, self.zero, self.one, a)

        if a == self.zero:
            return Stab2(self.zero, self.one, self.neg(self.one), self.zero, b)

        if self.valuation(a) <= self.valuation(b):
            h = self.divide(b, a)
            return Stab2(self.one, self.zero, self.neg(h), self.one, a)

        h = self.divide(a, b)
        return Stab2(self.zero, self.one, self.neg(self.one), h, b)

    @property
    def components(self) -> Tuple[ChainComponent, ...]:
        if self.p == 2:
            return (ChainComponent(modulus=2, q=2, e=2),)

        return (ChainComponent(modulus=self.p, q=self.p * self.p, e=1),)

    def uniformizer(self) -> Tuple[int, int]:
        return self._pi

    def residue_field(self) -> ResidueField:
        if self.p == 2:
            # i = 1 modulo (1 + i)
            return ResidueField(
                field=galois.GF(2),
                lift=lambda x: (int(x), 0),
                reduce=lambda a: (a[0] + a[1]) % 2,
            )

        field = galois.GF(self.p * self.p)
        minus_one = field(self.p - 1)
        root = next(
            field(x) for x in range(self.p * self.p) if field(x) ** 2 == minus_one
        )

        def to_field(a: Tuple[int, int]) -> int:
            return int(field(a[0]) + field(a[1]) * root)

        table = {to_field(a): a for a in self.elements()}
        return ResidueField(field=field, lift=table.__getitem__, reduce=to_field)


@dataclass(frozen=True)
class GaussianSplitRing(GaussianResidueRing):
    """Z_p[i] for p = 1 mod 4, operated through Z_p x Z_p.

    a + bi maps to (a + bs, a - bs) where s is the smallest root of x^2 + 1.
    """

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.p % 4 != 1:
            raise UnsupportedRingError(f"Zi{self.p} does not split")

    @cached_property
    def _root(self) -> int:
        return int(min(sqrt_mod(self.p - 1, self.p, all_roots=True)))

    @cached_property
    def _split(self) -> "ProductRing":
        return ProductRing((IntegerResidueRing(self.p), IntegerResidueRing(self.p)))

    def to_split(self, a: Tuple[int, int]) -> Tuple[int, int]:
        s = self._root
        return ((a[0] + a[1] * s) % self.p, (a[0] - a[1] * s) % self.p)

    def from_split(self, x: Tuple[int, int]) -> Tuple[int, int]:
        half = pow(2, -1, self.p)
        inverse_root = pow(2 * self._root, -1, self.p)
        return (
            ((x[0] + x[1]) * half) % self.p,
            ((x[0] - x[1]) * inverse_root) % self.p,
        )

    def canonical_generator(self, a: Tuple[int, int]) -> Tuple[int, int]:
        return self.from_split(self._split.canonical_generator(self.to_split(a)))

    def ideal_length(self, a: Tuple[int, int]) -> int:
        return self._split.ideal_length(self.to_split(a))

    def ideal_size(self, a: Tuple[int, int]) -> int:
        return self._split.ideal_size(self.to_split(a))

    def annihilator_generator(self, a: Tuple[int, int]) -> Tuple[int, int]:
        return self.from_split(self._split.annihilator_generator(self.to_split(a)))

    def divides(self, a: Tuple[int, int], b: Tuple[int, int]) -> bool:
        return self._split.divides(self.to_split(a), self.to_split(b))

    def divide(self, b: Tuple[int, int], g: Tuple[int, int]) -> Tuple[int, int]:
        return self.from_split(self._split.divide(self.to_split(b), self.to_split(g)))

    def residue(self, a: Tuple[int, int], g: Tuple[int, int]) -> Tuple[int, int]:
        return self.from_split(self._split.residue(self.to_split(a), self.to_split(g)))

    def normalizing_unit(self, a: Tuple[int, int]) -> Tuple[int, int]:
        return self.from_split(self._split.normalizing_unit(self.to_split(a)))

    def stab2(self, a: Tuple[int, int], b: Tuple[int, int]) -> Stab2:
        split = self._split.stab2(self.to_split(a), self.to_split(b))
        return Stab2(*(self.from_split(value) for value in split))

    @property
    def components(self) -> Tuple[ChainComponent, ...]:
        return (ChainComponent(modulus=self.p, q=self.p, e=1),) * 2

    def square_roots(self) -> Optional[Tuple[int, int]]:
        return (self._root, self.p - self._root)

    def factors(self) -> Tuple[Ring, ...]:
        return self._split.rings

    def project(self, a: Tuple[int, int], index: int) -> int:
        return self.to_split(a)[index]

    def inject(self, a: int, index: int) -> Tuple[int, int]:
        return self.from_split(self._split.inject(a, index))


def gaussian_residue_ring(p: int) -> GaussianResidueRing:
    """Z_p[i], classified by p mod 4."""
    if not isprime(p):
        raise UnsupportedRingError(f"Zi needs a prime, got {p}")

    if p % 4 == 1:
        return GaussianSplitRing(p)

    return GaussianLocalRing(p)


# -----------------------------------------------------------------------------


@dataclass(frozen=True)
class ProductRing(Ring):
    """Direct product of rings with componentwise operations."""

    rings: Tuple[Ring, ...]

    def __post_init__(self) -> None:
        if not self.rings:
            raise UnsupportedRingError("product() needs at least one factor")

        object.__setattr__(self, "rings", tuple(self.rings))

    @property
    def spec(self) -> str:
        return "product(" + ",".join(ring.spec for ring in self.rings) + ")"

    @property
    def size(self) -> int:
        return prod(ring.size for ring in self.rings)

    @property
    def zero(self) -> Tuple[Value, ...]:
        return tuple(ring.zero for ring in self.rings)

    @property
    def one(self) -> Tuple[Value, ...]:
        return tuple(ring.one for ring in self.rings)

    def add(self, a: Tuple, b: Tuple) -> Tuple:
        return tuple(ring.add(x, y) for ring, x, y in zip(self.rings, a, b))

    def neg(self, a: Tuple) -> Tuple:
        return tuple(ring.neg(x) for ring, x in zip(self.rings, a))

    def mul(self, a: Tuple, b: Tuple) -> Tuple:
        return tuple(ring.mul(x, y) for ring, x, y in zip(self.rings, a, b))

    def coerce(self, value: Any) -> Tuple:
        if not isinstance(value, (tuple, list)) or (len(value) != len(self.rings)):
            raise ValueError(
                f"Expected a {len(self.rings)}-tuple for {self.spec}, got {value!r}"
            )

        return tuple(ring.coerce(x) for ring, x in zip(self.rings, value))

    def elements(self) -> Iterator[Tuple]:
        return itertools.product(*(list(ring.elements()) for ring in self.rings))

    def random_element(self, rng: np.random.Generator) -> Tuple:
        return tuple(ring.random_element(rng) for ring in self.rings)

    def format_element(self, a: Tuple) -> str:
        return (
            "("
            + ",".join(ring.format_element(x) for ring, x in zip(self.rings, a))
            + ")"
        )

    def canonical_generator(self, a: Tuple) -> Tuple:
        return tuple(ring.canonical_generator(x) for ring, x in zip(self.rings, a))

    def ideal_length(self, a: Tuple) -> int:
        return sum(ring.ideal_length(x) for ring, x in zip(self.rings, a))

    def ideal_size(self, a: Tuple) -> int:
        return prod(ring.ideal_size(x) for ring, x in zip(self.rings, a))

    def annihilator_generator(self, a: Tuple) -> Tuple:
        return tuple(ring.annihilator_generator(x) for ring, x in zip(self.rings, a))

    def divides(self, a: Tuple, b: Tuple) -> bool:
        return all(ring.divides(x, y) for ring, x, y in zip(self.rings, a, b))

    def divide(self, b: Tuple, g: Tuple) -> Tuple:
        return tuple(ring.divide(x, y) for ring, x, y in zip(self.rings, b, g))

    def residue(self, a: Tuple, g: Tuple) -> Tuple:
        return tuple(ring.residue(x, y) for ring, x, y in zip(self.rings, a, g))

    def normalizing_unit(self, a: Tuple) -> Tuple:
        return tuple(ring.normalizing_unit(x) for ring, x in zip(self.rings, a))

    def stab2(self, a: Tuple, b: Tuple) -> Stab2:
        parts = [ring.stab2(x, y) for ring, x, y in zip(self.rings, a, b)]
        return Stab2(*(tuple(part[k] for part in parts) for k in range(5)))

    @property
    def components(self) -> Tuple[ChainComponent, ...]:
        return tuple(
            component for ring in self.rings for component in ring.components
        )

    def factors(self) -> Tuple[Ring, ...]:
        return self.rings

    def project(self, a: Tuple, index: int) -> Value:
        return a[index]

    def inject(self, a: Value, index: int) -> Tuple:
        return tuple(
            a if i == index else ring.zero for i, ring in enumerate(self.rings)
        )

    def idempotents(self) -> List[Tuple]:
        return [
            self.inject(idempotent, i)
            for i, ring in enumerate(self.rings)
            for idempotent in ring.idempotents()
        ]

    def uniformizer(self) -> Tuple:
        if len(self.rings) != 1:
            return super().uniformizer()

        return (self.rings[0].uniformizer(),)

    def residue_field(self) -> ResidueField:
        if len(self.rings) != 1:
            return super().residue_field()

        inner = self.rings[0].residue_field()
        return ResidueField(
            field=inner.field,
            lift=lambda x: (inner.lift(x),),
            reduce=lambda a: inner.reduce(a[0]),
        )


# -----------------------------------------------------------------------------


class ArithOp(str, Enum):
    """Binary ring operations."""

    ADD = "add"
    SUB = "sub"
    MUL = "mul"


@dataclass(frozen=True)
class Element:
    """Ring element holding its canonical representative."""

    ring: Ring
    value: Value

    def _check(self, other: "Element") -> None:
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} != {other.ring}")

    def __add__(self, other: "Element") -> "Element":
        return arith(self, other, ArithOp.ADD)

    def __sub__(self, other: "Element") -> "Element":
        return arith(self, other, ArithOp.SUB)

    def __mul__(self, other: "Element") -> "Element":
        return arith(self, other, ArithOp.MUL)

    def __neg__(self) -> "Element":
        return Element(self.ring, self.ring.neg(self.value))

    def __str__(self) -> str:
        return self.ring.format_element(self.value)


def arith(a: Element, b: Element, op: ArithOp) -> Element:
    """Add, subtract or multiply two elements of the same ring."""
    a._check(b)  # pylint: disable=protected-access
    ring = a.ring
    if op == ArithOp.ADD:
        value = ring.add(a.value, b.value)
    elif op == ArithOp.SUB:
        value = ring.sub(a.value, b.value)
    else:
        value = ring.mul(a.value, b.value)

    return Element(ring, value)


def classify(ring: Ring) -> RingStructure:
    """Chain decomposition (and Z_p[i] square roots) of a ring."""
    structure = ring.structure
    _LOGGER.debug("Classified %s: %s", ring.spec, structure.components)
    return structure


def enumerate_elements(
    ring: Ring, limits: EnumerationLimits = DEFAULT_LIMITS
) -> Iterator[Value]:
    """Every element exactly once, subject to the ring size cap."""
    if ring.size > limits.max_ring_elements:
        raise CapExceededError(
            f"{ring.spec} has {ring.size} elements "
            f"(limit: {limits.max_ring_elements})"
        )

    return ring.elements()
