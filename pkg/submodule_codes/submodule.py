"""Submodules of an ambient module as canonical values."""
import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from math import prod
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import AmbientError, CapExceededError, UnsupportedRingError
from .matrix import EchelonMatrix, Matrix, Row, add_rows, member, rref, scale_row, stack
from .rings import Ring, Value
from .settings import DEFAULT_LIMITS, EnumerationLimits

_LOGGER = logging.getLogger()


@dataclass(frozen=True)
class Ambient:
    """Ambient module (c_1) x ... x (c_n) inside R^n."""

    ring: Ring
    n: int

    column_ideals: Tuple[Value, ...] = ()
    """Canonical generator of each column ideal (empty means R^n)."""

    def __post_init__(self) -> None:
        if self.n < 0:
            raise AmbientError(f"Dimension must not be negative: {self.n}")

        ideals = self.column_ideals or (self.ring.one,) * self.n
        if len(ideals) != self.n:
            raise AmbientError(
                f"Expected {self.n} column ideal(s), got {len(ideals)}"
            )

        object.__setattr__(
            self,
            "column_ideals",
            tuple(self.ring.canonical_generator(c) for c in ideals),
        )

    @staticmethod
    def full(ring: Ring, n: int) -> "Ambient":
        return Ambient(ring=ring, n=n)

    @staticmethod
    def chain(ring: Ring, exponents: Sequence[int]) -> "Ambient":
        """R x (pi^a_2) x ... x (pi^a_n) over a chain ring."""
        if not ring.is_chain:
            raise UnsupportedRingError(f"{ring.spec} is not a chain ring")

        uniformizer = ring.uniformizer()
        ideals = [ring.one] + [ring.power(uniformizer, a) for a in exponents]
        return Ambient(ring=ring, n=len(ideals), column_ideals=tuple(ideals))

    @property
    def is_full(self) -> bool:
        return all(c == self.ring.one for c in self.column_ideals)

    @property
    def length(self) -> int:
        return sum(self.ring.ideal_length(c) for c in self.column_ideals)

    @property
    def size(self) -> int:
        return prod(self.ring.ideal_size(c) for c in self.column_ideals)

    def chain_exponents(self) -> Tuple[int, ...]:
        """Exponents a_j with column ideal (pi^a_j) over a chain ring."""
        if not self.ring.is_chain:
            raise UnsupportedRingError(f"{self.ring.spec} is not a chain ring")

        e = self.ring.length
        return tuple(e - self.ring.ideal_length(c) for c in self.column_ideals)

    def contains(self, v: Sequence[Value]) -> bool:
        return (len(v) == self.n) and all(
            self.ring.divides(c, x) for c, x in zip(self.column_ideals, v)
        )

    def elements(self, limits: EnumerationLimits = DEFAULT_LIMITS) -> Iterator[Row]:
        if self.size > limits.max_ambient_elements:
            raise CapExceededError(
                f"Ambient has {self.size} elements "
                f"(limit: {limits.max_ambient_elements})"
            )

        ring = self.ring
        columns = [
            sorted({ring.mul(c, r) for r in ring.elements()})
            for c in self.column_ideals
        ]
        return itertools.product(*columns)

    def format(self) -> str:
        return " ".join(self.ring.format_element(c) for c in self.column_ideals)


@dataclass(frozen=True)
class SubModule:
    """Submodule of an ambient, stored as its reduced row-echelon basis."""

    ambient: Ambient
    basis: EchelonMatrix

    @staticmethod
    def from_generators(ambient: Ambient, rows: Matrix) -> "SubModule":
        if rows.ring != ambient.ring:
            raise AmbientError(f"Generators over {rows.ring}, ambient over {ambient.ring}")

        if rows.cols != ambient.n:
            raise AmbientError(
                f"Generators have {rows.cols} column(s), ambient has {ambient.n}"
            )

        for row_idx, row in enumerate(rows.rows):
            if not ambient.contains(row):
                raise AmbientError(f"Generator {row_idx + 1} is outside the ambient")

        return SubModule(ambient=ambient, basis=rref(rows))

    @staticmethod
    def zero(ambient: Ambient) -> "SubModule":
        return SubModule.from_generators(
            ambient, Matrix(ring=ambient.ring, cols=ambient.n)
        )

    @property
    def ring(self) -> Ring:
        return self.ambient.ring

    @property
    def matrix(self) -> Matrix:
        return self.basis.base

    @cached_property
    def length(self) -> int:
        """Sum of pivot ideal lengths."""
        return sum(self.ring.ideal_length(pivot) for pivot in self.basis.pivots)

    @property
    def size(self) -> int:
        return prod(self.ring.ideal_size(pivot) for pivot in self.basis.pivots)

    def contains(self, v: Sequence[Value]) -> bool:
        return member(v, self.basis).contained

    def __contains__(self, v: Sequence[Value]) -> bool:
        return self.contains(v)

    def _check_ambient(self, other: "SubModule") -> None:
        if self.ambient != other.ambient:
            raise AmbientError("Submodules live in different ambient modules")

    def __add__(self, other: "SubModule") -> "SubModule":
        self._check_ambient(other)
        return SubModule(
            ambient=self.ambient, basis=rref(stack(self.matrix, other.matrix))
        )

    def distance(self, other: "SubModule") -> int:
        """2 * len(M + N) - len(M) - len(N)."""
        return 2 * (self + other).length - self.length - other.length

    def intersection_length(self, other: "SubModule") -> int:
        return self.length + other.length - (self + other).length

    def is_submodule_of(self, other: "SubModule") -> bool:
        self._check_ambient(other)
        return all(other.contains(row) for row in self.basis.rows)

    def scaled(self, c: Value) -> "SubModule":
        """The submodule c * M."""
        ring = self.ring
        return SubModule.from_generators(
            self.ambient,
            Matrix(
                ring=ring,
                cols=self.ambient.n,
                rows=tuple(scale_row(ring, c, row) for row in self.basis.rows),
            ),
        )

    def elements(self, limits: EnumerationLimits = DEFAULT_LIMITS) -> Iterator[Row]:
        """Every element exactly once (coefficients run over R / ann(pivot))."""
        if self.size > limits.max_module_elements:
            raise CapExceededError(
                f"Module has {self.size} elements "
                f"(limit: {limits.max_module_elements})"
            )

        ring = self.ring
        coefficient_sets = [
            sorted(
                {
                    ring.residue(r, ring.annihilator_generator(pivot))
                    for r in ring.elements()
                }
            )
            for pivot in self.basis.pivots
        ]

        zero_row: Row = (ring.zero,) * self.ambient.n
        for coefficients in itertools.product(*coefficient_sets):
            v = zero_row
            for c, row in zip(coefficients, self.basis.rows):
                v = add_rows(ring, v, scale_row(ring, c, row))

            yield v


# -----------------------------------------------------------------------------


def loss_and_error(sent: SubModule, received: SubModule) -> Tuple[int, int]:
    """Erasures and errors: lengths of sent / (sent n received) and received / (...)."""
    common = sent.intersection_length(received)
    return (sent.length - common, received.length - common)


def span(ambient: Ambient, vectors: Sequence[Row]) -> SubModule:
    return SubModule.from_generators(
        ambient, Matrix(ring=ambient.ring, cols=ambient.n, rows=tuple(vectors))
    )


def intersection_oracle(
    first: SubModule,
    second: SubModule,
    limits: EnumerationLimits = DEFAULT_LIMITS,
) -> SubModule:
    """Intersection by listing the elements of the first module."""
    first._check_ambient(second)  # pylint: disable=protected-access

    result = SubModule.zero(first.ambient)
    for v in first.elements(limits):
        if second.contains(v) and not result.contains(v):
            result = result + span(first.ambient, [v])

    return result


def _sort_key(module: SubModule) -> Tuple:
    return (module.basis.pivot_cols, module.basis.rows)


def enumerate_submodules(
    ambient: Ambient,
    length: int,
    within: Optional[SubModule] = None,
    limits: EnumerationLimits = DEFAULT_LIMITS,
) -> List[SubModule]:
    """All submodules of the given length (inside within, if set)."""
    if within is not None:
        if within.ambient != ambient:
            raise AmbientError("Enclosing module lives in a different ambient")

        if within.size > limits.max_ambient_elements:
            raise CapExceededError(
                f"Module has {within.size} elements "
                f"(limit: {limits.max_ambient_elements})"
            )

        vectors = list(within.elements(limits))
    else:
        vectors = list(ambient.elements(limits))

    # Cyclic submodules, deduplicated by basis
    cyclic: Dict[EchelonMatrix, SubModule] = {}
    for v in vectors:
        module = span(ambient, [v])
        if 0 < module.length <= length:
            cyclic.setdefault(module.basis, module)

    zero = SubModule.zero(ambient)
    seen = {zero.basis: zero}
    frontier = [zero]
    while frontier:
        next_frontier = []
        for module in frontier:
            for generator in cyclic.values():
                if generator.is_submodule_of(module):
                    continue

                bigger = module + generator
                if (bigger.length > length) or (bigger.basis in seen):
                    continue

                seen[bigger.basis] = bigger
                next_frontier.append(bigger)

        frontier = next_frontier

    found = sorted(
        (module for module in seen.values() if module.length == length),
        key=_sort_key,
    )
    _LOGGER.debug(
        "Found %s submodule(s) of length %s among %s", len(found), length, len(seen)
    )

    return found


def count_submodules(module: SubModule, length: int) -> int:
    """Number of submodules of the given length inside module."""
    return len(enumerate_submodules(module.ambient, length, within=module))


def shape(module: SubModule) -> Tuple[int, ...]:
    """(mu_1, ..., mu_e) over a chain ring, read off lengths of pi^j M."""
    ring = module.ring
    if not ring.is_chain:
        raise UnsupportedRingError(f"{ring.spec} is not a chain ring")

    e = ring.length
    uniformizer = ring.uniformizer()
    lengths = [module.scaled(ring.power(uniformizer, j)).length for j in range(e + 1)]

    # lengths[j] = len(pi^j M)
    return tuple(lengths[e - i] - lengths[e - i + 1] for i in range(1, e + 1))
