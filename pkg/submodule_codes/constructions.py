"""Code constructions: chain ring spreads, tensor lifts and product rings."""
import itertools
import logging
from dataclasses import dataclass
from math import ceil
from typing import List, Optional, Sequence, Tuple

import galois
import numpy as np

from .codes import Code, inject_modules
from .errors import CodeError, UnsupportedRingError
from .matrix import Matrix, Row, scale_row
from .rings import (
    GaussianResidueRing,
    IntegerResidueRing,
    ProductRing,
    Ring,
    Value,
    enumerate_elements,
)
from .settings import DEFAULT_LIMITS, EnumerationLimits
from .submodule import Ambient, SubModule

_LOGGER = logging.getLogger()


@dataclass(frozen=True)
class DifferenceSet:
    """h x (h + rho) matrices whose pairwise differences have free row modules."""

    ring: Ring
    h: int
    rho: int
    matrices: Tuple[Matrix, ...]


@dataclass(frozen=True)
class OptimalityRow:
    """Spread cardinality against the chain ring bound for one residue field."""

    q: int
    cardinality: int
    bound: int

    @property
    def ratio(self) -> float:
        return self.cardinality / self.bound


def _require_chain(ring: Ring) -> None:
    if not ring.is_chain:
        raise UnsupportedRingError(f"{ring.spec} is not a chain ring")


def _companion(field, degree: int):
    """Companion matrix of the least irreducible polynomial of the given degree."""
    poly = galois.irreducible_poly(field.order, degree, method="min")

    # Coefficients a_0 ... a_{degree - 1} of the monic polynomial
    low_coeffs = poly.coeffs[::-1][:degree]
    companion = field(np.zeros((degree, degree), dtype=int))
    for i in range(degree - 1):
        companion[i, i + 1] = 1

    companion[degree - 1, :] = -low_coeffs
    return companion


def difference_set(
    ring: Ring, h: int, rho: int = 0, limits: EnumerationLimits = DEFAULT_LIMITS
) -> DifferenceSet:
    """q^(h + rho) matrices from the multiplication matrices of GF(q^(h + rho)).

    Polynomials in the companion matrix of the least irreducible polynomial are
    lifted entrywise to the ring and their first rho rows are deleted.
    """
    _require_chain(ring)
    if h < 1:
        raise CodeError(f"h must be positive, got {h}")

    if (rho < 0) or (rho > h - 1):
        raise CodeError(f"rho must be in [0, {h - 1}], got {rho}")

    residue_field = ring.residue_field()
    field = residue_field.field
    q = residue_field.order
    degree = h + rho

    companion = _companion(field, degree)
    powers = [field(np.eye(degree, dtype=int))]
    for _ in range(degree - 1):
        powers.append(powers[-1] @ companion)

    field_matrices = []
    for coefficients in itertools.product(range(q), repeat=degree):
        total = field(np.zeros((degree, degree), dtype=int))
        for c, power in zip(coefficients, powers):
            if c:
                total = total + field(c) * power

        field_matrices.append(total)

    if len(field_matrices) <= limits.difference_set_check:
        for a, b in itertools.combinations(field_matrices, 2):
            if np.linalg.det(a - b) == 0:
                raise CodeError(
                    f"Degree {degree} polynomial is not irreducible over GF({q})"
                )

    matrices = tuple(
        Matrix(
            ring=ring,
            cols=degree,
            rows=tuple(
                tuple(residue_field.lift(int(x)) for x in row)
                for row in np.asarray(matrix)[rho:]
            ),
        )
        for matrix in field_matrices
    )

    if len(matrices) <= limits.difference_set_check:
        ambient = Ambient.full(ring, degree)
        for a, b in itertools.combinations(matrices, 2):
            difference = SubModule.from_generators(ambient, a + _negate(b))
            if difference.length != h * ring.length:
                raise CodeError(f"Lifted difference over {ring.spec} is not free")

    _LOGGER.debug(
        "Difference set over %s: %s matrices of size %sx%s",
        ring.spec,
        len(matrices),
        h,
        degree,
    )

    return DifferenceSet(ring=ring, h=h, rho=rho, matrices=matrices)


def _negate(matrix: Matrix) -> Matrix:
    ring = matrix.ring
    return Matrix(
        ring=ring,
        cols=matrix.cols,
        rows=tuple(tuple(ring.neg(x) for x in row) for row in matrix.rows),
    )


def construct_spread(
    ring: Ring, n: int, k: int, limits: EnumerationLimits = DEFAULT_LIMITS
) -> Code:
    """Partial spread code of length k and minimum distance 2k in R^n."""
    _require_chain(ring)
    e = ring.length
    if (k < 1) or (k > n * e):
        raise CodeError(f"k must be in [1, {n * e}], got {k}")

    h = ceil(k / e)
    r = h * e - k
    if n < 2 * h:
        raise CodeError(f"Spread needs n >= 2h (n={n}, h={h})")

    nu, rho = divmod(n, h)
    square = difference_set(ring, h, 0, limits)
    tail = square if rho == 0 else difference_set(ring, h, rho, limits)
    zeta = ring.power(ring.uniformizer(), r)

    identity = Matrix.identity(ring, h).rows
    zero_block = (ring.zero,) * h

    generator_sets: List[List[Row]] = []
    for i in range(1, nu):
        middle_choices = itertools.product(square.matrices, repeat=nu - 1 - i)
        for middle, last in itertools.product(list(middle_choices), tail.matrices):
            blocks = [[zero_block] * h] * (i - 1) + [list(identity)]
            blocks += [list(block.rows) for block in middle]
            blocks.append(list(last.rows))
            generator_sets.append(
                [
                    tuple(itertools.chain.from_iterable(block[row] for block in blocks))
                    for row in range(h)
                ]
            )

    generator_sets.append(
        [(ring.zero,) * (n - h) + identity_row for identity_row in identity]
    )

    ambient = Ambient.full(ring, n)
    words = []
    for rows in generator_sets:
        rows[-1] = scale_row(ring, zeta, rows[-1])
        words.append(
            SubModule.from_generators(
                ambient, Matrix(ring=ring, cols=n, rows=tuple(rows))
            )
        )

    _LOGGER.debug("Spread code over %s: %s word(s), k=%s", ring.spec, len(words), k)
    return Code(ambient=ambient, words=tuple(words), construction="spread")


def spread_cardinality(q: int, n: int, h: int) -> int:
    """Number of words of the spread construction with residue field order q."""
    nu, rho = divmod(n, h)
    return q ** (h + rho) * (q ** (h * (nu - 1)) - 1) // (q**h - 1) + 1


def optimality_table(qs: Sequence[int], n: int, h: int) -> List[OptimalityRow]:
    """Spread cardinality against (q^(n - h + 1) - 1) / (q - 1) for each q."""
    return [
        OptimalityRow(
            q=q,
            cardinality=spread_cardinality(q, n, h),
            bound=(q ** (n - h + 1) - 1) // (q - 1),
        )
        for q in qs
    ]


# -----------------------------------------------------------------------------


def _field_embedding(source: Ring, target: Ring):
    """Map from a prime field into a ring sharing its identity (or None)."""
    if not isinstance(source, IntegerResidueRing) or not source.is_field:
        return None

    p = source.m
    if target == source:
        return lambda x: x

    if isinstance(target, GaussianResidueRing) and (target.p == p):
        return lambda x: (x, 0)

    if isinstance(target, ProductRing):
        parts = [_field_embedding(source, factor) for factor in target.rings]
        if all(part is not None for part in parts):
            return lambda x: tuple(part(x) for part in parts)  # type: ignore[misc]

    return None


def construct_tensor(code: Code, target: Ring) -> Code:
    """Subspace code over Z_p re-read over a ring containing Z_p."""
    embed = _field_embedding(code.ring, target)
    if embed is None:
        raise UnsupportedRingError(
            f"No embedding of {code.ring.spec} into {target.spec} sharing the identity"
        )

    if not code.ambient.is_full:
        raise CodeError("Tensor construction needs a code in F^n")

    ambient = Ambient.full(target, code.n)
    words = [
        SubModule.from_generators(
            ambient,
            Matrix(
                ring=target,
                cols=code.n,
                rows=tuple(tuple(embed(x) for x in row) for row in word.basis.rows),
            ),
        )
        for word in code.words
    ]

    return Code(ambient=ambient, words=tuple(words), construction="tensor")


def derive_subcode(code: Code, ell: int) -> Code:
    """Replace each word by a submodule of length k - ell.

    The last unit-pivot basis row is multiplied by an element whose ideal has length
    length(R) - ell.
    """
    ring = code.ring
    if (ell < 1) or (ell > ring.length - 1):
        raise CodeError(f"ell must be in [1, {ring.length - 1}], got {ell}")

    zeta = next(
        a
        for a in enumerate_elements(ring)
        if ring.ideal_length(a) == ring.length - ell
    )

    words = []
    for word in code.words:
        rows = list(word.basis.rows)
        unit_rows = [
            row_idx
            for row_idx, pivot in enumerate(word.basis.pivots)
            if ring.is_unit(pivot)
        ]
        if not unit_rows:
            raise CodeError("Word has no unit pivot to scale")

        rows[unit_rows[-1]] = scale_row(ring, zeta, rows[unit_rows[-1]])
        derived = SubModule.from_generators(
            code.ambient, Matrix(ring=ring, cols=code.n, rows=tuple(rows))
        )
        if derived.length != code.k - ell:
            raise CodeError(f"Derived word has length {derived.length}")

        words.append(derived)

    return Code(ambient=code.ambient, words=tuple(words), construction="derived")


# -----------------------------------------------------------------------------


def _product_target(codes: Sequence[Code], target: Optional[Ring]) -> Ring:
    rings = tuple(code.ring for code in codes)
    if target is None:
        return ProductRing(rings)

    if tuple(target.factors()) != rings:
        raise UnsupportedRingError(
            f"{target.spec} does not factor as "
            + " x ".join(ring.spec for ring in rings)
        )

    return target


def _product_ambient(codes: Sequence[Code], target: Ring) -> Ambient:
    n = codes[0].n
    if any(code.n != n for code in codes):
        raise CodeError("Component codes have different n")

    ideals: List[Value] = []
    for col in range(n):
        ideal = target.zero
        for factor_idx, code in enumerate(codes):
            ideal = target.add(
                ideal, target.inject(code.ambient.column_ideals[col], factor_idx)
            )

        ideals.append(ideal)

    return Ambient(ring=target, n=n, column_ideals=tuple(ideals))


def construct_product(codes: Sequence[Code], target: Optional[Ring] = None) -> Code:
    """Cartesian product code over R_1 x ... x R_m."""
    if not codes:
        raise CodeError("At least one component code is required")

    if len(codes) == 1:
        return codes[0]

    ring = _product_target(codes, target)
    ambient = _product_ambient(codes, ring)
    words = [
        inject_modules(ambient, list(combination))
        for combination in itertools.product(*(code.words for code in codes))
    ]

    return Code(
        ambient=ambient,
        words=tuple(words),
        components=tuple(codes),
        construction="product",
    )


def construct_stacked(codes: Sequence[Code], target: Optional[Ring] = None) -> Code:
    """Word j is M_j1 x ... x M_jm for the first c = min |C_i| words of each code."""
    if not codes:
        raise CodeError("At least one component code is required")

    if len(codes) == 1:
        return codes[0]

    ring = _product_target(codes, target)
    ambient = _product_ambient(codes, ring)
    size = min(len(code) for code in codes)
    dropped = sum(len(code) - size for code in codes)
    if dropped:
        _LOGGER.debug(
            "Stacked code keeps %s word(s) per component, dropped %s", size, dropped
        )

    subcodes = tuple(
        Code(ambient=code.ambient, words=code.words[:size]) for code in codes
    )

    words = [
        inject_modules(ambient, [code.words[word_idx] for code in subcodes])
        for word_idx in range(size)
    ]

    return Code(
        ambient=ambient,
        words=tuple(words),
        components=subcodes,
        construction="stacked",
    )
