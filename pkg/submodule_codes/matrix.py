"""Matrices over finite principal ideal rings and their echelon forms."""
import logging
import math
from dataclasses import dataclass
from typing import Any, Iterable, List, Optional, Sequence, Tuple, Union

from .errors import RingMismatchError, ShapeError
from .rings import Ring, Value

_LOGGER = logging.getLogger()

Row = Tuple[Value, ...]


@dataclass(frozen=True)
class Matrix:
    """Rectangular array of canonical ring values."""

    ring: Ring
    cols: int
    rows: Tuple[Row, ...] = ()

    def __post_init__(self) -> None:
        if self.cols < 0:
            raise ShapeError(f"Column count must not be negative: {self.cols}")

        object.__setattr__(self, "rows", tuple(tuple(row) for row in self.rows))
        for row_idx, row in enumerate(self.rows):
            if len(row) != self.cols:
                raise ShapeError(
                    f"Row {row_idx} has {len(row)} entries, expected {self.cols}"
                )

    @staticmethod
    def of(
        ring: Ring, rows: Iterable[Sequence[Any]], cols: Optional[int] = None
    ) -> "Matrix":
        """Build a matrix from literals, coercing every entry."""
        coerced = [tuple(ring.coerce(value) for value in row) for row in rows]
        if cols is None:
            if not coerced:
                raise ShapeError("Column count is required for an empty matrix")

            cols = len(coerced[0])

        return Matrix(ring=ring, cols=cols, rows=tuple(coerced))

    @staticmethod
    def identity(ring: Ring, size: int) -> "Matrix":
        return Matrix(
            ring=ring,
            cols=size,
            rows=tuple(
                tuple(ring.one if i == j else ring.zero for j in range(size))
                for i in range(size)
            ),
        )

    @staticmethod
    def zeros(ring: Ring, nrows: int, cols: int) -> "Matrix":
        return Matrix(
            ring=ring, cols=cols, rows=tuple((ring.zero,) * cols for _ in range(nrows))
        )

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} != {other.ring}")

        if self.cols != other.nrows:
            raise ShapeError(
                f"Cannot multiply {self.nrows}x{self.cols} by "
                f"{other.nrows}x{other.cols}"
            )

        ring = self.ring
        product_rows = []
        for row in self.rows:
            result = (ring.zero,) * other.cols
            for coefficient, other_row in zip(row, other.rows):
                if coefficient != ring.zero:
                    result = add_rows(ring, result, scale_row(ring, coefficient, other_row))

            product_rows.append(result)

        return Matrix(ring=ring, cols=other.cols, rows=tuple(product_rows))

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.nrows, self.cols) != (other.nrows, other.cols):
            raise ShapeError("Cannot add matrices of different shapes")

        return Matrix(
            ring=self.ring,
            cols=self.cols,
            rows=tuple(
                add_rows(self.ring, a, b) for a, b in zip(self.rows, other.rows)
            ),
        )


@dataclass(frozen=True)
class EchelonMatrix:
    """Matrix in row-echelon form (no zero rows, increasing leading positions)."""

    base: Matrix

    pivot_cols: Tuple[int, ...]
    """Leading position of each row."""

    reduced: bool = False
    """True if pivots are canonical and entries above them are reduced."""

    @property
    def ring(self) -> Ring:
        return self.base.ring

    @property
    def cols(self) -> int:
        return self.base.cols

    @property
    def rows(self) -> Tuple[Row, ...]:
        return self.base.rows

    @property
    def nrows(self) -> int:
        return self.base.nrows

    @property
    def pivots(self) -> Tuple[Value, ...]:
        return tuple(row[col] for row, col in zip(self.rows, self.pivot_cols))


@dataclass(frozen=True)
class EchelonVerdict:
    """Answer of the row-echelon check."""

    is_echelon: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.is_echelon


@dataclass(frozen=True)
class Membership:
    """Answer of a row-module membership test."""

    contained: bool

    coefficients: Optional[Tuple[Value, ...]] = None
    """Coefficients r with sum(r_i * E_i) = v when contained."""

    def __bool__(self) -> bool:
        return self.contained


# -----------------------------------------------------------------------------


def add_rows(ring: Ring, a: Row, b: Row) -> Row:
    return tuple(ring.add(x, y) for x, y in zip(a, b))


def sub_rows(ring: Ring, a: Row, b: Row) -> Row:
    return tuple(ring.sub(x, y) for x, y in zip(a, b))


def scale_row(ring: Ring, c: Value, a: Row) -> Row:
    return tuple(ring.mul(c, x) for x in a)


def is_zero_row(ring: Ring, a: Row) -> bool:
    return all(x == ring.zero for x in a)


def leading_position(ring: Ring, v: Sequence[Value]) -> Union[int, float]:
    """Index (0-based) of the first nonzero entry, or math.inf for zero."""
    for col, value in enumerate(v):
        if value != ring.zero:
            return col

    return math.inf


def _leading(ring: Ring, v: Row) -> int:
    position = leading_position(ring, v)
    assert position != math.inf
    return int(position)


def _echelon_rows(ring: Ring, rows: Sequence[Row]) -> Tuple[List[Row], List[int]]:
    pending = [row for row in rows if not is_zero_row(ring, row)]
    result: List[Row] = []
    pivot_cols: List[int] = []

    while pending:
        lead = min(_leading(ring, row) for row in pending)
        same = [row for row in pending if _leading(ring, row) == lead]
        rest = [row for row in pending if _leading(ring, row) != lead]

        top = same[0]
        for row in same[1:]:
            a, b = top[lead], row[lead]
            if ring.divides(a, b):
                row = sub_rows(ring, row, scale_row(ring, ring.divide(b, a), top))
            else:
                x, y, z, t, _g = ring.stab2(a, b)
                top, row = (
                    add_rows(ring, scale_row(ring, x, top), scale_row(ring, y, row)),
                    add_rows(ring, scale_row(ring, z, top), scale_row(ring, t, row)),
                )

            if not is_zero_row(ring, row):
                rest.append(row)

        result.append(top)
        pivot_cols.append(lead)

        # Rows of the module that vanish at the pivot column
        killed = scale_row(ring, ring.annihilator_generator(top[lead]), top)
        if not is_zero_row(ring, killed):
            rest.append(killed)

        pending = rest

    return result, pivot_cols


def row_echelon(matrix: Matrix) -> EchelonMatrix:
    """Row-equivalent matrix in row-echelon form (may have more rows)."""
    ring = matrix.ring
    rows, pivot_cols = _echelon_rows(ring, matrix.rows)
    _LOGGER.debug(
        "Echelon form of %sx%s matrix has %s row(s)",
        matrix.nrows,
        matrix.cols,
        len(rows),
    )

    return EchelonMatrix(
        base=Matrix(ring=ring, cols=matrix.cols, rows=tuple(rows)),
        pivot_cols=tuple(pivot_cols),
        reduced=False,
    )


def rref(matrix: Union[Matrix, EchelonMatrix]) -> EchelonMatrix:
    """Unique reduced row-echelon form for the canonical generator choices."""
    if isinstance(matrix, EchelonMatrix):
        if matrix.reduced:
            return matrix

        echelon = matrix
    else:
        echelon = row_echelon(matrix)

    ring = echelon.ring
    rows = [
        scale_row(ring, ring.normalizing_unit(row[col]), row)
        for row, col in zip(echelon.rows, echelon.pivot_cols)
    ]

    for i, col in enumerate(echelon.pivot_cols):
        pivot = rows[i][col]
        for j in range(i):
            entry = rows[j][col]
            remainder = ring.residue(entry, pivot)
            if entry == remainder:
                continue

            factor = ring.divide(ring.sub(entry, remainder), pivot)
            rows[j] = sub_rows(ring, rows[j], scale_row(ring, factor, rows[i]))

    return EchelonMatrix(
        base=Matrix(ring=ring, cols=echelon.cols, rows=tuple(rows)),
        pivot_cols=echelon.pivot_cols,
        reduced=True,
    )


def member(v: Sequence[Value], echelon: Union[EchelonMatrix, Matrix]) -> Membership:
    """Test v against the row module of an echelon matrix by pivot division."""
    ring = echelon.ring
    rows = echelon.rows
    if len(v) != echelon.cols:
        raise ShapeError(f"Vector has {len(v)} entries, expected {echelon.cols}")

    by_lead = {}
    for row_idx, row in enumerate(rows):
        by_lead.setdefault(leading_position(ring, row), row_idx)

    coefficients = [ring.zero] * len(rows)
    remaining: Row = tuple(v)
    while not is_zero_row(ring, remaining):
        lead = _leading(ring, remaining)
        row_idx = by_lead.get(lead)
        if row_idx is None:
            return Membership(contained=False)

        pivot = rows[row_idx][lead]
        if not ring.divides(pivot, remaining[lead]):
            return Membership(contained=False)

        factor = ring.divide(remaining[lead], pivot)
        coefficients[row_idx] = ring.add(coefficients[row_idx], factor)
        remaining = sub_rows(ring, remaining, scale_row(ring, factor, rows[row_idx]))

    return Membership(contained=True, coefficients=tuple(coefficients))


def is_row_echelon(matrix: Union[Matrix, EchelonMatrix]) -> EchelonVerdict:
    """Check leading positions, then ann(pivot) * row against the rows below."""
    ring = matrix.ring
    rows = matrix.rows

    leads = []
    for row_idx, row in enumerate(rows):
        if is_zero_row(ring, row):
            return EchelonVerdict(False, f"row {row_idx + 1} is zero")

        leads.append(_leading(ring, row))

    for row_idx in range(1, len(leads)):
        if leads[row_idx] <= leads[row_idx - 1]:
            return EchelonVerdict(
                False,
                f"leading positions of rows {row_idx} and {row_idx + 1} "
                "are not strictly increasing",
            )

    # Backwards, so the suffix is already known to be in echelon form
    for row_idx in reversed(range(len(rows))):
        row = rows[row_idx]
        pivot = row[leads[row_idx]]
        killed = scale_row(ring, ring.annihilator_generator(pivot), row)
        suffix = Matrix(ring=ring, cols=matrix.cols, rows=rows[row_idx + 1 :])
        if member(killed, suffix):
            continue

        if row_idx == len(rows) - 1:
            return EchelonVerdict(
                False,
                f"pivot {ring.format_element(pivot)} of the last row "
                "does not divide all of its entries",
            )

        return EchelonVerdict(
            False,
            f"ann(pivot) * row {row_idx + 1} is not generated by the rows below it",
        )

    return EchelonVerdict(True)


def as_echelon(matrix: Matrix) -> Optional[EchelonMatrix]:
    """Wrap a matrix that already passes the echelon check."""
    if not is_row_echelon(matrix):
        return None

    return EchelonMatrix(
        base=matrix,
        pivot_cols=tuple(_leading(matrix.ring, row) for row in matrix.rows),
        reduced=False,
    )


def stack(a: Matrix, b: Matrix) -> Matrix:
    """Rows of a followed by rows of b."""
    if a.ring != b.ring:
        raise RingMismatchError(f"{a.ring} != {b.ring}")

    if a.cols != b.cols:
        raise ShapeError(f"Cannot stack {a.cols} and {b.cols} columns")

    return Matrix(ring=a.ring, cols=a.cols, rows=a.rows + b.rows)
