"""Text formats for rings, matrices, submodules, codes and configs.

Matrix files::

    ring: Z4
    cols: 4
    ambient: 1 2 2 2     # optional column ideal generators
    1 1 1 0
    0 2 1 2

Code files share the header and separate words with ``--`` lines.
"""
import logging
import re
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple, Type

from .codes import Code
from .errors import FormatError
from .matrix import Matrix, Row
from .rings import (
    GaussianResidueRing,
    IntegerResidueRing,
    ProductRing,
    Ring,
    Value,
    gaussian_residue_ring,
)
from .submodule import Ambient, SubModule

_LOGGER = logging.getLogger()

_HEADER_KEYS = ("ring", "cols", "ambient")
_WORD_SEPARATOR = "--"
_GAUSSIAN_TERM = re.compile(r"([+-]?)(\d*)(i?)")


@dataclass(frozen=True)
class MatrixFile:
    """Parsed matrix file."""

    ring: Ring
    matrix: Matrix
    ambient: Ambient

    @property
    def module(self) -> SubModule:
        return SubModule.from_generators(self.ambient, self.matrix)


@dataclass(frozen=True)
class _Line:
    number: int
    text: str


# -----------------------------------------------------------------------------


class _RingParser:
    """Recursive descent over Z<m>, Zi<p> and product(...)."""

    def __init__(
        self, text: str, line: int = 1, column: int = 1, source: Optional[str] = None
    ) -> None:
        self.text = text
        self.pos = 0
        self.line = line
        self.column = column
        self.source = source

    def error(self, message: str) -> FormatError:
        return FormatError(message, self.line, self.column + self.pos, self.source)

    def parse(self) -> Ring:
        ring = self._ring()
        self._skip_space()
        if self.pos != len(self.text):
            raise self.error(f"Unexpected text in ring spec: {self.text[self.pos:]!r}")

        return ring

    def _skip_space(self) -> None:
        while (self.pos < len(self.text)) and self.text[self.pos].isspace():
            self.pos += 1

    def _expect(self, char: str) -> None:
        self._skip_space()
        if self.text[self.pos : self.pos + 1] != char:
            raise self.error(f"Expected '{char}'")

        self.pos += 1

    def _int(self) -> int:
        match = re.match(r"\d+", self.text[self.pos :])
        if match is None:
            raise self.error("Expected an integer")

        self.pos += match.end()
        return int(match.group(0))

    def _ring(self) -> Ring:
        self._skip_space()
        rest = self.text[self.pos :]
        if rest.startswith("product"):
            self.pos += len("product")
            self._expect("(")
            rings = [self._ring()]
            self._skip_space()
            while self.text[self.pos : self.pos + 1] == ",":
                self.pos += 1
                rings.append(self._ring())
                self._skip_space()

            self._expect(")")
            return ProductRing(tuple(rings))

        if rest.startswith("Zi"):
            self.pos += 2
            return gaussian_residue_ring(self._int())

        if rest.startswith("Z"):
            self.pos += 1
            return IntegerResidueRing(self._int())

        raise self.error("Expected Z<m>, Zi<p> or product(...)")


def parse_ring(
    text: str, line: int = 1, column: int = 1, source: Optional[str] = None
) -> Ring:
    """Ring from its spec (Z6, Zi5, product(Z2,Z3))."""
    return _RingParser(text, line, column, source).parse()


def _split_top_level(
    text: str, separator: Optional[str], line: int, column: int, source: Optional[str]
) -> List[Tuple[str, int]]:
    """Split on separator (None = whitespace) outside parentheses, keeping columns."""
    tokens: List[Tuple[str, int]] = []
    depth = 0
    start: Optional[int] = None

    def close(end: int) -> None:
        nonlocal start
        if start is not None:
            tokens.append((text[start:end].strip(), column + start))
            start = None

    for idx, char in enumerate(text):
        is_separator = (char.isspace() if separator is None else char == separator)
        if (depth == 0) and is_separator:
            if separator is not None:
                if start is None:
                    raise FormatError("Empty element", line, column + idx, source)

                close(idx)
                start = idx + 1
            else:
                close(idx)

            continue

        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
            if depth < 0:
                raise FormatError("Unbalanced ')'", line, column + idx, source)

        if start is None:
            start = idx

    if depth != 0:
        raise FormatError("Unbalanced '('", line, column + len(text), source)

    close(len(text))
    return tokens


def _parse_int(text: str, line: int, column: int, source: Optional[str]) -> int:
    if not re.fullmatch(r"[+-]?\d+", text):
        raise FormatError(f"Expected an integer, got {text!r}", line, column, source)

    return int(text)


def _parse_gaussian(
    text: str, line: int, column: int, source: Optional[str]
) -> Tuple[int, int]:
    compact = re.sub(r"\s+", "", text)
    real = 0
    imag = 0
    pos = 0
    while pos < len(compact):
        match = _GAUSSIAN_TERM.match(compact, pos)
        assert match is not None
        sign_text, digits, unit = match.groups()
        if (not digits and not unit) or ((pos > 0) and (not sign_text)):
            raise FormatError(
                f"Expected a + bi, got {text!r}", line, column + pos, source
            )

        value = (-1 if sign_text == "-" else 1) * (int(digits) if digits else 1)
        if unit:
            imag += value
        else:
            real += value

        pos = match.end()

    if not compact:
        raise FormatError("Empty element", line, column, source)

    return (real, imag)


def parse_element(
    ring: Ring,
    text: str,
    line: int = 1,
    column: int = 1,
    source: Optional[str] = None,
) -> Value:
    """Canonical value of an element literal (7, 2+3i, i-1, (1,0))."""
    text = text.strip()
    if isinstance(ring, ProductRing):
        if not (text.startswith("(") and text.endswith(")")):
            raise FormatError(
                f"Expected a {len(ring.rings)}-tuple, got {text!r}", line, column, source
            )

        parts = _split_top_level(text[1:-1], ",", line, column + 1, source)
        if len(parts) != len(ring.rings):
            raise FormatError(
                f"Expected {len(ring.rings)} component(s), got {len(parts)}",
                line,
                column,
                source,
            )

        return tuple(
            parse_element(factor, part, line, part_column, source)
            for factor, (part, part_column) in zip(ring.rings, parts)
        )

    if isinstance(ring, GaussianResidueRing):
        return ring.coerce(_parse_gaussian(text, line, column, source))

    return ring.coerce(_parse_int(text, line, column, source))


def parse_row(
    ring: Ring, text: str, line: int = 1, source: Optional[str] = None
) -> Row:
    """Whitespace-separated element literals."""
    return tuple(
        parse_element(ring, token, line, token_column, source)
        for token, token_column in _split_top_level(text, None, line, 1, source)
    )


# -----------------------------------------------------------------------------


def _content_lines(text: str) -> List[_Line]:
    lines = []
    for number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].rstrip()
        if line.strip():
            lines.append(_Line(number=number, text=line))

    return lines


def _parse_header(
    lines: List[_Line], source: Optional[str]
) -> Tuple[Ring, Optional[int], Optional[_Line], List[_Line]]:
    values: Dict[str, _Line] = {}
    body_start = 0
    for body_start, line in enumerate(lines):
        if ":" not in line.text:
            break

        key, _sep, value = line.text.partition(":")
        key = key.strip()
        if key not in _HEADER_KEYS:
            raise FormatError(f"Unknown header key: {key}", line.number, 1, source)

        if key in values:
            raise FormatError(f"Duplicate header key: {key}", line.number, 1, source)

        values[key] = _Line(number=line.number, text=value)
    else:
        body_start = len(lines)

    for line in lines[body_start:]:
        if ":" in line.text:
            raise FormatError(
                "Header line after matrix rows",
                line.number,
                line.text.index(":") + 1,
                source,
            )

    ring_line = values.get("ring")
    if ring_line is None:
        number = lines[0].number if lines else 1
        raise FormatError("Missing 'ring:' header", number, 1, source)

    ring = parse_ring(
        ring_line.text, ring_line.number, len("ring:") + 1, source
    )

    cols: Optional[int] = None
    cols_line = values.get("cols")
    if cols_line is not None:
        cols = _parse_int(
            cols_line.text.strip(), cols_line.number, len("cols:") + 2, source
        )
        if cols < 0:
            raise FormatError("cols must not be negative", cols_line.number, 1, source)

    return ring, cols, values.get("ambient"), lines[body_start:]


def _parse_rows(
    ring: Ring, cols: Optional[int], lines: List[_Line], source: Optional[str]
) -> Tuple[int, List[Row]]:
    rows = []
    for line in lines:
        row = parse_row(ring, line.text, line.number, source)
        if cols is None:
            cols = len(row)

        if len(row) != cols:
            raise FormatError(
                f"Expected {cols} entries, got {len(row)}", line.number, 1, source
            )

        rows.append(row)

    if cols is None:
        raise FormatError("Missing 'cols:' header for an empty matrix", 1, 1, source)

    return cols, rows


def _parse_ambient(
    ring: Ring, cols: int, line: Optional[_Line], source: Optional[str]
) -> Ambient:
    if line is None:
        return Ambient.full(ring, cols)

    ideals = parse_row(ring, line.text, line.number, source)
    if len(ideals) != cols:
        raise FormatError(
            f"Expected {cols} column ideal(s), got {len(ideals)}", line.number, 1, source
        )

    return Ambient(ring=ring, n=cols, column_ideals=ideals)


def parse_matrix(text: str, source: Optional[str] = None) -> MatrixFile:
    """Matrix file with ring/cols/ambient header."""
    ring, cols, ambient_line, body = _parse_header(_content_lines(text), source)
    cols, rows = _parse_rows(ring, cols, body, source)
    ambient = _parse_ambient(ring, cols, ambient_line, source)

    return MatrixFile(
        ring=ring,
        matrix=Matrix(ring=ring, cols=cols, rows=tuple(rows)),
        ambient=ambient,
    )


def parse_code(text: str, source: Optional[str] = None) -> Code:
    """Code file: header, then word matrices separated by '--' lines."""
    ring, cols, ambient_line, body = _parse_header(_content_lines(text), source)

    blocks: List[List[_Line]] = [[]]
    for line in body:
        if line.text.strip() == _WORD_SEPARATOR:
            blocks.append([])
        else:
            blocks[-1].append(line)

    if blocks and not blocks[0]:
        # Leading separator
        blocks = blocks[1:]

    word_rows = []
    for block_idx, block in enumerate(blocks):
        if not block:
            raise FormatError(f"Word {block_idx + 1} is empty", 1, 1, source)

        cols, rows = _parse_rows(ring, cols, block, source)
        word_rows.append(rows)

    if (cols is None) or (not word_rows):
        raise FormatError("Code file has no words", 1, 1, source)

    ambient = _parse_ambient(ring, cols, ambient_line, source)
    words = tuple(
        SubModule.from_generators(
            ambient, Matrix(ring=ring, cols=cols, rows=tuple(rows))
        )
        for rows in word_rows
    )
    _LOGGER.debug("Read %s word(s) over %s", len(words), ring.spec)

    return Code(ambient=ambient, words=words)


def parse_config(text: str, source: Optional[str] = None) -> Dict[str, str]:
    """key: value lines."""
    values: Dict[str, str] = {}
    for line in _content_lines(text):
        if ":" not in line.text:
            raise FormatError("Expected 'key: value'", line.number, 1, source)

        key, _sep, value = line.text.partition(":")
        values[key.strip()] = value.strip()

    return values


def load_config(text: str, config_type: Type, source: Optional[str] = None) -> Any:
    """Parse a key: value file into a DataClassJsonMixin config."""
    values = parse_config(text, source)
    try:
        return config_type.from_dict(values)
    except (TypeError, ValueError) as err:
        raise FormatError(str(err), 1, 1, source) from err


# -----------------------------------------------------------------------------


def format_rows(ring: Ring, rows: Tuple[Row, ...]) -> List[str]:
    return [" ".join(ring.format_element(x) for x in row) for row in rows]


def _header(ambient: Ambient) -> List[str]:
    lines = [f"ring: {ambient.ring.spec}", f"cols: {ambient.n}"]
    if not ambient.is_full:
        lines.append(f"ambient: {ambient.format()}")

    return lines


def format_matrix(matrix: Matrix, ambient: Optional[Ambient] = None) -> str:
    """Matrix file text (re-parses to an equal matrix)."""
    lines = _header(ambient or Ambient.full(matrix.ring, matrix.cols))
    lines.extend(format_rows(matrix.ring, matrix.rows))
    return "\n".join(lines) + "\n"


def format_modules(ambient: Ambient, modules: Sequence[SubModule]) -> str:
    """Bases of several modules as code file text (zero modules as a zero row)."""
    ring = ambient.ring
    lines = _header(ambient)
    for module_idx, module in enumerate(modules):
        if module_idx > 0:
            lines.append(_WORD_SEPARATOR)

        rows = module.basis.rows or ((ring.zero,) * ambient.n,)
        lines.extend(format_rows(ring, rows))

    return "\n".join(lines) + "\n"


def format_code(code: Code) -> str:
    return format_modules(code.ambient, code.words)


def matrix_to_dict(matrix: Matrix) -> Dict[str, Any]:
    """JSON-ready view of a matrix with elements in their text form."""
    return {
        "ring": matrix.ring.spec,
        "cols": matrix.cols,
        "rows": [
            [matrix.ring.format_element(x) for x in row] for row in matrix.rows
        ],
    }
