"""Submodule codes and minimum distance decoding."""
import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import List, Optional, Tuple

from .errors import AmbientError, CodeError
from .matrix import Matrix
from .rings import Ring
from .submodule import Ambient, SubModule

_LOGGER = logging.getLogger()


@dataclass(frozen=True)
class Code:
    """At least two distinct submodules of one ambient, all of equal length."""

    ambient: Ambient
    words: Tuple[SubModule, ...]

    components: Tuple["Code", ...] = ()
    """Codes over the direct factors (product and stacked constructions)."""

    construction: str = ""
    """Name of the construction that built the code (informational)."""

    def __post_init__(self) -> None:
        object.__setattr__(self, "words", tuple(self.words))
        if len(self.words) < 2:
            raise CodeError(f"A code needs at least 2 words, got {len(self.words)}")

        for word_idx, word in enumerate(self.words):
            if word.ambient != self.ambient:
                raise CodeError(f"Word {word_idx + 1} lives in a different ambient")

        lengths = {word.length for word in self.words}
        if len(lengths) != 1:
            raise CodeError(f"Words have different lengths: {sorted(lengths)}")

        if len(set(self.words)) != len(self.words):
            raise CodeError("Code has repeated words")

    @property
    def ring(self) -> Ring:
        return self.ambient.ring

    @property
    def n(self) -> int:
        return self.ambient.n

    @property
    def k(self) -> int:
        """Common length of the words."""
        return self.words[0].length

    def __len__(self) -> int:
        return len(self.words)

    @cached_property
    def min_distance(self) -> int:
        """Minimum pairwise distance (brute force over all pairs)."""
        return min(a.distance(b) for a, b in itertools.combinations(self.words, 2))

    @property
    def radius(self) -> int:
        """Guaranteed correction radius floor((d - 1) / 2)."""
        return (self.min_distance - 1) // 2

    def index(self, word: SubModule) -> Optional[int]:
        try:
            return self.words.index(word)
        except ValueError:
            return None


class DecodeStatus(str, Enum):
    """Outcome of decoding a received module."""

    DECODED = "decoded"
    AMBIGUOUS = "ambiguous"
    NO_CODEWORD = "no_codeword"


@dataclass(frozen=True)
class DecodeResult:
    """Nearest codeword (if unique) and its distance to the received module."""

    status: DecodeStatus
    distance: int

    word: Optional[SubModule] = None
    index: Optional[int] = None

    certified: bool = False
    """True if the distance is within the code's correction radius."""

    second_distance: Optional[int] = None
    """Distance to the runner-up codeword."""

    components: Tuple["DecodeResult", ...] = field(default_factory=tuple)
    """Per-factor results of product decoding."""


def _rehome(code: Code, received: SubModule) -> SubModule:
    if received.ring != code.ring:
        raise AmbientError(f"Received module over {received.ring}, code over {code.ring}")

    if received.ambient.n != code.n:
        raise AmbientError(
            f"Received module has {received.ambient.n} column(s), code has {code.n}"
        )

    if received.ambient == code.ambient:
        return received

    if not code.ambient.is_full:
        for row in received.basis.rows:
            if not code.ambient.contains(row):
                raise AmbientError("Received module is outside the code's ambient")

    return SubModule(ambient=code.ambient, basis=received.basis)


def decode_min_distance(
    code: Code, received: SubModule, bounded: bool = False
) -> DecodeResult:
    """Exhaustive minimum distance decoding.

    With bounded=True a nearest codeword outside the correction radius is reported
    as no_codeword.
    """
    received = _rehome(code, received)
    distances = [word.distance(received) for word in code.words]
    ordered = sorted(distances)
    best = ordered[0]
    second = ordered[1]
    certified = best <= code.radius

    if second == best:
        _LOGGER.debug("Tie at distance %s", best)
        return DecodeResult(
            status=DecodeStatus.AMBIGUOUS,
            distance=best,
            certified=False,
            second_distance=second,
        )

    if bounded and (not certified):
        return DecodeResult(
            status=DecodeStatus.NO_CODEWORD,
            distance=best,
            certified=False,
            second_distance=second,
        )

    index = distances.index(best)
    return DecodeResult(
        status=DecodeStatus.DECODED,
        distance=best,
        word=code.words[index],
        index=index,
        certified=certified,
        second_distance=second,
    )


def project_module(module: SubModule, factor_idx: int, ambient: Ambient) -> SubModule:
    """Image of a module in one direct factor of the ring."""
    ring = module.ring
    rows = tuple(
        tuple(ring.project(x, factor_idx) for x in row) for row in module.basis.rows
    )
    return SubModule.from_generators(
        ambient, Matrix(ring=ambient.ring, cols=ambient.n, rows=rows)
    )


def inject_modules(ambient: Ambient, parts: List[SubModule]) -> SubModule:
    """Module pi_1(M) x ... x pi_m(M) from its factor images."""
    ring = ambient.ring
    rows = []
    for factor_idx, part in enumerate(parts):
        for row in part.basis.rows:
            rows.append(tuple(ring.inject(x, factor_idx) for x in row))

    return SubModule.from_generators(
        ambient, Matrix(ring=ring, cols=ambient.n, rows=tuple(rows))
    )


def decode_product(
    code: Code, received: SubModule, bounded: bool = False
) -> DecodeResult:
    """Decode each factor image in its component code, then reassemble."""
    factors = code.ring.factors()
    if (not code.components) or (len(code.components) != len(factors)):
        raise CodeError("Code was not built from one component code per factor")

    received = _rehome(code, received)
    results = tuple(
        decode_min_distance(
            component,
            project_module(received, factor_idx, component.ambient),
            bounded=bounded,
        )
        for factor_idx, component in enumerate(code.components)
    )

    for factor_idx, result in enumerate(results):
        if result.status != DecodeStatus.DECODED:
            _LOGGER.debug(
                "Component %s did not decode: %s", factor_idx, result.status.value
            )
            return DecodeResult(
                status=result.status, distance=result.distance, components=results
            )

    word = inject_modules(
        code.ambient, [result.word for result in results if result.word is not None]
    )
    distance = word.distance(received)
    index = code.index(word)
    if index is None:
        # Component words do not form a codeword (stacked codes)
        return DecodeResult(
            status=DecodeStatus.NO_CODEWORD, distance=distance, components=results
        )

    return DecodeResult(
        status=DecodeStatus.DECODED,
        distance=distance,
        word=word,
        index=index,
        certified=distance <= code.radius,
        components=results,
    )


def split_components(code: Code) -> Code:
    """Attach component codes made of the distinct factor images of the words.

    Product and stacked codes read back from text get their components this way.
    """
    if code.components:
        return code

    ring = code.ring
    factors = ring.factors()
    if len(factors) < 2:
        raise CodeError(f"{ring.spec} has no direct factors to decode over")

    components = []
    for factor_idx, factor in enumerate(factors):
        ambient = Ambient(
            ring=factor,
            n=code.n,
            column_ideals=tuple(
                ring.project(c, factor_idx) for c in code.ambient.column_ideals
            ),
        )
        images: List[SubModule] = []
        for word in code.words:
            image = project_module(word, factor_idx, ambient)
            if image not in images:
                images.append(image)

        components.append(Code(ambient=ambient, words=tuple(images)))

    return Code(
        ambient=code.ambient,
        words=code.words,
        components=tuple(components),
        construction=code.construction,
    )
