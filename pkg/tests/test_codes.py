"""Tests for codes and minimum distance decoding."""
import pytest

from submodule_codes.codes import (
    Code,
    DecodeStatus,
    decode_min_distance,
    decode_product,
    split_components,
)
from submodule_codes.constructions import construct_stacked
from submodule_codes.errors import AmbientError, CodeError
from submodule_codes.submodule import Ambient, SubModule

from .shared import golden_code, golden_matrix, module, ring


def _z5_code() -> Code:
    ambient = Ambient.full(ring("Z5"), 4)
    return Code(
        ambient=ambient,
        words=(
            module("Z5", [[1, 0, 0, 0], [0, 1, 0, 0]]),
            module("Z5", [[0, 0, 1, 0], [0, 0, 0, 1]]),
        ),
    )


def _z2_code() -> Code:
    return Code(
        ambient=Ambient.full(ring("Z2"), 4),
        words=(
            module("Z2", [[1, 0, 1, 0], [0, 1, 0, 1]]),
            module("Z2", [[1, 0, 1, 1], [0, 1, 1, 0]]),
        ),
    )


def test_code_parameters() -> None:
    code = _z5_code()
    assert len(code) == 2
    assert code.n == 4
    assert code.k == 2
    assert code.min_distance == 4
    assert code.radius == 1
    assert code.index(code.words[1]) == 1
    assert code.index(module("Z5", [[1, 1, 0, 0]])) is None


def test_invalid_codes() -> None:
    ambient = Ambient.full(ring("Z5"), 4)
    word = module("Z5", [[1, 0, 0, 0]])

    with pytest.raises(CodeError):
        Code(ambient=ambient, words=(word,))

    with pytest.raises(CodeError):
        Code(ambient=ambient, words=(word, word))

    with pytest.raises(CodeError):
        Code(ambient=ambient, words=(word, module("Z5", [[0, 1, 0, 0], [0, 0, 1, 0]])))

    with pytest.raises(CodeError):
        Code(ambient=ambient, words=(word, module("Z5", [[1, 0, 0]])))


def test_decode_within_radius() -> None:
    code = _z5_code()
    result = decode_min_distance(code, module("Z5", [[1, 0, 0, 0]]))
    assert result.status == DecodeStatus.DECODED
    assert result.distance == 1
    assert result.index == 0
    assert result.word == code.words[0]
    assert result.certified
    assert result.second_distance == 3


def test_decode_ties_are_ambiguous() -> None:
    result = decode_min_distance(_z5_code(), module("Z5", [[1, 0, 1, 0]]))
    assert result.status == DecodeStatus.AMBIGUOUS
    assert result.distance == 3
    assert result.word is None
    assert not result.certified


def test_bounded_decoding() -> None:
    code = _z5_code()
    received = module("Z5", [[1, 0, 0, 0], [0, 1, 1, 0]])

    result = decode_min_distance(code, received)
    assert result.status == DecodeStatus.DECODED
    assert result.distance == 2
    assert not result.certified

    result = decode_min_distance(code, received, bounded=True)
    assert result.status == DecodeStatus.NO_CODEWORD
    assert result.word is None


def test_decode_rejects_foreign_modules() -> None:
    with pytest.raises(AmbientError):
        decode_min_distance(_z5_code(), module("Z7", [[1, 0, 0, 0]]))

    with pytest.raises(AmbientError):
        decode_min_distance(_z5_code(), module("Z5", [[1, 0, 0]]))


def test_decode_beyond_tensored_subspaces() -> None:
    code = golden_code("zi5_code.txt")
    received = golden_matrix("zi5_received.txt").module

    # 125 elements: not V (x) Z5[i] for any subspace V of Z5^4
    assert received.size == 125
    assert received.length == 3

    result = decode_min_distance(code, received)
    assert result.status == DecodeStatus.DECODED
    assert result.distance == 3
    assert result.second_distance == 7
    assert result.index == 0
    assert result.certified


def test_stacked_code_beats_component_decoding() -> None:
    code = golden_code("z2z2_stacked_code.txt")
    received = golden_matrix("z2z2_received.txt").module

    whole = decode_min_distance(code, received)
    assert whole.status == DecodeStatus.DECODED
    assert whole.distance == 3
    assert whole.index == 0

    by_component = decode_product(split_components(code), received)
    assert by_component.status == DecodeStatus.AMBIGUOUS
    first, second = by_component.components
    assert first.status == DecodeStatus.DECODED
    assert first.distance == 0
    assert second.status == DecodeStatus.AMBIGUOUS
    assert second.distance == 3


def test_split_components_of_stacked_code() -> None:
    component = _z2_code()
    built = construct_stacked([component, component])
    parsed = golden_code("z2z2_stacked_code.txt")
    assert built.words == parsed.words

    split = split_components(parsed)
    assert len(split.components) == 2
    for part in split.components:
        assert part.words == component.words

    # Already split
    assert split_components(built) is built


def test_split_components_errors() -> None:
    with pytest.raises(CodeError):
        split_components(_z5_code())

    # Parsed codes carry no components until split
    parsed = golden_code("z2z2_stacked_code.txt")
    with pytest.raises(CodeError):
        decode_product(parsed, SubModule.zero(parsed.ambient))
