"""Submodule codes over finite principal ideal rings."""
from pathlib import Path

from .codes import Code, DecodeResult, DecodeStatus, decode_min_distance, decode_product
from .errors import FormatError, SubmoduleCodesError
from .matrix import EchelonMatrix, Matrix, is_row_echelon, member, row_echelon, rref
from .rings import (
    GaussianResidueRing,
    IntegerResidueRing,
    ProductRing,
    Ring,
    classify,
    gaussian_residue_ring,
)
from .settings import ChannelConfig, EnumerationLimits, TrappingConfig
from .submodule import Ambient, SubModule, enumerate_submodules, loss_and_error

_DIR = Path(__file__).parent
__version__ = (_DIR / "VERSION").read_text(encoding="utf-8").strip()

__all__ = [
    "__version__",
    "Ambient",
    "ChannelConfig",
    "Code",
    "DecodeResult",
    "DecodeStatus",
    "EchelonMatrix",
    "EnumerationLimits",
    "FormatError",
    "GaussianResidueRing",
    "IntegerResidueRing",
    "Matrix",
    "ProductRing",
    "Ring",
    "SubModule",
    "SubmoduleCodesError",
    "TrappingConfig",
    "classify",
    "decode_min_distance",
    "decode_product",
    "enumerate_submodules",
    "gaussian_residue_ring",
    "is_row_echelon",
    "loss_and_error",
    "member",
    "row_echelon",
    "rref",
]
