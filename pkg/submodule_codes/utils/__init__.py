"""Utility methods."""
from .counting import compositions, gaussian_binomial

__all__ = [
    "compositions",
    "gaussian_binomial",
]
