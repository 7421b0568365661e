"""Kernel and simulation settings."""
from dataclasses import dataclass
from typing import Optional

from .dataclasses_json import DataClassJsonMixin
from .errors import ConfigError


@dataclass(frozen=True)
class EnumerationLimits:
    """Caps for brute-force enumeration."""

    max_ring_elements: int = 10_000
    """Largest ring whose elements may be listed."""

    max_module_elements: int = 100_000
    """Largest submodule whose elements may be listed (intersection oracle)."""

    max_ambient_elements: int = 10_000
    """Largest ambient module searched by submodule enumeration."""

    max_codebook_size: int = 100_000
    """Largest error-trapping codebook that may be enumerated."""

    difference_set_check: int = 64
    """Difference sets of at most this many matrices are verified pairwise."""


DEFAULT_LIMITS = EnumerationLimits()


# pylint: disable=invalid-name
@dataclass(frozen=True)
class ChannelConfig(DataClassJsonMixin):
    """Settings for Monte-Carlo runs of the matrix channel Y = AX + Z."""

    ring: str
    """Ring spec, e.g. Z4 or Zi5."""

    n: int
    """Number of columns of X, Y and Z."""

    t: int
    """Number of rows of X (columns of A)."""

    N: int
    """Number of received rows (rows of A and Z)."""

    v: int = 0
    """Rank of the noise matrix Z (row module is free of rank v)."""

    u: int = 0
    """Zero-padded leading columns of error-trapping codewords."""

    code: Optional[str] = None
    """Path of a code file to transmit from."""

    construction: Optional[str] = None
    """Built-in codebook (spread or trapping) used when no code file is given."""

    k: Optional[int] = None
    """Codeword length for the spread construction."""

    trials: int = 1000
    """Number of independent channel uses."""

    seed: int = 0
    """Master seed; per-trial seeds are spawned from it."""

    workers: int = 1
    """Worker processes for running trials (1 = in process)."""

    def __post_init__(self) -> None:
        if min(self.n, self.t, self.N) < 1:
            raise ConfigError("n, t and N must be positive")

        if self.t > self.N:
            raise ConfigError(f"t={self.t} exceeds N={self.N}")

        if (self.v < 0) or (self.v > min(self.N, self.n)):
            raise ConfigError(f"Noise rank v={self.v} must be at most min(N, n)")

        if self.trials < 0:
            raise ConfigError("trials must not be negative")

        if self.workers < 1:
            raise ConfigError("workers must be at least 1")

        if (self.code is None) and (self.construction is None):
            raise ConfigError("Either code or construction is required")

        if self.construction not in (None, "spread", "trapping"):
            raise ConfigError(f"Unknown construction: {self.construction}")

        if (self.construction == "spread") and (self.code is None) and (self.k is None):
            raise ConfigError("The spread construction needs k")

        if self.construction == "trapping":
            if self.n < 2 * self.N:
                raise ConfigError("Error trapping needs n >= 2N")

            if self.u < self.v:
                raise ConfigError("Error trapping needs u >= v")


@dataclass(frozen=True)
class TrappingConfig(DataClassJsonMixin):
    """Parameters of an error-trapping comparison run."""

    ring: str
    """Chain ring spec."""

    n: int
    """Number of columns."""

    N: int
    """Number of received rows."""

    t: int
    """Number of transmitted rows."""

    v: int
    """Rank of the noise row module."""

    u: int
    """Zero-padded leading columns (u >= v)."""

    trials: int = 1
    """Random (G, H, K) draws per codeword."""

    seed: int = 0
    """Master seed."""

    def __post_init__(self) -> None:
        if self.n < 2 * self.N:
            raise ConfigError("Error trapping needs n >= 2N")

        if self.u < self.v:
            raise ConfigError("Error trapping needs u >= v")

        if (self.t < 1) or (self.t > self.N):
            raise ConfigError("Error trapping needs 1 <= t <= N")

        if not (
            (self.t + self.v == self.N)
            or ((self.u == self.v) and (self.t + self.v > self.N))
        ):
            raise ConfigError(
                "Trapping comparison needs t + v = N, or u = v and t + v > N"
            )

        if self.trials < 1:
            raise ConfigError("trials must be positive")
