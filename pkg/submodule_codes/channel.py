"""Monte-Carlo simulation of the matrix channel Y = AX + Z and error trapping."""
import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Tuple

import numpy as np

from .codes import Code, DecodeStatus, decode_min_distance
from .constructions import construct_spread
from .dataclasses_json import DataClassJsonMixin
from .errors import CapExceededError, ConfigError, UnsupportedRingError
from .matrix import Matrix, rref
from .rings import Ring
from .settings import DEFAULT_LIMITS, ChannelConfig, EnumerationLimits, TrappingConfig
from .submodule import Ambient, SubModule, loss_and_error, span
from .utils.sampling import random_free_rows, random_invertible

_LOGGER = logging.getLogger()


@dataclass
class TrialReport(DataClassJsonMixin):
    """Outcome of one channel use."""

    trial: int
    word_index: int
    rho: int
    e: int
    status: str
    decoded_index: Optional[int]
    success: bool
    certified: bool
    distance: int
    second_distance: Optional[int]


@dataclass
class SimulationReport(DataClassJsonMixin):
    """Aggregate statistics over all trials."""

    trials: int = 0
    successes: int = 0
    certified_successes: int = 0
    success_rate: float = 0.0
    certified_success_rate: float = 0.0
    mean_rho: float = 0.0
    mean_e: float = 0.0
    reports: List[TrialReport] = field(default_factory=list)


@dataclass
class CorruptionReport(DataClassJsonMixin):
    """Decoding of corrupted codewords inside the correction radius."""

    trials: int = 0
    within_radius: int = 0
    successes: int = 0

    @property
    def success_rate(self) -> float:
        return (self.successes / self.within_radius) if self.within_radius else 1.0


@dataclass
class TrappingReport(DataClassJsonMixin):
    """Error trapping compared with minimum distance decoding."""

    codebook_size: int = 0
    instances: int = 0
    comparisons: int = 0
    violations: int = 0
    trap_mismatches: int = 0


@dataclass(frozen=True)
class TrappingCodebook:
    """Zero-padded error-trapping code and the unpadded matrices."""

    code: Code
    xbars: Tuple[Matrix, ...]

    padding: int
    """Number of leading zero columns (u)."""

    rows: int
    cols: int


# -----------------------------------------------------------------------------


def sample_transfer(ring: Ring, N: int, t: int, rng: np.random.Generator) -> Matrix:
    """Last t columns of a random invertible N x N matrix (left-invertible)."""
    # pylint: disable=invalid-name
    if t > N:
        raise ConfigError(f"t={t} exceeds N={N}")

    invertible = random_invertible(ring, N, rng)
    return Matrix(
        ring=ring, cols=t, rows=tuple(row[N - t :] for row in invertible.rows)
    )


def sample_noise(
    ring: Ring, N: int, n: int, v: int, rng: np.random.Generator
) -> Matrix:
    """N x n matrix with v nonzero rows spanning a free module of rank v."""
    # pylint: disable=invalid-name
    if (v < 0) or (v > min(N, n)):
        raise ConfigError(f"Noise rank v={v} must be at most min(N, n)")

    free = random_free_rows(ring, v, n, rng)
    positions = sorted(int(p) for p in rng.choice(N, size=v, replace=False))
    rows = [(ring.zero,) * n] * N
    for position, row in zip(positions, free.rows):
        rows[position] = row

    return Matrix(ring=ring, cols=n, rows=tuple(rows))


def perturb(
    word: SubModule, rng: np.random.Generator, erasures: int, errors: int
) -> SubModule:
    """Delete basis rows of a word and add random ambient vectors."""
    ring = word.ring
    ambient = word.ambient
    rows = list(word.basis.rows)
    for _ in range(min(erasures, len(rows))):
        rows.pop(int(rng.integers(len(rows))))

    for _ in range(errors):
        rows.append(
            tuple(ring.mul(c, ring.random_element(rng)) for c in ambient.column_ideals)
        )

    return span(ambient, rows)


def run_corruption_trials(code: Code, trials: int, seed: int = 0) -> CorruptionReport:
    """Decode corrupted codewords; those with 2(rho + e) < d must decode exactly."""
    report = CorruptionReport(trials=trials)
    for trial_seed in np.random.SeedSequence(seed).spawn(trials):
        rng = np.random.default_rng(trial_seed)
        word_index = int(rng.integers(len(code)))
        word = code.words[word_index]
        received = perturb(
            word, rng, erasures=int(rng.integers(2)), errors=int(rng.integers(2))
        )

        rho, e = loss_and_error(word, received)
        if 2 * (rho + e) >= code.min_distance:
            continue

        report.within_radius += 1
        result = decode_min_distance(code, received)
        if (
            (result.status == DecodeStatus.DECODED)
            and (result.index == word_index)
            and result.certified
        ):
            report.successes += 1

    _LOGGER.debug(
        "%s/%s corrupted word(s) decoded", report.successes, report.within_radius
    )
    return report


# -----------------------------------------------------------------------------


def _transmit_matrix(word: SubModule, t: int) -> Matrix:
    """Basis rows of the word on top, zero rows below."""
    ring = word.ring
    rows = list(word.basis.rows)
    rows += [(ring.zero,) * word.ambient.n] * (t - len(rows))
    return Matrix(ring=ring, cols=word.ambient.n, rows=tuple(rows))


def _run_trial(
    config: ChannelConfig, code: Code, trial: int, seed: np.random.SeedSequence
) -> TrialReport:
    rng = np.random.default_rng(seed)
    ring = code.ring
    word_index = int(rng.integers(len(code)))
    word = code.words[word_index]

    transfer = sample_transfer(ring, config.N, config.t, rng)
    noise = sample_noise(ring, config.N, config.n, config.v, rng)
    if not code.ambient.is_full:
        # Keep noise inside the ambient
        noise = Matrix(
            ring=ring,
            cols=config.n,
            rows=tuple(
                tuple(ring.mul(c, x) for c, x in zip(code.ambient.column_ideals, row))
                for row in noise.rows
            ),
        )

    received_matrix = (transfer @ _transmit_matrix(word, config.t)) + noise
    received = SubModule.from_generators(code.ambient, received_matrix)
    rho, e = loss_and_error(word, received)
    result = decode_min_distance(code, received)
    success = (result.status == DecodeStatus.DECODED) and (
        result.index == word_index
    )

    _LOGGER.debug(
        "Trial %s: word=%s, rho=%s, e=%s, %s", trial, word_index, rho, e, result.status
    )

    return TrialReport(
        trial=trial,
        word_index=word_index,
        rho=rho,
        e=e,
        status=result.status.value,
        decoded_index=result.index,
        success=success,
        certified=success and result.certified,
        distance=result.distance,
        second_distance=result.second_distance,
    )


def run_trials(config: ChannelConfig, code: Code) -> SimulationReport:
    """Simulate config.trials channel uses; reproducible from config.seed."""
    if code.n != config.n:
        raise ConfigError(f"Code has n={code.n}, config has n={config.n}")

    max_rows = max(word.basis.nrows for word in code.words)
    if max_rows > config.t:
        _LOGGER.warning(
            "Codewords need %s row(s) but only t=%s are transmitted", max_rows, config.t
        )
        return SimulationReport()

    seeds = np.random.SeedSequence(config.seed).spawn(config.trials)
    trial_args = (
        [config] * config.trials,
        [code] * config.trials,
        range(config.trials),
        seeds,
    )

    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as executor:
            reports = list(executor.map(_run_trial, *trial_args, chunksize=16))
    else:
        reports = list(map(_run_trial, *trial_args))

    summary = SimulationReport(trials=config.trials, reports=reports)
    if reports:
        summary.successes = sum(1 for report in reports if report.success)
        summary.certified_successes = sum(1 for report in reports if report.certified)
        summary.success_rate = summary.successes / len(reports)
        summary.certified_success_rate = summary.certified_successes / len(reports)
        summary.mean_rho = sum(report.rho for report in reports) / len(reports)
        summary.mean_e = sum(report.e for report in reports) / len(reports)

    _LOGGER.debug(
        "Simulated %s trial(s): success rate %s", config.trials, summary.success_rate
    )
    return summary


def build_code(config: ChannelConfig, ring: Ring) -> Code:
    """Built-in codebook named by the config."""
    if config.construction == "spread":
        assert config.k is not None
        return construct_spread(ring, config.n, config.k)

    if config.construction == "trapping":
        return error_trapping_codebook(
            ring, config.n, config.N, config.t, config.u, config.v
        ).code

    raise ConfigError(f"No built-in construction: {config.construction}")


# -----------------------------------------------------------------------------


def _unit_pivot_rref(
    ring: Ring, rows: int, cols: int, limits: EnumerationLimits
) -> Iterator[Matrix]:
    """Every rows x cols RREF matrix whose pivots are 1."""
    elements = list(ring.elements())
    total = 0
    for pivot_cols in itertools.combinations(range(cols), rows):
        free = [
            (row_idx, col)
            for row_idx, pivot in enumerate(pivot_cols)
            for col in range(pivot + 1, cols)
            if col not in pivot_cols
        ]
        total += ring.size ** len(free)
        if total > limits.max_codebook_size:
            raise CapExceededError(
                f"Codebook exceeds {limits.max_codebook_size} matrices"
            )

        for values in itertools.product(elements, repeat=len(free)):
            entries = [[ring.zero] * cols for _ in range(rows)]
            for row_idx, pivot in enumerate(pivot_cols):
                entries[row_idx][pivot] = ring.one

            for (row_idx, col), value in zip(free, values):
                entries[row_idx][col] = value

            yield Matrix(
                ring=ring, cols=cols, rows=tuple(tuple(row) for row in entries)
            )


def _pad(xbar: Matrix, padding: int) -> Matrix:
    ring = xbar.ring
    return Matrix(
        ring=ring,
        cols=xbar.cols + padding,
        rows=tuple((ring.zero,) * padding + row for row in xbar.rows),
    )


def error_trapping_codebook(
    ring: Ring,
    n: int,
    N: int,
    t: int,
    u: int,
    v: int = 0,
    limits: EnumerationLimits = DEFAULT_LIMITS,
) -> TrappingCodebook:
    """Words row([0 | Xbar]) with Xbar a unit-pivot RREF matrix after u zero columns."""
    # pylint: disable=invalid-name
    if not ring.is_chain:
        raise UnsupportedRingError(f"{ring.spec} is not a chain ring")

    if n < 2 * N:
        raise ConfigError("Error trapping needs n >= 2N")

    if u < v:
        raise ConfigError("Error trapping needs u >= v")

    rows = (N - u) if (t + v > N) else t
    cols = n - u
    if not 1 <= rows <= cols:
        raise ConfigError(f"Cannot build {rows}x{cols} codewords")

    xbars = tuple(_unit_pivot_rref(ring, rows, cols, limits))
    ambient = Ambient.full(ring, n)
    words = tuple(
        SubModule.from_generators(ambient, _pad(xbar, u)) for xbar in xbars
    )

    _LOGGER.debug("Error-trapping codebook has %s word(s)", len(words))
    return TrappingCodebook(
        code=Code(ambient=ambient, words=words, construction="trapping"),
        xbars=xbars,
        padding=u,
        rows=rows,
        cols=cols,
    )


def trap(received: Matrix, u: int) -> SubModule:
    """row(Y) intersected with 0^u x R^(n - u), read off the RREF of Y."""
    ring = received.ring
    echelon = rref(received)
    rows = tuple(
        row for row, col in zip(echelon.rows, echelon.pivot_cols) if col >= u
    )
    return span(Ambient.full(ring, received.cols), rows)


def _trapping_instance(
    ring: Ring,
    config: TrappingConfig,
    xbar: Matrix,
    rng: np.random.Generator,
) -> Matrix:
    """Y = G [[H, K], [0, Xbar]] with row(H) free of rank v."""
    head = random_free_rows(ring, config.v, config.u, rng)
    rows = [
        h_row + tuple(ring.random_element(rng) for _ in range(config.n - config.u))
        for h_row in head.rows
    ]
    rows += [(ring.zero,) * config.u + x_row for x_row in xbar.rows]
    stacked = Matrix(ring=ring, cols=config.n, rows=tuple(rows))
    return random_invertible(ring, stacked.nrows, rng) @ stacked


def check_trapping_is_min_distance(
    ring: Ring, config: TrappingConfig, limits: EnumerationLimits = DEFAULT_LIMITS
) -> TrappingReport:
    """For trapped instances, the transmitted word is the unique nearest codeword."""
    codebook = error_trapping_codebook(
        ring, config.n, config.N, config.t, config.u, config.v, limits
    )
    words = codebook.code.words
    report = TrappingReport(codebook_size=len(words))

    seeds = np.random.SeedSequence(config.seed).spawn(len(words) * config.trials)
    for instance, seed in enumerate(seeds):
        rng = np.random.default_rng(seed)
        word_index = instance // config.trials
        received_matrix = _trapping_instance(
            ring, config, codebook.xbars[word_index], rng
        )
        received = SubModule.from_generators(codebook.code.ambient, received_matrix)
        report.instances += 1

        if trap(received_matrix, config.u) != words[word_index]:
            report.trap_mismatches += 1

        sent_distance = received.distance(words[word_index])
        for other_index, other in enumerate(words):
            report.comparisons += 1
            other_distance = received.distance(other)
            if (other_distance < sent_distance) or (
                (other_distance == sent_distance) and (other_index != word_index)
            ):
                _LOGGER.debug(
                    "Violation: word %s at %s, sent %s at %s",
                    other_index,
                    other_distance,
                    word_index,
                    sent_distance,
                )
                report.violations += 1

    return report
