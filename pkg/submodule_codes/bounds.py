"""Upper bounds on the cardinality of submodule codes."""
import logging
from dataclasses import dataclass, field
from math import ceil, prod
from typing import List, Optional, Sequence

import sympy

from .dataclasses_json import DataClassJsonMixin
from .errors import CapExceededError, CodeError, UnsupportedRingError
from .rings import Ring
from .settings import DEFAULT_LIMITS, EnumerationLimits
from .submodule import Ambient, count_submodules, enumerate_submodules
from .utils import compositions, gaussian_binomial

_LOGGER = logging.getLogger()

METHODS = ("auto", "closed", "enumerate")


@dataclass
class BoundEntry(DataClassJsonMixin):
    """One evaluated bound."""

    name: str
    value: Optional[int] = None
    applicable: bool = True
    note: str = ""


@dataclass
class BoundReport(DataClassJsonMixin):
    """Tightest applicable value and the breakdown behind it."""

    name: str
    value: Optional[int] = None
    entries: List[BoundEntry] = field(default_factory=list)


def count_submodules_zpm(dims: Sequence[int], length: int, p: int) -> int:
    """Submodules of the given length of M with dim(e_i M) = dims[i] over Z_p^m."""
    return _count_field_product(dims, length, [p] * len(dims))


def _count_field_product(dims: Sequence[int], length: int, qs: Sequence[int]) -> int:
    return sum(
        prod(gaussian_binomial(dim, part, q) for dim, part, q in zip(dims, parts, qs))
        for parts in compositions(length, len(dims), dims)
    )


def _min_count(
    total: int, length: int, n: int, qs: Sequence[int]
) -> Optional[int]:
    """Fewest length-`length` submodules over M with length total (per-factor dims <= n)."""
    counts = [
        _count_field_product(dims, length, qs)
        for dims in compositions(total, len(qs), [n] * len(qs))
    ]
    return min(counts) if counts else None


def b_value(lam: int, k: int, delta: int, p: int, m: int, n: int) -> Optional[int]:
    """b(lam, k, delta): minimum of the counting formula over dimension splits."""
    return _min_count(lam - delta + 1, k - delta + 1, n, [p] * m)


def bound_zpm(p: int, m: int, n: int, k: int, delta: int) -> BoundReport:
    """Bounds for R = Z_p^m and ambient R^n."""
    if not sympy.isprime(p):
        raise UnsupportedRingError(f"p must be prime, got {p}")

    if (m < 1) or (n < 1):
        raise CodeError("m and n must be positive")

    _check_parameters(m * n, k, delta)
    entries = []

    bb1 = b_value(m * n, k, delta, p, m, n)
    entries.append(BoundEntry(name="bb1", value=bb1, applicable=bb1 is not None))

    numerator = count_submodules_zpm([n] * m, k - delta + 1, p)
    denominator = b_value(k + delta - 1, k, delta, p, m, n)
    if denominator:
        entries.append(BoundEntry(name="bb2", value=numerator // denominator))
    else:
        entries.append(BoundEntry(name="bb2", applicable=False))

    if delta == k:
        # ceil((p^(k/m) - 1) / (p - 1)) evaluated exactly
        block = sympy.ceiling(
            (sympy.Integer(p) ** sympy.Rational(k, m) - 1) / (p - 1)
        )
        entries.append(
            BoundEntry(name="bb3", value=int((p**n - 1) // (p - 1) // int(block)))
        )
    else:
        entries.append(BoundEntry(name="bb3", applicable=False, note="needs delta = k"))

    if (delta == k) and (m == 2) and (k % 2 == 1):
        h = ceil(k / 2)
        entries.append(
            BoundEntry(
                name="bb4", value=(2 * (p**n - 1)) // (p**h + p ** (h - 1) - 2)
            )
        )
    else:
        entries.append(
            BoundEntry(
                name="bb4", applicable=False, note="needs delta = k, m = 2 and odd k"
            )
        )

    values = [entry.value for entry in entries if entry.applicable and entry.value]
    return BoundReport(
        name="zpm", value=min(values) if values else None, entries=entries
    )


def bound_chain_ring(
    ring: Ring, n: int, k: int, exponents: Optional[Sequence[int]] = None
) -> int:
    """(q^m - 1) / (q - 1) for codes with d = 2k in R x (pi^a_2) x ... x (pi^a_n)."""
    if not ring.is_chain:
        raise UnsupportedRingError(f"{ring.spec} is not a chain ring")

    e = ring.length
    q = ring.components[0].q
    if exponents is None:
        exponents = [0] * (n - 1)

    if len(exponents) != n - 1:
        raise CodeError(f"Expected {n - 1} exponent(s), got {len(exponents)}")

    if any(not 0 <= a <= e - 1 for a in exponents) or (
        list(exponents) != sorted(exponents)
    ):
        raise CodeError(f"Exponents must be non-decreasing in [0, {e - 1}]")

    if k < 1:
        raise CodeError(f"k must be positive, got {k}")

    # a[j] is the exponent of column j + 1
    a = [0] + list(exponents)
    m = next(i for i in range(1, n + 1) if (n - i) * e - sum(a[i:]) <= k - 1)
    return (q**m - 1) // (q - 1)


# -----------------------------------------------------------------------------


def _check_parameters(ambient_length: int, k: int, delta: int) -> None:
    if not 1 <= k <= ambient_length - 1:
        raise CodeError(f"k must be in [1, {ambient_length - 1}], got {k}")

    if not 1 <= delta <= k:
        raise CodeError(f"delta must be in [1, {k}], got {delta}")


def _field_orders(ambient: Ambient) -> Optional[List[int]]:
    """Residue field orders if R is a product of fields and the ambient is R^n."""
    if not ambient.is_full:
        return None

    if any(component.e != 1 for component in ambient.ring.components):
        return None

    return [component.q for component in ambient.ring.components]


def _chain_exponents(ambient: Ambient) -> Optional[List[int]]:
    """a_2 ... a_n if the ambient is R x (pi^a_2) x ... with non-decreasing a_j."""
    if not ambient.ring.is_chain:
        return None

    exponents = list(ambient.chain_exponents())
    if (exponents[0] != 0) or (exponents != sorted(exponents)):
        return None

    return exponents[1:]


def resolve_method(ambient: Ambient, k: int, delta: int, method: str, sphere: bool) -> str:
    """Pick closed or enumerate for auto, and check that closed applies."""
    if method not in METHODS:
        raise CodeError(f"Unknown method: {method}")

    has_closed = (_field_orders(ambient) is not None) or (
        (not sphere) and (delta == k) and (_chain_exponents(ambient) is not None)
    )

    if method == "auto":
        return "closed" if has_closed else "enumerate"

    if (method == "closed") and (not has_closed):
        raise CapExceededError("No closed form applies to this ambient")

    return method


def bound_singleton(
    ambient: Ambient,
    k: int,
    delta: int,
    method: str = "auto",
    limits: EnumerationLimits = DEFAULT_LIMITS,
) -> int:
    """Fewest length-(k - delta + 1) submodules of an M with length(M) = lambda - delta + 1."""
    _check_parameters(ambient.length, k, delta)
    method = resolve_method(ambient, k, delta, method, sphere=False)
    _LOGGER.debug("Singleton-like bound by %s", method)

    if method == "closed":
        qs = _field_orders(ambient)
        if qs is not None:
            value = _min_count(ambient.length - delta + 1, k - delta + 1, ambient.n, qs)
            assert value is not None
            return value

        exponents = _chain_exponents(ambient)
        assert exponents is not None
        return bound_chain_ring(ambient.ring, ambient.n, k, exponents)

    modules = enumerate_submodules(ambient, ambient.length - delta + 1, limits=limits)
    return min(count_submodules(module, k - delta + 1) for module in modules)


def bound_sphere(
    ambient: Ambient,
    k: int,
    delta: int,
    method: str = "auto",
    limits: EnumerationLimits = DEFAULT_LIMITS,
) -> int:
    """Length-(k - delta + 1) submodules of the ambient over the fewest in a length-k module."""
    _check_parameters(ambient.length, k, delta)
    method = resolve_method(ambient, k, delta, method, sphere=True)
    _LOGGER.debug("Sphere-covering bound by %s", method)
    small = k - delta + 1

    if method == "closed":
        qs = _field_orders(ambient)
        assert qs is not None
        numerator = _count_field_product([ambient.n] * len(qs), small, qs)
        denominator = _min_count(k, small, ambient.n, qs)
        assert denominator
        return numerator // denominator

    numerator = len(enumerate_submodules(ambient, small, limits=limits))
    denominator = min(
        count_submodules(module, small)
        for module in enumerate_submodules(ambient, k, limits=limits)
    )
    return numerator // denominator
