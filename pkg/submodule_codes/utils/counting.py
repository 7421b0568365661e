"""Counting helpers for subspace and submodule bounds."""
from functools import lru_cache
from typing import Iterator, Optional, Sequence, Tuple


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of an n-dimensional space over GF(q)."""
    if (k < 0) or (k > n):
        return 0

    numerator = 1
    denominator = 1
    for i in range(k):
        numerator *= q ** (n - i) - 1
        denominator *= q ** (i + 1) - 1

    return numerator // denominator


def compositions(
    total: int, parts: int, caps: Optional[Sequence[int]] = None
) -> Iterator[Tuple[int, ...]]:
    """Tuples of parts non-negative integers summing to total (u_i <= caps[i])."""
    if parts == 0:
        if total == 0:
            yield ()

        return

    cap = total if caps is None else min(total, caps[0])
    rest_caps = None if caps is None else caps[1:]
    for first in range(cap + 1):
        for rest in compositions(total - first, parts - 1, rest_caps):
            yield (first,) + rest
