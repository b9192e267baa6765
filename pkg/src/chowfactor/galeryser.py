"""Counting 0-1 matrices with prescribed margins, and the binary hyperdeterminant degree built on it."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from fractions import Fraction
from itertools import product as cartesian
from math import comb, factorial, prod
from typing import Sequence

from .errors import DomainError
from .partitions import PartitionLike, as_partition, enumerate_partitions


def gale_ryser_count(rows: Sequence[int], cols: PartitionLike) -> int:
    """Number of 0-1 matrices with labeled row sums ``rows`` and column sums ``cols``.

    Columns are filled one at a time. Rows with the same remaining sum are
    interchangeable, so a column that takes ``k_v`` of the ``c_v`` rows with
    remaining sum ``v`` contributes ``prod_v C(c_v, k_v)`` ways.
    """
    rows = tuple(rows)
    if any(r < 0 for r in rows):
        raise DomainError(f"row sums must be non-negative, got {rows}")
    cols = as_partition(cols)
    if sum(rows) != cols.weight:
        raise DomainError(f"row sums total {sum(rows)} but column sums total {cols.weight}")
    col_sums = cols.parts

    @lru_cache(maxsize=None)
    def fill(j: int, state: tuple[tuple[int, int], ...]) -> int:
        if j == len(col_sums):
            return 1 if all(v == 0 for v, _ in state) else 0
        need = col_sums[j]
        groups = [(v, c) for v, c in state if v > 0]
        zeros = sum(c for v, c in state if v == 0)
        if sum(c for _, c in groups) < need:
            return 0
        total = 0
        for picks in _compositions(need, [c for _, c in groups]):
            ways = prod(comb(c, k) for (_, c), k in zip(groups, picks))
            nxt = Counter({0: zeros} if zeros else {})
            for (v, c), k in zip(groups, picks):
                if k:
                    nxt[v - 1] += k
                if c - k:
                    nxt[v] += c - k
            total += ways * fill(j + 1, tuple(sorted(nxt.items())))
        return total

    return fill(0, tuple(sorted(Counter(rows).items())))


def _compositions(total: int, bounds: list[int]):
    """Tuples ``k`` with ``0 <= k_i <= bounds[i]`` and ``sum(k) == total``."""
    if not bounds:
        if total == 0:
            yield ()
        return
    head, rest = bounds[0], bounds[1:]
    room = sum(rest)
    for k in range(max(0, total - room), min(head, total) + 1):
        for tail in _compositions(total - k, rest):
            yield (k,) + tail


def gale_ryser_bruteforce(rows: Sequence[int], cols: Sequence[int]) -> int:
    """Enumerate every 0-1 matrix of the given shape. Only for tiny inputs."""
    rows, cols = tuple(rows), tuple(cols)
    count = 0
    for bits in cartesian((0, 1), repeat=len(rows) * len(cols)):
        grid = [bits[i * len(cols):(i + 1) * len(cols)] for i in range(len(rows))]
        if all(sum(r) == s for r, s in zip(grid, rows)) and all(
            sum(col) == s for col, s in zip(zip(*grid), cols)
        ):
            count += 1
    return count


def binary_hyperdet_degree_gr(d: int) -> int:
    """Degree of the ``2 x ... x 2`` (d factors) hyperdeterminant via the Gale-Ryser sum.

    Sums ``(m + 1)! * GR((1^d), lam) * prod_{i>=2} (i-1)^m_i / m_i!`` over
    partitions ``lam`` of ``d`` with no part equal to 1, ``m`` the number of parts.
    """
    if d < 2:
        raise DomainError(f"d must be at least 2, got {d}")
    rows = (1,) * d
    total = Fraction(0)
    for lam in enumerate_partitions(d):
        profile = lam.profile
        if 1 in profile:
            continue
        m = lam.parts_count
        weight = Fraction(prod((i - 1) ** k for i, k in profile.items()),
                          prod(factorial(k) for k in profile.values()))
        total += factorial(m + 1) * gale_ryser_count(rows, lam) * weight
    assert total.denominator == 1
    return int(total)
