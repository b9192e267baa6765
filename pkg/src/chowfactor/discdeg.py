"""Degrees of mu-discriminants, the duals of Segre-Veronese varieties.

The degree of the dual of ``Seg_mu(P^{n-1} x ... x P^{n-1})`` is the
coefficient of ``z_1^{n-1} ... z_t^{n-1}`` in

    1 / [prod_i (1 + z_i) - sum_j mu_j z_j prod_{i != j} (1 + z_i)]^2.

Two routes extract it. ``method="series"`` builds the denominator as a
truncated series and inverts it. ``method="closed"`` (the default) rewrites
the denominator as ``prod_i (1 + z_i) * (1 - sum_j mu_j w_j)`` with
``w_j = z_j / (1 + z_j)``, expands ``(1 - S)^-2`` termwise and sums

    sum_{a in [0, n-1]^t} (|a| + 1)! prod_j mu_j^a_j (-1)^(n-1-a_j) C(n, a_j + 1) / a_j!

by a convolution over ``|a|``. The series route touches up to ``n^t``
monomials; the closed route is ``O(t n^2)``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as cartesian
from math import comb, factorial

from .errors import DomainError, ResourceError
from .partitions import Partition, PartitionLike, as_partition
from .polyalg import SparsePoly, TruncatedSeries, inverse_square

DEFAULT_MAX_TERMS = 10**7


def _check_args(mu, n: int, max_terms: int | None):
    mu = as_partition(mu)
    if n < 2:
        raise DomainError(f"n must be at least 2, got {n}")
    if mu.weight < 2:
        raise DomainError(f"|mu| must be at least 2, got {mu.weight}")
    limit = DEFAULT_MAX_TERMS if max_terms is None else max_terms
    size = n ** mu.parts_count
    if size > limit:
        raise ResourceError(
            f"series for mu={mu}, n={n} has up to {size} monomials, above the limit {limit}"
        )
    return mu


def denominator_series(mu: PartitionLike, n: int) -> TruncatedSeries:
    """``prod(1 + z_i) - sum_j mu_j z_j prod_{i != j}(1 + z_i)`` with caps ``n - 1``.

    A plain sequence is used in the order given, so ``z_j`` pairs with ``mu[j]``.
    """
    parts = mu.parts if isinstance(mu, Partition) else tuple(mu)
    t = len(parts)
    terms = {}
    # multilinear: the coefficient of z^S is 1 - sum_{j in S} mu_j
    for mono in cartesian((0, 1), repeat=t):
        terms[mono] = 1 - sum(m for m, e in zip(parts, mono) if e)
    return TruncatedSeries(SparsePoly(t, terms), (n - 1,) * t)


def _degree_series(mu, n: int) -> int:
    inv = inverse_square(denominator_series(mu, n))
    return inv.coefficient((n - 1,) * mu.parts_count)


def _degree_closed(mu, n: int) -> int:
    c = n - 1
    # conv[k] accumulates prod_j(weight of a_j) over choices with |a| = k
    conv = [Fraction(1)]
    for m in mu.parts:
        factor = [
            Fraction((-1) ** (c - a) * comb(c + 1, a + 1) * m**a, factorial(a))
            for a in range(c + 1)
        ]
        nxt = [Fraction(0)] * (len(conv) + c)
        for i, x in enumerate(conv):
            if x:
                for a, y in enumerate(factor):
                    nxt[i + a] += x * y
        conv = nxt
    total = sum(factorial(k + 1) * x for k, x in enumerate(conv))
    assert total.denominator == 1
    return int(total)


def mu_discriminant_degree(
    mu: PartitionLike, n: int, *, method: str = "closed", max_terms: int | None = None
) -> int:
    """Degree of the mu-discriminant for ``dim V = n``.

    ``max_terms`` caps ``n ** len(mu)``, the monomial count of the truncated
    series; larger inputs raise :class:`ResourceError` whichever method is used.
    """
    mu = _check_args(mu, n, max_terms)
    if method == "closed":
        return _degree_closed(mu, n)
    if method == "series":
        return _degree_series(mu, n)
    raise DomainError(f"unknown method {method!r}; use 'closed' or 'series'")


def boole_degree(d: int, n: int) -> int:
    """Degree of the classical discriminant of a degree-``d`` form in ``n`` variables."""
    if d < 2 or n < 2:
        raise DomainError(f"need d >= 2 and n >= 2, got d={d}, n={n}")
    return n * (d - 1) ** (n - 1)
