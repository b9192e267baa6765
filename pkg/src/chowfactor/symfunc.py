"""Monomial, power-sum and complete symmetric functions and the change of basis between them."""

from __future__ import annotations

from itertools import permutations
from math import factorial, prod
from typing import Mapping

from .errors import DomainError
from .partitions import Partition, PartitionLike, RefinementMatrix, as_partition, enumerate_partitions
from .polyalg import SparsePoly, TruncatedSeries, mul_truncated


def monomial_sym(mu: PartitionLike, numvars: int) -> SparsePoly:
    """Orbit sum of ``x^mu`` over distinct rearrangements of ``mu`` padded with zeros."""
    mu = as_partition(mu)
    if numvars < mu.parts_count:
        raise DomainError(f"m_{mu} needs at least {mu.parts_count} variables, got {numvars}")
    padded = mu.parts + (0,) * (numvars - mu.parts_count)
    return SparsePoly(numvars, {mono: 1 for mono in set(permutations(padded))})


def _power_sum_factor(k: int, numvars: int) -> SparsePoly:
    terms = {}
    for i in range(numvars):
        mono = [0] * numvars
        mono[i] = k
        terms[tuple(mono)] = 1
    return SparsePoly(numvars, terms)


def power_sum(lam: PartitionLike, numvars: int) -> SparsePoly:
    """``prod_i (x_1^lam_i + ... + x_numvars^lam_i)``, expanded."""
    lam = as_partition(lam)
    if numvars < 1:
        raise DomainError("numvars must be positive")
    result = SparsePoly.constant(numvars, 1)
    for part in lam.parts:
        result = result * _power_sum_factor(part, numvars)
    return result


def _coefficient_of_m_in_p(lam: Partition, mu: Partition) -> int:
    # Only the first #lam variables can carry x^lam; every other variable is set
    # to zero, and exponents beyond lam_i are dropped as they form.
    k = lam.parts_count
    caps = lam.parts
    result = TruncatedSeries.one(caps)
    for part in mu.parts:
        result = mul_truncated(result, TruncatedSeries(_power_sum_factor(part, k), caps))
        if not result.poly.terms:
            return 0
    return result.coefficient(lam.parts)


def refinement_matrix_symfunc(d: int) -> RefinementMatrix:
    """Entry ``(lam, mu)`` is the coefficient of ``m_lam`` in the expansion of ``p_mu``."""
    order = tuple(enumerate_partitions(d))
    entries = tuple(tuple(_coefficient_of_m_in_p(lam, mu) for mu in order) for lam in order)
    return RefinementMatrix(order, entries)


def complete_sym(lam: PartitionLike, numvars: int) -> SparsePoly:
    """``h_lam = prod_i h_{lam_i}``, each ``h_k`` the sum of all degree-``k`` monomials."""
    lam = as_partition(lam)
    if numvars < 1:
        raise DomainError("numvars must be positive")
    result = SparsePoly.constant(numvars, 1)
    for part in lam.parts:
        result = result * SparsePoly(numvars, {m: 1 for m in _exponent_vectors(part, numvars)})
    return result


def _exponent_vectors(total: int, numvars: int):
    if numvars == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _exponent_vectors(total - first, numvars - 1):
            yield (first,) + rest


def centralizer_order(lam: PartitionLike) -> int:
    """``z_lam = prod_i i^m_i m_i!``, so that ``<p_lam, p_lam> = z_lam``."""
    lam = as_partition(lam)
    return prod(i**m * factorial(m) for i, m in lam.profile.items())


IDENTITY_FORMS = ("transposed", "hall", "literal")


def degree_identity_check(
    d: int,
    D: Mapping[PartitionLike, int],
    deg: Mapping[PartitionLike, int],
    form: str = "transposed",
) -> bool:
    """Check the generating-function form of ``D[mu] = sum_lam deg[lam] M[lam, mu]`` in ``d`` variables.

    ``M[lam, mu]`` is the coefficient of ``m_lam`` in ``p_mu``. The forms are

    * ``"transposed"``: ``sum_mu D[mu] m_mu == sum_lam deg[lam] sum_mu M[lam, mu] m_mu``,
      i.e. the power sums on the right are expanded through the transposed
      change-of-basis matrix;
    * ``"hall"``: ``sum_mu D[mu] p_mu / z_mu == sum_lam deg[lam] h_lam``, the same
      relation written with the bases dual to ``m`` and ``p``;
    * ``"literal"``: ``sum_mu D[mu] m_mu == sum_lam deg[lam] p_lam``. This uses the
      matrix the other way round and does not hold for actual degree data
      (for ``d = n = 3`` the ``x_1^3`` coefficients are 12 and 16).
    """
    if form not in IDENTITY_FORMS:
        raise DomainError(f"unknown form {form!r}; choose from {IDENTITY_FORMS}")
    order = enumerate_partitions(d)
    D = {as_partition(k): v for k, v in D.items()}
    deg = {as_partition(k): v for k, v in deg.items()}
    for name, table in (("D", D), ("deg", deg)):
        missing = [str(p) for p in order if p not in table]
        if missing:
            raise DomainError(f"{name} has no value for partitions {missing}")

    lhs = SparsePoly(d)
    rhs = SparsePoly(d)
    if form == "hall":
        # scale by d! so every p_mu / z_mu has integer coefficients
        scale = factorial(d)
        for mu in order:
            if D[mu]:
                lhs = lhs + power_sum(mu, d) * (D[mu] * scale // centralizer_order(mu))
            if deg[mu]:
                rhs = rhs + complete_sym(mu, d) * (deg[mu] * scale)
        return lhs == rhs

    for mu in order:
        if D[mu]:
            lhs = lhs + monomial_sym(mu, d) * D[mu]
    if form == "literal":
        for lam in order:
            if deg[lam]:
                rhs = rhs + power_sum(lam, d) * deg[lam]
        return lhs == rhs

    M = refinement_matrix_symfunc(d)
    for mu in order:
        coeff = sum(deg[lam] * M[lam, mu] for lam in order)
        if coeff:
            rhs = rhs + monomial_sym(mu, d) * coeff
    return lhs == rhs
