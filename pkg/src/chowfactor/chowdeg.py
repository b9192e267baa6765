"""Degrees of the duals of Chow varieties.

``solve_chow_degrees`` inverts the triangular system

    D[mu] = sum_{lam refined by mu} d[lam] * M[lam, mu]

over exact rationals and cross-checks the zero pattern of the solution
against the hypersurface classifier.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod

from .discdeg import mu_discriminant_degree
from .errors import ConsistencyError, DomainError
from .partitions import (
    Partition,
    PartitionLike,
    RefinementMatrix,
    as_partition,
    refinement_matrix_bruteforce,
)


def is_hypersurface(lam: PartitionLike, n: int) -> bool:
    """Whether the dual of ``Chow_lam(P^{n-1})`` is a hypersurface."""
    lam = as_partition(lam)
    d = lam.weight
    if n < 2 or d < 2:
        raise DomainError(f"need n >= 2 and |lam| >= 2, got n={n}, lam={lam}")
    if d == 2:
        # quadrics: only the Veronese has a hypersurface dual
        return lam.parts == (2,)
    if n == 2:
        return lam.multiplicity(1) == 0
    return lam.parts != (d - 1, 1)


@dataclass(frozen=True)
class DegreeRow:
    lam: Partition
    disc_degree: int
    chow_degree: int
    hypersurface: bool


@dataclass(frozen=True)
class DegreeTable:
    d: int
    n: int
    rows: tuple[DegreeRow, ...]

    @property
    def order(self) -> tuple[Partition, ...]:
        return tuple(r.lam for r in self.rows)

    def row(self, lam: PartitionLike) -> DegreeRow:
        lam = as_partition(lam)
        for r in self.rows:
            if r.lam == lam:
                return r
        raise KeyError(str(lam))

    def disc_degrees(self) -> dict[Partition, int]:
        return {r.lam: r.disc_degree for r in self.rows}

    def chow_degrees(self) -> dict[Partition, int]:
        return {r.lam: r.chow_degree for r in self.rows}


def forward_substitute(M: RefinementMatrix, D: list[int]) -> list[Fraction]:
    """Solve ``D[j] = sum_i x[i] * M[i][j]`` with ``M`` upper triangular in canonical order."""
    size = len(M.order)
    for i, lam in enumerate(M.order):
        expected = prod(factorial(k) for k in lam.profile.values())
        if M.entries[i][i] != expected or expected < 1:
            raise ConsistencyError(f"diagonal entry for {lam} is {M.entries[i][i]}, expected {expected}")
        for j in range(i):
            if M.entries[i][j]:
                raise ConsistencyError(f"M[{lam}, {M.order[j]}] is nonzero below the diagonal")
    x: list[Fraction] = []
    for j in range(size):
        acc = Fraction(D[j]) - sum(x[i] * M.entries[i][j] for i in range(j))
        x.append(acc / M.entries[j][j])
    return x


def validate_table(table: DegreeTable, M: RefinementMatrix | None = None) -> None:
    """Raise :class:`ConsistencyError` unless the table satisfies its invariants."""
    M = M or refinement_matrix_bruteforce(table.d)
    if table.order != M.order:
        raise ConsistencyError("table rows are not in canonical partition order")
    for j, mu in enumerate(M.order):
        row = table.rows[j]
        if not isinstance(row.chow_degree, int) or row.chow_degree < 0:
            raise ConsistencyError(f"d[{mu}] = {row.chow_degree!r} is not a non-negative integer")
        if (row.chow_degree > 0) != row.hypersurface:
            raise ConsistencyError(f"d[{mu}] = {row.chow_degree} contradicts hypersurface={row.hypersurface}")
        if row.hypersurface != is_hypersurface(mu, table.n):
            raise ConsistencyError(f"hypersurface flag for {mu} disagrees with the classifier")
        recombined = sum(table.rows[i].chow_degree * M.entries[i][j] for i in range(len(M.order)))
        if recombined != row.disc_degree:
            raise ConsistencyError(f"sum_lam d[lam] M[lam, {mu}] = {recombined} but D[{mu}] = {row.disc_degree}")


def solve_chow_degrees(d: int, n: int, *, max_terms: int | None = None) -> DegreeTable:
    if d < 2 or n < 2:
        raise DomainError(f"need d >= 2 and n >= 2, got d={d}, n={n}")
    M = refinement_matrix_bruteforce(d)
    D = [mu_discriminant_degree(mu, n, max_terms=max_terms) for mu in M.order]
    solution = forward_substitute(M, D)

    rows = []
    for lam, disc, value in zip(M.order, D, solution):
        if value.denominator != 1 or value < 0:
            raise ConsistencyError(f"d[{lam}] = {value} for d={d}, n={n} is not a non-negative integer")
        degree = int(value)
        flag = is_hypersurface(lam, n)
        if (degree > 0) != flag:
            raise ConsistencyError(
                f"solver gives d[{lam}] = {degree} but the classifier says hypersurface={flag} (n={n})"
            )
        rows.append(DegreeRow(lam, disc, degree, flag))
    table = DegreeTable(d, n, tuple(rows))
    validate_table(table, M)
    return table


def binary_chow_degree(lam: PartitionLike) -> int:
    """Closed form for ``n = 2``: ``(m+1) * multinomial(m; m_2, ..., m_p) * prod (i-1)^m_i``."""
    lam = as_partition(lam)
    profile = lam.profile
    if 1 in profile:
        raise DomainError(f"{lam} has a part equal to 1; its binary dual is not a hypersurface")
    m = lam.parts_count
    arrangements = factorial(m) // prod(factorial(k) for k in profile.values())
    return (m + 1) * arrangements * prod((i - 1) ** k for i, k in profile.items())

