"""Factorization of symmetrized mu-discriminants and hyperdeterminants into Chow-dual factors."""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .chowdeg import DegreeTable, solve_chow_degrees
from .errors import ConsistencyError, DomainError
from .partitions import (
    Partition,
    PartitionLike,
    as_partition,
    multinomial,
    refinement_count,
    refines,
)


@dataclass(frozen=True)
class Factor:
    lam: Partition
    degree: int
    multiplicity: int


@dataclass(frozen=True)
class FactorReport:
    mu: Partition
    n: int
    factors: tuple[Factor, ...]
    total_degree: int

    def as_tuples(self) -> list[tuple[tuple[int, ...], int, int]]:
        return [(f.lam.parts, f.degree, f.multiplicity) for f in self.factors]


class TableCache:
    """Memoizes :class:`DegreeTable` per ``(d, n)``; each table is built once."""

    def __init__(self):
        self._tables: dict[tuple[int, int], DegreeTable] = {}
        self._lock = threading.Lock()

    def get(self, d: int, n: int, max_terms: int | None = None) -> DegreeTable:
        key = (d, n)
        with self._lock:
            table = self._tables.get(key)
            if table is None:
                table = solve_chow_degrees(d, n, max_terms=max_terms)
                self._tables[key] = table
        return table

    def put(self, table: DegreeTable) -> None:
        with self._lock:
            self._tables[(table.d, table.n)] = table

    def clear(self) -> None:
        with self._lock:
            self._tables.clear()


default_cache = TableCache()


def report_from_table(mu: Partition, table: DegreeTable) -> FactorReport:
    if mu.weight != table.d:
        raise DomainError(f"|mu| = {mu.weight} does not match table degree {table.d}")
    factors = []
    for row in table.rows:
        if row.chow_degree == 0 or not refines(row.lam, mu):
            continue
        factors.append(Factor(row.lam, row.chow_degree, refinement_count(row.lam, mu)))
    total = sum(f.degree * f.multiplicity for f in factors)
    expected = table.row(mu).disc_degree
    if total != expected:
        raise ConsistencyError(
            f"factor degrees of Sym(Delta_{{{mu},{table.n}}}) sum to {total}, expected {expected}"
        )
    return FactorReport(mu, table.n, tuple(factors), total)


def factor_report(
    mu: PartitionLike,
    n: int,
    *,
    table: DegreeTable | None = None,
    cache: TableCache | None = None,
    max_terms: int | None = None,
) -> FactorReport:
    """Chow-dual factors of ``Sym(Delta_{mu,n})`` with degrees and multiplicities."""
    mu = as_partition(mu)
    if mu.weight < 2 or n < 2:
        raise DomainError(f"need |mu| >= 2 and n >= 2, got mu={mu}, n={n}")
    if table is None:
        table = (cache or default_cache).get(mu.weight, n, max_terms)
    elif (table.d, table.n) != (mu.weight, n):
        raise DomainError(f"table is for d={table.d}, n={table.n}, not d={mu.weight}, n={n}")
    return report_from_table(mu, table)


def hyperdet_report(d: int, n: int, **kwargs) -> FactorReport:
    """Factorization of the symmetrized ``n^{x d}`` hyperdeterminant."""
    if d < 2:
        raise DomainError(f"d must be at least 2, got {d}")
    report = factor_report(Partition((1,) * d), n, **kwargs)
    for f in report.factors:
        if f.multiplicity != multinomial(d, f.lam):
            raise ConsistencyError(
                f"multiplicity of {f.lam} is {f.multiplicity}, expected multinomial {multinomial(d, f.lam)}"
            )
    return report
