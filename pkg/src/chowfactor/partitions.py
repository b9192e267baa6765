"""Integer partitions, the refinement order and refinement counts."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator, Sequence, Union

from .errors import DomainError


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers.

    Equality and hashing are structural. The multiplicity profile is
    derived from ``parts`` on demand.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts:
            raise DomainError("a partition needs at least one part")
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p <= 0:
                raise DomainError(f"parts must be positive integers, got {parts!r}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise DomainError(f"parts must be weakly decreasing, got {parts!r}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Build a partition from parts given in any order."""
        return cls(tuple(sorted(parts, reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"4,2,2"``; the parts may be listed in any order."""
        try:
            parts = [int(tok) for tok in text.replace(" ", "").split(",") if tok]
        except ValueError:
            raise DomainError(f"cannot parse partition {text!r}") from None
        return cls.from_parts(parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def parts_count(self) -> int:
        return len(self.parts)

    @property
    def profile(self) -> dict[int, int]:
        """Map part value ``i`` to its multiplicity ``m_i`` (only nonzero ones)."""
        return dict(sorted(Counter(self.parts).items()))

    def multiplicity(self, value: int) -> int:
        return self.parts.count(value)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def __repr__(self) -> str:
        return f"Partition({self.parts!r})"


PartitionLike = Union[Partition, Sequence[int]]


def as_partition(value: PartitionLike) -> Partition:
    if isinstance(value, Partition):
        return value
    if isinstance(value, str):
        return Partition.parse(value)
    return Partition.from_parts(value)


def canonical_key(lam: Partition) -> tuple:
    """Sort key: fewer parts first, then reverse-lexicographic on the parts."""
    return (lam.parts_count, tuple(-p for p in lam.parts))


def _generate(d: int, largest: int) -> Iterator[tuple[int, ...]]:
    if d == 0:
        yield ()
        return
    for first in range(min(d, largest), 0, -1):
        for rest in _generate(d - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _enumerate(d: int) -> tuple[Partition, ...]:
    parts = [Partition(p) for p in _generate(d, d)]
    return tuple(sorted(parts, key=canonical_key))


def enumerate_partitions(d: int) -> list[Partition]:
    """All partitions of ``d`` in canonical order."""
    if not isinstance(d, int) or d <= 0:
        raise DomainError(f"d must be a positive integer, got {d!r}")
    return list(_enumerate(d))


def _check_same_weight(lam: Partition, mu: Partition) -> None:
    if lam.weight != mu.weight:
        raise DomainError(f"weight mismatch: |{lam}| = {lam.weight}, |{mu}| = {mu.weight}")


def refines(lam: PartitionLike, mu: PartitionLike) -> bool:
    """True when the parts of ``mu`` can be grouped into blocks summing to the parts of ``lam``."""
    lam, mu = as_partition(lam), as_partition(mu)
    _check_same_weight(lam, mu)
    if mu.parts_count < lam.parts_count:
        return False

    # place large parts first; equal remaining capacities are interchangeable
    seen: set = set()

    def place(j: int, remaining: tuple[int, ...]) -> bool:
        if j == len(mu.parts):
            return True
        state = (j, remaining)
        if state in seen:
            return False
        part = mu.parts[j]
        tried = set()
        for i, cap in enumerate(remaining):
            if cap >= part and cap not in tried:
                tried.add(cap)
                nxt = tuple(sorted(remaining[:i] + (cap - part,) + remaining[i + 1:]))
                if place(j + 1, nxt):
                    return True
        seen.add(state)
        return False

    return place(0, tuple(sorted(lam.parts)))


def refinement_count(lam: PartitionLike, mu: PartitionLike) -> int:
    """Number of maps from the indexed parts of ``mu`` to the parts of ``lam`` with matching block sums.

    Parts of ``mu`` are distinguished by index, blocks by their position in
    ``lam``. This is ``M[lam, mu]`` in the refinement matrix.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    _check_same_weight(lam, mu)
    return _refinement_count(lam.parts, mu.parts)


@lru_cache(maxsize=None)
def _refinement_count(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if len(mu) < len(lam):
        return 0

    @lru_cache(maxsize=None)
    def count(j: int, remaining: tuple[int, ...]) -> int:
        if j == len(mu):
            return 1 if not any(remaining) else 0
        part = mu[j]
        total = 0
        for i, cap in enumerate(remaining):
            if cap >= part:
                total += count(j + 1, remaining[:i] + (cap - part,) + remaining[i + 1:])
        return total

    return count(0, lam)


def multinomial(d: int, lam: PartitionLike) -> int:
    """``d! / prod(lam_i!)``."""
    lam = as_partition(lam)
    if lam.weight != d:
        raise DomainError(f"multinomial({d}; {lam}) needs |lam| = d")
    return factorial(d) // prod(factorial(p) for p in lam.parts)


def chow_dimension(lam: PartitionLike, n: int) -> int:
    """Dimension of the Chow variety of forms ``l_1^lam_1 ... l_s^lam_s`` in ``n`` variables."""
    lam = as_partition(lam)
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    return lam.parts_count * (n - 1)


@dataclass(frozen=True)
class RefinementMatrix:
    """Square table ``entries[i][j] = M[order[i], order[j]]``."""

    order: tuple[Partition, ...]
    entries: tuple[tuple[int, ...], ...]

    @property
    def d(self) -> int:
        return self.order[0].weight

    def index(self, lam: PartitionLike) -> int:
        return self.order.index(as_partition(lam))

    def __getitem__(self, key: tuple[PartitionLike, PartitionLike]) -> int:
        lam, mu = key
        return self.entries[self.index(lam)][self.index(mu)]

    def property_violations(self) -> list[str]:
        """Entrywise check of the triangularity, diagonal and boundary properties."""
        problems = []
        d = self.d
        top = Partition((d,))
        finest = Partition((1,) * d)
        for i, lam in enumerate(self.order):
            for j, mu in enumerate(self.order):
                m = self.entries[i][j]
                if m < 0:
                    problems.append(f"negative entry at ({lam}, {mu})")
                if lam.parts_count > mu.parts_count and m != 0:
                    problems.append(f"#lam > #mu but M[{lam}, {mu}] = {m}")
                if lam.parts_count == mu.parts_count and lam != mu and m != 0:
                    problems.append(f"equal part counts but M[{lam}, {mu}] = {m}")
                if lam == top and m != 1:
                    problems.append(f"M[({d}), {mu}] = {m}, expected 1")
                if mu == finest and m != multinomial(d, lam):
                    problems.append(f"M[{lam}, 1^{d}] = {m}, expected {multinomial(d, lam)}")
            diag = prod(factorial(k) for k in lam.profile.values())
            if self.entries[i][i] != diag:
                problems.append(f"M[{lam}, {lam}] = {self.entries[i][i]}, expected {diag}")
        return problems


def refinement_matrix_bruteforce(d: int) -> RefinementMatrix:
    order = tuple(enumerate_partitions(d))
    entries = tuple(
        tuple(_refinement_count(lam.parts, mu.parts) for mu in order) for lam in order
    )
    return RefinementMatrix(order, entries)
