"""Catalecticant (Hankel) matrices of binary forms.

A binary form of degree ``d`` is stored by its binomial-normalized
coefficients ``c_0..c_d``, meaning ``f = sum_i C(d, i) c_i x^(d-i) y^i``.
In this basis ``l^d`` with ``l = a x + b y`` has ``c_i = a^(d-i) b^i``, so
a sum of ``r`` powers gives a catalecticant of rank at most ``r``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm
from typing import Sequence

from .errors import DomainError


@dataclass(frozen=True)
class BinaryForm:
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise DomainError("a binary form needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def scaled(self, t) -> "BinaryForm":
        t = Fraction(t)
        return BinaryForm(tuple(t * c for c in self.coeffs))

    def monomial_coeffs(self) -> tuple[Fraction, ...]:
        """Raw coefficients of ``x^(d-i) y^i``."""
        d = self.degree
        return tuple(comb(d, i) * c for i, c in enumerate(self.coeffs))


def power_sum_form(d: int, forms: Sequence[tuple[int, int]]) -> BinaryForm:
    """``sum_j (a_j x + b_j y)^d`` in the normalized basis."""
    if d < 1:
        raise DomainError(f"degree must be positive, got {d}")
    coeffs = [Fraction(0)] * (d + 1)
    for a, b in forms:
        for i in range(d + 1):
            coeffs[i] += Fraction(a) ** (d - i) * Fraction(b) ** i
    return BinaryForm(tuple(coeffs))


def catalecticant_matrix(f: BinaryForm, k: int) -> list[list[Fraction]]:
    """``(k+1) x (k+1)`` Hankel matrix with entry ``(r, s) = c_{r+s}``."""
    if k < 1 or 2 * k > f.degree:
        raise DomainError(f"need 1 <= k and 2k <= {f.degree}, got k={k}")
    return [[f.coeffs[r + s] for s in range(k + 1)] for r in range(k + 1)]


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Fraction-free determinant of an integer matrix."""
    a = [list(row) for row in matrix]
    size = len(a)
    if any(len(row) != size for row in a):
        raise DomainError("matrix must be square")
    sign, prev = 1, 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1] if size else 1


def rational_det(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    """Clear denominators row by row, then apply :func:`bareiss_det`."""
    scale = Fraction(1)
    rows = []
    for row in matrix:
        row = [Fraction(x) for x in row]
        den = lcm(*(x.denominator for x in row)) if row else 1
        rows.append([int(x * den) for x in row])
        scale *= den
    return Fraction(bareiss_det(rows)) / scale


def rank(matrix: Sequence[Sequence[Fraction]]) -> int:
    """Exact rank by Gaussian elimination over the rationals."""
    a = [[Fraction(x) for x in row] for row in matrix]
    if not a:
        return 0
    rows, cols, r = len(a), len(a[0]), 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        for i in range(r + 1, rows):
            if a[i][c]:
                factor = a[i][c] / a[r][c]
                a[i] = [x - factor * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == rows:
            break
    return r


def catalecticant_det(f: BinaryForm) -> Fraction:
    if f.degree % 2:
        raise DomainError(f"square catalecticant needs even degree, got {f.degree}")
    return rational_det(catalecticant_matrix(f, f.degree // 2))
