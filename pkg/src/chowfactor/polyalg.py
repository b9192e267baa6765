"""Sparse multivariate polynomials and truncated power series over the integers.

Coefficients are Python ints throughout. Exact rationals, where needed,
are :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DomainError

Rational = Fraction

Monomial = tuple[int, ...]


class SparsePoly:
    """Polynomial in ``varcount`` variables stored as ``{exponents: coefficient}``."""

    __slots__ = ("varcount", "terms")

    def __init__(self, varcount: int, terms: Mapping[Sequence[int], int] | None = None):
        if varcount < 0:
            raise DomainError("varcount must be non-negative")
        self.varcount = varcount
        self.terms: dict[Monomial, int] = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != varcount:
                raise DomainError(f"monomial {mono} does not have {varcount} exponents")
            if any(e < 0 for e in mono):
                raise DomainError(f"negative exponent in {mono}")
            if coeff:
                self.terms[mono] = self.terms.get(mono, 0) + coeff
                if not self.terms[mono]:
                    del self.terms[mono]

    @classmethod
    def constant(cls, varcount: int, value: int) -> "SparsePoly":
        return cls(varcount, {(0,) * varcount: value})

    @classmethod
    def variable(cls, varcount: int, index: int) -> "SparsePoly":
        mono = [0] * varcount
        mono[index] = 1
        return cls(varcount, {tuple(mono): 1})

    def _check(self, other: "SparsePoly") -> None:
        if not isinstance(other, SparsePoly):
            raise TypeError(f"expected SparsePoly, got {type(other).__name__}")
        if other.varcount != self.varcount:
            raise DomainError(f"varcount mismatch: {self.varcount} vs {other.varcount}")

    def _lift(self, other) -> "SparsePoly":
        if isinstance(other, int):
            return SparsePoly.constant(self.varcount, other)
        self._check(other)
        return other

    def __add__(self, other) -> "SparsePoly":
        other = self._lift(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            v = out.get(mono, 0) + c
            if v:
                out[mono] = v
            else:
                out.pop(mono, None)
        return SparsePoly._raw(self.varcount, out)

    __radd__ = __add__

    def __neg__(self) -> "SparsePoly":
        return SparsePoly._raw(self.varcount, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "SparsePoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "SparsePoly":
        return self._lift(other) - self

    def __mul__(self, other) -> "SparsePoly":
        if isinstance(other, int):
            if not other:
                return SparsePoly(self.varcount)
            return SparsePoly._raw(self.varcount, {m: c * other for m, c in self.terms.items()})
        self._check(other)
        return SparsePoly._raw(self.varcount, _multiply(self.terms, other.terms, None))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "SparsePoly":
        if k < 0:
            raise DomainError("negative powers are not polynomials")
        result = SparsePoly.constant(self.varcount, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = SparsePoly.constant(self.varcount, other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.varcount == other.varcount and self.terms == other.terms

    def __hash__(self):
        return hash((self.varcount, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for mono in sorted(self.terms, reverse=True):
            c = self.terms[mono]
            factors = [
                f"z{i + 1}" if e == 1 else f"z{i + 1}^{e}" for i, e in enumerate(mono) if e
            ]
            if not factors:
                pieces.append(str(c))
            elif c == 1:
                pieces.append("*".join(factors))
            elif c == -1:
                pieces.append("-" + "*".join(factors))
            else:
                pieces.append(f"{c}*" + "*".join(factors))
        return " + ".join(pieces).replace("+ -", "- ")

    def total_degrees(self) -> set[int]:
        return {sum(m) for m in self.terms}

    def truncate(self, caps: Sequence[int]) -> "SparsePoly":
        caps = tuple(caps)
        return SparsePoly._raw(
            self.varcount, {m: c for m, c in self.terms.items() if _fits(m, caps)}
        )

    @classmethod
    def _raw(cls, varcount: int, terms: dict[Monomial, int]) -> "SparsePoly":
        # terms already validated and zero-free
        obj = cls.__new__(cls)
        obj.varcount = varcount
        obj.terms = terms
        return obj


def _fits(mono: Monomial, caps: Monomial) -> bool:
    return all(e <= c for e, c in zip(mono, caps))


def _multiply(a: dict, b: dict, caps: Monomial | None) -> dict:
    if len(a) < len(b):
        a, b = b, a
    out: dict[Monomial, int] = {}
    get = out.get
    for mb, cb in b.items():
        for ma, ca in a.items():
            mono = tuple(x + y for x, y in zip(ma, mb))
            if caps is not None and not _fits(mono, caps):
                continue
            out[mono] = get(mono, 0) + ca * cb
    return {m: c for m, c in out.items() if c}


def coefficient(p: SparsePoly, m: Sequence[int]) -> int:
    m = tuple(m)
    if len(m) != p.varcount:
        raise DomainError(f"monomial {m} does not have {p.varcount} exponents")
    return p.terms.get(m, 0)


class TruncatedSeries:
    """A :class:`SparsePoly` with every exponent bounded by a per-variable cap."""

    __slots__ = ("poly", "caps")

    def __init__(self, poly: SparsePoly, caps: Sequence[int]):
        caps = tuple(caps)
        if len(caps) != poly.varcount:
            raise DomainError(f"{len(caps)} caps given for {poly.varcount} variables")
        if any(c < 0 for c in caps):
            raise DomainError("caps must be non-negative")
        self.poly = poly.truncate(caps)
        self.caps = caps

    @property
    def varcount(self) -> int:
        return self.poly.varcount

    def coefficient(self, m: Sequence[int]) -> int:
        return coefficient(self.poly, m)

    def constant_term(self) -> int:
        return self.poly.terms.get((0,) * self.varcount, 0)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return mul_truncated(self, other)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        _check_compatible(self, other)
        return TruncatedSeries._raw(self.poly + other.poly, self.caps)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        _check_compatible(self, other)
        return TruncatedSeries._raw(self.poly - other.poly, self.caps)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.caps == other.caps and self.poly == other.poly

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.poly!r}, caps={self.caps})"

    @classmethod
    def one(cls, caps: Sequence[int]) -> "TruncatedSeries":
        caps = tuple(caps)
        return cls(SparsePoly.constant(len(caps), 1), caps)

    @classmethod
    def _raw(cls, poly: SparsePoly, caps: Monomial) -> "TruncatedSeries":
        obj = cls.__new__(cls)
        obj.poly = poly
        obj.caps = caps
        return obj


def _check_compatible(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.varcount != b.varcount:
        raise DomainError(f"varcount mismatch: {a.varcount} vs {b.varcount}")
    if a.caps != b.caps:
        raise DomainError(f"cap mismatch: {a.caps} vs {b.caps}")


def mul_truncated(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_compatible(a, b)
    terms = _multiply(a.poly.terms, b.poly.terms, a.caps)
    return TruncatedSeries._raw(SparsePoly._raw(a.varcount, terms), a.caps)


def inverse_square(B: TruncatedSeries) -> TruncatedSeries:
    """Truncation of ``1 / B**2`` for a series with constant term 1.

    With ``U = 1 - B`` the result is ``sum_{k=0}^{K} (k + 1) U**k`` where
    ``K = sum(caps)``; ``U**k`` vanishes under truncation for ``k > K``.
    """
    if B.constant_term() != 1:
        raise DomainError(f"constant term must be 1, got {B.constant_term()}")
    caps = B.caps
    U = TruncatedSeries.one(caps) - B
    K = sum(caps)
    # Horner: (K+1) U^K + ... + 2U + 1
    result = TruncatedSeries._raw(SparsePoly.constant(B.varcount, K + 1), caps)
    for k in range(K, 0, -1):
        result = mul_truncated(result, U) + TruncatedSeries._raw(
            SparsePoly.constant(B.varcount, k), caps
        )
    return result


def product(polys: Iterable[SparsePoly], varcount: int) -> SparsePoly:
    result = SparsePoly.constant(varcount, 1)
    for p in polys:
        result = result * p
    return result
