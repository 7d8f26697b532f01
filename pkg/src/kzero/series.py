"""Laurent polynomials and truncated power series over the numerical base ring.

The graded Grothendieck group of the base is the ring of Laurent
polynomials in one variable ``T`` with :class:`~kzero.base.K0Class`
coefficients; Hilbert series of graded algebras live in the matching
power-series ring.  This module provides both, plus truncated series
inversion and the three-term Hilbert recursion of a ruled quotient
algebra.
"""

from __future__ import annotations

from .base import BaseSpace, K0Class
from .errors import (
    BaseMismatch,
    NegativeExponent,
    NonUnitConstantTerm,
    RankConstraintViolation,
    ValidationError,
)


class LaurentPoly:
    """Finitely supported polynomial in T and T^-1 with K0Class coefficients.

    Zero coefficients are never stored, so ``==`` is structural equality.
    Instances are immutable; every operation returns a fresh polynomial.
    """

    __slots__ = ("base", "_terms")

    def __init__(self, base: BaseSpace, terms=()):
        data: dict[int, K0Class] = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for exp, coeff in items:
            if not isinstance(exp, int):
                raise ValidationError(f"exponent {exp!r} is not an integer")
            if coeff.base != base:
                raise BaseMismatch(f"coefficient base {coeff.base!r} != {base!r}")
            data[exp] = data[exp] + coeff if exp in data else coeff
        self.base = base
        self._terms = {e: c for e, c in data.items() if not c.is_zero()}

    @classmethod
    def zero(cls, base: BaseSpace) -> LaurentPoly:
        return cls(base)

    @classmethod
    def one(cls, base: BaseSpace) -> LaurentPoly:
        return cls(base, {0: base.one})

    @classmethod
    def monomial(cls, coeff: K0Class, exp: int = 0) -> LaurentPoly:
        return cls(coeff.base, {exp: coeff})

    @classmethod
    def from_coeffs(cls, base: BaseSpace, coeffs, start: int = 0) -> LaurentPoly:
        return cls(base, {start + i: c for i, c in enumerate(coeffs)})

    @classmethod
    def from_int_coeffs(cls, base: BaseSpace, ints, start: int = 0) -> LaurentPoly:
        """Polynomial with pure rank coefficients (c, 0)."""
        return cls(base, {start + i: base.k0(int(c)) for i, c in enumerate(ints)})

    def terms(self):
        """Pairs (exponent, coefficient) in increasing exponent order."""
        return tuple(sorted(self._terms.items()))

    def coeff(self, exp: int) -> K0Class:
        return self._terms.get(exp, self.base.zero)

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._terms))

    def is_zero(self) -> bool:
        return not self._terms

    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no support")
        return min(self._terms)

    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no support")
        return max(self._terms)

    def _require_same_base(self, other: LaurentPoly) -> None:
        if self.base != other.base:
            raise BaseMismatch(f"mixed bases {self.base!r} and {other.base!r}")

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._require_same_base(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out[e] + c if e in out else c
        return LaurentPoly(self.base, out)

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.base, {e: -c for e, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            self._require_same_base(other)
            out: dict[int, K0Class] = {}
            for e1, c1 in self._terms.items():
                for e2, c2 in other._terms.items():
                    e = e1 + e2
                    p = c1 * c2
                    out[e] = out[e] + p if e in out else p
            return LaurentPoly(self.base, out)
        if isinstance(other, K0Class):
            return LaurentPoly(self.base, {e: c * other for e, c in self._terms.items()})
        if isinstance(other, int):
            return LaurentPoly(self.base, {e: c * other for e, c in self._terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (K0Class, int)):
            return self.__mul__(other)
        return NotImplemented

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by T^k."""
        return LaurentPoly(self.base, {e + k: c for e, c in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.base == other.base and self._terms == other._terms

    def __hash__(self):
        return hash((self.base, frozenset(self._terms.items())))

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items()):
            if e == 0:
                mono = f"{c!r}"
            elif e == 1:
                mono = f"{c!r}*T"
            else:
                mono = f"{c!r}*T^{e}"
            parts.append(mono)
        return " + ".join(parts)


class TruncatedSeries:
    """Coefficients c_0 .. c_N of a power series, modulo T^(N+1)."""

    __slots__ = ("base", "coeffs")

    def __init__(self, base: BaseSpace, coeffs):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValidationError("a truncated series needs at least order 0")
        for c in coeffs:
            if c.base != base:
                raise BaseMismatch(f"coefficient base {c.base!r} != {base!r}")
        self.base = base
        self.coeffs = coeffs

    @classmethod
    def one(cls, base: BaseSpace, order: int) -> TruncatedSeries:
        return cls(base, [base.one] + [base.zero] * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> K0Class:
        if not 0 <= i <= self.order:
            raise IndexError(f"coefficient {i} outside truncation order {self.order}")
        return self.coeffs[i]

    def ranks(self) -> tuple[int, ...]:
        return tuple(c.rank for c in self.coeffs)

    def degrees(self) -> tuple[int, ...]:
        return tuple(c.degree for c in self.coeffs)

    def mul_poly(self, p: LaurentPoly) -> TruncatedSeries:
        """Product with a polynomial, truncated to the same order.

        The polynomial must have no negative exponents, otherwise the top
        coefficients of the product would depend on coefficients beyond
        the truncation.
        """
        if p.base != self.base:
            raise BaseMismatch(f"mixed bases {p.base!r} and {self.base!r}")
        if not p.is_zero() and p.min_exp() < 0:
            raise NegativeExponent("cannot multiply a truncated series by T^-k terms")
        out = []
        for n in range(self.order + 1):
            acc = self.base.zero
            for e, c in p.terms():
                if 0 <= n - e <= self.order:
                    acc = acc + c * self.coeffs[n - e]
            out.append(acc)
        return TruncatedSeries(self.base, out)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.base == other.base and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.base, self.coeffs))

    def __repr__(self):
        return "[" + ", ".join(repr(c) for c in self.coeffs) + f"] + O(T^{self.order + 1})"


def series_invert(p: LaurentPoly, order: int) -> TruncatedSeries:
    """Invert a polynomial with unit constant term in the power-series ring.

    Returns b with b_0 = p_0^-1 and

        b_n = -p_0^-1 * sum_{k=1}^{min(n, deg p)} p_k * b_{n-k},

    so that p * b = 1 modulo T^(order+1).
    """
    if order < 0:
        raise ValidationError("truncation order must be >= 0")
    if not p.is_zero() and p.min_exp() < 0:
        raise NegativeExponent("only power series (no T^-k terms) can be inverted")
    p0 = p.coeff(0)
    if not p0.is_unit():
        raise NonUnitConstantTerm(f"constant term {p0!r} is not a unit")
    inv0 = p0.inverse()
    deg = p.max_exp()
    coeffs = [inv0]
    for n in range(1, order + 1):
        acc = p.base.zero
        for k in range(1, min(n, deg) + 1):
            acc = acc + p.coeff(k) * coeffs[n - k]
        coeffs.append(-(inv0 * acc))
    return TruncatedSeries(p.base, coeffs)


def _check_ruled_pair(E: K0Class, Q: K0Class) -> None:
    if E.base != Q.base:
        raise BaseMismatch(f"mixed bases {E.base!r} and {Q.base!r}")
    if E.rank != 2:
        raise RankConstraintViolation(f"rank(E) must be 2, got {E.rank}")
    if Q.rank != 1:
        raise RankConstraintViolation(f"rank(Q) must be 1, got {Q.rank}")


def hilbert_coeff_ruled(E: K0Class, Q: K0Class, n: int) -> K0Class:
    """Class of the degree-n piece of the ruled coordinate ring.

    B_n = 0 for n < 0, B_0 = 1, and B_n = E*B_{n-1} - Q*B_{n-2};
    equivalently the T^n coefficient of 1/(1 - E T + Q T^2).  The rank of
    B_n is n+1 for every n >= 0.
    """
    _check_ruled_pair(E, Q)
    if n < 0:
        return E.base.zero
    prev, cur = E.base.zero, E.base.one
    for _ in range(n):
        prev, cur = cur, E * cur - Q * prev
    return cur


def hilbert_series_pn(spec, order: int) -> TruncatedSeries:
    """Hilbert series of a projective-space bundle, to the given order.

    This is the inverse of the bundle's alternating relation polynomial;
    ``spec`` is any object with a ``relation_poly()`` method, e.g. a
    :class:`~kzero.bundle.PnBundleSpec`.
    """
    return series_invert(spec.relation_poly(), order)
