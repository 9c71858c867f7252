"""Exact arithmetic in rings of cyclotomic integers Z[omega_m].

A value is stored as an integer coefficient vector of length m, entry k
holding the coefficient of omega_m^k, kept in canonical form: reduced
modulo the m-th cyclotomic polynomial so that equal values have equal
representations.  Coefficients are Python ints, so arithmetic never
overflows.  Operands of different orders are coerced into the lcm order
by exponent scaling before combining.
"""

from __future__ import annotations

import cmath
from functools import lru_cache
from math import gcd

import numpy as np


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the m-th cyclotomic polynomial.

    Computed by exact division of x^m - 1 by the cyclotomic polynomials
    of the proper divisors of m.
    """
    if m < 1:
        raise ValueError("order must be positive")
    if m > 2 ** 16:
        raise ValueError("order above 2^16 not supported")
    if m == 1:
        return (-1, 1)
    poly = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _poly_divexact(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Exact quotient of integer polynomials (den monic, remainder zero)."""
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        if c:
            out[k - dn] = c
            for i in range(dn + 1):
                num[k - dn + i] -= c * den[i]
    assert all(v == 0 for v in num), "non-exact cyclotomic division"
    return out


def _canonical(m: int, raw: list[int]) -> tuple[int, ...]:
    """Reduce a length-m coefficient vector modulo Phi_m, keep length m."""
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    coeffs = list(raw)
    for k in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[k]
        if c:
            coeffs[k] = 0
            for i in range(deg):
                coeffs[k - deg + i] -= c * phi[i]
    return tuple(coeffs[:m] + [0] * (m - len(coeffs)))


class CyclotomicInt:
    """An element of Z[omega_m] in canonical reduced form."""

    __slots__ = ("_order", "_coeffs")

    def __init__(self, order: int, coeffs) -> None:
        if order < 1:
            raise ValueError("order must be positive")
        raw = [int(c) for c in coeffs]
        if len(raw) > order:
            folded = [0] * order
            for k, c in enumerate(raw):
                folded[k % order] += c
            raw = folded
        else:
            raw += [0] * (order - len(raw))
        self._order = order
        self._coeffs = _canonical(order, raw)

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @classmethod
    def zero(cls, order: int = 1) -> CyclotomicInt:
        return cls(order, [0])

    @classmethod
    def from_int(cls, value: int, order: int = 1) -> CyclotomicInt:
        return cls(order, [value])

    def in_order(self, order: int) -> CyclotomicInt:
        """Embed into Z[omega_order]; order must be a multiple of self.order."""
        if order == self._order:
            return self
        if order % self._order:
            raise ValueError("target order must be a multiple of current order")
        scale = order // self._order
        raw = [0] * order
        for k, c in enumerate(self._coeffs):
            if c:
                raw[k * scale] = c
        return CyclotomicInt(order, raw)

    def _coerced(self, other):
        if isinstance(other, int):
            other = CyclotomicInt.from_int(other)
        if not isinstance(other, CyclotomicInt):
            return None, None
        if self._order == other._order:
            return self, other
        m = self._order * other._order // gcd(self._order, other._order)
        return self.in_order(m), other.in_order(m)

    def __add__(self, other):
        a, b = self._coerced(other)
        if a is None:
            return NotImplemented
        return CyclotomicInt(a._order, [x + y for x, y in zip(a._coeffs, b._coeffs)])

    __radd__ = __add__

    def __neg__(self) -> CyclotomicInt:
        return CyclotomicInt(self._order, [-c for c in self._coeffs])

    def __sub__(self, other):
        a, b = self._coerced(other)
        if a is None:
            return NotImplemented
        return CyclotomicInt(a._order, [x - y for x, y in zip(a._coeffs, b._coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._coerced(other)
        if a is None:
            return NotImplemented
        m = a._order
        raw = [0] * m
        for i, ci in enumerate(a._coeffs):
            if ci:
                for j, cj in enumerate(b._coeffs):
                    if cj:
                        raw[(i + j) % m] += ci * cj
        return CyclotomicInt(m, raw)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._coeffs[0] == other and not any(self._coeffs[1:])
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        a, b = self._coerced(other)
        return a._coeffs == b._coeffs

    def __hash__(self) -> int:
        if not any(self._coeffs[1:]):
            return hash(self._coeffs[0])
        return hash((self._order, self._coeffs))

    def __bool__(self) -> bool:
        return any(self._coeffs)

    def __repr__(self) -> str:
        return f"CyclotomicInt({self._order}, {list(self._coeffs)})"

    def conj(self) -> CyclotomicInt:
        """Complex conjugate: omega^k -> omega^(-k)."""
        m = self._order
        raw = [0] * m
        for k, c in enumerate(self._coeffs):
            if c:
                raw[(m - k) % m] += c
        return CyclotomicInt(m, raw)

    def norm_squared(self) -> CyclotomicInt:
        """z * conj(z), exactly."""
        return self * self.conj()

    def as_rational_integer(self):
        """The value as a plain int if it lies in Z, else None."""
        if any(self._coeffs[1:]):
            return None
        return self._coeffs[0]

    def approximate(self) -> complex:
        """Double-precision complex value."""
        m = self._order
        return sum(
            c * cmath.exp(2j * cmath.pi * k / m)
            for k, c in enumerate(self._coeffs)
            if c
        )


def root_of_unity(m: int, k: int) -> CyclotomicInt:
    """omega_m^k as a canonical cyclotomic integer."""
    raw = [0] * m
    raw[k % m] = 1
    return CyclotomicInt(m, raw)


@lru_cache(maxsize=None)
def reduction_matrix(m: int) -> np.ndarray:
    """int64 matrix R with row k = canonical form of omega_m^k.

    For a count vector c (how many times each power occurs in a sum),
    c @ R is the canonical coefficient vector of the sum.  Shared with
    the exact verifier so both routes reduce through the same tables.
    """
    rows = [root_of_unity(m, k).coeffs for k in range(m)]
    out = np.array(rows, dtype=np.int64)
    out.flags.writeable = False
    return out
