"""Arithmetic in finite fields F_{p^n}.

Elements are coefficient vectors of length n over Z_p with respect to
the power basis of a monic irreducible modulus polynomial; a coefficient
vector (c0, ..., c_{n-1}) is ranked by the integer c0 + c1*p + ... and
that rank fixes the canonical element order used everywhere downstream.
Degree-1 fields reduce to plain Z_p arithmetic.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ._default_moduli import DEFAULT_FIELD_MODULI
from .errors import (
    DegreeOutOfRangeError,
    NotIrreducibleError,
    NotPrimeError,
    SpecMismatchError,
)

MAX_FIELD_SIZE = 2 ** 20
_TABLE_SIZE_CAP = 2 ** 12  # dense q x q index tables only below this


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def _poly_rem(num, den, p):
    """Remainder of num modulo den over Z_p (coefficient lists, ascending)."""
    num = list(num)
    dn = len(den) - 1
    inv_lead = pow(den[-1], -1, p)
    for k in range(len(num) - 1, dn - 1, -1):
        c = (num[k] * inv_lead) % p
        if c:
            for i in range(dn + 1):
                num[k - dn + i] = (num[k - dn + i] - c * den[i]) % p
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return num


def _monic_polys(p, deg):
    """Monic degree-deg polynomials over Z_p, in canonical rank order."""
    for rank in range(p ** deg):
        c = []
        r = rank
        for _ in range(deg):
            c.append(r % p)
            r //= p
        yield c + [1]


def is_irreducible(poly, p: int) -> bool:
    """Irreducibility over F_p by trial division (desk-scale degrees)."""
    poly = [int(c) % p for c in poly]
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    deg = len(poly) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    for dd in range(1, deg // 2 + 1):
        for cand in _monic_polys(p, dd):
            if _poly_rem(poly, cand, p) == [0]:
                return False
    return True


def least_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree n over Z_p."""
    if n == 1:
        return (0, 1)
    key = (p, n)
    if key in DEFAULT_FIELD_MODULI:
        return DEFAULT_FIELD_MODULI[key]
    for cand in _monic_polys(p, n):
        if is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FieldSpec:
    """A validated description of F_{p^n}: characteristic, degree, modulus."""

    __slots__ = (
        "p", "n", "q", "modulus", "_red_rows", "_elements", "_trace_powers",
        "_mul_table", "_add_table", "_trace_table",
    )

    def __init__(self, p: int, n: int, modulus) -> None:
        if not isinstance(p, int) or not is_prime(p):
            raise NotPrimeError(f"characteristic {p!r} is not prime")
        if not isinstance(n, int) or n < 1:
            raise DegreeOutOfRangeError(f"degree {n!r} must be a positive integer")
        q = p ** n
        if q > MAX_FIELD_SIZE:
            raise DegreeOutOfRangeError(f"field size {q} exceeds 2^20")
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != n + 1:
            raise ValueError(f"modulus must have length {n + 1}")
        if modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        if any(c < 0 or c >= p for c in modulus):
            raise ValueError("modulus coefficients must lie in [0, p)")
        if not is_irreducible(modulus, p):
            raise NotIrreducibleError(
                f"modulus {list(modulus)} is reducible over F_{p}"
            )
        self.p = p
        self.n = n
        self.q = q
        self.modulus = modulus
        # reduction rows: coefficients of x^(n+k) modulo the modulus
        rows = []
        if n > 1:
            prev = [(-c) % p for c in modulus[:n]]  # x^n
            rows.append(tuple(prev))
            for _ in range(n - 2):
                shifted = [0] + prev[:-1]
                carry = prev[-1]
                if carry:
                    for i in range(n):
                        shifted[i] = (shifted[i] + carry * rows[0][i]) % p
                prev = shifted
                rows.append(tuple(prev))
        self._red_rows = tuple(rows)
        self._elements = None
        self._trace_powers = None
        self._mul_table = None
        self._add_table = None
        self._trace_table = None

    @property
    def key(self):
        return (self.p, self.n, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"FieldSpec(p={self.p}, n={self.n}, modulus={list(self.modulus)})"

    # -- element construction -------------------------------------------

    def element(self, coeffs) -> FieldElement:
        coeffs = tuple(int(c) % self.p for c in coeffs)
        if len(coeffs) != self.n:
            raise ValueError(f"coefficient vector must have length {self.n}")
        return FieldElement(self, coeffs)

    def from_index(self, k: int) -> FieldElement:
        if k < 0 or k >= self.q:
            raise ValueError("element index out of range")
        c = []
        for _ in range(self.n):
            c.append(k % self.p)
            k //= self.p
        return FieldElement(self, tuple(c))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, (0,) * self.n)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, (1,) + (0,) * (self.n - 1))

    def elements(self) -> tuple:
        """All q elements in canonical order; [0] is zero, [1] is one."""
        if self._elements is None:
            self._elements = tuple(self.from_index(k) for k in range(self.q))
        return self._elements

    # -- internal arithmetic on coefficient tuples ----------------------

    def _mul_coeffs(self, a, b):
        p, n = self.p, self.n
        if n == 1:
            return ((a[0] * b[0]) % p,)
        prod = [0] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        out = [v % p for v in prod[:n]]
        for k, row in enumerate(self._red_rows):
            c = prod[n + k] % p
            if c:
                for i in range(n):
                    out[i] = (out[i] + c * row[i]) % p
        return tuple(out)

    # -- cached dense tables (constructions, oracles) -------------------

    def _require_tables(self):
        if self.q > _TABLE_SIZE_CAP:
            raise DegreeOutOfRangeError(
                f"dense index tables unsupported above q={_TABLE_SIZE_CAP}"
            )

    def mul_table(self) -> np.ndarray:
        """int32 (q, q) table: index of elements()[i] * elements()[j]."""
        if self._mul_table is None:
            self._require_tables()
            els = self.elements()
            powers = [self.p ** i for i in range(self.n)]
            tab = np.empty((self.q, self.q), dtype=np.int32)
            for i, a in enumerate(els):
                for j in range(i, self.q):
                    c = self._mul_coeffs(a.coeffs, els[j].coeffs)
                    idx = sum(ci * pw for ci, pw in zip(c, powers))
                    tab[i, j] = idx
                    tab[j, i] = idx
            tab.flags.writeable = False
            self._mul_table = tab
        return self._mul_table

    def add_table(self) -> np.ndarray:
        """int32 (q, q) table: index of elements()[i] + elements()[j]."""
        if self._add_table is None:
            self._require_tables()
            digits = np.empty((self.q, self.n), dtype=np.int64)
            k = np.arange(self.q)
            for i in range(self.n):
                digits[:, i] = k % self.p
                k = k // self.p
            s = (digits[:, None, :] + digits[None, :, :]) % self.p
            powers = np.array([self.p ** i for i in range(self.n)], dtype=np.int64)
            tab = (s * powers).sum(axis=2).astype(np.int32)
            tab.flags.writeable = False
            self._add_table = tab
        return self._add_table

    def trace_table(self) -> np.ndarray:
        """int64 (q,) table of absolute traces in canonical element order."""
        if self._trace_table is None:
            self._require_tables()
            tab = np.array([e.trace() for e in self.elements()], dtype=np.int64)
            tab.flags.writeable = False
            self._trace_table = tab
        return self._trace_table

    def _trace_powers_vec(self):
        # trace of the power-basis elements x^i, i < n
        if self._trace_powers is None:
            vals = []
            for i in range(self.n):
                c = [0] * self.n
                c[i] = 1
                vals.append(_trace_by_orbit(FieldElement(self, tuple(c))))
            self._trace_powers = tuple(vals)
        return self._trace_powers


def _trace_by_orbit(x: FieldElement) -> int:
    """Sum of the Frobenius orbit x + x^p + ... + x^(p^(n-1))."""
    spec = x.spec
    acc = x
    cur = x
    for _ in range(spec.n - 1):
        cur = cur ** spec.p
        acc = acc + cur
    if any(acc.coeffs[1:]):
        raise AssertionError("trace landed outside the prime field")
    return acc.coeffs[0]


class FieldElement:
    """An element of F_{p^n}, immutable, tied to its FieldSpec."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs: tuple) -> None:
        self.spec = spec
        self.coeffs = coeffs

    def _check(self, other) -> FieldElement:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.spec is not self.spec and other.spec.key != self.spec.key:
            raise SpecMismatchError("elements belong to different field specs")
        return other

    def __add__(self, other):
        other = self._check(other)
        p = self.spec.p
        return FieldElement(
            self.spec,
            tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __neg__(self):
        p = self.spec.p
        return FieldElement(self.spec, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        other = self._check(other)
        return FieldElement(self.spec, self.spec._mul_coeffs(self.coeffs, other.coeffs))

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.spec.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.spec.key == other.spec.key and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.spec.key, self.coeffs))

    def __repr__(self):
        return f"FieldElement({list(self.coeffs)} over GF({self.spec.p}^{self.spec.n}))"

    @property
    def index(self) -> int:
        """Canonical rank: coefficients read as a base-p integer."""
        r = 0
        for c in reversed(self.coeffs):
            r = r * self.spec.p + c
        return r

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def trace(self) -> int:
        """Absolute trace down to Z_p, reported as an int in [0, p)."""
        tp = self.spec._trace_powers_vec()
        return sum(c * t for c, t in zip(self.coeffs, tp)) % self.spec.p


@lru_cache(maxsize=None)
def _cached_field(p: int, n: int, modulus) -> FieldSpec:
    return FieldSpec(p, n, modulus)


def make_field(p: int, n: int, modulus=None) -> FieldSpec:
    """Validated FieldSpec for F_{p^n}; default modulus from the pinned table."""
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrimeError(f"characteristic {p!r} is not prime")
    if not isinstance(n, int) or n < 1:
        raise DegreeOutOfRangeError(f"degree {n!r} must be a positive integer")
    if p ** n > MAX_FIELD_SIZE:
        raise DegreeOutOfRangeError(f"field size {p ** n} exceeds 2^20")
    if modulus is None:
        modulus = least_irreducible(p, n)
    else:
        modulus = tuple(int(c) for c in modulus)
    return _cached_field(p, n, modulus)
