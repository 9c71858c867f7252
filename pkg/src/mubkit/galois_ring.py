"""Arithmetic in the Galois rings GR(4, n) = Z_4[x]/<h(x)>.

The modulus h must be monic with primitive mod-2 reduction; the shipped
defaults additionally guarantee that the class of x has multiplicative
order exactly 2^n - 1, so its powers (with 0 and 1) enumerate the
Teichmueller representatives and every ring element splits uniquely as
a + 2b over that set.
"""

from __future__ import annotations

from .cyclotomic import CyclotomicInt
from ._default_moduli import DEFAULT_RING_MODULI
from .errors import (
    DegreeOutOfRangeError,
    NotBasicPrimitiveError,
    SpecMismatchError,
)

MAX_RING_DEGREE = 12


def _f2_poly_rem(num, den):
    num = list(num)
    dn = len(den) - 1
    for k in range(len(num) - 1, dn - 1, -1):
        if num[k]:
            for i in range(dn + 1):
                num[k - dn + i] = (num[k - dn + i] - den[i]) % 2
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return num


def _f2_irreducible(poly):
    deg = len(poly) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    for dd in range(1, deg // 2 + 1):
        for rank in range(2 ** dd):
            cand = [(rank >> i) & 1 for i in range(dd)] + [1]
            if _f2_poly_rem(poly, cand) == [0]:
                return False
    return True


def _f2_mulmod(a, b, modulus):
    n = len(modulus) - 1
    prod = [0] * (2 * n - 1 if n > 1 else 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] ^= ai & bj
    for k in range(len(prod) - 1, n - 1, -1):
        if prod[k]:
            prod[k] = 0
            for i in range(n):
                prod[k - n + i] ^= modulus[i]
    return prod[:n]


def _f2_powmod(base, e, modulus):
    n = len(modulus) - 1
    result = [1] + [0] * (n - 1)
    b = list(base)
    while e:
        if e & 1:
            result = _f2_mulmod(result, b, modulus)
        b = _f2_mulmod(b, b, modulus)
        e >>= 1
    return result


def _prime_factors(v):
    fs = set()
    f = 2
    while f * f <= v:
        while v % f == 0:
            fs.add(f)
            v //= f
        f += 1
    if v > 1:
        fs.add(v)
    return sorted(fs)


def is_basic_primitive(modulus) -> bool:
    """True iff the mod-2 reduction of the monic modulus is primitive over F_2.

    Primitivity is decided by the multiplicative order of the residue
    class of x: it must equal 2^n - 1 exactly.
    """
    modulus = [int(c) % 4 for c in modulus]
    n = len(modulus) - 1
    if n < 1 or modulus[-1] % 2 != 1:
        return False
    poly2 = [c % 2 for c in modulus]
    if poly2[0] == 0 or not _f2_irreducible(poly2):
        return False
    one = [1] + [0] * (n - 1)
    if n == 1:
        x = [poly2[0]]  # x = -c0 = c0 over F_2
    else:
        x = [0, 1] + [0] * (n - 2)
    t = 2 ** n - 1
    if _f2_powmod(x, t, poly2) != one:
        return False
    for r in _prime_factors(t):
        if t // r >= 1 and _f2_powmod(x, t // r, poly2) == one:
            return False
    return True


class RingSpec:
    """A validated description of GR(4, n)."""

    __slots__ = ("n", "modulus", "_red_rows", "_teich", "_trace_powers")

    def __init__(self, n: int, modulus) -> None:
        if not isinstance(n, int) or n < 1:
            raise DegreeOutOfRangeError(f"degree {n!r} must be a positive integer")
        if n > MAX_RING_DEGREE:
            raise DegreeOutOfRangeError(f"ring degree {n} exceeds {MAX_RING_DEGREE}")
        modulus = tuple(int(c) % 4 for c in modulus)
        if len(modulus) != n + 1:
            raise ValueError(f"modulus must have length {n + 1}")
        if modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        if not is_basic_primitive(modulus):
            raise NotBasicPrimitiveError(
                f"modulus {list(modulus)} does not reduce to a primitive "
                f"polynomial over F_2"
            )
        self.n = n
        self.modulus = modulus
        rows = []
        if n > 1:
            prev = [(-c) % 4 for c in modulus[:n]]
            rows.append(tuple(prev))
            for _ in range(n - 2):
                shifted = [0] + prev[:-1]
                carry = prev[-1]
                if carry:
                    for i in range(n):
                        shifted[i] = (shifted[i] + carry * rows[0][i]) % 4
                prev = shifted
                rows.append(tuple(prev))
        self._red_rows = tuple(rows)
        self._teich = None
        self._trace_powers = None

    @property
    def size(self) -> int:
        return 4 ** self.n

    @property
    def key(self):
        return (self.n, self.modulus)

    def __eq__(self, other):
        return isinstance(other, RingSpec) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"RingSpec(n={self.n}, modulus={list(self.modulus)})"

    def element(self, coeffs) -> RingElement:
        coeffs = tuple(int(c) % 4 for c in coeffs)
        if len(coeffs) != self.n:
            raise ValueError(f"coefficient vector must have length {self.n}")
        return RingElement(self, coeffs)

    def from_int(self, v: int) -> RingElement:
        """Constant v viewed inside the ring."""
        return RingElement(self, (v % 4,) + (0,) * (self.n - 1))

    @property
    def zero(self) -> RingElement:
        return self.from_int(0)

    @property
    def one(self) -> RingElement:
        return self.from_int(1)

    @property
    def xi(self) -> RingElement:
        """The residue class of x."""
        if self.n == 1:
            return self.from_int(-self.modulus[0])
        return RingElement(self, (0, 1) + (0,) * (self.n - 2))

    def elements(self):
        """All 4^n ring elements, ranked base-4 by coefficients."""
        out = []
        for k in range(self.size):
            c = []
            r = k
            for _ in range(self.n):
                c.append(r % 4)
                r //= 4
            out.append(RingElement(self, tuple(c)))
        return tuple(out)

    def _mul_coeffs(self, a, b):
        n = self.n
        if n == 1:
            return ((a[0] * b[0]) % 4,)
        prod = [0] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        out = [v % 4 for v in prod[:n]]
        for k, row in enumerate(self._red_rows):
            c = prod[n + k] % 4
            if c:
                for i in range(n):
                    out[i] = (out[i] + c * row[i]) % 4
        return tuple(out)

    def _trace_powers_vec(self):
        if self._trace_powers is None:
            vals = []
            for i in range(self.n):
                c = [0] * self.n
                c[i] = 1
                e = RingElement(self, tuple(c))
                acc = e
                cur = e
                for _ in range(self.n - 1):
                    cur = frobenius(cur)
                    acc = acc + cur
                if any(acc.coeffs[1:]):
                    raise AssertionError("ring trace landed outside Z_4")
                vals.append(acc.coeffs[0])
            self._trace_powers = tuple(vals)
        return self._trace_powers


class RingElement:
    """An element of GR(4, n), immutable, tied to its RingSpec."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: RingSpec, coeffs: tuple) -> None:
        self.spec = spec
        self.coeffs = coeffs

    def _check(self, other) -> RingElement:
        if not isinstance(other, RingElement):
            raise TypeError(f"expected RingElement, got {type(other).__name__}")
        if other.spec is not self.spec and other.spec.key != self.spec.key:
            raise SpecMismatchError("elements belong to different ring specs")
        return other

    def __add__(self, other):
        other = self._check(other)
        return RingElement(
            self.spec, tuple((a + b) % 4 for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        return RingElement(self.spec, tuple((-a) % 4 for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        if isinstance(other, int):
            return RingElement(self.spec, tuple((other * a) % 4 for a in self.coeffs))
        other = self._check(other)
        return RingElement(self.spec, self.spec._mul_coeffs(self.coeffs, other.coeffs))

    __rmul__ = __mul__

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
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.spec.key == other.spec.key and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.spec.key, self.coeffs))

    def __repr__(self):
        return f"RingElement({list(self.coeffs)} in GR(4,{self.spec.n}))"

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_unit(self) -> bool:
        """Units are exactly the elements a + 2b with a != 0."""
        return any(c % 2 for c in self.coeffs)


class TeichmullerSet:
    """The ordered set [0, 1, xi, xi^2, ..., xi^(2^n - 2)]."""

    __slots__ = ("spec", "elements", "_by_mod2")

    def __init__(self, spec: RingSpec) -> None:
        xi = spec.xi
        els = [spec.zero, spec.one]
        cur = spec.one
        for _ in range(2 ** spec.n - 2):
            cur = cur * xi
            els.append(cur)
        if len(set(els)) != 2 ** spec.n or cur * xi != spec.one:
            raise NotBasicPrimitiveError(
                "residue class of x does not have multiplicative order "
                f"2^{spec.n} - 1; pick a different lift of the mod-2 polynomial"
            )
        self.spec = spec
        self.elements = tuple(els)
        self._by_mod2 = {
            tuple(c % 2 for c in e.coeffs): i for i, e in enumerate(self.elements)
        }

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def index_by_mod2(self, coeffs) -> int:
        """Position of the unique representative congruent to coeffs mod 2."""
        return self._by_mod2[tuple(c % 2 for c in coeffs)]

    def __contains__(self, el) -> bool:
        if not isinstance(el, RingElement):
            return False
        i = self._by_mod2.get(tuple(c % 2 for c in el.coeffs))
        return i is not None and self.elements[i] == el


def make_ring(n: int, modulus=None) -> RingSpec:
    """Validated RingSpec for GR(4, n); default modulus from the pinned table."""
    if not isinstance(n, int) or n < 1:
        raise DegreeOutOfRangeError(f"degree {n!r} must be a positive integer")
    if n > MAX_RING_DEGREE:
        raise DegreeOutOfRangeError(f"ring degree {n} exceeds {MAX_RING_DEGREE}")
    if modulus is None:
        modulus = DEFAULT_RING_MODULI[n]
    return RingSpec(n, modulus)


def teichmuller(spec: RingSpec) -> TeichmullerSet:
    """Teichmueller representatives of spec, cached on the spec."""
    if spec._teich is None:
        spec._teich = TeichmullerSet(spec)
    return spec._teich


def two_adic_decompose(r: RingElement):
    """The unique (a, b) with r = a + 2b and both in the Teichmueller set."""
    ts = teichmuller(r.spec)
    a = ts[ts.index_by_mod2(r.coeffs)]
    diff = r - a
    half = tuple(c // 2 for c in diff.coeffs)  # coefficients are all even
    b = ts[ts.index_by_mod2(half)]
    return a, b


def frobenius(r: RingElement) -> RingElement:
    """The automorphism sending a + 2b to a^2 + 2b^2."""
    a, b = two_adic_decompose(r)
    return a * a + 2 * (b * b)


def ring_trace(r: RingElement) -> int:
    """Sum of the Frobenius orbit of r, reported as an int in [0, 4)."""
    tp = r.spec._trace_powers_vec()
    return sum(c * t for c, t in zip(r.coeffs, tp)) % 4


def gamma_sum(r: RingElement) -> CyclotomicInt:
    """Exact Gaussian-integer value of sum(i^trace(r*x)) over Teichmueller x."""
    counts = [0, 0, 0, 0]
    for x in teichmuller(r.spec):
        counts[ring_trace(r * x)] += 1
    return CyclotomicInt(4, counts)
