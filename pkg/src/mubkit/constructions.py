"""Construction of mutually unbiased basis families and their interchange format.

Flat bases are stored as integer exponent matrices over a root-of-unity
order m: row r, column x holds the exponent e with vector entry
omega_m^e / sqrt(d).  The standard basis is flagged instead of stored.
All basis/vector/coordinate indexing follows the canonical element
orders of the field and ring modules.
"""

from __future__ import annotations

import json
from math import gcd

import numpy as np

from .errors import (
    CharacteristicTooSmallError,
    DimensionMismatchError,
    EmptyInputError,
    EvenCharacteristicError,
    ExponentOutOfRangeError,
    SchemaViolationError,
)
from .finite_field import FieldSpec
from .galois_ring import RingSpec, ring_trace, teichmuller

STANDARD_LABEL = "standard"


class ExponentBasis:
    """One orthonormal basis: either the standard basis or a flat exponent matrix."""

    __slots__ = ("dimension", "root_order", "label", "standard", "exponents")

    def __init__(self, dimension, root_order, label, standard, exponents=None):
        if not isinstance(dimension, int) or dimension < 1:
            raise DimensionMismatchError(f"bad dimension {dimension!r}")
        if not isinstance(root_order, int) or root_order < 1:
            raise SchemaViolationError(f"bad root order {root_order!r}")
        self.dimension = dimension
        self.root_order = root_order
        self.label = str(label)
        self.standard = bool(standard)
        if self.standard:
            if exponents is not None:
                raise SchemaViolationError("standard basis carries no exponents")
            self.exponents = None
        else:
            arr = np.asarray(exponents)
            if arr.ndim != 2 or arr.shape != (dimension, dimension):
                raise DimensionMismatchError(
                    f"exponent matrix must be {dimension}x{dimension}, "
                    f"got {arr.shape}"
                )
            if arr.size and (arr.min() < 0 or arr.max() >= root_order):
                raise ExponentOutOfRangeError(
                    f"exponents must lie in [0, {root_order})"
                )
            arr = np.ascontiguousarray(arr, dtype=np.int32)
            arr.flags.writeable = False
            self.exponents = arr

    def __eq__(self, other):
        if not isinstance(other, ExponentBasis):
            return NotImplemented
        if (self.dimension, self.label, self.standard) != (
            other.dimension, other.label, other.standard,
        ):
            return False
        if self.standard:
            return True
        return self.root_order == other.root_order and np.array_equal(
            self.exponents, other.exponents
        )

    def __repr__(self):
        kind = "standard" if self.standard else f"flat(m={self.root_order})"
        return f"ExponentBasis(d={self.dimension}, {kind}, label={self.label!r})"

    def to_matrix(self) -> np.ndarray:
        """Complex unitary matrix whose columns are the basis vectors."""
        d = self.dimension
        if self.standard:
            return np.eye(d, dtype=np.complex128)
        phases = np.exp(2j * np.pi * self.exponents / self.root_order)
        return phases.T / np.sqrt(d)


class MubFamily:
    """An ordered family of bases of C^d sharing one root-of-unity order."""

    __slots__ = ("dimension", "root_order", "construction", "parameters", "bases")

    def __init__(self, dimension, root_order, construction, parameters, bases):
        bases = tuple(bases)
        if not isinstance(dimension, int) or dimension < 1:
            raise DimensionMismatchError(f"bad dimension {dimension!r}")
        if not isinstance(root_order, int) or root_order < 1:
            raise SchemaViolationError(f"bad root order {root_order!r}")
        if len(bases) > dimension + 1:
            raise SchemaViolationError(
                f"{len(bases)} bases exceed the bound {dimension + 1}"
            )
        if sum(1 for b in bases if b.standard) > 1:
            raise SchemaViolationError("at most one standard basis is allowed")
        for b in bases:
            if b.dimension != dimension:
                raise DimensionMismatchError(
                    f"basis {b.label!r} has dimension {b.dimension}, "
                    f"family has {dimension}"
                )
            if not b.standard and b.root_order != root_order:
                raise SchemaViolationError(
                    f"basis {b.label!r} uses root order {b.root_order}, "
                    f"family uses {root_order}"
                )
        self.dimension = dimension
        self.root_order = root_order
        self.construction = str(construction)
        self.parameters = dict(parameters)
        self.bases = bases

    def __len__(self):
        return len(self.bases)

    def __iter__(self):
        return iter(self.bases)

    def __eq__(self, other):
        if not isinstance(other, MubFamily):
            return NotImplemented
        return (
            self.dimension == other.dimension
            and self.root_order == other.root_order
            and self.construction == other.construction
            and self.parameters == other.parameters
            and self.bases == other.bases
        )

    def __repr__(self):
        return (
            f"MubFamily(d={self.dimension}, m={self.root_order}, "
            f"{self.construction!r}, {len(self.bases)} bases)"
        )


def standard_basis(d: int, root_order: int = 1, label: str = STANDARD_LABEL) -> ExponentBasis:
    """The standard (identity) basis of C^d."""
    return ExponentBasis(d, root_order, label, standard=True)


def wootters_fields(spec: FieldSpec) -> MubFamily:
    """Quadratic-phase family over F_q, odd q: q+1 bases of C^q.

    Basis a holds, for each b, the vector with exponent trace(a*x^2 + b*x)
    at coordinate x; everything in canonical field order.
    """
    if spec.p == 2:
        raise EvenCharacteristicError("quadratic-phase family needs odd characteristic")
    p, q = spec.p, spec.q
    mul = spec.mul_table()
    tr = spec.trace_table()
    sq = mul[np.arange(q), np.arange(q)]
    lin = tr[mul]          # lin[b, x] = trace(b * x)
    quad = tr[mul[:, sq]]  # quad[a, x] = trace(a * x^2)
    bases = [standard_basis(q, p)]
    for a in range(q):
        mat = (quad[a][None, :] + lin) % p
        bases.append(ExponentBasis(q, p, f"a={a}", False, mat))
    return MubFamily(
        q, p, "wootters-fields",
        {"p": p, "n": spec.n, "modulus": list(spec.modulus)},
        bases,
    )


def _alltop_bases(spec: FieldSpec):
    """Cubic-phase exponent matrices for every shift alpha (no guard)."""
    p, q = spec.p, spec.q
    mul = spec.mul_table()
    add = spec.add_table()
    tr = spec.trace_table()
    idx = np.arange(q)
    sq = mul[idx, idx]
    cube = tr[mul[idx, sq]]  # cube[u] = trace(u^3)
    lin = tr[mul]            # lin[lam, u] = trace(lam * u)
    out = []
    for a in range(q):
        perm = add[a]  # perm[k] = index of element_k + element_a
        mat = (cube[perm][None, :] + lin[:, perm]) % p
        out.append((f"alpha={a}", mat))
    return out


def alltop(spec: FieldSpec) -> MubFamily:
    """Cubic-phase family over F_q, characteristic at least 5: q+1 bases.

    Basis alpha holds, for each lambda, the vector with exponent
    trace((k+alpha)^3 + lambda*(k+alpha)) at coordinate k.
    """
    if spec.p in (2, 3):
        raise CharacteristicTooSmallError(
            "cubic-phase family fails in characteristic 2 and 3"
        )
    p, q = spec.p, spec.q
    bases = [standard_basis(q, p)]
    for label, mat in _alltop_bases(spec):
        bases.append(ExponentBasis(q, p, label, False, mat))
    return MubFamily(
        q, p, "alltop",
        {"p": p, "n": spec.n, "modulus": list(spec.modulus)},
        bases,
    )


def _teich_label(k: int) -> str:
    if k == 0:
        return "0"
    if k == 1:
        return "1"
    if k == 2:
        return "xi"
    return f"xi^{k - 1}"


def galois_ring_mubs(spec: RingSpec) -> MubFamily:
    """Fourth-root-phase family over GR(4, n): 2^n + 1 bases of C^(2^n).

    Basis a (a running over the Teichmueller set) holds, for each b in
    the same set, the vector with exponent trace((a + 2b) * x) at
    coordinate x, all in canonical Teichmueller order.
    """
    ts = teichmuller(spec)
    d = len(ts)
    # ta[i, j] = trace(t_i * t_j); the exponent splits as ta[a] + 2*ta[b]
    ta = np.empty((d, d), dtype=np.int64)
    for i, u in enumerate(ts):
        for j in range(i, d):
            v = ring_trace(u * ts[j])
            ta[i, j] = v
            ta[j, i] = v
    bases = [standard_basis(d, 4)]
    for a in range(d):
        mat = (ta[a][None, :] + 2 * ta) % 4
        bases.append(ExponentBasis(d, 4, f"a={_teich_label(a)}", False, mat))
    return MubFamily(
        d, 4, "galois-ring",
        {"n": spec.n, "modulus": list(spec.modulus)},
        bases,
    )


def _standard_first(family: MubFamily):
    ordered = sorted(family.bases, key=lambda b: 0 if b.standard else 1)
    return ordered


def macneish_tensor(families) -> MubFamily:
    """Tensor combination: k-th output basis is the tensor of the k-th
    input bases, standard bases aligned at index 0; family size is the
    minimum of the input sizes and dimension the product.
    """
    families = list(families)
    if not families:
        raise EmptyInputError("need at least one input family")
    if len(families) == 1:
        return families[0]
    size = min(len(f) for f in families)
    dim = 1
    for f in families:
        dim *= f.dimension
    order = 1
    for f in families:
        order = order * f.root_order // gcd(order, f.root_order)
    layers = [_standard_first(f)[:size] for f in families]
    bases = []
    for k in range(size):
        parts = [layer[k] for layer in layers]
        label = "|".join(p.label for p in parts)
        if all(p.standard for p in parts):
            bases.append(standard_basis(dim, order, label))
            continue
        if any(p.standard for p in parts):
            raise SchemaViolationError(
                "tensor of a standard and a flat basis is not flat; "
                "align standard bases across inputs"
            )
        mat = np.zeros((1, 1), dtype=np.int64)
        cur_dim = 1
        for p in parts:
            scaled = p.exponents.astype(np.int64) * (order // p.root_order)
            ones = np.ones((p.dimension, p.dimension), dtype=np.int64)
            mat = np.kron(mat, ones) + np.kron(np.ones((cur_dim, cur_dim), dtype=np.int64), scaled)
            cur_dim *= p.dimension
        bases.append(ExponentBasis(dim, order, label, False, mat % order))
    return MubFamily(
        dim, order, "macneish",
        {"factors": [f.dimension for f in families],
         "inputs": [f.construction for f in families]},
        bases,
    )


def to_unitary_matrices(family: MubFamily):
    """Complex matrices (columns = vectors) realizing every basis."""
    return [b.to_matrix() for b in family.bases]


# -- interchange format ---------------------------------------------------


def export_family(family: MubFamily) -> dict:
    """JSON-ready document; integers only, schema pinned."""
    bases = []
    for b in family.bases:
        entry = {"label": b.label, "standard": b.standard}
        if not b.standard:
            entry["exponents"] = [[int(v) for v in row] for row in b.exponents]
        bases.append(entry)
    return {
        "dimension": family.dimension,
        "root_order": family.root_order,
        "construction": family.construction,
        "parameters": family.parameters,
        "bases": bases,
    }


def family_to_json(family: MubFamily) -> str:
    return json.dumps(export_family(family), sort_keys=True, separators=(",", ":")) + "\n"


_TOP_KEYS = {"dimension", "root_order", "construction", "parameters", "bases"}
_BASIS_KEYS = {"label", "standard", "exponents"}


def _require_int(v, what):
    if not isinstance(v, int) or isinstance(v, bool):
        raise SchemaViolationError(f"{what} must be an integer, got {v!r}")
    return v


def import_family(doc) -> MubFamily:
    """Parse and validate a family document (inverse of export_family)."""
    if not isinstance(doc, dict):
        raise SchemaViolationError("family document must be an object")
    if set(doc) != _TOP_KEYS:
        raise SchemaViolationError(
            f"family document must have exactly the keys {sorted(_TOP_KEYS)}"
        )
    d = _require_int(doc["dimension"], "dimension")
    m = _require_int(doc["root_order"], "root_order")
    if d < 1 or m < 1:
        raise SchemaViolationError("dimension and root_order must be positive")
    if not isinstance(doc["construction"], str):
        raise SchemaViolationError("construction must be a string")
    if not isinstance(doc["parameters"], dict):
        raise SchemaViolationError("parameters must be an object")
    if not isinstance(doc["bases"], list):
        raise SchemaViolationError("bases must be a list")
    bases = []
    for entry in doc["bases"]:
        if not isinstance(entry, dict) or not set(entry) <= _BASIS_KEYS:
            raise SchemaViolationError(f"bad basis entry {entry!r}")
        if "label" not in entry or "standard" not in entry:
            raise SchemaViolationError("basis entry needs label and standard")
        if not isinstance(entry["standard"], bool):
            raise SchemaViolationError("standard flag must be a boolean")
        if not isinstance(entry["label"], str):
            raise SchemaViolationError("label must be a string")
        if entry["standard"]:
            if "exponents" in entry:
                raise SchemaViolationError("standard basis must omit exponents")
            bases.append(standard_basis(d, m, entry["label"]))
            continue
        if "exponents" not in entry:
            raise SchemaViolationError("flat basis must carry exponents")
        rows = entry["exponents"]
        if not isinstance(rows, list) or len(rows) != d or any(
            not isinstance(r, list) or len(r) != d for r in rows
        ):
            raise DimensionMismatchError(f"exponents must be a {d}x{d} matrix")
        for r in rows:
            for v in r:
                _require_int(v, "exponent")
                if v < 0 or v >= m:
                    raise ExponentOutOfRangeError(
                        f"exponent {v} outside [0, {m})"
                    )
        bases.append(ExponentBasis(d, m, entry["label"], False, rows))
    return MubFamily(d, m, doc["construction"], doc["parameters"], bases)


def family_from_json(text: str) -> MubFamily:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaViolationError(f"not valid JSON: {exc}") from exc
    return import_family(doc)


# -- counting bounds -------------------------------------------------------


def prime_power_factorization(d: int):
    """[(p, a), ...] with d = product of p^a, p ascending."""
    if d < 2:
        raise ValueError("need d >= 2")
    out = []
    v = d
    f = 2
    while f * f <= v:
        if v % f == 0:
            a = 0
            while v % f == 0:
                v //= f
                a += 1
            out.append((f, a))
        f += 1
    if v > 1:
        out.append((v, 1))
    return out


def is_prime_power(d: int) -> bool:
    return d >= 2 and len(prime_power_factorization(d)) == 1


def mub_count_bounds(d: int):
    """(lower, upper) for the maximal number of pairwise unbiased bases of C^d.

    Upper bound is always d+1.  Lower bound is d+1 for prime powers and
    otherwise the minimum over the prime-power factors p^a of (p^a + 1),
    realized by the tensor combination.
    """
    upper = d + 1
    factors = prime_power_factorization(d)
    if len(factors) == 1:
        return upper, upper
    lower = min(p ** a for p, a in factors) + 1
    return lower, upper
