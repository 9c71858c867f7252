"""mubkit: exact construction and certification of mutually unbiased bases.

Families in prime-power dimensions come from quadratic phases over odd
finite fields, cubic phases for characteristic at least 5, and additive
characters of the Galois rings GR(4, n); tensor combination covers
composite dimensions and a seeded numerical search explores the rest.
All certificates are computed in exact cyclotomic-integer arithmetic.
"""

from .constructions import (
    ExponentBasis,
    MubFamily,
    alltop,
    export_family,
    family_from_json,
    family_to_json,
    galois_ring_mubs,
    import_family,
    macneish_tensor,
    mub_count_bounds,
    standard_basis,
    to_unitary_matrices,
    wootters_fields,
)
from .cyclotomic import CyclotomicInt, cyclotomic_polynomial, root_of_unity
from .finite_field import FieldElement, FieldSpec, is_irreducible, make_field
from .galois_ring import (
    RingElement,
    RingSpec,
    TeichmullerSet,
    frobenius,
    gamma_sum,
    is_basic_primitive,
    make_ring,
    ring_trace,
    teichmuller,
    two_adic_decompose,
)
from .search import SearchConfig, SearchResult, extend_family, objective, search
from .verifier import (
    GammaClassification,
    PairVerdict,
    VerificationReport,
    extremality_check,
    gamma_oracle,
    verify_exact,
    verify_float,
    verify_unitary_set,
    weil_sum_oracle,
)

__version__ = "0.1.0"

__all__ = [
    "CyclotomicInt",
    "ExponentBasis",
    "FieldElement",
    "FieldSpec",
    "GammaClassification",
    "MubFamily",
    "PairVerdict",
    "RingElement",
    "RingSpec",
    "SearchConfig",
    "SearchResult",
    "TeichmullerSet",
    "VerificationReport",
    "alltop",
    "cyclotomic_polynomial",
    "export_family",
    "extend_family",
    "extremality_check",
    "family_from_json",
    "family_to_json",
    "frobenius",
    "galois_ring_mubs",
    "gamma_oracle",
    "gamma_sum",
    "import_family",
    "is_basic_primitive",
    "is_irreducible",
    "macneish_tensor",
    "make_field",
    "make_ring",
    "mub_count_bounds",
    "objective",
    "ring_trace",
    "root_of_unity",
    "search",
    "standard_basis",
    "teichmuller",
    "to_unitary_matrices",
    "two_adic_decompose",
    "verify_exact",
    "verify_float",
    "verify_unitary_set",
    "weil_sum_oracle",
    "wootters_fields",
]
