import json

import numpy as np
import pytest

from mubkit import (
    alltop,
    export_family,
    family_from_json,
    family_to_json,
    galois_ring_mubs,
    import_family,
    macneish_tensor,
    make_field,
    make_ring,
    mub_count_bounds,
    standard_basis,
    to_unitary_matrices,
    wootters_fields,
)
from mubkit.constructions import ExponentBasis, MubFamily, prime_power_factorization
from mubkit.errors import (
    CharacteristicTooSmallError,
    DimensionMismatchError,
    EmptyInputError,
    EvenCharacteristicError,
    ExponentOutOfRangeError,
    SchemaViolationError,
)

from conftest import exponent_rows

# twelve d=3 vectors of the quadratic construction, canonical order
D3_GOLDEN = {
    "a=0": [(0, 0, 0), (0, 1, 2), (0, 2, 1)],
    "a=1": [(0, 1, 1), (0, 2, 0), (0, 0, 2)],
    "a=2": [(0, 2, 2), (0, 0, 1), (0, 1, 0)],
}

# the same twelve vectors grouped per basis, order-insensitive reference
D3_REFERENCE_SETS = {
    "a=0": {(0, 0, 0), (0, 1, 2), (0, 2, 1)},
    "a=1": {(0, 1, 1), (0, 2, 0), (0, 0, 2)},
    "a=2": {(0, 2, 2), (0, 1, 0), (0, 0, 1)},
}


class TestStandardBasis:
    @pytest.mark.parametrize("d", [1, 3, 6])
    def test_identity(self, d):
        b = standard_basis(d)
        assert b.standard and b.exponents is None
        assert np.array_equal(b.to_matrix(), np.eye(d))


class TestWoottersFields:
    def test_d3_golden(self):
        fam = wootters_fields(make_field(3, 1))
        assert len(fam.bases) == 4 and fam.root_order == 3
        assert fam.bases[0].standard
        by_label = {b.label: b for b in fam.bases[1:]}
        for label, rows in D3_GOLDEN.items():
            assert exponent_rows(by_label[label]) == rows
        for label, vectors in D3_REFERENCE_SETS.items():
            assert set(exponent_rows(by_label[label])) == vectors

    def test_fourier_row(self):
        fam = wootters_fields(make_field(3, 1))
        assert exponent_rows(fam.bases[1])[0] == (0, 0, 0)

    def test_even_characteristic_rejected(self):
        with pytest.raises(EvenCharacteristicError):
            wootters_fields(make_field(2, 1))

    @pytest.mark.parametrize("p,n", [(3, 1), (5, 1), (3, 2), (7, 1)])
    def test_family_shape(self, p, n):
        fam = wootters_fields(make_field(p, n))
        q = p ** n
        assert fam.dimension == q
        assert len(fam.bases) == q + 1
        assert fam.root_order == p


class TestAlltop:
    def test_f5_cubes_row(self):
        fam = alltop(make_field(5, 1))
        assert exponent_rows(fam.bases[1])[0] == (0, 1, 3, 2, 4)

    @pytest.mark.parametrize("p", [2, 3])
    def test_small_characteristic_rejected(self, p):
        with pytest.raises(CharacteristicTooSmallError):
            alltop(make_field(p, 1))

    @pytest.mark.parametrize("p,n", [(5, 1), (7, 1), (5, 2)])
    def test_family_size(self, p, n):
        assert len(alltop(make_field(p, n)).bases) == p ** n + 1

    @pytest.mark.parametrize("q", [(5, 1), (7, 1)])
    def test_no_flat_all_ones_row(self, q):
        """The cubic and quadratic families genuinely differ: the all-ones
        vector appears in the quadratic family (a=b=0) but in no cubic basis."""
        p, n = q
        quad = wootters_fields(make_field(p, n))
        assert (0,) * p ** n in exponent_rows(quad.bases[1])
        cubic = alltop(make_field(p, n))
        for b in cubic.bases[1:]:
            assert (0,) * p ** n not in exponent_rows(b)

    def test_shift_structure_q5(self):
        """Basis alpha equals basis 0 with coordinate k replaced by k+alpha."""
        f = make_field(5, 1)
        fam = alltop(f)
        base0 = fam.bases[1].exponents
        add = f.add_table()
        for a in range(5):
            expected = base0[:, add[a]]
            assert np.array_equal(fam.bases[1 + a].exponents, expected)


class TestGaloisRingMubs:
    def test_d4_m0_golden(self):
        fam = galois_ring_mubs(make_ring(2))
        assert len(fam.bases) == 5 and fam.root_order == 4
        by_label = {b.label: b for b in fam.bases}
        m0 = exponent_rows(by_label["a=0"])
        assert m0 == [(0, 0, 0, 0), (0, 0, 2, 2), (0, 2, 2, 0), (0, 2, 0, 2)]

    def test_d4_reference_vectors_up_to_column_swap(self):
        """Golden vector sets in the alternative coordinate order
        [0, 1, 3xi+3, xi] (canonical is [0, 1, xi, xi^2], so columns 2
        and 3 swap).  The xi and xi^2 bases are sometimes mistaken for
        one another; they must come out distinct."""
        fam = galois_ring_mubs(make_ring(2))
        by_label = {b.label: b for b in fam.bases}
        perm = [0, 1, 3, 2]

        def swapped(basis):
            return {tuple(row[c] for c in perm) for row in exponent_rows(basis)}

        ref_m0 = {(0, 0, 0, 0), (0, 0, 2, 2), (0, 2, 2, 0), (0, 2, 0, 2)}
        ref_m1 = {(0, 2, 3, 3), (0, 2, 1, 1), (0, 0, 1, 3), (0, 0, 3, 1)}
        ref_mxi2 = {(0, 3, 3, 2), (0, 3, 1, 0), (0, 1, 1, 2), (0, 1, 3, 0)}
        assert swapped(by_label["a=0"]) == ref_m0
        assert swapped(by_label["a=1"]) == ref_m1
        assert swapped(by_label["a=xi^2"]) == ref_mxi2
        assert swapped(by_label["a=xi"]) != ref_mxi2
        assert set(exponent_rows(by_label["a=xi"])).isdisjoint(
            set(exponent_rows(by_label["a=xi^2"]))
        )

    def test_d2_family(self):
        fam = galois_ring_mubs(make_ring(1))
        assert fam.dimension == 2 and len(fam.bases) == 3
        rows = [exponent_rows(b) for b in fam.bases[1:]]
        assert rows == [[(0, 0), (0, 2)], [(0, 1), (0, 3)]]

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_family_size(self, n):
        assert len(galois_ring_mubs(make_ring(n)).bases) == 2 ** n + 1


class TestMacneish:
    def test_d6(self):
        d2 = galois_ring_mubs(make_ring(1))
        d3 = wootters_fields(make_field(3, 1))
        fam = macneish_tensor([d2, d3])
        assert fam.dimension == 6
        assert len(fam.bases) == 3  # min(3, 4)
        assert fam.root_order == 12
        assert fam.bases[0].standard

    def test_single_input_is_identity(self):
        d3 = wootters_fields(make_field(3, 1))
        assert macneish_tensor([d3]) is d3

    def test_empty_input(self):
        with pytest.raises(EmptyInputError):
            macneish_tensor([])

    def test_sizes_and_dimensions(self):
        d4 = galois_ring_mubs(make_ring(2))
        d3 = wootters_fields(make_field(3, 1))
        d5 = wootters_fields(make_field(5, 1))
        fam = macneish_tensor([d4, d3, d5])
        assert fam.dimension == 60
        assert len(fam.bases) == min(5, 4, 6) == 4
        assert fam.root_order == 60

    def test_tensor_entries_multiply(self):
        """Spot-check: every tensor matrix entry is the product of entries."""
        d2 = galois_ring_mubs(make_ring(1))
        d3 = wootters_fields(make_field(3, 1))
        fam = macneish_tensor([d2, d3])
        u2 = to_unitary_matrices(d2)
        u3 = to_unitary_matrices(d3)
        u6 = to_unitary_matrices(fam)
        for k in range(3):
            assert np.allclose(u6[k], np.kron(u2[k], u3[k]), atol=1e-12)

    def test_mixed_standard_flat_layer_rejected(self):
        flat = ExponentBasis(2, 2, "f", False, [[0, 0], [0, 1]])
        only_flat = MubFamily(2, 2, "x", {}, [flat])
        with_std = wootters_fields(make_field(3, 1))
        with pytest.raises(SchemaViolationError):
            macneish_tensor([only_flat, with_std])


class TestInterchange:
    def test_round_trip_identity(self):
        for fam in (
            wootters_fields(make_field(3, 1)),
            galois_ring_mubs(make_ring(2)),
            macneish_tensor(
                [galois_ring_mubs(make_ring(1)), wootters_fields(make_field(3, 1))]
            ),
        ):
            assert import_family(export_family(fam)) == fam
            assert family_from_json(family_to_json(fam)) == fam

    def test_json_is_integer_only_and_stable(self):
        fam = wootters_fields(make_field(3, 1))
        text = family_to_json(fam)
        assert text == family_to_json(fam)
        assert "." not in text.split('"parameters"')[0]  # no floats in bases

    def test_exponent_out_of_range(self):
        doc = export_family(wootters_fields(make_field(3, 1)))
        doc["bases"][1]["exponents"][0][0] = 3
        with pytest.raises(ExponentOutOfRangeError):
            import_family(doc)
        doc["bases"][1]["exponents"][0][0] = -1
        with pytest.raises(ExponentOutOfRangeError):
            import_family(doc)

    def test_two_standard_bases_rejected(self):
        doc = export_family(wootters_fields(make_field(3, 1)))
        doc["bases"][1] = {"label": "again", "standard": True}
        with pytest.raises(SchemaViolationError):
            import_family(doc)

    def test_dimension_mismatch(self):
        doc = export_family(wootters_fields(make_field(3, 1)))
        doc["bases"][1]["exponents"] = [[0, 0], [0, 1]]
        with pytest.raises(DimensionMismatchError):
            import_family(doc)

    def test_oversized_family_rejected(self):
        doc = export_family(wootters_fields(make_field(3, 1)))
        extra = dict(doc["bases"][1])
        extra["label"] = "extra"
        doc["bases"].append(extra)
        with pytest.raises(SchemaViolationError):
            import_family(doc)

    def test_float_exponent_rejected(self):
        doc = json.loads(family_to_json(wootters_fields(make_field(3, 1))))
        doc["bases"][1]["exponents"][0][0] = 0.0
        with pytest.raises(SchemaViolationError):
            import_family(doc)

    def test_garbage_rejected(self):
        with pytest.raises(SchemaViolationError):
            family_from_json("not json at all {")
        with pytest.raises(SchemaViolationError):
            import_family({"dimension": 3})


class TestBounds:
    def test_prime_power_factorization(self):
        assert prime_power_factorization(12) == [(2, 2), (3, 1)]
        assert prime_power_factorization(49) == [(7, 2)]

    @pytest.mark.parametrize(
        "d,lower,upper",
        [(2, 3, 3), (3, 4, 4), (4, 5, 5), (6, 3, 7), (10, 3, 11),
         (12, 4, 13), (14, 3, 15), (15, 4, 16), (16, 17, 17)],
    )
    def test_bounds(self, d, lower, upper):
        assert mub_count_bounds(d) == (lower, upper)

    def test_at_least_three_everywhere(self):
        for d in range(2, 200):
            assert mub_count_bounds(d)[0] >= 3
