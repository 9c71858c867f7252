import types

import numpy as np
import pytest

from mubkit import (
    ExponentBasis,
    MubFamily,
    extremality_check,
    galois_ring_mubs,
    gamma_oracle,
    macneish_tensor,
    make_field,
    make_ring,
    standard_basis,
    verify_exact,
    verify_float,
    verify_unitary_set,
    weil_sum_oracle,
    wootters_fields,
)
from mubkit.errors import (
    DegenerateQuadraticError,
    EvenCharacteristicError,
    MixedRootOrdersError,
)
from mubkit.kernels import available_backends
from mubkit.verifier import (
    CERTIFIED_EXTREMAL,
    CERTIFIED_FAMILY,
    FAILED,
    KIND_ORTHONORMAL,
    KIND_UNBIASED,
    weil_exhaustive_check,
)


class TestVerifyExact:
    def test_d3_certifies_extremal(self):
        rep = verify_exact(wootters_fields(make_field(3, 1)))
        assert rep.overall == CERTIFIED_EXTREMAL
        assert not rep.violations
        assert len(rep.verdicts) == 10  # 4 bases -> C(4,2) + 4 diagonal

    def test_d4_certifies_extremal(self):
        rep = verify_exact(galois_ring_mubs(make_ring(2)))
        assert rep.overall == CERTIFIED_EXTREMAL
        assert len(rep.verdicts) == 15

    def test_kinds_layout(self, qubit_trio):
        rep = verify_exact(qubit_trio)
        assert rep.overall == CERTIFIED_EXTREMAL  # 3 = d+1 bases in d=2
        for v in rep.verdicts:
            if v.i == v.j:
                assert v.kind == KIND_ORTHONORMAL
            else:
                assert v.kind == KIND_UNBIASED

    def test_duplicated_basis_fails(self, duplicated_pair):
        rep = verify_exact(duplicated_pair)
        assert rep.overall == FAILED
        v = rep.violations[0]
        assert (v.i, v.j) == (0, 1)
        # diagonal pair of identical bases: |S|^2 = d^2 = 4
        assert v.evidence["vector_pair"] == [0, 0]
        assert v.evidence["norm_squared"] == 4

    def test_all_ones_order_one_basis_fails(self):
        junk = ExponentBasis(3, 1, "flat-m1", False, [[0] * 3] * 3)
        fam = MubFamily(3, 1, "hand-built", {}, [standard_basis(3, 1), junk])
        rep = verify_exact(fam)
        assert rep.overall == FAILED
        v = rep.violations[0]
        assert (v.i, v.j) == (1, 1)

    def test_violation_evidence_is_exact(self, duplicated_pair):
        v = verify_exact(duplicated_pair).violations[0]
        assert v.evidence["inner_sum"] == [2, 0]  # S = 2 in Z[omega_2]
        assert v.evidence["norm_squared"] == 4

    def test_mixed_root_orders_rejected(self):
        a = ExponentBasis(2, 2, "a", False, [[0, 0], [0, 1]])
        b = ExponentBasis(2, 4, "b", False, [[0, 1], [0, 3]])
        fake = types.SimpleNamespace(
            dimension=2, root_order=2, construction="fake", parameters={},
            bases=(a, b),
        )
        with pytest.raises(MixedRootOrdersError):
            verify_exact(fake)

    def test_unbiasedness_certificates_are_integers(self):
        """Every certified cross pair reduces to the plain integer d."""
        from mubkit.cyclotomic import CyclotomicInt, root_of_unity

        fam = wootters_fields(make_field(5, 1))
        e1 = fam.bases[1].exponents
        e2 = fam.bases[2].exponents
        for r in range(5):
            for s in range(5):
                z = CyclotomicInt.zero(5)
                for x in range(5):
                    z = z + root_of_unity(5, int(e1[r, x]) - int(e2[s, x]))
                assert z.norm_squared().as_rational_integer() == 5

    def test_empty_family_certifies_but_not_extremal(self):
        fam = MubFamily(4, 1, "empty", {}, [])
        rep = verify_exact(fam)
        assert rep.certified and rep.overall == CERTIFIED_FAMILY
        assert extremality_check(fam) is False


class TestVerifyFloat:
    def test_certified_family_tiny_deviation(self):
        fam = wootters_fields(make_field(3, 1))
        rep = verify_float(fam, 1e-9)
        assert rep.certified
        assert max(v.evidence["max_deviation"] for v in rep.verdicts) < 1e-12

    def test_qubit_trio(self, qubit_trio):
        rep = verify_float(qubit_trio, 1e-9)
        assert rep.certified
        assert len(rep.verdicts) == 6

    def test_duplicate_fails(self, duplicated_pair):
        rep = verify_float(duplicated_pair, 1e-9)
        assert rep.overall == FAILED

    def test_bad_tolerance(self):
        with pytest.raises(ValueError):
            verify_unitary_set([np.eye(2)], 0.0)

    def test_tolerance_semantics(self):
        # a slightly perturbed pair passes a loose tolerance, fails a tight one
        theta = 1e-4
        rot = np.array([[np.cos(theta), -np.sin(theta)],
                        [np.sin(theta), np.cos(theta)]])
        fourier = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
        mats = [np.eye(2), rot @ fourier]
        assert verify_unitary_set(mats, 1e-3).certified
        assert not verify_unitary_set(mats, 1e-6).certified

    @pytest.mark.parametrize(
        "maker",
        [
            lambda: wootters_fields(make_field(3, 1)),
            lambda: wootters_fields(make_field(5, 1)),
            lambda: wootters_fields(make_field(3, 2)),
            lambda: galois_ring_mubs(make_ring(1)),
            lambda: galois_ring_mubs(make_ring(2)),
            lambda: macneish_tensor(
                [galois_ring_mubs(make_ring(1)), wootters_fields(make_field(3, 1))]
            ),
        ],
    )
    def test_exact_float_agreement(self, maker):
        fam = maker()
        exact = verify_exact(fam)
        flt = verify_float(fam, 1e-9)
        assert [(v.i, v.j, v.kind) for v in exact.verdicts] == [
            (v.i, v.j, v.kind) for v in flt.verdicts
        ]

    def test_exact_float_agreement_on_failure(self, duplicated_pair):
        exact = verify_exact(duplicated_pair)
        flt = verify_float(duplicated_pair, 1e-9)
        assert [(v.i, v.j, v.kind) for v in exact.verdicts] == [
            (v.i, v.j, v.kind) for v in flt.verdicts
        ]


class TestReports:
    def test_symmetry_by_construction(self):
        # only i <= j pairs are emitted, ordered lexicographically
        rep = verify_exact(wootters_fields(make_field(3, 1)))
        pairs = [(v.i, v.j) for v in rep.verdicts]
        assert pairs == sorted(pairs)
        assert all(i <= j for i, j in pairs)

    def test_reports_are_deterministic(self):
        fam = galois_ring_mubs(make_ring(2))
        assert verify_exact(fam).to_json() == verify_exact(fam).to_json()
        assert verify_float(fam, 1e-9).to_json() == verify_float(fam, 1e-9).to_json()


class TestMidSizePrimes:
    @pytest.mark.parametrize("p", [17, 19, 23])
    def test_quadratic_family_certifies(self, p):
        rep = verify_exact(wootters_fields(make_field(p, 1)))
        assert rep.overall == CERTIFIED_EXTREMAL


class TestExtremality:
    def test_wootters_f7(self):
        assert extremality_check(wootters_fields(make_field(7, 1)))

    def test_macneish_d6_not_extremal(self):
        fam = macneish_tensor(
            [galois_ring_mubs(make_ring(1)), wootters_fields(make_field(3, 1))]
        )
        assert extremality_check(fam) is False


class TestWeilOracle:
    def test_f5_square(self):
        f = make_field(5, 1)
        els = f.elements()
        assert weil_sum_oracle(f, els[1], els[0], els[0]) == 5

    def test_numeric_cross_check(self):
        f = make_field(7, 1)
        els = f.elements()
        val = weil_sum_oracle(f, els[2], els[3], els[1])
        s = sum(
            np.exp(2j * np.pi * ((2 * x * x + 3 * x + 1) % 7) / 7) for x in range(7)
        )
        assert val == pytest.approx(abs(s) ** 2, abs=1e-9)

    def test_degenerate(self):
        f = make_field(7, 1)
        els = f.elements()
        with pytest.raises(DegenerateQuadraticError):
            weil_sum_oracle(f, els[0], els[1], els[0])

    def test_even_characteristic(self):
        f = make_field(2, 1)
        els = f.elements()
        with pytest.raises(EvenCharacteristicError):
            weil_sum_oracle(f, els[1], els[0], els[0])

    @pytest.mark.parametrize("p,n", [(3, 1), (5, 1), (3, 2)])
    def test_exhaustive_small(self, p, n):
        f = make_field(p, n)
        checked, failures = weil_exhaustive_check(f)
        assert checked == (f.q - 1) * f.q * f.q
        assert failures == []


class TestGammaOracle:
    def test_gr41(self):
        table = gamma_oracle(make_ring(1))
        assert table.matches
        vals = {tuple(r[0]): r[1] for r in table.rows}
        assert vals == {(0,): 4, (1,): 2, (2,): 0, (3,): 2}

    def test_gr42_counts(self):
        table = gamma_oracle(make_ring(2))
        assert table.matches
        assert table.counts[16] == 1
        assert table.counts[0] == 3
        assert table.counts[4] == 12


class TestSoundness:
    def test_single_exponent_mutation_is_caught(self):
        """Flipping any one exponent of a certified family must fail it."""
        fam = wootters_fields(make_field(5, 1))
        rng = np.random.default_rng(0)
        for _ in range(6):
            which = int(rng.integers(1, len(fam.bases)))
            base = fam.bases[which]
            r, x = (int(v) for v in rng.integers(0, 5, size=2))
            mat = base.exponents.copy()
            mat[r, x] = (mat[r, x] + 1 + int(rng.integers(0, 4))) % 5
            bases = list(fam.bases)
            bases[which] = ExponentBasis(5, 5, base.label, False, mat)
            rep = verify_exact(MubFamily(5, 5, "mutated", {}, bases))
            assert rep.overall == FAILED

    def test_vectorized_route_matches_scalar_route(self):
        """Kernel counts + reduction tables give the same canonical inner
        sums as summing roots of unity one by one."""
        from mubkit.cyclotomic import reduction_matrix
        from mubkit.kernels import pair_difference_counts
        from mubkit.verifier import _exact_sum

        rng = np.random.default_rng(7)
        for m in (2, 3, 4, 5, 7, 12):
            d = int(rng.integers(2, 8))
            e = rng.integers(0, m, size=(3, d)).astype(np.int32)
            f = rng.integers(0, m, size=(4, d)).astype(np.int32)
            canon = pair_difference_counts(e, f, m) @ reduction_matrix(m)
            for r in range(3):
                for s in range(4):
                    scalar = _exact_sum(m, e[r], f[s])
                    assert tuple(canon[r, s]) == scalar.coeffs


class TestKernelBackends:
    def test_backends_agree(self):
        backends = available_backends()
        if len(backends) < 2:
            pytest.skip("compiled kernel not built")
        rng = np.random.default_rng(42)
        for m, nv, nw, d in [(2, 3, 5, 4), (3, 9, 9, 9), (7, 8, 8, 49), (12, 6, 6, 6), (81, 5, 5, 81)]:
            e = rng.integers(0, m, size=(nv, d)).astype(np.int32)
            f = rng.integers(0, m, size=(nw, d)).astype(np.int32)
            outs = [fn(e, f, m) for fn in backends.values()]
            assert all(np.array_equal(outs[0], o) for o in outs[1:])
            assert outs[0].sum() == nv * nw * d
