import numpy as np
import pytest

from mubkit import ExponentBasis, MubFamily, standard_basis


@pytest.fixture
def qubit_trio():
    """d=2 family {standard, Fourier, circular}: three unbiased bases."""
    fourier = ExponentBasis(2, 4, "fourier", False, [[0, 0], [0, 2]])
    circular = ExponentBasis(2, 4, "circular", False, [[0, 1], [0, 3]])
    return MubFamily(2, 4, "hand-built", {}, [standard_basis(2, 4), fourier, circular])


@pytest.fixture
def duplicated_pair():
    """Two copies of the d=2 Fourier basis: cross pair violates unbiasedness."""
    a = ExponentBasis(2, 2, "f1", False, [[0, 0], [0, 1]])
    b = ExponentBasis(2, 2, "f2", False, [[0, 0], [0, 1]])
    return MubFamily(2, 2, "hand-built", {}, [a, b])


def exponent_rows(basis):
    return [tuple(int(v) for v in row) for row in basis.exponents]


def brute_force_inner_sq(basis_i, basis_j, r, s):
    """|<v_r, v_s>|^2 * d^2 via plain complex arithmetic (test oracle)."""
    d = basis_i.dimension
    mats = [b.to_matrix() for b in (basis_i, basis_j)]
    val = np.vdot(mats[0][:, r], mats[1][:, s])
    return abs(val) ** 2 * d * d
