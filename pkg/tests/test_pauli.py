from functools import reduce

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from errorgroups.exact_matrix import ExactMatrix, matmul
from errorgroups.pauli import (
    PauliString,
    generators_lambda,
    generators_pauli,
    generators_rho,
    pauli_error_basis,
    pauli_from_e,
    ps_commutator_sign,
    ps_inverse,
    ps_mul,
    ps_order,
    rescale_by_i,
)
from strategies import pauli_strings

X2 = np.array([[0, 1], [1, 0]], dtype=complex)
Z2 = np.diag([1, -1]).astype(complex)
I2 = np.eye(2, dtype=complex)


def oracle(g: PauliString) -> np.ndarray:
    """Kronecker product of X^x Z^z factors, qubit 1 leftmost."""
    factors = []
    for j in range(1, g.k + 1):
        bit = 1 << (g.k - j)
        f = I2
        if g.x & bit:
            f = f @ X2
        if g.z & bit:
            f = f @ Z2
        factors.append(f)
    return np.exp(1j * np.pi * g.p / 4) * reduce(np.kron, factors)


def test_y_is_the_real_rotation():
    y = PauliString.single(1, 1, "Y").to_matrix()
    assert y == ExactMatrix.from_entries([[0, 1], [-1, 0]])
    z = PauliString.single(1, 1, "Z").to_matrix()
    x = PauliString.single(1, 1, "X").to_matrix()
    assert y == matmul(z, x)


def test_single_qubit_placement():
    x1 = PauliString.single(2, 1, "X")
    assert x1.x == 0b10
    assert str(x1) == "X1"
    assert str(PauliString.single(2, 2, "Y")) == "-X2 Z2"


def test_str_with_phase():
    g = PauliString(2, 6, 0b10, 0b11)
    assert str(g) == "-i · X1 Z1 Z2"


def test_bad_input():
    with pytest.raises(ValueError):
        PauliString(1, 0, 2, 0)
    with pytest.raises(ValueError):
        PauliString.single(2, 3, "X")
    with pytest.raises(ValueError):
        PauliString.single(2, 1, "W")
    with pytest.raises(ValueError):
        ps_mul(PauliString.identity(1), PauliString.identity(2))
    with pytest.raises(ValueError):
        generators_lambda(2, 3)


def test_rho_k1_is_iz_and_y():
    t1, t2 = generators_rho(1)
    assert (t1.p, t1.x, t1.z) == (2, 0, 1)
    assert t2 == PauliString.single(1, 1, "Y")


def test_rho_k2_middle_generator_is_i_z1_z2():
    t = generators_rho(2)
    assert t[2] == PauliString(2, 2, 0, 0b11)


def test_lambda_appends_plus_minus_i_zk():
    assert generators_lambda(2, 1)[-1] == PauliString(2, 2, 0, 0b01)
    assert generators_lambda(2, 2)[-1] == PauliString(2, 6, 0, 0b01)
    assert generators_lambda(2, 1)[:4] == generators_rho(2)


def test_pauli_generators():
    gens = generators_pauli(2, complex=True)
    assert len(gens) == 5
    assert gens[-1] == PauliString.phase(2, 2)


def test_error_basis_size_and_trace_orthogonality():
    basis = [g.to_matrix().to_complex() for g in pauli_error_basis(2)]
    assert len(basis) == 16
    gram = np.array([[np.trace(a.conj().T @ b) for b in basis] for a in basis])
    assert np.allclose(gram, 4 * np.eye(16))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_pauli_recovered_from_e(k):
    assert all(pauli_from_e(k).values())


def test_json_roundtrip():
    g = PauliString(3, 5, 0b101, 0b011)
    assert PauliString.from_json(g.to_json()) == g


@given(pauli_strings(3))
def test_matrix_matches_kron_oracle(g):
    assert np.allclose(g.to_matrix().to_complex(), oracle(g))


@given(pauli_strings(3), pauli_strings(3))
def test_product_matches_matrix_product(g, h):
    assert ps_mul(g, h).to_matrix() == matmul(g.to_matrix(), h.to_matrix())


@given(pauli_strings(3), pauli_strings(3))
def test_commutator_sign_matches_matrices(g, h):
    gh, hg = ps_mul(g, h), ps_mul(h, g)
    assert (gh == hg) == (ps_commutator_sign(g, h) == 1)
    if ps_commutator_sign(g, h) == -1:
        assert gh == hg.times_phase(4)


@given(pauli_strings(2))
def test_inverse_and_order(g):
    assert ps_mul(g, ps_inverse(g)).is_identity
    m = ps_order(g)
    assert m in (1, 2, 4, 8)
    acc = np.linalg.matrix_power(oracle(g), m)
    assert np.allclose(acc, np.eye(4))


@given(st.integers(1, 4))
def test_rho_images_satisfy_minus_one_relations(k):
    t = generators_rho(k)
    minus = PauliString.phase(k, 4)
    for i, a in enumerate(t):
        assert ps_mul(a, a) == minus
        for j, b in enumerate(t):
            expected = -1 if abs(i - j) == 1 else 1
            assert ps_commutator_sign(a, b) == expected


@given(st.integers(1, 4))
def test_rescaled_images_square_to_plus_one(k):
    for a in rescale_by_i(generators_rho(k)):
        assert ps_mul(a, a).is_identity
