import dataclasses
import itertools

import numpy as np
import pytest

from supermtc import (
    InputError,
    ModularData,
    NotModularError,
    Scalar,
    deligne_product,
    family_data,
    gauss_sum,
    global_dim,
    quantum_dims,
    root_of_unity,
    sqrt2,
    validate,
    verlinde_fusion,
)
from supermtc.family import trivial_data
from supermtc.modular import charge_conjugation, total_dim


def numeric(M):
    return np.array([[x.to_complex() for x in row] for row in M.S])


def numpy_verlinde(S):
    # independent float oracle
    N = np.einsum("ax,bx,cx,x->abc", S, S, S.conj(), 1 / S[0])
    out = np.rint(N.real).astype(int)
    assert np.abs(N - out).max() < 1e-9
    return out


def with_twist(M, label, value):
    tw = list(M.twists)
    tw[M.index(label)] = value
    return dataclasses.replace(M, twists=tuple(tw))


def test_ising_data_validates():
    rep = validate(family_data(1))
    assert rep.ok, rep.text()


def test_trivial_data_validates():
    M = trivial_data()
    assert validate(M).ok
    assert gauss_sum(M) == 1


def test_ising_fusion():
    M = family_data(1)
    N = verlinde_fusion(M)
    s, one, psi = M.index("sigma"), M.index("1"), M.index("psi")
    assert N[s, s, one] == 1 and N[s, s, psi] == 1 and N[s, s, s] == 0
    assert N[psi, psi, one] == 1
    assert N[psi, s, s] == 1


@pytest.mark.parametrize("l", range(1, 17))
def test_verlinde_matches_float_oracle(l):
    M = family_data(l)
    assert verlinde_fusion(M).tolist() == numpy_verlinde(numeric(M)).tolist()


def test_even_fusion_is_a_group():
    M = family_data(2)
    N = verlinde_fusion(M)
    for a, b in itertools.product(range(4), repeat=2):
        assert int(N.coeffs[a, b].sum()) == 1


def test_quantum_dims():
    assert quantum_dims(family_data(1)) == [1, 1, sqrt2()]
    assert quantum_dims(family_data(2)) == [1, 1, 1, 1]
    assert global_dim(family_data(1)) == 4
    assert total_dim(family_data(1)) == 2


def test_sigma_twist_is_invisible_to_balancing():
    # s~(sigma,sigma) = 0 and theta_1 + theta_psi = 0, so both sides vanish for any theta_sigma
    M = with_twist(family_data(1), "sigma", Scalar.rational(1))
    s = M.index("sigma")
    assert M.s_tilde[s][s] == 0
    assert M.twists[0] + M.twists[1] == 0
    assert validate(M)["twist equation"].passed


def test_wrong_fermion_twist_fails_balancing():
    M = with_twist(family_data(1), "psi", Scalar.rational(1))
    check = validate(M)["twist equation"]
    assert not check.passed
    assert set(check.witness) <= {"psi", "sigma"}


def test_non_root_twist_rejected():
    M = with_twist(family_data(1), "sigma", Scalar.rational(2))
    rep = validate(M)
    assert not rep["twists are roots of unity"].passed


def test_non_unitary_s_rejected():
    M = family_data(1)
    S = [list(row) for row in M.S]
    S[2][2] = Scalar.rational(1)
    rep = validate(dataclasses.replace(M, S=tuple(tuple(r) for r in S)))
    assert not rep["S unitary"].passed
    assert not rep.ok


def test_verlinde_integrality_failure():
    h = 1 / sqrt2()
    M = ModularData(("a", "b"), 0, [[h, h], [h, h * Scalar.zeta(4)]], [1, 1])
    with pytest.raises(NotModularError):
        verlinde_fusion(M)


def test_modular_relation_numeric_oracle():
    for l in (1, 2, 3, 8, 15):
        M = family_data(l)
        S = numeric(M)
        T = np.diag([t.to_complex() for t in M.twists])
        lam = gauss_sum(M).to_complex() / 2
        assert np.abs(np.linalg.matrix_power(S @ T, 3) - lam * S @ S).max() < 1e-12


def test_charge_conjugation_is_an_involutive_permutation():
    for l in (1, 2, 4, 6):
        C = np.array([[x.to_complex() for x in row] for row in charge_conjugation(family_data(l))])
        assert np.allclose(C @ C, np.eye(len(C)))
        assert np.allclose(np.sort(C.real, axis=1)[:, -1], 1)
        assert np.allclose(np.abs(C).sum(axis=1), 1)


def test_gauss_sum_values():
    for l in range(1, 17):
        assert gauss_sum(family_data(l)) == 2 * root_of_unity(l, 16)
    with pytest.raises(InputError):
        gauss_sum(family_data(1), 0)


def test_higher_gauss_sum():
    M = family_data(1)
    expected = sum((d * d * t ** 2 for d, t in zip(M.dims, M.twists)), Scalar.rational(0))
    assert gauss_sum(M, 2) == expected


def test_deligne_product():
    P = deligne_product(family_data(1), family_data(1))
    assert P.rank == 9
    assert global_dim(P) == 16
    assert gauss_sum(P) == 4 * root_of_unity(2, 16)
    assert validate(P).ok


@pytest.mark.parametrize("a,b", [(a, b) for a in range(1, 17, 3) for b in range(1, 17, 5)])
def test_gauss_sum_is_multiplicative(a, b):
    A, B = family_data(a), family_data(b)
    assert gauss_sum(deligne_product(A, B)) == gauss_sum(A) * gauss_sum(B)


def test_subcategory_gauss_sum_vanishes():
    M = family_data(1)
    assert gauss_sum(M, 1, subset=[M.index("1"), M.index("psi")]) == 0


def test_label_lookup():
    M = family_data(1)
    assert M.index("sigma") == 2
    with pytest.raises((InputError, KeyError, ValueError)):
        M.index("nope")


def test_shape_validation():
    with pytest.raises(InputError):
        ModularData(("a", "b"), 0, [[1]], [1, 1])
