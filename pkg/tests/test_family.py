import numpy as np
import pytest

from supermtc import InputError, NotModularError, Scalar, family_data, ising_like, s_from_twists, sqrt2, validate
from supermtc.family import (
    cyclic4_fusion,
    family_twists,
    fusion_group,
    ising_fusion,
    klein_fusion,
)
from supermtc.modular import ModularData


def test_ising_s_matrix():
    h = Scalar.rational(1) / 2
    r = sqrt2()
    expected = [[h, h, r * h], [h, h, -r * h], [r * h, -r * h, 0]]
    S = s_from_twists(ising_fusion(), family_twists(1), [1, 1, sqrt2()])
    assert S == expected
    assert [list(row) for row in family_data(1).S] == expected


@pytest.mark.parametrize("l", range(1, 17))
def test_family_shape(l):
    M = family_data(l)
    assert M.rank == (3 if l % 2 else 4)
    assert M.twists[M.index("psi")] == -1
    assert M.twists[2] == Scalar.zeta(16, l)
    assert sum((d * d for d in M.dims), Scalar.rational(0)) == 4


@pytest.mark.parametrize("l", range(2, 33, 2))
def test_even_group_law(l):
    k = l // 2
    assert fusion_group(l) == ("Z4" if k % 2 else "Z2xZ2")


@pytest.mark.parametrize("l", range(2, 17, 2))
def test_wrong_group_law_fails_validation(l):
    # balancing gives a unitary S for either law; only the full axioms single one out
    wrong = klein_fusion() if (l // 2) % 2 else cyclic4_fusion()
    S = s_from_twists(wrong, family_twists(l), [1] * 4)
    M = ModularData(("1", "psi", "tw0", "tw1"), 0, S, family_twists(l), wrong)
    rep = validate(M)
    assert not rep.ok
    assert rep["S unitary"].passed


def test_balancing_rejects_bosonic_psi():
    with pytest.raises(NotModularError) as exc:
        s_from_twists(ising_fusion(), [1, 1, Scalar.zeta(16)], [1, 1, sqrt2()])
    assert exc.value.defect > 1


def test_balancing_needs_exact_total_dimension():
    with pytest.raises(NotModularError, match="total dimension"):
        s_from_twists(ising_fusion(), family_twists(1), [1, 1, 1])


@pytest.mark.parametrize("l", range(17, 33))
def test_period_sixteen(l):
    A, B = family_data(l), family_data(l - 16)
    assert A.S == B.S and A.twists == B.twists and A.fusion == B.fusion


def test_even_data_numeric_s():
    # k = 2 is even, so the Klein law: every entry has modulus 1/2
    S = np.array([[x.to_complex() for x in row] for row in family_data(4).S])
    assert np.allclose(np.abs(S), 0.5)
    assert np.allclose(S @ S.conj().T, np.eye(4))


def test_graded_family():
    G = ising_like(1)
    assert G.q_type == (2,) and G.m_pairs == ()
    G = ising_like(2)
    assert G.q_type == () and G.m_pairs == ((2, 3),)


@pytest.mark.parametrize("bad", [0, -3, 1.5, "2"])
def test_bad_l(bad):
    with pytest.raises(InputError):
        family_data(bad)
