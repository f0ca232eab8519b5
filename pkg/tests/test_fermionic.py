import numpy as np
import pytest

from supermtc import (
    InputError,
    assemble_super_s,
    centralizer,
    check_minimal_extension,
    check_supermodular,
    deligne_product,
    family_data,
    find_fermions,
    gauss_sum,
    ising_like,
    sector_grading,
    sqrt2,
)
from supermtc.fermionic import supermodular_report, twisted_qdims


@pytest.fixture(scope="module")
def ising_squared():
    P = deligne_product(family_data(1), family_data(1))
    return sector_grading(P, P.index("(psi,1)"))


def numeric_blocks(B):
    return [np.array([[x.to_complex() for x in row] for row in blk]) for blk in (B.ss, B.s1, B.one_s, B.oneone)]


def test_centralizer_of_fermion():
    for l in (1, 2, 7, 16):
        M = family_data(l)
        assert centralizer(M, [M.index("psi")]) == [M.index("1"), M.index("psi")]


def test_modular_data_has_trivial_mueger_center():
    for l in (1, 2, 3, 4):
        M = family_data(l)
        assert centralizer(M, range(M.rank)) == [M.unit]


def test_centralizer_matches_float_oracle():
    P = deligne_product(family_data(1), family_data(3))
    S = np.array([[x.to_complex() for x in row] for row in P.S])
    d = S[0] / S[0, 0]
    for y in range(P.rank):
        want = [x for x in range(P.rank) if abs(S[x, y] / S[0, 0] - d[x] * d[y]) < 1e-9]
        assert centralizer(P, [y]) == want


def test_find_fermions():
    M = family_data(1)
    assert find_fermions(M) == [M.index("psi")]
    P = deligne_product(M, M)
    assert [P.labels[f] for f in find_fermions(P)] == ["(1,psi)", "(psi,1)"]


def test_grading_requires_a_fermion():
    M = family_data(1)
    with pytest.raises(InputError):
        sector_grading(M, M.index("sigma"))
    P = deligne_product(M, M)
    with pytest.raises(InputError):
        sector_grading(P, P.index("(psi,psi)"))


@pytest.mark.parametrize("l", range(1, 17))
def test_sector_structure(l):
    G = ising_like(l)
    M = G.base
    assert G.violations == ()
    assert G.sector_labels(0) == [0, 1]
    assert len(G.sector0_orbits) == len(G.q_type) + len(G.m_pairs) == 1
    assert G.profile == ((1, 0) if l % 2 else (0, 1))
    # fermion is fixed-point free on sector 0 and flips the twist
    for a, b in G.sector0_orbits:
        assert a != b and M.twists[b] == -M.twists[a]


@pytest.mark.parametrize("l", range(1, 17))
def test_family_is_minimal_extension(l):
    G = ising_like(l)
    rep = check_minimal_extension(G)
    assert rep.ok, rep.text()
    assert check_supermodular(G).ok


def test_product_is_minimal_extension(ising_squared):
    G = ising_squared
    assert check_minimal_extension(G).ok
    assert len(G.q_type) == 3 and G.m_pairs == ()
    assert len(G.sector0_orbits) == 3
    assert gauss_sum(G.base, 1, subset=G.sector_labels(0)) == 0


def test_subcategory_supermodularity():
    M = family_data(1)
    one, psi, sigma = (M.index(x) for x in ("1", "psi", "sigma"))
    assert supermodular_report(M, [one, psi], psi).ok
    # the whole category is modular, so its center is trivial
    assert not supermodular_report(M, [one, psi, sigma], psi).ok


@pytest.mark.parametrize("l", range(1, 17))
def test_super_s_blocks(l):
    B = assemble_super_s(ising_like(l))
    assert B.report.ok, B.report.text()
    assert B.report["q-type rows vanish on sector 1"].passed
    for blk in numeric_blocks(B):
        assert np.allclose(blk @ blk.conj().T, np.eye(len(blk)))


def test_super_s_blocks_for_product(ising_squared):
    B = assemble_super_s(ising_squared)
    assert B.report.ok, B.report.text()
    assert len(B.ss) == 3 and len(B.oneone) == 0


def test_q_type_rows_vanish_float_oracle(ising_squared):
    G = ising_squared
    S = np.array([[x.to_complex() for x in row] for row in G.base.S])
    ones = G.sector_labels(1)
    assert np.abs(S[np.ix_(list(G.q_type), ones)]).max() < 1e-12


def test_twisted_quantum_dimensions():
    G = ising_like(1)
    q = twisted_qdims(G)
    assert q["1"] == 1
    assert 2 * q["sigma"] == G.base.dims[G.base.index("sigma")]
    assert q["sigma"] == 1 / sqrt2()
    G = ising_like(2)
    q = twisted_qdims(G)
    assert q["tw0"] == 1
