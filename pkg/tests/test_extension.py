import pytest

from supermtc import (
    InputError,
    StructuralError,
    deligne_product,
    extend,
    family_data,
    gauss_sum,
    ising_like,
    root_of_unity,
    sector_grading,
    sixteen_table,
    sqrt2,
)
from supermtc.extension import object_table, predicted_profile, same_multiset


@pytest.fixture(scope="module")
def ising_squared():
    P = deligne_product(family_data(1), family_data(1))
    return sector_grading(P, P.index("(psi,1)"))


def test_extend_zero_is_identity():
    G = ising_like(1)
    assert same_multiset(extend(G, 0).multiset(), object_table(G).multiset())


def test_stacking_dimension_rules():
    # sigma x sigma: two q-type objects combine to an m-type pair of dimension sqrt2*sqrt2/2 = 1
    ext = extend(ising_like(1), 1)
    ones = ext.sector(1)
    assert [ob.kind for ob in ones] == ["m", "m"]
    assert all(ob.dim == 1 for ob in ones)
    assert all(ob.twist == root_of_unity(2, 16) for ob in ones)
    # sigma x (m-pair): one q-type object of dimension sqrt2
    ext = extend(ising_like(1), 2)
    ones = ext.sector(1)
    assert [ob.kind for ob in ones] == ["q"] and ones[0].dim == sqrt2()


@pytest.mark.parametrize("l", range(1, 16))
def test_free_fermion_ladder(l):
    got = extend(ising_like(1), l)
    want = object_table(ising_like(l + 1))
    assert same_multiset(got.multiset(), want.multiset())


@pytest.mark.parametrize("l", range(0, 17))
def test_gauss_ladder_on_product(ising_squared, l):
    ext = extend(ising_squared, l)
    base = gauss_sum(ising_squared.base)
    assert ext.gauss == root_of_unity(l, 16) * base
    assert ext.full_gauss_sum() == ext.gauss
    assert ext.dims[0] == ext.dims[1]


def test_sixteen_on_product(ising_squared):
    rows = sixteen_table(ising_squared)
    assert [r.l for r in rows] == list(range(16))
    assert rows[0].gauss == 4 * root_of_unity(2, 16)


@pytest.mark.parametrize("a", [1, 2, 5, 16])
@pytest.mark.parametrize("l", range(1, 17))
def test_profile_calculus_predicts_extension(a, l):
    G = ising_like(a)
    assert predicted_profile(G, l) == extend(G, l).profile


def test_additivity_on_product(ising_squared):
    for a, b in [(1, 1), (2, 3), (5, 11)]:
        lhs = extend(extend(ising_squared, a), b)
        rhs = extend(ising_squared, a + b)
        assert same_multiset(lhs.multiset(), rhs.multiset())


def test_same_multiset():
    assert same_multiset([1, 2, 2], [2, 1, 2])
    assert not same_multiset([1, 2, 2], [1, 1, 2])
    assert not same_multiset([1], [1, 1])


def test_bad_arguments():
    with pytest.raises(InputError):
        extend(ising_like(1), -1)
    with pytest.raises(InputError):
        extend(family_data(1), 1)


def test_non_extension_rejected():
    # drop objects so the two sectors no longer balance (2 vs 4)
    P = deligne_product(family_data(1), family_data(1))
    G = sector_grading(P, P.index("(psi,1)"))
    broken = type(G)(G.base, G.fermion, G.sector, G.sector0_orbits[:1], G.q_type[:2], ())
    with pytest.raises(StructuralError):
        extend(object_table(broken), 1)
