from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from bottomlayer import charring as cr
from bottomlayer import induction as ind
from bottomlayer.checks import bbw_cases, bbw_consistent, fk_consistent
from bottomlayer.errors import (
    DuplicateWeight,
    IncompatibleBorel,
    NonDominantWeight,
    NotProper,
    NotSymmetricSetup,
)
from bottomlayer.parabolic import SymmetricPairData, compatible_parabolic, enumerate_parabolics
from bottomlayer.rootdata import LieType

A1, GL2, A2, GL3 = LieType("A", 1), LieType("GL", 2), LieType("A", 2), LieType("GL", 3)
BOREL_A1 = compatible_parabolic(A1, (1, 0))


def test_nu_check_whole_algebra_is_identity():
    p0 = compatible_parabolic(GL3, (0, 0, 0))
    assert ind.nu_check((2, 0, -1), GL3, p0) == ind.NuCheck((2, 0, -1), True)


@pytest.mark.parametrize("m", range(-6, 4))
def test_nu_check_sl2(m):
    res = ind.nu_check((m, 0), A1, BOREL_A1)
    assert res.weight == (-m - 2, 0)
    assert res.dominant == (m <= -2)


@pytest.mark.parametrize("a,b", [(0, 1), (-2, 3), (1, 5)])
def test_nu_check_gl2(a, b):
    p0 = compatible_parabolic(GL2, (1, 0))
    assert ind.nu_check((a, b), GL2, p0).weight == (b - 1, a + 1)


def test_nu_check_errors():
    with pytest.raises(IncompatibleBorel):
        ind.nu_check((0, 0), GL2, compatible_parabolic(GL2, (0, 1)))
    p0 = compatible_parabolic(GL3, (1, 1, 0))
    with pytest.raises(NonDominantWeight):
        ind.nu_check((0, 1, 0), GL3, p0)


def test_nu_check_json():
    assert ind.nu_check((-4, 0), A1, BOREL_A1).to_json() == [2, 0]
    assert ind.nu_check((0, 0), A1, BOREL_A1).to_json() == "non-dominant"


def test_bottom_layer():
    p0 = compatible_parabolic(GL3, (0, 0, 0))
    (entry,) = ind.bottom_layer([((1, 0, 0), 2)], GL3, p0)
    assert entry.nu_check.weight == (1, 0, 0) and entry.contributes
    layer = ind.bottom_layer([((-4, 0), 1), ((0, 0), 1), ((-3, 0), 0)], A1, BOREL_A1)
    assert [e.contributes for e in layer] == [True, False, False]
    with pytest.raises(DuplicateWeight):
        ind.bottom_layer([((1, 0), 1), ((1, 0), 1)], A1, BOREL_A1)


def test_bottom_layer_character_data():
    data = cr.irreducible((1, 0), GL2)
    (entry,) = ind.bottom_layer([((-4, 0), data)], A1, BOREL_A1)
    assert entry.to_json()["multiplicity"] == data.to_json()


@pytest.mark.parametrize(
    "nu,expected",
    [((-1, 0), None), ((2, 0), (0, (2, 0))), ((-4, 0), (1, (2, 0))), ((-2, 0), (1, (0, 0)))],
)
def test_bbw_sl2(nu, expected):
    res = ind.bbw_cohomology(A1, BOREL_A1, nu)
    if expected is None:
        assert res.is_zero and res.to_json() == "zero"
    else:
        assert (res.degree, res.weight) == expected


@pytest.mark.parametrize("k0", [A1, GL2, A2, GL3], ids=str)
def test_bbw_consistency_small(k0):
    assert all(bbw_consistent(k0, p0, nu) for p0, nu in bbw_cases(k0, 3))


@pytest.mark.parametrize("k0", [GL2, A2, GL3], ids=str)
def test_nu_check_injective(k0):
    for p0 in enumerate_parabolics(k0, standard_only=True):
        nus = [nu for q, nu in bbw_cases(k0, 3) if q is p0]
        images = {ind.nu_check(nu, k0, p0).weight for nu in nus}
        assert len(images) == len(nus)


def test_mu_dominance_examples():
    up = ind.mu_dominance([(1, 2), (5, 0)])
    assert up.mu == (3, 5) and up.sums_nondecreasing and up.dominant_and_regular
    down = ind.mu_dominance([(5,), (3,)])
    assert not down.sums_nondecreasing and not down.dominant_and_regular
    for lam in [(0,), (7, -2), (-3, -3, -3)]:
        one = ind.mu_dominance([lam])
        assert one.sums_nondecreasing and one.dominant_and_regular


def test_mu_dominance_literal_version_differs():
    r = ind.mu_dominance([(4,), (4,)])
    assert r.dominant_and_regular and r.sums_nondecreasing
    assert r.literal_check == (3, 5) and not r.literal_dominant_and_regular


@settings(max_examples=200)
@given(st.lists(st.lists(st.integers(-4, 4), min_size=1, max_size=3), min_size=1, max_size=4))
def test_mu_dominance_verdicts_agree(blocks):
    assert ind.mu_dominance([tuple(sorted(b, reverse=True)) for b in blocks]).agree


def test_vz_lambda_examples():
    assert ind.vz_lambda(A1, compatible_parabolic(A1, (1, 0))) == (-2, 0)
    assert ind.vz_lambda(A2, compatible_parabolic(A2, (0, 0, 0))) == (0, 0, 0)


def test_vz_lambda_other_order_not_levi_trivial():
    par = compatible_parabolic(GL3, (1, 1, 0))
    assert ind.vz_lambda(GL3, par, order="gm") == (-2, 1, 1)
    lam = ind.vz_lambda(GL3, par)
    assert all(GL3.system.pair(lam, a) == 0 for a in par.m_roots)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_vz_lambda_levi_trivial(n):
    g = LieType("A", n - 1)
    for par in enumerate_parabolics(g):
        lam = ind.vz_lambda(g, par)
        assert all(g.system.pair(lam, a) == 0 for a in par.m_roots)
        # lambda_p = -2 rho(n)
        two_rho_n = [-sum(a[i] for a in par.n_roots) for i in range(n)]
        assert lam == g.system.canonical(two_rho_n)


def test_vz_bottom_examples():
    assert ind.vz_bottom_nonzero(A1, SymmetricPairData(2, 1, 1), compatible_parabolic(A1, (1, -1)))
    assert ind.vz_bottom_nonzero(A2, SymmetricPairData(3, 2, 1), compatible_parabolic(A2, (0, 0, 0)))
    assert ind.vz_bottom_nonzero(A2, SymmetricPairData(3, 2, 1), compatible_parabolic(A2, (1, -1, 0)))


def test_fernando_kac_examples():
    assert ind.fernando_kac(A1, SymmetricPairData(2, 1, 1), compatible_parabolic(A1, (1, -1))).to_json() == {
        "case": "k+r",
        "a": 0,
        "b": 1,
    }
    res = ind.fernando_kac(A2, SymmetricPairData(3, 2, 1), compatible_parabolic(A2, (1, -1, 0)))
    assert (res.case, res.a, res.b, str(res)) == ("K", 1, 1, "k (a=1, b=1)")


def test_fernando_kac_errors():
    with pytest.raises(NotProper):
        ind.fernando_kac(A2, SymmetricPairData(3, 2, 1), compatible_parabolic(A2, (1, 1, 1)))
    B2 = LieType("B", 2)
    with pytest.raises(NotSymmetricSetup):
        ind.fernando_kac(B2, SymmetricPairData(2, 1, 1), compatible_parabolic(B2, (1, 0)))
    with pytest.raises(NotSymmetricSetup):
        ind.fernando_kac(A2, SymmetricPairData(2, 1, 1), compatible_parabolic(A2, (1, 0, 0)))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_fernando_kac_partition(n):
    g = LieType("A", n - 1)
    for p in range(1, n):
        k = SymmetricPairData(n, p, n - p)
        for h in product(range(-2, 3), repeat=n):
            assert fk_consistent(g, k, h)


def test_bidegree_profile():
    assert ind.bidegree_profile(0, 0, 2) == [(0, 0), (1, 1), (2, 2)]
    assert ind.bidegree_profile(1, 1, 1) == [(1, 1), (2, 2)]
    assert all(x > 0 for x, _ in ind.bidegree_profile(2, 0, 5))
