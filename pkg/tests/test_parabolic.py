from fractions import Fraction
from itertools import product
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from bottomlayer.checks import diagonal_glp_case
from bottomlayer.errors import InvalidBlocks, NotInCartan, ParseError
from bottomlayer.linalg import Mat
from bottomlayer.oracles import classical_algebra_basis
from bottomlayer.parabolic import (
    SymmetricPairData,
    TorusElement,
    centralizer,
    compatible_parabolic,
    enumerate_parabolics,
    intersection_dims,
    is_abelian,
    s_value,
    triangular_decomposition,
)
from bottomlayer.rootdata import LieType
from bottomlayer.towers import diagonal_embed


def test_central_h_gives_whole_algebra():
    par = compatible_parabolic(LieType("GL", 3), (1, 1, 1))
    assert not par.proper
    assert len(par.m_roots) == 6
    assert [b.size for b in par.levi_blocks] == [3]


def test_gl2_borel():
    par = compatible_parabolic(LieType("GL", 2), (1, -1))
    assert par.n_roots == ((1, -1),)
    assert par.m_roots == ()
    assert s_value(par) == 1


def test_gl4_alternating_h():
    par = compatible_parabolic(LieType("GL", 4), (1, -1, 1, -1))
    assert sorted(b.coords for b in par.levi_blocks) == [(0, 2), (1, 3)]
    assert len(par.m_roots) == 4


def test_s_value_against_k0():
    gl4 = LieType("GL", 4)
    k0 = [(1, -1, 0, 0), (0, 0, 1, -1)]
    par = compatible_parabolic(gl4, (2, 1, 1, 0), k0_roots=k0)
    assert par.s == 2
    assert len(par.n_roots) == 5


def test_imaginary_part_ignored():
    h = TorusElement.parse("[1,-1,0]+i[5,0,0]")
    a = compatible_parabolic(LieType("A", 2), h)
    b = compatible_parabolic(LieType("A", 2), (1, -1, 0))
    assert a.n_roots == b.n_roots


def test_torus_parse():
    assert TorusElement.parse("h=[1,-1/2]").real == (Fraction(1), Fraction(-1, 2))
    with pytest.raises(ParseError):
        TorusElement.parse("1,2")
    with pytest.raises(NotInCartan):
        compatible_parabolic(LieType("GL", 3), (1, 0))


def test_type_b_levi_blocks():
    par = compatible_parabolic(LieType("B", 3), (1, 0, -1))
    labels = sorted(b.label for b in par.levi_blocks)
    assert labels == ["B1", "GL2"]


def _fubini(n: int) -> int:
    # ordered set partitions
    f = [1]
    for m in range(1, n + 1):
        f.append(sum(comb(m, k) * f[m - k] for k in range(1, m + 1)))
    return f[n]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_parabolic_count_gl(n):
    assert len(enumerate_parabolics(LieType("GL", n))) == _fubini(n)
    assert len(enumerate_parabolics(LieType("GL", n), standard_only=True)) == 2 ** (n - 1)


@pytest.mark.parametrize("t", [LieType("B", 2), LieType("C", 2), LieType("D", 3)], ids=str)
def test_standard_parabolics_bcd(t):
    # standard parabolics correspond to subsets of simple roots
    assert len(enumerate_parabolics(t, standard_only=True)) == 2 ** t.rank


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["GL3", "A3", "B2", "C3", "D3"]), st.data())
def test_partition_and_opposition(name, data):
    t = LieType.parse(name)
    h = [data.draw(st.integers(-3, 3)) for _ in range(t.n)]
    par = compatible_parabolic(t, h)
    assert sorted(par.n_roots + par.m_roots + par.nbar_roots) == sorted(t.system.roots)
    assert {tuple(-x for x in a) for a in par.n_roots} == set(par.nbar_roots)
    assert 2 * par.s == 2 * len(t.system.positive) - len(par.m_roots)


def test_centralizer_examples():
    gens = [diagonal_embed(x, 2) for x in classical_algebra_basis(LieType("GL", 2))]
    c = centralizer(gens, 4)
    assert c.dimension == 4 and c.blocks == (2,)
    assert centralizer(classical_algebra_basis(LieType("GL", 3)), 3).dimension == 1
    assert centralizer([], 3).dimension == 9
    assert is_abelian(list(c.basis)) is False


def test_centralizer_of_torus():
    diag = [Mat.unit(3, i, i) for i in range(3)]
    c = centralizer(diag, 3)
    assert c.dimension == 3
    assert is_abelian(list(c.basis))


@pytest.mark.parametrize("p,theta", [(2, 1), (2, 2), (2, 4), (3, 2), (2, 8)])
def test_levi_blocks_and_centralizer_of_diagonal_glp(p, theta):
    dim, levi, blocks = diagonal_glp_case(p, theta)
    assert dim == theta * theta
    assert levi == (theta,) * p
    assert blocks == (theta,)


def test_triangular_decomposition():
    sp = triangular_decomposition(2, 1, 1)
    assert sp.r_span == ((0, 1),) and sp.rbar_span == ((1, 0),)
    with pytest.raises(InvalidBlocks):
        SymmetricPairData(3, 2, 2)
    assert len(triangular_decomposition(5, 2, 3).k_roots()) == 2 + 6


@pytest.mark.parametrize(
    "n,p,h,ab",
    [(2, 1, (1, -1), (0, 1)), (3, 2, (1, -1, 0), (1, 1)), (3, 1, (0, 0, 0), (0, 0)), (3, 1, (-1, 0, 0), (2, 0))],
)
def test_intersection_dims(n, p, h, ab):
    sp = SymmetricPairData(n, p, n - p)
    assert intersection_dims(sp, compatible_parabolic(LieType("A", n - 1), h)) == ab


def test_intersection_dims_brute_force():
    # count matrix positions directly
    for n in (3, 4):
        for p in range(1, n):
            sp = SymmetricPairData(n, p, n - p)
            for h in product(range(-1, 2), repeat=n):
                a = sum(1 for i, j in sp.rbar_span if h[i] - h[j] > 0)
                b = sum(1 for i, j in sp.r_span if h[i] - h[j] > 0)
                assert intersection_dims(sp, compatible_parabolic(LieType("A", n - 1), h)) == (a, b)
