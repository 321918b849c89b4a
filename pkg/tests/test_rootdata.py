from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bottomlayer.errors import NonDominantWeight, ParseError, WeightLengthMismatch
from bottomlayer.oracles import brute_force_positive_roots, direct_weyl_group_size
from bottomlayer.rootdata import (
    LieType,
    SignedPermutation,
    dot_act,
    dual_weight,
    is_dominant,
    levi_longest_element,
    longest_element,
    parse_weight,
    positive_roots,
    rho,
    weyl_dim,
)
from bottomlayer.charring import weight_multiplicities

TYPES = [LieType(f, r) for f in ("GL", "A", "B", "C", "D") for r in range(1, 5) if not (f == "D" and r < 2)]


@pytest.mark.parametrize("t", TYPES, ids=str)
def test_root_counts(t):
    n = t.n
    expected = {"GL": n * (n - 1) // 2, "A": n * (n - 1) // 2, "B": n * n, "C": n * n, "D": n * (n - 1)}
    assert len(positive_roots(t)) == expected[t.family]


@pytest.mark.parametrize("t", TYPES, ids=str)
def test_roots_match_matrix_algebra(t):
    assert brute_force_positive_roots(t) == set(positive_roots(t))


def test_c2_roots():
    assert set(positive_roots(LieType("C", 2))) == {(1, -1), (1, 1), (2, 0), (0, 2)}


def test_rho_values():
    assert rho(LieType("GL", 3)) == (2, 1, 0)
    assert rho(LieType("B", 2)) == (Fraction(3, 2), Fraction(1, 2))
    assert rho(LieType("C", 2)) == (2, 1)
    assert rho(LieType("D", 3)) == (2, 1, 0)


@pytest.mark.parametrize("t", TYPES, ids=str)
def test_longest_element(t):
    w = longest_element(t)
    neg = {tuple(-x for x in a) for a in positive_roots(t)}
    assert all(w(a) in neg for a in positive_roots(t))
    assert w == t.system.longest


@pytest.mark.parametrize("t,order", [(LieType("A", 2), 6), (LieType("B", 3), 48), (LieType("C", 2), 8), (LieType("D", 4), 192)], ids=str)
def test_weyl_group_order(t, order):
    assert direct_weyl_group_size(t.system) == order


def test_gl2_dot_swap():
    swap = SignedPermutation.from_perm((1, 0))
    assert dot_act(swap, (2, 5), LieType("GL", 2)) == (4, 3)


def test_levi_longest():
    w = levi_longest_element([LieType("GL", 2), LieType("GL", 1)], LieType("GL", 3))
    assert w((1, 2, 3)) == (2, 1, 3)


def test_weyl_dims():
    assert weyl_dim(LieType("GL", 3), (1, 0, -1)) == 8
    assert weyl_dim(LieType("B", 3), (1, 0, 0)) == 7
    assert weyl_dim(LieType("C", 2), (1, 1)) == 5
    assert weyl_dim(LieType("D", 4), (1, 1, 0, 0)) == 28
    with pytest.raises(NonDominantWeight):
        weyl_dim(LieType("GL", 2), (0, 1))


def test_dual_weight_d_odd_rank():
    # -w0 flips the sign of the last coordinate in type D of odd rank
    assert dual_weight((1, 1, 1), LieType("D", 3)) == (1, 1, -1)
    assert dual_weight((1, 0, 0), LieType("D", 3)) == (1, 0, 0)


def test_parse_errors():
    with pytest.raises(ParseError):
        LieType.parse("E8")
    with pytest.raises(ParseError):
        parse_weight("1,2")
    with pytest.raises(WeightLengthMismatch):
        is_dominant((1, 0), LieType("GL", 3))


def test_sl_weights_are_projective():
    t = LieType("A", 2)
    assert t.system.canonical((3, 2, 1)) == (2, 1, 0)
    assert weyl_dim(t, (3, 2, 1)) == weyl_dim(t, (2, 1, 0)) == 8


@st.composite
def type_and_weight(draw, max_rank=3):
    t = draw(st.sampled_from([t for t in TYPES if t.rank <= max_rank]))
    lam = tuple(draw(st.integers(-4, 4)) for _ in range(t.n))
    return t, lam


@settings(max_examples=150, deadline=None)
@given(type_and_weight(), st.data())
def test_dot_action_composes(tw, data):
    t, lam = tw
    W = t.system.weyl_group()
    w1 = data.draw(st.sampled_from(W))
    w2 = data.draw(st.sampled_from(W))
    assert dot_act(w1, dot_act(w2, lam, t), t) == dot_act(w1 @ w2, lam, t)


@settings(max_examples=100, deadline=None)
@given(type_and_weight())
def test_to_dominant(tw):
    t, lam = tw
    s = t.system
    dom, w, steps = s.to_dominant(lam)
    assert s.is_dominant(dom)
    assert w(lam) == dom
    assert steps == s.length(w) or not s.is_regular(lam)


@settings(max_examples=60, deadline=None)
@given(type_and_weight(max_rank=3))
def test_weyl_dim_equals_weight_count(tw):
    t, lam = tw
    dom = t.system.canonical(t.system.to_dominant(lam)[0])
    if any(isinstance(x, Fraction) for x in dom) or sum(map(abs, dom)) > 6:
        return
    assert weyl_dim(t, dom) == weight_multiplicities(dom, t).dim


@pytest.mark.parametrize("t", TYPES, ids=str)
def test_rho_dominant_regular(t):
    s = t.system
    assert s.is_dominant(s.rho) and s.is_regular(s.rho)
