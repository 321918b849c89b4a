from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from bottomlayer import charring as cr
from bottomlayer.charring import Character, TorusMap, WeightMap
from bottomlayer.errors import InvalidModule, NonDominantWeight, NotTorusCompatible, TypeMismatch
from bottomlayer.oracles import gt_pattern_count, kostant_multiplicity, symmetric_power_enumerated
from bottomlayer.rootdata import LieType, natural_weight, weyl_dim

GL3 = LieType("GL", 3)
SMALL = [LieType(f, r) for f in ("GL", "A", "B", "C", "D") for r in (1, 2, 3) if not (f == "D" and r < 2)]


def test_gl3_natural_times_dual():
    c = cr.tensor(cr.irreducible((1, 0, 0), GL3), cr.irreducible((0, 0, -1), GL3))
    assert c.entries == {(1, 0, -1): 1, (0, 0, 0): 1}


def test_sl2_clebsch_gordan():
    A1 = LieType("A", 1)
    c = cr.tensor(cr.irreducible((2, 0), A1), cr.irreducible((1, 0), A1))
    assert c.entries == {(3, 0): 1, (1, 0): 1}


def test_b3_natural_squared():
    B3 = LieType("B", 3)
    c = cr.tensor(cr.irreducible((1, 0, 0), B3), cr.irreducible((1, 0, 0), B3))
    assert c.entries == {(2, 0, 0): 1, (1, 1, 0): 1, (0, 0, 0): 1}
    assert c.dim == 49


def test_sym_square_gl2():
    wm = cr.weight_multiplicities((1, 0), LieType("GL", 2))
    assert dict(cr.sym_power(wm, 2).entries) == {(2, 0): 1, (1, 1): 1, (0, 2): 1}
    assert dict(cr.sym_power(wm, 0).entries) == {(0, 0): 1}
    assert cr.sym_power(wm, 1) == wm


def test_branch_gl3_to_gl2():
    tm = TorusMap.from_function(lambda j: j if j < 2 else None, 3, 2)
    c = cr.branch(cr.irreducible((1, 1, 0), GL3), tm, LieType("GL", 2))
    assert c.entries == {(1, 1): 1, (1, 0): 1}


def test_restrict_incompatible_raises():
    # dropping the first coordinate of gl(3) weights is not a Levi restriction to gl(2)
    tm = TorusMap.from_function(lambda j: 0 if j == 0 else None, 3, 2)
    with pytest.raises(NotTorusCompatible):
        cr.restrict(cr.weight_multiplicities((1, 0, 0), GL3), tm, LieType("GL", 2))


def test_decompose_rejects_non_module():
    with pytest.raises(InvalidModule):
        cr.decompose(WeightMap(GL3.system, {(1, 0, 0): 1}), validate=True)


def test_character_requires_dominant():
    with pytest.raises(NonDominantWeight):
        Character(GL3.system, {(0, 1, 0): 1})


def test_mixed_systems_rejected():
    with pytest.raises(TypeMismatch):
        cr.tensor(cr.trivial(GL3), cr.trivial(LieType("B", 3)))


@given(st.dictionaries(st.integers(-3, 3), st.integers(-3, 3), max_size=4), st.integers(0, 4))
def test_sym_power_integral_on_virtual_maps(entries, t):
    # Newton's recursion stays integral even for virtual weight maps
    wm = WeightMap(LieType("GL", 1).system, {(w,): m for w, m in entries.items() if m})
    out = cr.sym_power(wm, t)
    assert all(isinstance(m, int) for m in out.entries.values())


def test_json_roundtrip():
    c = cr.tensor(cr.irreducible((1, 0, 0), GL3), cr.irreducible((1, 0, 0), GL3))
    assert cr.character_from_json(cr.character_json(c), GL3) == c


@pytest.mark.parametrize("lam", [(2, 1, 0), (3, 1, -1), (2, 2, 0, -1), (1, 1, 1, 0)])
def test_gl_dimension_vs_gelfand_tsetlin(lam):
    t = LieType("GL", len(lam))
    assert weyl_dim(t, lam) == gt_pattern_count(lam) == cr.weight_multiplicities(lam, t).dim


@pytest.mark.parametrize("t", [LieType("GL", 3), LieType("B", 2), LieType("C", 3), LieType("D", 3)], ids=str)
def test_freudenthal_vs_kostant(t):
    s = t.system
    lams = [(2,) + (1,) * (t.n - 1), (2,) + (0,) * (t.n - 1), (1,) * t.n]
    for lam in lams:
        if not s.is_dominant(lam):
            continue
        wm = cr.weight_multiplicities(lam, t)
        for mu in wm.dominant_part():
            assert wm[mu] == kostant_multiplicity(lam, mu, t)


@st.composite
def dominant(draw, t, size=3):
    s = t.system
    while True:
        lam = tuple(draw(st.integers(-size, size)) for _ in range(t.n))
        if t.family == "A":
            lam = lam[:-1] + (0,)
        if s.is_dominant(lam) and sum(map(abs, lam)) <= 2 * size:
            return lam


@st.composite
def type_pair(draw):
    t = draw(st.sampled_from(SMALL))
    return t, draw(dominant(t)), draw(dominant(t, 2))


@settings(max_examples=60, deadline=None)
@given(type_pair())
def test_tensor_dimension_multiplicative(tp):
    t, a, b = tp
    x, y = cr.irreducible(a, t), cr.irreducible(b, t)
    prod = cr.tensor(x, y)
    assert prod.dim == x.dim * y.dim
    assert prod == cr.tensor_klimyk(x, y)
    assert prod == cr.tensor(y, x)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_decompose_inverts_weight_map(t, data):
    entries = Counter()
    for _ in range(data.draw(st.integers(1, 5))):
        entries[data.draw(dominant(t))] += 1
    c = Character(t.system, entries)
    assert cr.decompose(c.weight_map(), validate=True) == c


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_dualize_involution(t, data):
    c = cr.irreducible(data.draw(dominant(t)), t)
    assert cr.dualize(cr.dualize(c)) == c
    assert cr.dualize(c).dim == c.dim


@pytest.mark.parametrize("t", [t for t in SMALL if weyl_dim(t, natural_weight(t)) <= 6], ids=str)
@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_sym_power_vs_enumeration(t, k):
    wm = cr.weight_multiplicities(natural_weight(t), t)
    assert Counter(cr.sym_power(wm, k).entries) == +symmetric_power_enumerated(dict(wm.entries), k)


def test_exterior_algebra_sl2():
    A1 = LieType("A", 1)
    wedge = cr.exterior_algebra([(1, -1), (-1, 1)], A1.system)
    assert wedge.dim == 4
    assert cr.decompose(wedge).entries == {(2, 0): 1, (0, 0): 1}
