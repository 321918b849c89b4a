from collections import Counter
from itertools import product

import pytest

from bottomlayer import charring as cr
from bottomlayer.caps import Caps
from bottomlayer.errors import CapExceeded, IncompatibleBorel, ParseError, WeightLengthMismatch
from bottomlayer.rootdata import LieType, natural_weight, weyl_dim
from bottomlayer.stabilize import (
    finite_type_probe,
    parse_family,
    report_json,
    stabilization_scan,
    tensor_module_char,
)
from bottomlayer.towers import ChainSpec


def brute_force_length(n: int, summands: list[tuple], k: int) -> int:
    """Enumerate the weights of T^k(sum of modules) basis vector by basis vector, then peel."""
    t = LieType("GL", n)
    basis = [w for lam in summands for w, m in cr.weight_multiplicities(lam, t).entries.items() for _ in range(m)]
    weights = Counter(tuple(map(sum, zip(*ws))) for ws in product(basis, repeat=k))
    return cr.decompose(cr.WeightMap(t.system, dict(weights)), validate=True).length


@pytest.mark.parametrize("n", [2, 3, 4])
def test_length_eight_against_enumeration(n):
    nat = natural_weight(LieType("GL", n))
    dual = tuple(-x for x in reversed(nat))
    assert brute_force_length(n, [nat, dual], 2) == 8
    assert tensor_module_char("sl", n, 1, 1, 0, 2).length == 8


@pytest.mark.parametrize("n", [2, 3, 5])
def test_k1_lengths(n):
    assert tensor_module_char("sl", n, 1, 1, 1, 1).length == 3
    assert tensor_module_char("sl", n, 2, 0, 0, 2).length == 8


@pytest.mark.parametrize("family", ["A", "B", "C", "D"])
def test_dimension_bookkeeping(family):
    for n in (2, 3):
        t = LieType("GL", n) if family == "A" else LieType(family, n)
        d = weyl_dim(t, natural_weight(t))
        for a, b, c, k in [(1, 1, 1, 2), (0, 1, 1, 3), (2, 0, 0, 2)]:
            assert tensor_module_char(family, n, a, b, c, k).dim == ((a + b) * d + c) ** k


def test_scan_sl_example():
    r = stabilization_scan("sl", 1, 1, 0, 2, 2, 6)
    assert r.lengths() == [8] * 5
    assert r.stabilized and r.n0 == 2 and r.window == (2, 6)
    assert all(len(set(m)) == 1 for m in r.matched.values())
    tsv = r.to_tsv().splitlines()
    assert tsv[0].startswith("n\tlength") and tsv[-1] == "# stabilized: true, n0: 2"


@pytest.mark.parametrize("family", ["B", "C", "D"])
def test_self_dual_families(family):
    x = stabilization_scan(family, 1, 0, 1, 2, 2, 4)
    y = stabilization_scan(family, 0, 1, 1, 2, 2, 4)
    assert x.lengths() == y.lengths() and x.matched == y.matched


def test_scan_small_window_not_stabilized():
    # a single level cannot witness stabilization
    r = stabilization_scan("A", 1, 0, 0, 2, 3, 3)
    assert not r.stabilized and r.n0 is None and r.window is None


def test_padding_recorded():
    assert "append" in stabilization_scan("C", 1, 0, 0, 1, 2, 3).padding
    assert "insert" in stabilization_scan("GL", 1, 0, 0, 1, 2, 3).padding


def test_caps_and_errors():
    with pytest.raises(CapExceeded):
        tensor_module_char("A", 3, 1, 1, 0, 5, Caps(k=4))
    with pytest.raises(CapExceeded):
        tensor_module_char("B", 9, 1, 0, 0, 1, Caps(dim=16))
    with pytest.raises(ParseError):
        parse_family("E")
    with pytest.raises(ValueError):
        stabilization_scan("A", 1, 0, 0, 1, 1, 3)


def test_probe_trivial_low_degrees():
    r = finite_type_probe(ChainSpec.parse("glptheta:p=2,thetas=2,2"), "[1,-1]", t_max=1)
    assert r.levels == (2, 3)
    assert r.t_rows[0] == (1, 1)
    assert r.t_rows[1][0] == r.t_rows[1][1]
    assert r.bounded_per_t == {0: True, 1: True}


def test_probe_root_chain():
    r = finite_type_probe(ChainSpec.root("GL", 2, 4), "[1,-1]", t_max=2)
    assert r.t_rows[0] == (1, 1, 1)
    assert all(r.bounded_per_t.values())


def test_probe_json_and_tsv():
    r = finite_type_probe(ChainSpec.parse("glptheta:p=2,thetas=2"), "[1,-1]", t_max=1, n_start=1)
    doc = report_json(r)
    assert '"t_rows"' in doc and '"chain": "glptheta:p=2,thetas=2"' in doc
    assert r.to_tsv().splitlines()[0] == "t\tn=1\tn=2\tbounded"


def test_probe_errors():
    chain = ChainSpec.parse("glptheta:p=2,thetas=2,2")
    with pytest.raises(IncompatibleBorel):
        finite_type_probe(chain, "[1,1]")
    with pytest.raises(WeightLengthMismatch):
        finite_type_probe(chain, "[1,-1]", [(0,)])
    with pytest.raises(CapExceeded):
        finite_type_probe(chain, "[1,-1]", t_max=9)
