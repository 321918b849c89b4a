"""One test per acceptance criterion; each prints a single PASS/FAIL line."""
from itertools import product

from conftest import ACCEPTANCE_LINES

from bottomlayer import charring as cr
from bottomlayer import induction as ind
from bottomlayer import oracles
from bottomlayer.checks import (
    all_types,
    bbw_cases,
    bbw_consistent,
    check_kostant,
    check_diagonal_containment,
    fk_consistent,
    diagonal_glp_case,
    random_block_weights,
    random_dominant,
)
from bottomlayer.parabolic import SymmetricPairData, compatible_parabolic, enumerate_parabolics
from bottomlayer.rng import SplitMix64
from bottomlayer.rootdata import LieType, weyl_dim
from bottomlayer.stabilize import finite_type_probe, stabilization_scan
from bottomlayer.towers import ChainSpec


def report(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title} ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_criterion_01_stabilization():
    failures, total = [], 0
    for fam in "ABCD":
        for a, b, c in product(range(3), range(3), range(2)):
            if a + b > 2 or a + b + c == 0:
                continue
            for k in (1, 2, 3):
                total += 1
                r = stabilization_scan(fam, a, b, c, k, 2, 6)
                term = [i for i, row in enumerate(r.rows) if r.n0 is not None and row.n >= r.n0]
                if not (r.stabilized and all(len({m[i] for i in term}) == 1 for m in r.matched.values())):
                    failures.append((fam, a, b, c, k, r.lengths()))
    report(1, "lengths and constituent multiplicities stabilize, n in [2,6]", not failures, f"{total - len(failures)}/{total} scans")


def test_criterion_02_length_eight():
    lengths = stabilization_scan("sl", 1, 1, 0, 2, 2, 6).lengths()
    # independent route: convolve weight maps directly and peel
    peel = []
    for n in range(2, 7):
        t = LieType("GL", n)
        nat = cr.weight_multiplicities((1,) + (0,) * (n - 1), t)
        dual = cr.weight_multiplicities((0,) * (n - 1) + (-1,), t)
        total = cr.WeightMap(t.system, {})
        for x, y in product((nat, dual), repeat=2):
            total = total + cr.convolve(x, y)
        peel.append(cr.decompose(total, validate=True).length)
    ok = lengths == peel == [8] * 5
    report(2, "T^2(V + V*) over sl(n) has length 8, n in [2,6]", ok, f"scan {lengths}, peel {peel}")


def test_criterion_03_bbw_consistency():
    ok = total = 0
    for k0 in (LieType("A", 1), LieType("GL", 2), LieType("A", 2), LieType("GL", 3)):
        for p0, nu in bbw_cases(k0, 6):
            total += 1
            ok += bbw_consistent(k0, p0, nu)
    report(3, "BBW degree and weight agree with nu_check", ok == total, f"{ok}/{total} cases")


def test_criterion_04_mu_dominance():
    rng = SplitMix64(2024)
    agree = sum(ind.mu_dominance(random_block_weights(rng, p_max=4)).agree for _ in range(500))
    report(4, "mu_check dominance-regularity iff nondecreasing sums", agree == 500, f"{agree}/500 tuples, seed 2024")


def test_criterion_05_levi_blocks_and_centralizer():
    bad, total = [], 0
    for p in (2, 3):
        for theta in (1, 2, 4, 8, 16):
            total += 1
            dim, levi, blocks = diagonal_glp_case(p, theta)
            if not (dim == theta * theta and levi == (theta,) * p and blocks == (theta,)):
                bad.append((p, theta, dim, levi, blocks))
    report(5, "p Levi blocks of size theta, centralizer of dim theta^2", not bad, f"{total - len(bad)}/{total} cases")


def test_criterion_06_vz_bottom_layer():
    ok = total = 0
    for n in (2, 3, 4):
        g = LieType("A", n - 1)
        pars = [par for par in enumerate_parabolics(g) if par.proper]
        for p in range(1, n):
            k = SymmetricPairData(n, p, n - p)
            for par in pars:
                total += 1
                ok += ind.vz_bottom_nonzero(g, k, par)
    report(6, "bottom layer of Lambda(k-perp) nonzero, sl(n), n <= 4", ok == total, f"{ok}/{total} parabolics")


def test_criterion_07_fernando_kac():
    example_ok = example_total = 0
    for n in (3, 4, 5):
        g = LieType("A", n - 1)
        for p in range(2, n):
            k = SymmetricPairData(n, p, n - p)
            for head in product(range(-2, 3), repeat=p):
                if sum(head) != 0 or not (min(head) < 0 < max(head)):
                    continue
                example_total += 1
                h = head + (0,) * (n - p)
                example_ok += ind.fernando_kac(g, k, compatible_parabolic(g, h)).case == "K"
    sweep_ok = sweep_total = 0
    for n in (2, 3, 4, 5):
        g = LieType("A", n - 1)
        for p in range(1, n):
            k = SymmetricPairData(n, p, n - p)
            for h in product(range(-2, 3), repeat=n):
                sweep_total += 1
                sweep_ok += fk_consistent(g, k, h)
    ok = example_ok == example_total > 0 and sweep_ok == sweep_total
    report(7, "case K for mixed-sign h in sl(p); k+r iff a=0, k+rbar iff b=0", ok, f"example {example_ok}/{example_total}, sweep {sweep_ok}/{sweep_total}")


def test_criterion_08_oracles():
    kost_ok, kost_total = check_kostant(max_rank=3, bound=8)
    rng = SplitMix64(8)
    types = all_types(3)
    dims_ok = 0
    for _ in range(200):
        t = rng.choice(types)
        a, b = random_dominant(rng, t, 3), random_dominant(rng, t, 3)
        dims_ok += cr.tensor(cr.irreducible(a, t), cr.irreducible(b, t)).dim == weyl_dim(t, a) * weyl_dim(t, b)
    ok = kost_ok == kost_total and dims_ok == 200
    report(8, "Freudenthal = Kostant; tensor dims = Weyl products", ok, f"Kostant {kost_ok}/{kost_total}, tensor {dims_ok}/200")


def test_criterion_09_diagonal_containment():
    ok, total = check_diagonal_containment(max_m=3, size=4, thetas=(1, 2, 3))
    report(9, "V(lam) occurs in V(pad lam) restricted to diagonal gl(m)", ok == total, f"{ok}/{total} cases")


def test_criterion_10_finite_type_probe():
    chain = ChainSpec.parse("glptheta:p=2,thetas=2,2")
    rows, ok = [], True
    for label, e in (("E trivial", ()), ("E=[0,0];[1,0]", [(0, 0), (1, 0)])):
        r = finite_type_probe(chain, "[1,-1]", e, t_max=3)
        for t, lengths in r.t_rows.items():
            constant = len(set(lengths)) == 1
            ok &= constant
            rows.append(f"{label} t={t}: {list(lengths)}")
    report(10, "per-t lengths constant across levels gl(4), gl(8)", ok, "; ".join(rows))
