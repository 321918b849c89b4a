"""Executable property checks behind ``bottomlayer verify``.

Every check returns ``(passed, total)``. Sweeps are kept small enough that
``verify --suite all`` finishes in about a minute; the acceptance tests run
the full-size versions.
"""
from __future__ import annotations

from collections import Counter
from itertools import product
from typing import Callable, Iterator

from . import charring as cr
from . import induction as ind
from . import oracles
from .parabolic import (
    SymmetricPairData,
    centralizer,
    compatible_parabolic,
    enumerate_parabolics,
)
from .rng import SplitMix64
from .rootdata import LieType, add, longest_element, natural_weight, scale, weyl_dim
from .stabilize import stabilization_scan, tensor_module_char
from .towers import ChainSpec, branch_diagonal, build_tower, diagonal_embed, natural_restriction, pad_weight

Check = Callable[[], tuple[int, int]]


def _count(results: Iterator[bool]) -> tuple[int, int]:
    ok = total = 0
    for r in results:
        total += 1
        ok += bool(r)
    return ok, total


def all_types(max_rank: int) -> list[LieType]:
    out = []
    for fam in ("GL", "A", "B", "C", "D"):
        for r in range(1, max_rank + 1):
            if fam == "D" and r < 2:
                continue
            out.append(LieType(fam, r))
    return out


def dominant_weights(t: LieType, bound: int) -> list[tuple]:
    """Dominant weights with entries in ``[-bound, bound]`` (last entry 0 for sl)."""
    s = t.system
    out = []
    for w in product(range(-bound, bound + 1), repeat=t.n):
        if t.family == "A" and w[-1] != 0:
            continue
        if s.is_dominant(w):
            out.append(w)
    return out


def random_dominant(rng: SplitMix64, t: LieType, size: int) -> tuple:
    """Random dominant weight with ``|lam|_1 <= size``."""
    n = t.n
    parts = sorted((rng.randint(0, size) for _ in range(n)), reverse=True)
    while sum(parts) > size:
        i = max(range(n), key=lambda j: parts[j])
        parts[i] -= 1
        parts.sort(reverse=True)
    if t.family == "GL" and rng.below(2):
        shift = parts[-1]
        parts = [p - shift for p in parts]
        parts = [p - rng.randint(0, 1) for p in parts]
        parts.sort(reverse=True)
    if t.family == "A":
        parts = [p - parts[-1] for p in parts]
    return tuple(parts)


# --------------------------------------------------------------------------
# rootdata


def check_root_counts() -> tuple[int, int]:
    def expected(t: LieType) -> int:
        n = t.n
        return {"GL": n * (n - 1) // 2, "A": n * (n - 1) // 2, "B": n * n, "C": n * n, "D": n * (n - 1)}[t.family]

    return _count(len(t.system.positive) == expected(t) for t in all_types(6))


def check_longest() -> tuple[int, int]:
    def ok(t: LieType) -> bool:
        w = longest_element(t)
        neg = {scale(-1, a) for a in t.system.positive}
        return all(t.system.canonical(w(a)) in neg or w(a) in neg for a in t.system.positive)

    return _count(ok(t) for t in all_types(6))


def check_longest_generic() -> tuple[int, int]:
    return _count(longest_element(t) == t.system.longest for t in all_types(5))


def check_dot_composition(seed: int = 1, samples: int = 200) -> tuple[int, int]:
    rng = SplitMix64(seed)
    types = all_types(4)

    def one() -> bool:
        t = rng.choice(types)
        s = t.system
        W = s.weyl_group()
        w1, w2 = rng.choice(W), rng.choice(W)
        lam = tuple(rng.randint(-4, 4) for _ in range(t.n))
        return s.dot(w1, s.dot(w2, lam)) == s.dot(w1 @ w2, lam)

    return _count(one() for _ in range(samples))


def check_rho() -> tuple[int, int]:
    return _count(t.system.is_dominant(t.system.rho) and t.system.is_regular(t.system.rho) for t in all_types(6))


def check_weyl_dim_vs_freudenthal() -> tuple[int, int]:
    return _count(
        weyl_dim(t, lam) == cr.weight_multiplicities(lam, t).dim
        for t in all_types(3)
        for lam in dominant_weights(t, 2)
    )


def check_roots_vs_matrices() -> tuple[int, int]:
    return _count(oracles.brute_force_positive_roots(t) == set(t.system.positive) for t in all_types(4))


# --------------------------------------------------------------------------
# charring


def _small_types() -> list[LieType]:
    return [t for t in all_types(3) if t.family != "A" or t.rank <= 3]


def check_tensor_dims(seed: int = 2, samples: int = 60) -> tuple[int, int]:
    rng = SplitMix64(seed)
    types = _small_types()

    def one() -> bool:
        t = rng.choice(types)
        a = cr.irreducible(random_dominant(rng, t, 3), t)
        b = cr.irreducible(random_dominant(rng, t, 3), t)
        return cr.tensor(a, b).dim == a.dim * b.dim

    return _count(one() for _ in range(samples))


def check_tensor_klimyk(seed: int = 3, samples: int = 40) -> tuple[int, int]:
    rng = SplitMix64(seed)
    types = _small_types()

    def one() -> bool:
        t = rng.choice(types)
        a = cr.irreducible(random_dominant(rng, t, 3), t)
        b = cr.irreducible(random_dominant(rng, t, 2), t)
        return cr.tensor(a, b) == cr.tensor_klimyk(a, b)

    return _count(one() for _ in range(samples))


def check_decompose_roundtrip(seed: int = 4, samples: int = 40) -> tuple[int, int]:
    rng = SplitMix64(seed)
    types = _small_types()

    def one() -> bool:
        t = rng.choice(types)
        entries: Counter = Counter()
        for _ in range(rng.randint(1, 5)):
            entries[random_dominant(rng, t, 6)] += 1
        ch = cr.Character(t.system, entries)
        return cr.decompose(ch.weight_map(), validate=True) == ch

    return _count(one() for _ in range(samples))


def check_dual_involution() -> tuple[int, int]:
    return _count(
        cr.dualize(cr.dualize(cr.irreducible(lam, t))) == cr.irreducible(lam, t)
        for t in all_types(3)
        for lam in dominant_weights(t, 2)
    )


def check_kostant(max_rank: int = 2, bound: int = 8) -> tuple[int, int]:
    """Freudenthal against Kostant's partition function for ``|lam + rho|_1 <= bound``."""

    def cases():
        for fam in ("GL", "B", "C", "D"):
            for r in range(1, max_rank + 1):
                if fam == "D" and r < 2:
                    continue
                t = LieType(fam, r)
                rho = t.system.rho
                for lam in dominant_weights(t, bound):
                    if sum(abs(x) for x in add(lam, rho)) > bound:
                        continue
                    wm = cr.weight_multiplicities(lam, t)
                    for mu in wm.dominant_part():
                        yield wm[mu] == oracles.kostant_multiplicity(lam, mu, t)

    return _count(cases())


def check_restrict_dims() -> tuple[int, int]:
    def cases():
        for m, theta in ((1, 2), (2, 2), (1, 3), (3, 2)):
            big = LieType("GL", m * theta)
            for lam in dominant_weights(big, 1):
                yield branch_diagonal(lam, m, theta).dim == weyl_dim(big, lam)

    return _count(cases())


def check_sym_power() -> tuple[int, int]:
    def cases():
        for t in all_types(3):
            if weyl_dim(t, natural_weight(t)) > 6:
                continue
            wm = cr.weight_multiplicities(natural_weight(t), t)
            for k in range(4):
                yield dict(cr.sym_power(wm, k).entries) == dict(oracles.symmetric_power_enumerated(dict(wm.entries), k))

    return _count(cases())


# --------------------------------------------------------------------------
# towers


def check_pad() -> tuple[int, int]:
    def cases():
        for m in (1, 2, 3):
            t = LieType("GL", m)
            for lam in dominant_weights(t, 2):
                for N in range(m, m + 3):
                    p = pad_weight(lam, m, N)
                    yield LieType("GL", N).system.is_dominant(p)
                    yield pad_weight(p, N, N + 2) == pad_weight(lam, m, N + 2)

    return _count(cases())


def check_diagonal_containment(max_m: int = 3, size: int = 4, thetas=(2, 3)) -> tuple[int, int]:
    def cases():
        for m in range(1, max_m + 1):
            t = LieType("GL", m)
            for lam in dominant_weights(t, size):
                if sum(map(abs, lam)) > size:
                    continue
                for theta in thetas:
                    big = pad_weight(lam, m, m * theta)
                    c = branch_diagonal(big, m, theta)
                    yield cr.mult(c, lam) >= 1 and c.dim == weyl_dim(LieType("GL", m * theta), big)

    return _count(cases())


def check_tower_brackets() -> tuple[int, int]:
    chains = [ChainSpec.diagonal(2, (2, 2)), ChainSpec.diagonal(1, (2, 3))]
    chains += [ChainSpec.root(f, 2 if f == "D" else 1, 3) for f in ("GL", "A", "B", "C", "D")]
    return _count(all(e.is_homomorphism() and e.is_injective() for e in build_tower(c, verify=False)) for c in chains)


def check_natural_restriction() -> tuple[int, int]:
    expect = {"GL": (1, 0, 1), "A": (1, 0, 1), "B": (1, 0, 2), "C": (1, 0, 2), "D": (1, 0, 2)}
    cases = [natural_restriction(ChainSpec.root(f, 2, 3), 1) == e for f, e in expect.items()]
    cases.append(natural_restriction(ChainSpec.diagonal(2, (3,)), 1) == (3, 0, 0))
    return _count(iter(cases))


# --------------------------------------------------------------------------
# parabolic


def check_partition() -> tuple[int, int]:
    def cases():
        for t in all_types(3):
            for par in enumerate_parabolics(t):
                roots = par.n_roots + par.m_roots + par.nbar_roots
                yield len(par.n_roots) == len(par.nbar_roots) and sorted(roots) == sorted(t.system.roots)

    return _count(cases())


def diagonal_glp_case(p: int, theta: int) -> tuple[int, tuple[int, ...], tuple[int, ...] | None]:
    """Levi block sizes and centralizer data for ``gl(p)`` diagonal in ``gl(p * theta)``."""
    N = p * theta
    h = [p - 1 - (j % p) for j in range(N)]
    par = compatible_parabolic(LieType("GL", N), h)
    gens = [diagonal_embed(x, theta) for x in oracles.classical_algebra_basis(LieType("GL", p))]
    c = centralizer(gens, N)
    return c.dimension, tuple(b.size for b in par.levi_blocks), c.blocks


def check_diagonal_glp(ps=(2, 3), thetas=(1, 2, 4)) -> tuple[int, int]:
    def cases():
        for p in ps:
            for theta in thetas:
                dim, levi, blocks = diagonal_glp_case(p, theta)
                yield dim == theta * theta and levi == (theta,) * p and blocks == (theta,)

    return _count(cases())


def check_s_value() -> tuple[int, int]:
    def cases():
        for t in all_types(3):
            for par in enumerate_parabolics(t):
                dim_k = 2 * len(t.system.positive)
                dim_m = len(par.m_roots)
                yield 2 * par.s == dim_k - dim_m and par.s == sum(
                    1 for a in t.system.positive if par.h.pair(a) > 0 or par.h.pair(scale(-1, a)) > 0
                )

    return _count(cases())


def check_nilradical_tower() -> tuple[int, int]:
    """Roots of ``g_n`` in ``n_(n+1)`` are exactly ``n_n`` when ``h`` is pulled back along the tower."""

    def cases():
        for chain, h in ((ChainSpec.diagonal(2, (2, 2)), (1, -1)), (ChainSpec.diagonal(3, (2,)), (2, 0, 1))):
            for n in range(1, chain.levels):
                m = chain.level_type(n).n
                hs = [h[j % len(h)] for j in range(m)]
                hb = [h[j % len(h)] for j in range(chain.level_type(n + 1).n)]
                small = compatible_parabolic(chain.level_type(n), hs)
                big = set(compatible_parabolic(chain.level_type(n + 1), hb).n_roots)
                for a in small.system.roots:
                    i, j = a.index(1), a.index(-1)
                    img = []
                    for b in range(chain.thetas[n - 1]):
                        w = [0] * len(hb)
                        w[b * m + i], w[b * m + j] = 1, -1
                        img.append(tuple(w) in big)
                    yield all(img) == (a in set(small.n_roots)) and len(set(img)) == 1

    return _count(cases())


# --------------------------------------------------------------------------
# induction


def bbw_cases(k0: LieType, bound: int) -> Iterator[tuple]:
    """``(p0, nu)`` with ``p0`` proper standard and ``nu`` Levi-dominant, ``|nu + rho|_inf <= bound``."""
    s = k0.system
    rho = s.rho
    for p0 in enumerate_parabolics(k0, standard_only=True):
        if not p0.proper:
            continue
        m0 = p0.standard_levi
        for x in product(range(-bound, bound + 1), repeat=k0.n):
            if k0.family == "A" and x[-1] != rho[-1]:
                continue
            nu = tuple(a - r for a, r in zip(x, rho))
            if m0.is_dominant(nu):
                yield p0, nu


def bbw_consistent(k0: LieType, p0, nu) -> bool:
    res = ind.bbw_cohomology(k0, p0, nu)
    check = ind.nu_check(nu, k0, p0)
    s = k0.system
    if res.is_zero:
        ok = not s.is_regular(add(nu, s.rho))
    else:
        ok = 0 <= res.degree <= p0.s and s.is_dominant(res.weight)
    if check.dominant:
        ok = ok and res.degree == p0.s and res.weight == check.weight
    if s.is_dominant(nu):
        ok = ok and res.degree == 0 and res.weight == s.canonical(nu)
    return ok


def check_bbw(bound: int = 4) -> tuple[int, int]:
    types = [LieType("A", 1), LieType("GL", 2), LieType("A", 2), LieType("GL", 3)]
    return _count(bbw_consistent(k0, p0, nu) for k0 in types for p0, nu in bbw_cases(k0, bound))


def check_nu_injective() -> tuple[int, int]:
    def cases():
        for k0 in (LieType("GL", 2), LieType("GL", 3), LieType("A", 2)):
            for p0 in enumerate_parabolics(k0, standard_only=True):
                nus = [nu for q, nu in bbw_cases(k0, 3) if q is p0]
                images = [ind.nu_check(nu, k0, p0).weight for nu in nus]
                yield len(set(images)) == len(images)

    return _count(cases())


def random_block_weights(rng: SplitMix64, p_max: int = 4, theta_max: int = 3, size: int = 4) -> list[tuple]:
    p = rng.randint(1, p_max)
    theta = rng.randint(1, theta_max)
    out = []
    for _ in range(p):
        lam = sorted((rng.randint(-size, size) for _ in range(theta)), reverse=True)
        out.append(tuple(lam))
    return out


def check_mu_dominance(seed: int = 5, samples: int = 100) -> tuple[int, int]:
    rng = SplitMix64(seed)
    return _count(ind.mu_dominance(random_block_weights(rng)).agree for _ in range(samples))


def check_levi_triviality(max_n: int = 4) -> tuple[int, int]:
    def cases():
        for n in range(2, max_n + 1):
            g = LieType("A", n - 1)
            for par in enumerate_parabolics(g):
                lam = ind.vz_lambda(g, par)
                yield all(g.system.pair(lam, a) == 0 for a in par.m_roots)

    return _count(cases())


def check_vz_bottom(max_n: int = 3) -> tuple[int, int]:
    def cases():
        for n in range(2, max_n + 1):
            g = LieType("A", n - 1)
            pars = [par for par in enumerate_parabolics(g) if par.proper]
            for p in range(1, n):
                k = SymmetricPairData(n, p, n - p)
                for par in pars:
                    yield ind.vz_bottom_nonzero(g, k, par)

    return _count(cases())


def fk_consistent(g: LieType, k: SymmetricPairData, h) -> bool:
    par = compatible_parabolic(g, h)
    central = len(set(h)) == 1
    try:
        res = ind.fernando_kac(g, k, par)
    except ind.NotProper:
        return central
    if central:
        return False
    want = "KplusR" if res.a == 0 else ("KplusRbar" if res.b == 0 else "K")
    return res.case == want and (res.a, res.b) != (0, 0)


def check_fernando_kac(max_n: int = 4) -> tuple[int, int]:
    def cases():
        for n in range(2, max_n + 1):
            g = LieType("A", n - 1)
            for p in range(1, n):
                k = SymmetricPairData(n, p, n - p)
                for h in product(range(-2, 3), repeat=n):
                    yield fk_consistent(g, k, h)

    return _count(cases())


# --------------------------------------------------------------------------
# stabilize


def check_stabilize_dims() -> tuple[int, int]:
    def cases():
        for fam in ("A", "B", "C", "D"):
            for n in (2, 3, 4):
                t = LieType("GL", n) if fam == "A" else LieType(fam, n)
                d = weyl_dim(t, natural_weight(t))
                for a, b, c, k in ((1, 1, 1, 2), (2, 0, 1, 2), (1, 0, 0, 3)):
                    yield tensor_module_char(fam, n, a, b, c, k).dim == ((a + b) * d + c) ** k

    return _count(cases())


def check_stabilization(k_max: int = 2) -> tuple[int, int]:
    def cases():
        for fam in ("A", "B", "C", "D"):
            for a, b in ((1, 0), (0, 1), (1, 1), (2, 0)):
                for c in (0, 1):
                    for k in range(1, k_max + 1):
                        r = stabilization_scan(fam, a, b, c, k, 2, 5)
                        term = [i for i, row in enumerate(r.rows) if row.n >= (r.n0 or 10**9)]
                        yield r.stabilized and all(
                            len({m[i] for i in term}) == 1 for m in r.matched.values()
                        )

    return _count(cases())


def check_self_dual_symmetry() -> tuple[int, int]:
    return _count(
        stabilization_scan(f, 1, 0, 1, 2, 2, 4).lengths() == stabilization_scan(f, 0, 1, 1, 2, 2, 4).lengths()
        for f in ("B", "C", "D")
    )


SUITES: dict[str, list[tuple[str, Check]]] = {
    "rootdata": [
        ("positive root counts", check_root_counts),
        ("longest element negates positive roots", check_longest),
        ("explicit longest element equals generic", check_longest_generic),
        ("dot action composes", check_dot_composition),
        ("rho dominant and regular", check_rho),
        ("Weyl dimension equals weight count", check_weyl_dim_vs_freudenthal),
        ("roots match matrix algebra", check_roots_vs_matrices),
    ],
    "charring": [
        ("tensor dimensions multiply", check_tensor_dims),
        ("tensor agrees with Klimyk", check_tensor_klimyk),
        ("decompose inverts character", check_decompose_roundtrip),
        ("dualize is an involution", check_dual_involution),
        ("Freudenthal equals Kostant", check_kostant),
        ("restriction preserves dimension", check_restrict_dims),
        ("sym_power equals enumeration", check_sym_power),
    ],
    "towers": [
        ("padding is dominant and composes", check_pad),
        ("diagonal containment V(lam) in V(pad lam)", check_diagonal_containment),
        ("tower embeddings preserve brackets", check_tower_brackets),
        ("natural module restriction", check_natural_restriction),
    ],
    "parabolic": [
        ("root sets partition", check_partition),
        ("Levi blocks and centralizer of gl(p)", check_diagonal_glp),
        ("s value", check_s_value),
        ("nilradicals compatible along tower", check_nilradical_tower),
    ],
    "induction": [
        ("BBW agrees with nu_check", check_bbw),
        ("nu_check injective", check_nu_injective),
        ("mu dominance verdicts agree", check_mu_dominance),
        ("lambda_p trivial on Levi", check_levi_triviality),
        ("bottom layer of Lambda(k-perp) nonzero", check_vz_bottom),
        ("Fernando-Kac cases", check_fernando_kac),
    ],
    "stabilize": [
        ("dimension bookkeeping", check_stabilize_dims),
        ("lengths stabilize", check_stabilization),
        ("self-dual families symmetric in a, b", check_self_dual_symmetry),
    ],
}


def run_suite(name: str) -> list[tuple[str, str, int, int]]:
    names = list(SUITES) if name == "all" else [name]
    out = []
    for suite in names:
        if suite not in SUITES:
            raise KeyError(suite)
        for label, fn in SUITES[suite]:
            ok, total = fn()
            out.append((suite, label, ok, total))
    return out
