"""Desk-scale evidence for stabilization of tensor lengths and for finite type.

``stabilization_scan`` decomposes ``T^k(V^a + (V*)^b + C^c)`` over a range of
ranks and identifies constituents across ranks by padding highest weights.
``finite_type_probe`` follows a compatible parabolic up a tower and records
the length of ``S^t(nbar) (x) E`` over ``k cap m`` at every level.

Nothing here extrapolates: a report only describes the levels it computed.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .caps import Caps, current_caps
from .charring import (
    Character,
    TorusMap,
    WeightMap,
    convolve,
    decompose,
    decompose_dominant,
    restrict,
    sym_power,
    tensor_power_map,
    weight_multiplicities,
)
from .errors import CapExceeded, IncompatibleBorel, NonDominantWeight, NotInCartan, ParseError, WeightLengthMismatch
from .parabolic import TorusElement, compatible_parabolic
from .rootdata import LieType, RootSystem, Weight, dual_weight, format_weight, natural_weight, weyl_dim
from .towers import ChainSpec, pad_weight

_FAMILY_ALIASES = {"A": "A", "SL": "A", "GL": "GL", "B": "B", "C": "C", "D": "D"}


def parse_family(text: str) -> str:
    try:
        return _FAMILY_ALIASES[text.strip().upper()]
    except KeyError:
        raise ParseError(f"unknown family {text!r}") from None


def level_type(family: str, n: int) -> LieType:
    """Algebra used at size ``n``: ``sl(n)`` and ``gl(n)`` are both computed over gl(n)."""
    family = parse_family(family)
    if family in ("A", "GL"):
        return LieType("GL", n)
    return LieType(family, n)


# --------------------------------------------------------------------------
# Tensor modules


def tensor_module_char(family: str, n: int, a: int, b: int, c: int, k: int, caps: Caps | None = None) -> Character:
    """Decomposition of ``T^k(V^a + (V*)^b + C^c)`` for the natural module ``V``."""
    caps = caps or current_caps()
    if min(a, b, c) < 0:
        raise ValueError("a, b, c must be nonnegative")
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > caps.k:
        raise CapExceeded(f"k={k} exceeds cap {caps.k}")
    t = level_type(family, n)
    nat = natural_weight(t)
    if weyl_dim(t, nat) > caps.dim:
        raise CapExceeded(f"dim V = {weyl_dim(t, nat)} for {t} exceeds cap {caps.dim}")
    system = t.system
    base = weight_multiplicities(nat, t).scaled(a)
    base = base + weight_multiplicities(dual_weight(nat, t), t).scaled(b)
    base = base + WeightMap(system, {(0,) * system.dim: c})
    return decompose_dominant(system, tensor_power_map(base, k).entries)


def _pad(lam: Weight, t: LieType, N: int) -> Weight:
    if t.family == "GL":
        return pad_weight(lam, t.n, N)
    return tuple(lam) + (0,) * (N - t.n)


@dataclass(frozen=True)
class StabilizationRow:
    n: int
    type: LieType
    length: int
    character: Character = field(repr=False)


@dataclass(frozen=True)
class StabilizationReport:
    family: str
    a: int
    b: int
    c: int
    k: int
    rows: tuple[StabilizationRow, ...]
    stabilized: bool
    n0: int | None
    matched: dict[Weight, tuple[int, ...]] = field(repr=False)
    padding: str = ""

    @property
    def params(self) -> tuple:
        return (self.family, self.a, self.b, self.c, self.k)

    @property
    def window(self) -> tuple[int, int] | None:
        return (self.n0, self.rows[-1].n) if self.n0 is not None else None

    def lengths(self) -> list[int]:
        return [r.length for r in self.rows]

    def to_json(self) -> dict:
        return {
            "params": {"family": self.family, "a": self.a, "b": self.b, "c": self.c, "k": self.k},
            "padding": self.padding,
            "rows": [
                {"n": r.n, "type": str(r.type), "length": r.length, "character": r.character.to_json()}
                for r in self.rows
            ],
            "stabilized": self.stabilized,
            "n0": self.n0,
            "matched": [{"weight": list(w), "mults": list(m)} for w, m in sorted(self.matched.items(), reverse=True)],
        }

    def to_tsv(self) -> str:
        keys = sorted(self.matched, reverse=True)
        header = ["n", "length"] + [format_weight(w) for w in keys]
        lines = ["\t".join(header)]
        for i, r in enumerate(self.rows):
            lines.append("\t".join([str(r.n), str(r.length)] + [str(self.matched[w][i]) for w in keys]))
        lines.append(f"# stabilized: {str(self.stabilized).lower()}, n0: {self.n0}")
        return "\n".join(lines)


def stabilization_scan(
    family: str, a: int, b: int, c: int, k: int, n_min: int, n_max: int, caps: Caps | None = None
) -> StabilizationReport:
    """Decompose at every ``n`` in ``[n_min, n_max]`` and find the terminal constant window."""
    fam = parse_family(family)
    if n_min < 2 or n_max < n_min:
        raise ValueError(f"need 2 <= n_min <= n_max, got {n_min}..{n_max}")
    rows = []
    for n in range(n_min, n_max + 1):
        t = level_type(fam, n)
        ch = tensor_module_char(fam, n, a, b, c, k, caps)
        rows.append(StabilizationRow(n, t, ch.length, ch))
    N = rows[-1].type.n
    keys: set[Weight] = set()
    padded = []
    for r in rows:
        pm = {_pad(w, r.type, N): m for w, m in r.character.entries.items()}
        padded.append(pm)
        keys |= set(pm)
    matched = {w: tuple(pm.get(w, 0) for pm in padded) for w in keys}
    # extend the window leftwards while the padded characters stay equal
    start = len(rows) - 1
    while start > 0 and padded[start - 1] == padded[-1] and rows[start - 1].length == rows[-1].length:
        start -= 1
    stabilized = len(rows) - start >= 2
    padding = "insert zeros after the nonnegative entries" if fam in ("A", "GL") else "append zeros"
    return StabilizationReport(
        fam, a, b, c, k, tuple(rows), stabilized, rows[start].n if stabilized else None, matched, padding
    )


# --------------------------------------------------------------------------
# Finite-type probe


@dataclass(frozen=True)
class ProbeLevel:
    """Data of one tower level: ``g_n`` system, embedded ``h``, ``E_n`` weight, and ``k cap m``."""

    n: int
    system: RootSystem
    h: TorusElement
    e_weight: Weight
    km: RootSystem
    torus_map: TorusMap


@dataclass(frozen=True)
class FiniteTypeReport:
    chain: ChainSpec
    h: TorusElement
    e_spec: tuple[Weight, ...]
    levels: tuple[int, ...]
    t_rows: dict[int, tuple[int, ...]]
    bounded_per_t: dict[int, bool]

    def to_json(self) -> dict:
        return {
            "chain": str(self.chain),
            "h": [str(x) for x in self.h.real],
            "E": [list(w) for w in self.e_spec],
            "levels": list(self.levels),
            "t_rows": {str(t): list(v) for t, v in self.t_rows.items()},
            "bounded_per_t": {str(t): v for t, v in self.bounded_per_t.items()},
        }

    def to_tsv(self) -> str:
        lines = ["\t".join(["t"] + [f"n={n}" for n in self.levels] + ["bounded"])]
        for t, v in self.t_rows.items():
            lines.append("\t".join([str(t)] + [str(x) for x in v] + [str(self.bounded_per_t[t]).lower()]))
        return "\n".join(lines)


def _check_h(h: TorusElement, base: LieType) -> None:
    if h.n != base.n:
        raise NotInCartan(f"h has {h.n} entries, {base} needs {base.n}")
    if any(h.pair(a) == 0 for a in base.system.positive):
        raise IncompatibleBorel(f"h = {h} is not regular in {base}")


def _diagonal_level(chain: ChainSpec, h: TorusElement, e_spec: Sequence[Weight], n: int) -> ProbeLevel:
    p = chain.p
    theta = chain.block_size(n)
    g = chain.level_type(n)
    N = g.n
    hn = TorusElement(tuple(h.real[j % p] for j in range(N)))
    weight = [0] * N
    for i, lam in enumerate(e_spec):
        lam = pad_weight(lam, len(lam), theta) if lam else (0,) * theta
        for c in range(theta):
            weight[c * p + i] = lam[c]
    # k cap m = t0 + gl(theta): coordinates 0..p-1 for t0, p.. for the centralizer
    rows = [[0] * N for _ in range(p + theta)]
    for j in range(N):
        rows[j % p][j] = 1
        rows[p + j // p][j] = 1
    pos = []
    for c in range(theta):
        for d in range(c + 1, theta):
            v = [0] * (p + theta)
            v[p + c], v[p + d] = 1, -1
            pos.append(tuple(v))
    km = RootSystem(tuple(pos), p + theta, False, None, f"t{p}+gl({theta})")
    return ProbeLevel(n, g.system, hn, tuple(weight), km, TorusMap(tuple(map(tuple, rows)), N))


def _root_level(chain: ChainSpec, h: TorusElement, e_spec: Sequence[Weight], n: int) -> ProbeLevel:
    base = chain.level_type(1)
    g = chain.level_type(n)
    N = g.n
    k0 = base.n
    hn = TorusElement(tuple(h.real) + (Fraction(0),) * (N - k0))
    lam = tuple(e_spec[0]) if e_spec else (0,) * k0
    weight = lam + (0,) * (N - k0)
    # centralizer of g_1: roots supported on the new coordinates (no short roots in type B)
    pos = tuple(
        a
        for a in g.system.positive
        if all(x == 0 for x in a[:k0]) and not (g.family == "B" and sum(map(abs, a)) == 1)
    )
    km = RootSystem(pos, N, g.system.projective, None, f"t+c({g})")
    return ProbeLevel(n, g.system, hn, weight, km, TorusMap.identity(N))


def probe_levels(chain: ChainSpec, h, e_spec: Sequence[Sequence[int]] = (), n_start: int = 2) -> list[ProbeLevel]:
    h = TorusElement.parse(h) if isinstance(h, str) else TorusElement.of(h)
    base = chain.level_type(1)
    _check_h(h, base)
    e_spec = tuple(tuple(int(x) for x in lam) for lam in e_spec)
    if chain.kind == "diagonal":
        if e_spec and len(e_spec) != chain.p:
            raise WeightLengthMismatch(f"E needs {chain.p} block weights, got {len(e_spec)}")
        sizes = {len(lam) for lam in e_spec}
        if len(sizes) > 1:
            raise WeightLengthMismatch("block weights of E have different lengths")
        n0 = 1
        if e_spec:
            (size,) = sizes
            matches = [n for n in range(1, chain.levels + 1) if chain.block_size(n) == size]
            if not matches:
                raise WeightLengthMismatch(f"no level has blocks of size {size}")
            n0 = matches[0]
        build = _diagonal_level
    else:
        if len(e_spec) > 1 or (e_spec and len(e_spec[0]) != base.n):
            raise WeightLengthMismatch(f"E needs one weight of length {base.n}")
        n0 = 1
        build = _root_level
    start = max(n_start, n0)
    return [build(chain, h, e_spec, n) for n in range(start, chain.levels + 1)]


def probe_module(level: ProbeLevel, t: int) -> Character:
    """``S^t(nbar) (x) E`` at one level, decomposed over ``k cap m``."""
    par = compatible_parabolic(level.system, level.h)
    m = par.standard_levi
    if not m.is_dominant(level.e_weight):
        raise NonDominantWeight(f"{format_weight(level.e_weight)} is not dominant for the Levi factor")
    nbar = WeightMap(level.system, {a: 1 for a in par.nbar_roots})
    nbar_k = restrict(nbar, level.torus_map, level.km)
    e_k = restrict(weight_multiplicities(level.e_weight, m), level.torus_map, level.km)
    return decompose(convolve(sym_power(nbar_k, t), e_k))


def finite_type_probe(
    chain: ChainSpec,
    h,
    e_spec: Sequence[Sequence[int]] = (),
    t_max: int = 3,
    n_start: int = 2,
    caps: Caps | None = None,
) -> FiniteTypeReport:
    """Lengths of ``S^t(nbar_n) (x) E_n`` over ``k cap m`` for ``t <= t_max`` and every level.

    ``h`` lives on the first level and must be regular there. For diagonal
    chains ``e_spec`` lists ``p`` highest weights of one block size; they are
    padded level by level. For root chains it is a single weight of the first
    level, extended by zeros. An empty ``e_spec`` means ``E`` is trivial.
    Levels start at ``n_start`` (the centralizer is a torus at level 1).
    """
    caps = caps or current_caps()
    if t_max > caps.t:
        raise CapExceeded(f"t_max={t_max} exceeds cap {caps.t}")
    top = chain.level_type(chain.levels).matrix_size
    if top > caps.matrix:
        raise CapExceeded(f"level {chain.levels} has matrix size {top} > cap {caps.matrix}")
    levels = probe_levels(chain, h, e_spec, n_start)
    h = TorusElement.parse(h) if isinstance(h, str) else TorusElement.of(h)
    t_rows = {t: tuple(probe_module(lv, t).length for lv in levels) for t in range(t_max + 1)}
    bounded = {t: len(v) >= 2 and v[-1] == v[-2] for t, v in t_rows.items()}
    return FiniteTypeReport(
        chain, h, tuple(tuple(int(x) for x in w) for w in e_spec), tuple(lv.n for lv in levels), t_rows, bounded
    )


def report_json(report) -> str:
    return json.dumps(report.to_json(), sort_keys=True)
