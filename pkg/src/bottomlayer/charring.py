"""Exact character arithmetic for finite-dimensional modules.

A :class:`WeightMap` is the full weight system of a module (every weight, with
multiplicity). A :class:`Character` records only the multiplicities of the
irreducible constituents, keyed by dominant highest weights. Both carry the
root system they live on, so weights of a Levi or of a product of algebras
are handled the same way as weights of a simple algebra.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

from .errors import InvalidModule, NonDominantWeight, NonIntegral, NotTorusCompatible, TypeMismatch
from .rootdata import (
    RootSystem,
    TypeLike,
    Weight,
    add,
    as_system,
    check_weight,
    format_weight,
    integral,
    scale,
    sub,
)


def _clean(entries: Mapping[Weight, int]) -> dict[Weight, int]:
    return {k: v for k, v in entries.items() if v}


@dataclass(frozen=True, eq=False)
class WeightMap:
    """Finite map weight -> multiplicity on a fixed root system."""

    system: RootSystem
    entries: Mapping[Weight, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "entries", _clean(self.entries))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WeightMap) and self.system == other.system and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.system, frozenset(self.entries.items())))

    def __getitem__(self, w: Sequence[int]) -> int:
        return self.entries.get(tuple(w), 0)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(sorted(self.entries, reverse=True))

    def items(self):
        return sorted(self.entries.items(), reverse=True)

    @property
    def dim(self) -> int:
        return sum(self.entries.values())

    def _check(self, other: "WeightMap") -> None:
        if self.system != other.system:
            raise TypeMismatch(f"weight maps on {self.system} and {other.system}")

    def __add__(self, other: "WeightMap") -> "WeightMap":
        self._check(other)
        out = Counter(self.entries)
        out.update(other.entries)
        return WeightMap(self.system, out)

    def scaled(self, c: int) -> "WeightMap":
        return WeightMap(self.system, {k: c * v for k, v in self.entries.items()})

    def dominant_part(self) -> dict[Weight, int]:
        return {w: m for w, m in self.entries.items() if self.system.is_dominant(w)}

    def is_weyl_invariant(self) -> bool:
        """Every weight matches its dominant representative and every orbit is complete."""
        s = self.system
        if any(self[s.dominant_rep(w)] != m for w, m in self.entries.items()):
            return False
        return sum(m * s.orbit_size(w) for w, m in self.dominant_part().items()) == self.dim


@dataclass(frozen=True, eq=False)
class Character:
    """Multiplicities of irreducible constituents, keyed by dominant highest weight."""

    system: RootSystem
    entries: Mapping[Weight, int] = field(default_factory=dict)

    def __post_init__(self):
        entries = _clean(self.entries)
        for w, m in entries.items():
            if m < 0:
                raise InvalidModule(f"negative multiplicity {m} at {format_weight(w)}")
            if not self.system.is_dominant(w):
                raise NonDominantWeight(f"{format_weight(w)} is not dominant for {self.system}")
        object.__setattr__(self, "entries", entries)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Character) and self.system == other.system and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.system, frozenset(self.entries.items())))

    def __add__(self, other: "Character") -> "Character":
        if self.system != other.system:
            raise TypeMismatch(f"characters on {self.system} and {other.system}")
        out = Counter(self.entries)
        out.update(other.entries)
        return Character(self.system, out)

    def items(self) -> list[tuple[Weight, int]]:
        return sorted(self.entries.items(), reverse=True)

    def __iter__(self):
        return iter(sorted(self.entries, reverse=True))

    def __repr__(self) -> str:
        body = " + ".join(f"{m}*V{format_weight(w)}" if m != 1 else f"V{format_weight(w)}" for w, m in self.items())
        return f"Character[{self.system}]({body or '0'})"

    @property
    def length(self) -> int:
        return sum(self.entries.values())

    @property
    def dim(self) -> int:
        from .rootdata import weyl_dim

        return sum(m * weyl_dim(self.system, w) for w, m in self.entries.items())

    def weight_map(self) -> WeightMap:
        out: Counter = Counter()
        for lam, m in self.entries.items():
            for w, k in weight_multiplicities(lam, self.system).entries.items():
                out[w] += m * k
        return WeightMap(self.system, out)

    def to_json(self) -> list[dict]:
        return character_json(self)


def irreducible(lam: Sequence[int], t: TypeLike) -> Character:
    system = as_system(t)
    lam = check_weight(lam, system)
    return Character(system, {lam: 1})


def trivial(t: TypeLike) -> Character:
    system = as_system(t)
    return Character(system, {(0,) * system.dim: 1})


# --------------------------------------------------------------------------
# Freudenthal


def _height(system: RootSystem, x: Sequence) -> int:
    return sum(system.simple_coords(x))


def dominant_weights_below(lam: Weight, system: RootSystem) -> list[Weight]:
    """Dominant ``mu`` with ``lam - mu`` in the positive root cone, by increasing depth."""
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for d in frontier:
            for beta in system.positive:
                cand = system.dominant_rep(sub(d, beta))
                if cand not in seen and system.in_positive_cone(sub(lam, cand)):
                    seen.add(cand)
                    nxt.append(cand)
        frontier = nxt
    return sorted(seen, key=lambda mu: (_height(system, sub(lam, mu)), tuple(-x for x in mu)))


@lru_cache(maxsize=4096)
def _dominant_multiplicities(lam: Weight, system: RootSystem) -> tuple[tuple[Weight, int], ...]:
    lr = add(lam, system.rho)
    top = system.form(lr, lr)
    mult: dict[Weight, int] = {lam: 1}
    for mu in dominant_weights_below(lam, system):
        if mu == lam:
            continue
        mr = add(mu, system.rho)
        denom = top - system.form(mr, mr)
        total = 0
        for alpha in system.positive:
            k = 1
            while True:
                nu = system.canonical(add(mu, scale(k, alpha)))
                m = mult.get(system.dominant_rep(nu), 0)
                if not m:
                    break
                total += system.form(nu, alpha) * m
                k += 1
        value = Fraction(2 * total) / denom if total else Fraction(0)
        if value.denominator != 1 or value < 0:
            raise NonIntegral(f"Freudenthal produced {value} at {format_weight(mu)}")
        mult[mu] = int(value)
    return tuple((w, m) for w, m in sorted(mult.items(), reverse=True) if m)


def weight_multiplicities(lam: Sequence[int], t: TypeLike) -> WeightMap:
    """Full weight system of ``V(lam)`` via Freudenthal's recursion."""
    system = as_system(t)
    lam = check_weight(lam, system)
    if not system.is_dominant(lam):
        raise NonDominantWeight(f"{format_weight(lam)} is not dominant for {system}")
    out: dict[Weight, int] = {}
    for mu, m in _dominant_multiplicities(lam, system):
        for w in system.orbit(mu):
            out[integral(w)] = m
    return WeightMap(system, out)


def dominant_multiplicities(lam: Sequence[int], t: TypeLike) -> dict[Weight, int]:
    system = as_system(t)
    lam = check_weight(lam, system)
    if not system.is_dominant(lam):
        raise NonDominantWeight(f"{format_weight(lam)} is not dominant for {system}")
    return dict(_dominant_multiplicities(lam, system))


# --------------------------------------------------------------------------
# Peeling


def _peel_key(system: RootSystem, w: Weight):
    return (system.pair(w, system.rho), w)


def decompose_dominant(system: RootSystem, dominant: Mapping[Weight, int]) -> Character:
    """Peel a W-invariant module given by its dominant multiplicities."""
    rest = {w: m for w, m in dominant.items() if m}
    out: dict[Weight, int] = {}
    while rest:
        top = max(rest, key=lambda w: _peel_key(system, w))
        c = rest[top]
        if c < 0:
            raise InvalidModule(f"negative multiplicity {c} at {format_weight(top)}: not a module")
        out[top] = c
        for w, m in _dominant_multiplicities(top, system):
            v = rest.get(w, 0) - c * m
            if v:
                rest[w] = v
            else:
                rest.pop(w, None)
    return Character(system, out)


def decompose(m: WeightMap, validate: bool = False) -> Character:
    """Unique Character whose weight map is ``m``; raises InvalidModule otherwise."""
    if validate and not m.is_weyl_invariant():
        raise InvalidModule("weight map is not Weyl-invariant")
    if any(v < 0 for v in m.entries.values()):
        raise InvalidModule("negative entries in weight map")
    return decompose_dominant(m.system, m.dominant_part())


# --------------------------------------------------------------------------
# Products


def convolve(a: WeightMap, b: WeightMap, dominant_only: bool = False) -> WeightMap:
    a._check(b)
    s = a.system
    out: Counter = Counter()
    bi = list(b.entries.items())
    for x, m in a.entries.items():
        for y, k in bi:
            z = s.canonical(add(x, y))
            if dominant_only and not s.is_dominant(z):
                continue
            out[z] += m * k
    return WeightMap(s, out)


def tensor(a: Character, b: Character) -> Character:
    """Tensor product via full weight-map convolution and peeling."""
    if a.system != b.system:
        raise TypeMismatch(f"tensor of characters on {a.system} and {b.system}")
    prod = convolve(a.weight_map(), b.weight_map(), dominant_only=True)
    return decompose_dominant(a.system, prod.entries)


def tensor_klimyk(a: Character, b: Character) -> Character:
    """Tensor product via the Brauer-Klimyk formula (cross-check path)."""
    if a.system != b.system:
        raise TypeMismatch(f"tensor of characters on {a.system} and {b.system}")
    s = a.system
    out: Counter = Counter()
    for mu, k in b.entries.items():
        wm = weight_multiplicities(mu, s)
        for lam, c in a.entries.items():
            for nu, m in wm.entries.items():
                x = add(add(lam, nu), s.rho)
                if not s.is_regular(x):
                    continue
                dom, _, length = s.to_dominant(x)
                out[integral(s.canonical(sub(dom, s.rho)))] += (-1) ** length * c * k * m
    if any(v < 0 for v in out.values()):
        raise InvalidModule("Klimyk cancellation left a negative multiplicity")
    return Character(s, out)


def tensor_power_map(m: WeightMap, k: int, dominant_last: bool = True) -> WeightMap:
    """Weight map of the k-th tensor power (dominant part only if ``dominant_last``)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    acc = WeightMap(m.system, {(0,) * m.system.dim: 1})
    for i in range(k):
        acc = convolve(acc, m, dominant_only=dominant_last and i == k - 1)
    return acc


def dualize(c: Character) -> Character:
    """Highest weights ``lam -> -w0(lam)``."""
    s = c.system
    w0 = s.longest
    return Character(s, {integral(s.canonical(scale(-1, w0(w)))): m for w, m in c.entries.items()})


def dual_map(m: WeightMap) -> WeightMap:
    s = m.system
    return WeightMap(s, {s.canonical(scale(-1, w)): v for w, v in m.entries.items()})


# --------------------------------------------------------------------------
# Restriction


@dataclass(frozen=True)
class TorusMap:
    """Linear map on epsilon coordinates: ``target = rows @ source``."""

    rows: tuple[tuple[int, ...], ...]
    source_dim: int

    @classmethod
    def from_function(cls, f: Callable[[int], int | None], source_dim: int, target_dim: int) -> "TorusMap":
        """``e_j -> e_{f(j)}`` (``None`` drops the coordinate)."""
        rows = [[0] * source_dim for _ in range(target_dim)]
        for j in range(source_dim):
            i = f(j)
            if i is not None:
                rows[i][j] += 1
        return cls(tuple(map(tuple, rows)), source_dim)

    @classmethod
    def identity(cls, n: int) -> "TorusMap":
        return cls.from_function(lambda j: j, n, n)

    @property
    def target_dim(self) -> int:
        return len(self.rows)

    def __call__(self, x: Sequence[int]) -> Weight:
        if len(x) != self.source_dim:
            raise NotTorusCompatible(f"weight of length {len(x)} fed to a map on {self.source_dim} coordinates")
        return tuple(sum(r * v for r, v in zip(row, x)) for row in self.rows)


def restrict(m: WeightMap, torus_map: TorusMap | Callable, target: TypeLike, check: bool = True) -> WeightMap:
    """Push multiplicities forward along ``torus_map``."""
    system = as_system(target)
    out: Counter = Counter()
    for w, k in m.entries.items():
        img = tuple(torus_map(w))
        if len(img) != system.dim:
            raise NotTorusCompatible(f"image {img} does not fit {system}")
        out[system.canonical(img)] += k
    res = WeightMap(system, out)
    if check and not res.is_weyl_invariant():
        raise NotTorusCompatible("restricted weight map is not Weyl-invariant for the target")
    return res


def branch(c: Character, torus_map: TorusMap | Callable, target: TypeLike) -> Character:
    return decompose(restrict(c.weight_map(), torus_map, target))


# --------------------------------------------------------------------------
# Symmetric and exterior powers


def adams(m: WeightMap, i: int) -> WeightMap:
    s = m.system
    return WeightMap(s, {s.canonical(scale(i, w)): v for w, v in m.entries.items()})


def sym_power(m: WeightMap, t: int) -> WeightMap:
    """``S^t`` by Newton's identity ``t S^t = sum_i psi_i S^(t-i)``."""
    if t < 0:
        raise ValueError("t must be >= 0")
    s = m.system
    powers = [WeightMap(s, {(0,) * s.dim: 1})]
    psi = [None] + [adams(m, i) for i in range(1, t + 1)]
    for r in range(1, t + 1):
        acc: Counter = Counter()
        for i in range(1, r + 1):
            for w, v in convolve(psi[i], powers[r - i]).entries.items():
                acc[w] += v
        entries = {}
        for w, v in acc.items():
            if v % r:
                raise NonIntegral(f"symmetric power recursion left {v}/{r} at {format_weight(w)}")
            entries[w] = v // r
        powers.append(WeightMap(s, entries))
    return powers[t]


def exterior_algebra(weights: Iterable[Weight], system: RootSystem) -> WeightMap:
    """Weight map of the full exterior algebra on a basis with the given weights."""
    acc: Counter = Counter({(0,) * system.dim: 1})
    for w in weights:
        nxt: Counter = Counter(acc)
        for x, v in acc.items():
            nxt[system.canonical(add(x, w))] += v
        acc = nxt
    return WeightMap(system, acc)


# --------------------------------------------------------------------------
# Queries and serialization


def length(c: Character) -> int:
    return c.length


def mult(c: Character, lam: Sequence[int]) -> int:
    return c.entries.get(c.system.canonical(tuple(lam)), 0)


def character_json(c: Character) -> list[dict]:
    return [{"weight": list(w), "mult": m} for w, m in sorted(c.entries.items())]


def weightmap_json(m: WeightMap) -> list[dict]:
    return [{"weight": list(w), "mult": v} for w, v in sorted(m.entries.items())]


def character_from_json(data: str | list, t: TypeLike) -> Character:
    items = json.loads(data) if isinstance(data, str) else data
    system = as_system(t)
    out: Counter = Counter()
    for item in items:
        out[check_weight(item["weight"], system)] += int(item["mult"])
    return Character(system, out)
