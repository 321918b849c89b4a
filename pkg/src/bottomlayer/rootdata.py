"""Root systems, weights and Weyl groups of the classical Lie algebras.

Weights are integer tuples in epsilon coordinates. ``gl(n)`` and ``sl(n)``
both use length-``n`` vectors; ``sl(n)`` weights are stored in canonical form
(last coordinate subtracted). Types B, C, D use length-``rank`` vectors; only
integral (tensor) weights are accepted, never spin weights.

Every Weyl group element of a classical root system (and of any root
subsystem in epsilon coordinates) is a signed permutation, so a single
:class:`SignedPermutation` class serves all groups here.
"""
from __future__ import annotations

import re
from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .errors import (
    InvalidBlocks,
    NonDominantWeight,
    NonIntegral,
    ParseError,
    WeightLengthMismatch,
)

Weight = tuple[int, ...]
FAMILIES = ("A", "B", "C", "D", "GL")


def _num(x: Fraction | int) -> Fraction | int:
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def integral(vec: Iterable[Fraction | int]) -> Weight:
    out = []
    for x in vec:
        x = _num(x)
        if isinstance(x, Fraction):
            raise NonIntegral(f"non-integral coordinate {x}")
        out.append(int(x))
    return tuple(out)


def add(x: Sequence, y: Sequence) -> tuple:
    return tuple(_num(a + b) for a, b in zip(x, y))


def sub(x: Sequence, y: Sequence) -> tuple:
    return tuple(_num(a - b) for a, b in zip(x, y))


def scale(c, x: Sequence) -> tuple:
    return tuple(_num(c * a) for a in x)


# --------------------------------------------------------------------------
# Signed permutations


@dataclass(frozen=True)
class SignedPermutation:
    """``w(e_i) = signs[i] * e_{perm[i]}`` (0-indexed)."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        if len(self.perm) != len(self.signs) or sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"not a signed permutation: {self.perm}, {self.signs}")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"signs must be +-1: {self.signs}")

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(n)), (1,) * n)

    @classmethod
    def from_perm(cls, perm: Sequence[int]) -> "SignedPermutation":
        return cls(tuple(perm), (1,) * len(perm))

    @property
    def n(self) -> int:
        return len(self.perm)

    def __matmul__(self, other: "SignedPermutation") -> "SignedPermutation":
        # (self o other)(e_i) = other.signs[i] * self(e_{other.perm[i]})
        perm = tuple(self.perm[j] for j in other.perm)
        signs = tuple(s * self.signs[j] for s, j in zip(other.signs, other.perm))
        return SignedPermutation(perm, signs)

    def inverse(self) -> "SignedPermutation":
        perm = [0] * self.n
        signs = [1] * self.n
        for i, (j, s) in enumerate(zip(self.perm, self.signs)):
            perm[j] = i
            signs[j] = s
        return SignedPermutation(tuple(perm), tuple(signs))

    def __call__(self, vec: Sequence) -> tuple:
        if len(vec) != self.n:
            raise WeightLengthMismatch(f"length {len(vec)} != {self.n}")
        out = [0] * self.n
        for i, (j, s) in enumerate(zip(self.perm, self.signs)):
            out[j] = s * vec[i]
        return tuple(_num(x) for x in out)

    def is_identity(self) -> bool:
        return self == SignedPermutation.identity(self.n)


def reflection(alpha: Sequence[int]) -> SignedPermutation:
    """The reflection in a classical root (support of size 1 or 2)."""
    support = [i for i, a in enumerate(alpha) if a]
    perm = list(range(len(alpha)))
    signs = [1] * len(alpha)
    if len(support) == 1:
        signs[support[0]] = -1
    elif len(support) == 2:
        i, j = support
        if alpha[i] not in (1, -1) or abs(alpha[j]) != 1:
            raise ValueError(f"not a classical root: {alpha}")
        perm[i], perm[j] = j, i
        if alpha[i] == alpha[j]:
            signs[i] = signs[j] = -1
    else:
        raise ValueError(f"not a classical root: {alpha}")
    return SignedPermutation(tuple(perm), tuple(signs))


# --------------------------------------------------------------------------
# Generic root systems


@dataclass(frozen=True)
class RootSystem:
    """A reduced classical root system in epsilon coordinates.

    ``positive`` fixes the positive system (hence the Borel). When
    ``projective`` is set, weights live in ``Z^dim`` modulo the all-ones
    vector (the ``sl`` convention) and are stored with last coordinate 0.
    ``rho_override`` replaces the half-sum by a W-equivalent shift (used for
    the integral ``gl(n)`` normalization).
    """

    positive: tuple[Weight, ...]
    dim: int
    projective: bool = False
    rho_override: tuple | None = None
    name: str = ""

    def __post_init__(self):
        for a in self.positive:
            if len(a) != self.dim:
                raise WeightLengthMismatch(f"root {a} has wrong length for dim {self.dim}")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RootSystem)
            and self.dim == other.dim
            and self.projective == other.projective
            and set(self.positive) == set(other.positive)
        )

    def __hash__(self) -> int:
        return hash((self.dim, self.projective, frozenset(self.positive)))

    def __str__(self) -> str:
        return self.name or f"RootSystem(dim={self.dim}, |positive|={len(self.positive)})"

    # -- basic data ---------------------------------------------------------
    @cached_property
    def roots(self) -> tuple[Weight, ...]:
        return self.positive + tuple(scale(-1, a) for a in self.positive)

    @cached_property
    def simple(self) -> tuple[Weight, ...]:
        pos = set(self.positive)
        sums = {add(a, b) for a in self.positive for b in self.positive}
        return tuple(a for a in self.positive if a not in sums and a in pos)

    @cached_property
    def rank(self) -> int:
        return len(self.simple)

    @cached_property
    def half_sum(self) -> tuple:
        total = [Fraction(0)] * self.dim
        for a in self.positive:
            for i, x in enumerate(a):
                total[i] += x
        return tuple(_num(x / 2) for x in total)

    @cached_property
    def rho(self) -> tuple:
        return self.rho_override if self.rho_override is not None else self.half_sum

    @cached_property
    def _simple_reflections(self) -> tuple[SignedPermutation, ...]:
        return tuple(reflection(a) for a in self.simple)

    def form(self, x: Sequence, y: Sequence):
        """W-invariant form; on projective systems it ignores the all-ones direction."""
        s = sum(a * b for a, b in zip(x, y))
        if self.projective:
            s -= Fraction(sum(x) * sum(y), self.dim)
        return _num(s)

    def pair(self, x: Sequence, alpha: Sequence):
        return _num(sum(a * b for a, b in zip(x, alpha)))

    def canonical(self, x: Sequence) -> tuple:
        if len(x) != self.dim:
            raise WeightLengthMismatch(f"weight {tuple(x)} has length {len(x)}, expected {self.dim}")
        if self.projective:
            last = x[-1]
            return tuple(_num(a - last) for a in x)
        return tuple(_num(a) for a in x)

    # -- dominance ------------------------------------------------------------
    def is_dominant(self, x: Sequence) -> bool:
        return all(self.pair(x, a) >= 0 for a in self.simple)

    def is_regular(self, x: Sequence) -> bool:
        return all(self.pair(x, a) != 0 for a in self.positive)

    def to_dominant(self, x: Sequence) -> tuple[tuple, SignedPermutation, int]:
        """Return ``(w x, w, length(w))`` with ``w x`` dominant.

        Reflections in simple roots with negative pairing are applied until
        none is left; the number of steps is the length of ``w``.
        """
        x = tuple(x)
        w = SignedPermutation.identity(self.dim)
        steps = 0
        simple = self.simple
        refl = self._simple_reflections
        while True:
            for a, s in zip(simple, refl):
                if self.pair(x, a) < 0:
                    x = s(x)
                    w = s @ w
                    steps += 1
                    break
            else:
                return x, w, steps

    def dominant_rep(self, x: Sequence) -> tuple:
        return _dominant_rep_cached(self, self.canonical(x))

    def length(self, w: SignedPermutation) -> int:
        pos = set(self.positive)
        return sum(1 for a in self.positive if w(a) not in pos)

    @cached_property
    def longest(self) -> SignedPermutation:
        minus_rho = tuple(-x for x in self.half_sum)
        _, w, _ = self.to_dominant(minus_rho)
        return w

    def dot(self, w: SignedPermutation, lam: Sequence) -> Weight:
        return integral(self.canonical(sub(w(add(lam, self.rho)), self.rho)))

    def orbit(self, x: Sequence) -> list[tuple]:
        start = self.canonical(x)
        seen = {start}
        queue = deque([start])
        while queue:
            y = queue.popleft()
            for s in self._simple_reflections:
                z = self.canonical(s(y))
                if z not in seen:
                    seen.add(z)
                    queue.append(z)
        return sorted(seen, reverse=True)

    def weyl_group(self) -> list[SignedPermutation]:
        ident = SignedPermutation.identity(self.dim)
        seen = {ident}
        queue = deque([ident])
        while queue:
            w = queue.popleft()
            for s in self._simple_reflections:
                v = s @ w
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        return sorted(seen, key=lambda w: (self.length(w), w.perm, w.signs))

    @cached_property
    def weyl_order(self) -> int:
        """``|W| = prod (m_i + 1)`` over the exponents read off the root heights."""
        return _weyl_order(frozenset(self.positive), self.dim, self.projective)

    def orbit_size(self, x: Sequence) -> int:
        dom = self.to_dominant(x)[0]
        fixed = frozenset(a for a in self.positive if self.pair(dom, a) == 0)
        return self.weyl_order // _weyl_order(fixed, self.dim, self.projective)

    # -- root lattice coordinates -------------------------------------------
    @cached_property
    def _gram_inverse(self) -> list[list[Fraction]]:
        r = self.rank
        gram = [[Fraction(self.pair(a, b)) for b in self.simple] for a in self.simple]
        inv = [[Fraction(int(i == j)) for j in range(r)] for i in range(r)]
        for c in range(r):
            p = next(i for i in range(c, r) if gram[i][c] != 0)
            gram[c], gram[p] = gram[p], gram[c]
            inv[c], inv[p] = inv[p], inv[c]
            f = gram[c][c]
            gram[c] = [x / f for x in gram[c]]
            inv[c] = [x / f for x in inv[c]]
            for i in range(r):
                if i != c and gram[i][c] != 0:
                    g = gram[i][c]
                    gram[i] = [x - g * y for x, y in zip(gram[i], gram[c])]
                    inv[i] = [x - g * y for x, y in zip(inv[i], inv[c])]
        return inv

    def simple_coords(self, x: Sequence) -> tuple:
        """Coefficients of ``x`` in the simple roots (x assumed in their span)."""
        p = [Fraction(self.pair(x, a)) for a in self.simple]
        return tuple(_num(sum(r * q for r, q in zip(row, p))) for row in self._gram_inverse)

    def in_positive_cone(self, x: Sequence) -> bool:
        """True iff ``x`` is a nonnegative integer combination of simple roots."""
        if self.projective:
            x = tuple(a - Fraction(sum(x), self.dim) for a in x)
        coords = self.simple_coords(x)
        recon = [Fraction(0)] * self.dim
        for c, a in zip(coords, self.simple):
            for i, ai in enumerate(a):
                recon[i] += c * ai
        if self.projective:
            mean = Fraction(sum(recon), self.dim)
            recon = [r - mean for r in recon]
        if any(Fraction(r) != Fraction(y) for r, y in zip(recon, x)):
            return False
        return all(isinstance(_num(c), int) and c >= 0 for c in coords)

    # -- subsystems -------------------------------------------------------
    def subsystem(self, roots: Iterable[Sequence[int]], name: str = "") -> "RootSystem":
        """Sub-root-system spanned by ``roots`` with positive system inherited from self."""
        pos = set(self.positive)
        chosen = []
        for a in roots:
            a = tuple(a)
            b = a if a in pos else scale(-1, a)
            if b not in pos:
                raise ValueError(f"{a} is not a root of {self}")
            if b not in chosen:
                chosen.append(b)
        return RootSystem(tuple(chosen), self.dim, self.projective, None, name)

    def with_positive(self, chamber: Sequence, name: str = "") -> "RootSystem":
        """Same roots, positive system ``{a : <a, chamber> > 0}`` (chamber regular)."""
        new = []
        for a in self.positive:
            p = self.pair(a, chamber)
            if p == 0:
                raise ValueError("chamber vector is singular")
            new.append(a if p > 0 else scale(-1, a))
        return RootSystem(tuple(new), self.dim, self.projective, None, name or self.name)


@lru_cache(maxsize=None)
def _weyl_order(positive: frozenset, dim: int, projective: bool) -> int:
    if not positive:
        return 1
    system = RootSystem(tuple(sorted(positive)), dim, projective)
    heights = Counter(sum(system.simple_coords(a)) for a in system.positive)
    order = 1
    for k in range(1, max(heights) + 1):
        # the exponent k occurs c_k - c_(k+1) times
        order *= (k + 1) ** (heights[k] - heights.get(k + 1, 0))
    return order


@lru_cache(maxsize=200_000)
def _dominant_rep_cached(system: RootSystem, x: tuple) -> tuple:
    return system.canonical(system.to_dominant(x)[0])


# --------------------------------------------------------------------------
# Classical types


_TYPE_RE = re.compile(r"^\s*(GL|gl|A|B|C|D)\s*\(?\s*(\d+)\s*\)?\s*$")


@dataclass(frozen=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ParseError(f"unknown family {self.family!r}")
        if self.rank < 1:
            raise ParseError("rank must be >= 1")
        if self.family == "D" and self.rank < 2:
            raise ParseError("type D requires rank >= 2")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "LieType":
        m = _TYPE_RE.match(text)
        if not m:
            raise ParseError(f"cannot parse Lie type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    @property
    def n(self) -> int:
        """Number of epsilon coordinates."""
        return self.rank + 1 if self.family == "A" else self.rank

    @property
    def matrix_size(self) -> int:
        if self.family in ("A", "GL"):
            return self.n
        return 2 * self.rank + (1 if self.family == "B" else 0)

    @property
    def is_sl(self) -> bool:
        return self.family == "A"

    def matrix_labels(self) -> list[tuple[int, int]]:
        """For each matrix index, ``(coordinate, sign)`` of its torus weight; ``(-1, 0)`` for zero."""
        n = self.n
        if self.family in ("A", "GL"):
            return [(i, 1) for i in range(n)]
        labels = [(i, 1) for i in range(n)]
        if self.family == "B":
            labels.append((-1, 0))
        labels += [(i, -1) for i in reversed(range(n))]
        return labels

    def root_position(self, alpha: Weight) -> tuple[int, int]:
        """Matrix position of the root vector of a positive root (upper triangular)."""
        m = self.matrix_size
        support = [i for i, a in enumerate(alpha) if a]
        if self.family in ("A", "GL"):
            i, j = support
            return (i, j) if alpha[i] > 0 else (j, i)
        if len(support) == 1:
            (i,) = support
            return (i, self.n) if self.family == "B" else (i, m - 1 - i)
        i, j = support
        if alpha[i] == -alpha[j]:
            return (i, j)
        return (i, m - 1 - j)

    @cached_property
    def system(self) -> RootSystem:
        n = self.n
        roots: list[Weight] = []

        def e(*pairs):
            v = [0] * n
            for i, c in pairs:
                v[i] += c
            return tuple(v)

        for i in range(n):
            for j in range(i + 1, n):
                roots.append(e((i, 1), (j, -1)))
                if self.family in ("B", "C", "D"):
                    roots.append(e((i, 1), (j, 1)))
            if self.family == "B":
                roots.append(e((i, 1)))
            elif self.family == "C":
                roots.append(e((i, 2)))
        roots.sort(key=self.root_position)
        rho = None
        if self.family in ("A", "GL"):
            rho = tuple(range(n - 1, -1, -1))
        return RootSystem(tuple(roots), n, self.family == "A", rho, str(self))


TypeLike = LieType | RootSystem


def as_system(t: TypeLike) -> RootSystem:
    return t.system if isinstance(t, LieType) else t


def parse_weight(text: str) -> Weight:
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ParseError(f"weight must look like [2,1,-1], got {text!r}")
    body = s[1:-1].strip()
    if not body:
        return ()
    out = []
    for item in body.split(","):
        item = item.strip()
        if not re.fullmatch(r"[+-]?\d+", item):
            raise ParseError(f"weight coordinates must be integers, got {item!r}")
        out.append(int(item))
    return tuple(out)


def format_weight(w: Sequence) -> str:
    return "[" + ",".join(str(_num(x)) for x in w) + "]"


def check_weight(lam: Sequence, t: TypeLike) -> Weight:
    system = as_system(t)
    if len(lam) != system.dim:
        raise WeightLengthMismatch(f"weight {tuple(lam)} has length {len(lam)}, {system} needs {system.dim}")
    return integral(system.canonical(lam))


# --------------------------------------------------------------------------
# Operations on classical types


def positive_roots(t: TypeLike) -> list[Weight]:
    return list(as_system(t).positive)


def rho(t: TypeLike) -> tuple:
    return as_system(t).rho


def is_dominant(lam: Sequence, t: TypeLike) -> bool:
    system = as_system(t)
    if len(lam) != system.dim:
        raise WeightLengthMismatch(f"weight {tuple(lam)} has length {len(lam)}, {system} needs {system.dim}")
    return system.is_dominant(lam)


def longest_element(t: LieType) -> SignedPermutation:
    n = t.n
    if t.family in ("A", "GL"):
        return SignedPermutation.from_perm(range(n - 1, -1, -1))
    signs = [-1] * n
    if t.family == "D" and n % 2 == 1:
        signs[-1] = 1
    return SignedPermutation(tuple(range(n)), tuple(signs))


def levi_longest_element(blocks: Sequence[LieType], ambient: LieType | None = None) -> SignedPermutation:
    """Longest element of a standard block-diagonal Levi.

    ``blocks`` are consecutive: ``GL``/``A`` blocks reverse their coordinate
    range; a trailing ``B``/``C``/``D`` block (same family as ``ambient``)
    acts by its own longest element.
    """
    total = sum(b.n for b in blocks)
    if ambient is not None and total != ambient.n:
        raise InvalidBlocks(f"blocks cover {total} coordinates, {ambient} has {ambient.n}")
    perm: list[int] = []
    signs: list[int] = []
    start = 0
    for idx, b in enumerate(blocks):
        if b.family in ("B", "C", "D"):
            if idx != len(blocks) - 1:
                raise InvalidBlocks("an orthogonal/symplectic block must be last")
            if ambient is not None and ambient.family != b.family:
                raise InvalidBlocks(f"block {b} does not fit in {ambient}")
        w = longest_element(b)
        perm.extend(start + j for j in w.perm)
        signs.extend(w.signs)
        start += b.n
    return SignedPermutation(tuple(perm), tuple(signs))


def class_longest_element(classes: Sequence[Sequence[int]], n: int) -> SignedPermutation:
    """Longest element of a product of symmetric groups on coordinate classes."""
    covered = sorted(i for c in classes for i in c)
    if covered != list(range(n)):
        raise InvalidBlocks(f"classes {classes} do not partition range({n})")
    perm = list(range(n))
    for c in classes:
        c = sorted(c)
        for a, b in zip(c, reversed(c)):
            perm[a] = b
    return SignedPermutation.from_perm(perm)


def act(w: SignedPermutation, lam: Sequence) -> tuple:
    return w(lam)


def dot_act(w: SignedPermutation, lam: Sequence, t: TypeLike) -> Weight:
    system = as_system(t)
    return system.dot(w, check_weight(lam, system))


def weyl_dim(t: TypeLike, lam: Sequence) -> int:
    system = as_system(t)
    lam = check_weight(lam, system)
    if not system.is_dominant(lam):
        raise NonDominantWeight(f"{format_weight(lam)} is not dominant for {system}")
    lr = add(lam, system.rho)
    num = Fraction(1)
    for a in system.positive:
        num *= Fraction(system.pair(lr, a)) / system.pair(system.rho, a)
    assert num.denominator == 1
    return int(num)


def natural_weight(t: LieType) -> Weight:
    w = [0] * t.n
    w[0] = 1
    return check_weight(w, t)


def dual_weight(lam: Sequence, t: TypeLike) -> Weight:
    """Highest weight of the dual module: ``-w0(lam)``."""
    system = as_system(t)
    w0 = longest_element(t) if isinstance(t, LieType) else system.longest
    return check_weight(scale(-1, w0(lam)), system)
