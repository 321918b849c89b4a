"""Towers of classical Lie algebras: root chains and diagonal chains.

Matrix conventions follow :meth:`LieType.matrix_labels`: the natural module
of a B/C/D algebra of rank n has basis ordered ``e_1..e_n, [e_0], e_-n..e_-1``
and the invariant form is antidiagonal. A root-chain step therefore keeps the
first n indices in place and shifts the remaining ones by 2 (by 1 for the
zero vector in type B), which keeps the image block upper-triangular.

Diagonal embeddings index the target as ``j = b*m + i`` (block ``b``, slot
``i``); restricting weights sends ``e_j`` to ``e_(j mod m)``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import prod
from typing import Callable, Sequence

from .caps import Caps, current_caps
from .charring import Character, TorusMap, branch, decompose, irreducible, restrict, weight_multiplicities
from .errors import CapExceeded, InvalidModule, NonDominantWeight, ParseError, WeightLengthMismatch
from .linalg import Mat, rank
from .oracles import classical_algebra_basis
from .rootdata import LieType, Weight, dual_weight, format_weight, natural_weight


# --------------------------------------------------------------------------
# Chains


@dataclass(frozen=True)
class ChainSpec:
    """``kind`` is ``"root"`` or ``"diagonal"``.

    Root chains start at ``LieType(family, start)`` and raise the rank by one
    per level. Diagonal chains are ``gl(p) < gl(p*t1) < gl(p*t1*t2) < ...``.
    """

    kind: str
    family: str = "GL"
    start: int = 1
    p: int = 1
    thetas: tuple[int, ...] = ()
    levels: int = 2

    def __post_init__(self):
        if self.kind not in ("root", "diagonal"):
            raise ParseError(f"unknown chain kind {self.kind!r}")
        if self.levels < 1:
            raise ParseError("levels must be >= 1")
        if self.kind == "diagonal":
            if self.p < 1:
                raise ParseError("p must be >= 1")
            if any(t < 2 for t in self.thetas):
                raise ParseError("every theta must be >= 2")
            if self.levels > len(self.thetas) + 1:
                raise ParseError(f"{self.levels} levels need {self.levels - 1} thetas, got {len(self.thetas)}")
        else:
            LieType(self.family, self.start)

    @classmethod
    def diagonal(cls, p: int, thetas: Sequence[int], levels: int | None = None) -> "ChainSpec":
        thetas = tuple(thetas)
        return cls("diagonal", "GL", 1, p, thetas, len(thetas) + 1 if levels is None else levels)

    @classmethod
    def root(cls, family: str, start: int, levels: int) -> "ChainSpec":
        return cls("root", family, start, 1, (), levels)

    @classmethod
    def parse(cls, text: str) -> "ChainSpec":
        text = text.strip()
        m = re.fullmatch(r"glptheta:(.*)", text)
        if m:
            body = m.group(1)
            pm = re.search(r"(?:^|,)p=(\d+)", body)
            tm = re.search(r"(?:^|,)thetas=([\d,]*\d)", body)
            lm = re.search(r"(?:^|,)levels=(\d+)", body)
            if not pm:
                raise ParseError(f"missing p= in {text!r}")
            thetas_text = tm.group(1) if tm else ""
            if lm and tm:
                # "levels=" may follow the theta list; strip it off the digits
                thetas_text = re.sub(r",levels=.*$", "", thetas_text)
            thetas = tuple(int(x) for x in thetas_text.split(",") if x)
            return cls.diagonal(int(pm.group(1)), thetas, int(lm.group(1)) if lm else None)
        m = re.fullmatch(r"root:(GL|A|B|C|D)((?:,\w+=\d+)*)", text, flags=re.IGNORECASE)
        if m:
            opts = dict(kv.split("=") for kv in m.group(2).split(",") if kv)
            unknown = set(opts) - {"start", "levels"}
            if unknown:
                raise ParseError(f"unknown chain options {sorted(unknown)}")
            return cls.root(m.group(1).upper(), int(opts.get("start", 1)), int(opts.get("levels", 2)))
        raise ParseError(f"cannot parse chain {text!r}")

    def __str__(self) -> str:
        if self.kind == "diagonal":
            s = f"glptheta:p={self.p},thetas={','.join(map(str, self.thetas))}"
            if self.levels != len(self.thetas) + 1:
                s += f",levels={self.levels}"
            return s
        return f"root:{self.family},start={self.start},levels={self.levels}"

    def to_json(self) -> dict:
        d = {"kind": self.kind, "levels": self.levels}
        if self.kind == "diagonal":
            d.update(p=self.p, thetas=list(self.thetas))
        else:
            d.update(family=self.family, start=self.start)
        return d

    def level_type(self, n: int) -> LieType:
        """Algebra at level ``n`` (1-indexed)."""
        if not 1 <= n <= self.levels:
            raise ValueError(f"level {n} outside 1..{self.levels}")
        if self.kind == "diagonal":
            return LieType("GL", self.p * prod(self.thetas[: n - 1]))
        return LieType(self.family, self.start + n - 1)

    def block_size(self, n: int) -> int:
        """``theta_1 * ... * theta_(n-1)`` for diagonal chains."""
        return prod(self.thetas[: n - 1])


# --------------------------------------------------------------------------
# Embeddings


@dataclass(frozen=True, eq=False)
class EmbeddingMap:
    """A matrix embedding together with the induced restriction of weights.

    ``torus_map`` sends target weights (``target.n`` coordinates) to source
    weights (``source.n`` coordinates).
    """

    source: LieType
    target: LieType
    index_map: Callable[[Mat], Mat] = field(repr=False)
    torus_map: TorusMap = field(repr=False)
    description: str = ""

    def __call__(self, x: Mat) -> Mat:
        if x.n != self.source.matrix_size:
            raise WeightLengthMismatch(f"matrix of size {x.n} fed to an embedding of {self.source}")
        return self.index_map(x)

    def restrict_weight(self, w: Sequence[int]) -> Weight:
        return self.torus_map(w)

    def compose(self, after: "EmbeddingMap") -> "EmbeddingMap":
        """``after o self``."""
        if self.target != after.source:
            raise WeightLengthMismatch(f"cannot compose {self.target} with {after.source}")
        first, second = self.torus_map, after.torus_map
        composed = tuple(
            tuple(sum(first.rows[i][k] * second.rows[k][j] for k in range(len(second.rows))) for j in range(second.source_dim))
            for i in range(len(first.rows))
        )
        return EmbeddingMap(
            self.source,
            after.target,
            lambda x, f=self.index_map, g=after.index_map: g(f(x)),
            TorusMap(composed, second.source_dim),
            f"{after.description} o {self.description}",
        )

    # -- verification ------------------------------------------------------
    def basis(self) -> list[Mat]:
        return classical_algebra_basis(self.source)

    def generators(self) -> list[Mat]:
        """Torus and simple-root vectors of the source (they generate it)."""
        t = self.source
        labels = t.matrix_labels()
        simple = set(t.system.simple) | {tuple(-x for x in a) for a in t.system.simple}
        out = []
        for x in self.basis():
            (i, j), _ = next(iter(sorted(x.entries.items())))
            w = [0] * t.n
            ci, si = labels[i]
            cj, sj = labels[j]
            if ci >= 0:
                w[ci] += si
            if cj >= 0:
                w[cj] -= sj
            if not any(w) or tuple(w) in simple:
                out.append(x)
        return out

    def is_homomorphism(self) -> bool:
        basis = self.basis()
        images = {b: self(b) for b in basis}
        for g in self.generators():
            gi = self(g)
            for y in basis:
                if self(g.bracket(y)) != gi.bracket(images[y]):
                    return False
        return True

    def is_injective(self) -> bool:
        basis = self.basis()
        return rank({k: v for k, v in _flatten(self(b)).items()} for b in basis) == len(basis)

    def torus_consistent(self) -> bool:
        """The torus map agrees with the matrix map on the source Cartan."""
        s_labels = self.source.matrix_labels()
        t_labels = self.target.matrix_labels()
        for i in range(self.source.n):
            h = {}
            for idx, (c, sgn) in enumerate(s_labels):
                if c == i:
                    h[(idx, idx)] = sgn
            img = self(Mat(self.source.matrix_size, h))
            if any(a != b for (a, b) in img.entries if a != b):
                return False
            for j in range(self.target.n):
                idx = t_labels.index((j, 1))
                if img[(idx, idx)] != self.torus_map.rows[i][j]:
                    return False
        return True

    def verify(self) -> bool:
        return self.is_homomorphism() and self.is_injective() and self.torus_consistent()


def _flatten(x: Mat) -> dict[int, int]:
    return {i * x.n + j: v for (i, j), v in x.entries.items()}


def diagonal_embed(A, theta: int) -> Mat:
    """Block-diagonal matrix with ``theta`` copies of ``A``."""
    from .linalg import as_mat

    if theta < 1:
        raise ValueError("theta must be >= 1")
    A = as_mat(A)
    m = A.n
    return Mat(m * theta, {(b * m + i, b * m + j): v for b in range(theta) for (i, j), v in A.entries.items()})


def diagonal_embedding(m: int, theta: int) -> EmbeddingMap:
    src, tgt = LieType("GL", m), LieType("GL", m * theta)
    tm = TorusMap.from_function(lambda j: j % m, m * theta, m)
    return EmbeddingMap(src, tgt, lambda x: diagonal_embed(x, theta), tm, f"diag^{theta}")


def _index_shift(t: LieType) -> Callable[[int], int]:
    n = t.n
    if t.family in ("A", "GL"):
        return lambda i: i
    if t.family == "B":
        return lambda i: i if i < n else (n + 1 if i == n else i + 2)
    return lambda i: i if i < n else i + 2


def root_embedding(source: LieType) -> EmbeddingMap:
    target = LieType(source.family, source.rank + 1)
    f = _index_shift(source)
    m = target.matrix_size
    tm = TorusMap.from_function(lambda j: j if j < source.n else None, target.n, source.n)
    return EmbeddingMap(
        source,
        target,
        lambda x: Mat(m, {(f(i), f(j)): v for (i, j), v in x.entries.items()}),
        tm,
        "corner",
    )


def restriction_map(e: EmbeddingMap) -> TorusMap:
    """Map on weights from target coordinates to source coordinates."""
    return e.torus_map


# --------------------------------------------------------------------------
# Operations


def pad_weight(lam: Sequence[int], n: int, N: int) -> Weight:
    """Insert ``N - n`` zeros after the last nonnegative entry of ``lam``."""
    lam = tuple(lam)
    if len(lam) != n:
        raise WeightLengthMismatch(f"weight {format_weight(lam)} has length {len(lam)}, expected {n}")
    if N < n:
        raise ValueError(f"cannot pad from {n} down to {N}")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise NonDominantWeight(f"{format_weight(lam)} is not dominant for gl({n})")
    cut = sum(1 for x in lam if x >= 0)
    return lam[:cut] + (0,) * (N - n) + lam[cut:]


def natural_restriction(chain: ChainSpec, n: int) -> tuple[int, int, int]:
    """Multiplicities of (natural, dual, trivial) of level n inside the natural module of level n+1."""
    if n + 1 > chain.levels:
        raise ValueError(f"level {n + 1} exceeds the {chain.levels} materialized levels")
    small, big = chain.level_type(n), chain.level_type(n + 1)
    e = tower_step(chain, n)
    c = branch(irreducible(natural_weight(big), big), e.torus_map, small)
    nat = natural_weight(small)
    dual = dual_weight(nat, small)
    zero = (0,) * small.n
    a = c.entries.get(nat, 0)
    b = c.entries.get(dual, 0) if dual != nat else 0
    triv = c.entries.get(zero, 0)
    if a + b + triv != c.length:
        raise InvalidModule(f"unexpected constituents in restriction: {c}")
    return a, b, triv


def branch_diagonal(Lam: Sequence[int], m: int, theta: int) -> Character:
    """Restrict ``V(Lam)`` from gl(m*theta) to the diagonal gl(m)."""
    big = LieType("GL", m * theta)
    if len(Lam) != big.n:
        raise WeightLengthMismatch(f"weight of length {len(Lam)} is not a gl({m}*{theta}) weight")
    e = diagonal_embedding(m, theta)
    return decompose(restrict(weight_multiplicities(Lam, big), e.torus_map, LieType("GL", m)))


def tower_step(chain: ChainSpec, n: int) -> EmbeddingMap:
    small = chain.level_type(n)
    if chain.kind == "diagonal":
        return diagonal_embedding(small.n, chain.thetas[n - 1])
    return root_embedding(small)


def build_tower(chain: ChainSpec, caps: Caps | None = None, verify: bool = True) -> list[EmbeddingMap]:
    caps = caps or current_caps()
    if chain.levels < 2:
        raise ValueError("a tower needs at least 2 levels")
    top = chain.level_type(chain.levels).matrix_size
    if top > caps.matrix:
        raise CapExceeded(f"level {chain.levels} has matrix size {top} > cap {caps.matrix}")
    maps = [tower_step(chain, n) for n in range(1, chain.levels)]
    if verify:
        for e in maps:
            if not e.verify():
                raise InvalidModule(f"embedding {e.source} -> {e.target} failed verification")
    return maps
