"""Parabolic subalgebras attached to a torus element, centralizers, and the
block triangular decomposition of ``sl(p+q)``.

A torus element ``h`` is a rational vector in epsilon coordinates (for B/C/D
it stands for ``diag(h, [0], -reversed(h))``). Roots split by the sign of the
real part of their pairing with ``h``: positive roots of ``h`` span the
nilradical, zero ones the Levi factor, negative ones the opposite nilradical.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import isqrt
from typing import Sequence

from .errors import InvalidBlocks, NotInCartan, ParseError
from .linalg import Mat, RowSpace, as_mat, echelon, nullspace, rank
from .rootdata import LieType, RootSystem, TypeLike, Weight, as_system, scale


# --------------------------------------------------------------------------
# Torus elements


_RAT = r"[+-]?\d+(?:/\d+)?"


def _parse_rationals(body: str) -> tuple[Fraction, ...]:
    body = body.strip()
    if not body:
        return ()
    out = []
    for item in body.split(","):
        item = item.strip()
        if not re.fullmatch(_RAT, item):
            raise ParseError(f"not a rational number: {item!r}")
        out.append(Fraction(item))
    return tuple(out)


@dataclass(frozen=True)
class TorusElement:
    """Diagonal entries of ``h``; ``imag`` holds optional imaginary parts."""

    real: tuple[Fraction, ...]
    imag: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "real", tuple(Fraction(x) for x in self.real))
        imag = tuple(Fraction(x) for x in self.imag) or (Fraction(0),) * len(self.real)
        if len(imag) != len(self.real):
            raise ParseError("real and imaginary parts have different lengths")
        object.__setattr__(self, "imag", imag)

    @classmethod
    def of(cls, values: Sequence) -> "TorusElement":
        return values if isinstance(values, TorusElement) else cls(tuple(values))

    @classmethod
    def parse(cls, text: str) -> "TorusElement":
        """``[1,-1,3/2]`` or ``h=[...]``, optionally followed by ``+i[...]``."""
        s = text.strip()
        if s.startswith("h="):
            s = s[2:].strip()
        m = re.fullmatch(r"\[([^\]]*)\](?:\s*\+\s*i\s*\[([^\]]*)\])?", s)
        if not m:
            raise ParseError(f"cannot parse torus element {text!r}")
        real = _parse_rationals(m.group(1))
        imag = _parse_rationals(m.group(2)) if m.group(2) is not None else ()
        return cls(real, imag)

    @property
    def n(self) -> int:
        return len(self.real)

    def __str__(self) -> str:
        s = "[" + ",".join(str(x) for x in self.real) + "]"
        if any(self.imag):
            s += "+i[" + ",".join(str(x) for x in self.imag) + "]"
        return s

    def pair(self, alpha: Sequence[int]) -> Fraction:
        return sum((a * x for a, x in zip(alpha, self.real)), Fraction(0))

    def pair_imag(self, alpha: Sequence[int]) -> Fraction:
        return sum((a * x for a, x in zip(alpha, self.imag)), Fraction(0))


# --------------------------------------------------------------------------
# Parabolics


@dataclass(frozen=True)
class LeviBlock:
    coords: tuple[int, ...]
    label: str
    signs: tuple[int, ...] = ()

    @property
    def size(self) -> int:
        return len(self.coords)


@dataclass(frozen=True, eq=False)
class ParabolicData:
    system: RootSystem
    h: TorusElement
    levi_blocks: tuple[LeviBlock, ...]
    n_roots: tuple[Weight, ...]
    m_roots: tuple[Weight, ...]
    nbar_roots: tuple[Weight, ...]
    s: int
    lie_type: LieType | None = None
    k0_roots: tuple[Weight, ...] | None = field(default=None, repr=False)

    @property
    def proper(self) -> bool:
        return bool(self.n_roots)

    @cached_property
    def standard(self) -> bool:
        """True when the standard Borel lies inside the parabolic."""
        nbar = set(self.nbar_roots)
        return not any(a in nbar for a in self.system.positive)

    @cached_property
    def borel(self) -> RootSystem:
        """Positive system ordered first by ``h``, ties broken by the standard one."""
        rho = self.system.half_sum
        pos = []
        for a in self.system.positive:
            key = (self.h.pair(a), self.system.pair(a, rho))
            pos.append(a if key > (0, 0) else scale(-1, a))
        return RootSystem(tuple(pos), self.system.dim, self.system.projective, None, f"b({self.system})")

    @cached_property
    def levi(self) -> RootSystem:
        """Levi factor with positive roots taken from :attr:`borel`."""
        zero = set(self.m_roots)
        pos = tuple(a for a in self.borel.positive if a in zero)
        return RootSystem(pos, self.system.dim, self.system.projective, None, f"m({self.system})")

    @cached_property
    def standard_levi(self) -> RootSystem:
        zero = set(self.m_roots)
        pos = tuple(a for a in self.system.positive if a in zero)
        return RootSystem(pos, self.system.dim, self.system.projective, None, f"m({self.system})")

    def to_json(self) -> dict:
        t = self.lie_type
        return {
            "type": str(t) if t else str(self.system),
            "h": [str(x) for x in self.h.real],
            "levi_blocks": [{"coords": [c + 1 for c in b.coords], "type": b.label} for b in self.levi_blocks],
            "n_roots": [_root_pair(a, t) for a in self.n_roots],
            "m_roots": [_root_pair(a, t) for a in self.m_roots],
            "nbar_roots": [_root_pair(a, t) for a in self.nbar_roots],
            "s": self.s,
        }


def _root_pair(alpha: Weight, t: LieType | None) -> list[int]:
    """1-indexed matrix position of the root vector."""
    if t is None:
        return list(alpha)
    pos = set(t.system.positive)
    if alpha in pos:
        i, j = t.root_position(alpha)
    else:
        j, i = t.root_position(scale(-1, alpha))
    return [i + 1, j + 1]


def _sort_roots(roots, t: LieType | None):
    if t is None:
        return tuple(sorted(roots, reverse=True))
    return tuple(sorted(roots, key=lambda a: _root_pair(a, t)))


def _levi_blocks(t: TypeLike, h: TorusElement) -> tuple[LeviBlock, ...]:
    system = as_system(t)
    n = system.dim
    family = t.family if isinstance(t, LieType) else None
    if family in ("B", "C", "D"):
        # e_i + e_j pairs to zero when h_i = -h_j, so classes are formed by |h_i|
        zeros = tuple(i for i in range(n) if h.real[i] == 0)
        blocks = [LeviBlock(zeros, f"{family}{len(zeros)}", (1,) * len(zeros))] if zeros else []
        classes: dict[Fraction, list[int]] = {}
        for i in range(n):
            if h.real[i] != 0:
                classes.setdefault(abs(h.real[i]), []).append(i)
        for c in classes.values():
            signs = tuple(1 if h.real[i] > 0 else -1 for i in c)
            blocks.append(LeviBlock(tuple(c), f"GL{len(c)}", signs))
        return tuple(blocks)
    groups: dict[Fraction, list[int]] = {}
    for i in range(n):
        groups.setdefault(h.real[i], []).append(i)
    return tuple(LeviBlock(tuple(c), f"GL{len(c)}") for c in groups.values())


def compatible_parabolic(t: TypeLike, h, k0_roots: Sequence[Weight] | None = None) -> ParabolicData:
    """Split the roots of ``t`` by the sign of the real part of their ``h``-pairing.

    Imaginary parts of ``h`` play no role: the Levi factor is the sum of the
    eigenspaces with vanishing real part.

    ``s`` counts the roots of ``k0_roots`` (default: all roots of ``t``) lying
    in the nilradical, i.e. half the dimension of ``k0/(k0 cap m)``.
    """
    system = as_system(t)
    h = TorusElement.of(h) if not isinstance(h, TorusElement) else h
    if h.n != system.dim:
        raise NotInCartan(f"h has {h.n} entries, {system} needs {system.dim}")
    n_roots, m_roots, nbar_roots = [], [], []
    for a in system.roots:
        v = h.pair(a)
        if v > 0:
            n_roots.append(a)
        elif v < 0:
            nbar_roots.append(a)
        else:
            m_roots.append(a)
    lie_type = t if isinstance(t, LieType) else None
    if k0_roots is None:
        s = len(n_roots)
    else:
        k0 = {tuple(a) for a in k0_roots} | {scale(-1, a) for a in k0_roots}
        s = sum(1 for a in n_roots if a in k0)
    return ParabolicData(
        system,
        h,
        _levi_blocks(t, h),
        _sort_roots(n_roots, lie_type),
        _sort_roots(m_roots, lie_type),
        _sort_roots(nbar_roots, lie_type),
        s,
        lie_type,
        tuple(tuple(a) for a in k0_roots) if k0_roots is not None else None,
    )


def s_value(p: ParabolicData) -> int:
    return p.s


# --------------------------------------------------------------------------
# Centralizers


@dataclass(frozen=True)
class CentralizerResult:
    dimension: int
    blocks: tuple[int, ...] | None
    basis: tuple[Mat, ...] = field(repr=False, default=())

    def to_json(self) -> dict:
        return {"dimension": self.dimension, "blocks": list(self.blocks) if self.blocks is not None else None}


def _commutator_rows(gens: Sequence[Mat], N: int) -> list[dict[int, int]]:
    """Linear equations on the N*N entries of X expressing [X, K] = 0."""
    rows = []
    for K in gens:
        by_row: dict[int, list[tuple[int, int]]] = {}
        by_col: dict[int, list[tuple[int, int]]] = {}
        for (c, b), v in K.entries.items():
            by_row.setdefault(c, []).append((b, v))
            by_col.setdefault(b, []).append((c, v))
        for a in range(N):
            for b in range(N):
                row: dict[int, int] = {}
                # (XK)_{ab} = sum_c X_{ac} K_{cb}
                for c, v in by_col.get(b, ()):
                    row[a * N + c] = row.get(a * N + c, 0) + v
                # (KX)_{ab} = sum_c K_{ac} X_{cb}
                for c, v in by_row.get(a, ()):
                    row[c * N + b] = row.get(c * N + b, 0) - v
                row = {k: v for k, v in row.items() if v}
                if row:
                    rows.append(row)
    return rows


def _to_mat(vec: dict[int, int], N: int) -> Mat:
    return Mat(N, {(c // N, c % N): v for c, v in vec.items()})


def _flat(x: Mat) -> dict[int, Fraction]:
    return {i * x.n + j: v for (i, j), v in x.entries.items()}


def commutant(gens: Sequence, N: int) -> list[Mat]:
    """Basis of the associative commutant of the given matrices in gl(N)."""
    gens = [as_mat(g) for g in gens]
    if any(g.n != N for g in gens):
        raise InvalidBlocks(f"generator size differs from N={N}")
    return [_to_mat(v, N) for v in nullspace(_commutator_rows(gens, N), N * N)]


def _span_coords(basis: Sequence[Mat], x: Mat) -> list[Fraction] | None:
    from .linalg import solve_in_span

    return solve_in_span([_flat(b) for b in basis], _flat(x))


def _center_from_probes(C: list[Mat], N: int) -> list[Mat] | None:
    """Center of a small commutant: elements commuting with generic members of C."""
    probes = []
    for seed in (1, 2, 3):
        x = Mat(N, {})
        for i, c in enumerate(C):
            x = x + c.scale(((i + 1) * seed * 7919) % 101 - 50 or 1)
        probes.append(x)
    for k in range(1, len(probes) + 1):
        vecs = nullspace(_commutator_in_span_rows(C, probes[:k], N), len(C))
        cand = [_combination(C, vec, N) for vec in vecs]
        if all(z.bracket(c).is_zero() for z in cand for c in C):
            return cand
    return None


def _combination(basis: Sequence[Mat], coeffs: dict[int, int], N: int) -> Mat:
    out: dict[tuple[int, int], Fraction] = {}
    for i, v in coeffs.items():
        for k, x in basis[i].entries.items():
            out[k] = out.get(k, 0) + v * x
    return Mat(N, out)


def _generated_algebra(gens: Sequence[Mat], N: int, cap: int) -> list[Mat] | None:
    """Basis of the unital associative algebra generated by ``gens`` (None past ``cap``)."""
    space = RowSpace()
    basis: list[Mat] = []
    for x in [Mat.identity(N), *gens]:
        if space.add(_flat(x)):
            basis.append(x)
    i = 0
    while i < len(basis):
        for g in gens:
            y = basis[i] @ g
            if space.add(_flat(y)):
                basis.append(y)
                if len(basis) > cap:
                    return None
        i += 1
    return basis


def _center_from_algebra(gens: Sequence[Mat], N: int, cap: int) -> list[Mat] | None:
    """Center of the commutant as the center of the algebra generated by ``gens``.

    For a semisimple action the double commutant of the generators is the
    algebra they generate, and the two algebras share their center.
    """
    A = _generated_algebra(gens, N, cap)
    if A is None:
        return None
    vecs = nullspace(_commutator_in_span_rows(A, list(gens), N), len(A))
    return [_combination(A, vec, N) for vec in vecs]


def _block_structure(C: list[Mat], N: int, gens: Sequence[Mat] = (), small: int = 64, cap: int = 1024) -> tuple[int, ...] | None:
    """Sizes ``m_i`` with ``C = prod gl(m_i)`` (as algebras), or None if not recovered."""
    if not C:
        return ()
    if len(C) <= small or not gens:
        Z = _center_from_probes(C, N) if len(C) <= 4 * small else None
    else:
        Z = _center_from_algebra(gens, N, cap)
    if not Z:
        return None
    r = len(Z)
    if r == 1:
        m = _isqrt_exact(len(C))
        return (m,) if m else None
    import sympy

    for attempt in range(1, 6):
        z = Mat(N, {})
        for i, b in enumerate(Z):
            z = z + b.scale((i + 1) ** attempt + i)
        cols = []
        for b in Z:
            coords = _span_coords(Z, z @ b)
            if coords is None:
                return None
            cols.append(coords)
        L = sympy.Matrix(r, r, lambda i, j: sympy.Rational(cols[j][i].numerator, cols[j][i].denominator))
        eig = L.eigenvals()
        if len(eig) != r or any(not e.is_rational for e in eig):
            continue
        values = [Fraction(int(sympy.numer(e)), int(sympy.denom(e))) for e in eig]
        sizes = []
        ident = Mat.identity(N)
        for i, lam in enumerate(values):
            e = ident
            for j, mu in enumerate(values):
                if j != i:
                    e = (e @ (z - ident.scale(mu))).scale(Fraction(1) / (lam - mu))
            m = _isqrt_exact(rank(_flat(e @ c) for c in C))
            if not m:
                return None
            sizes.append(m)
        if sum(m * m for m in sizes) != len(C):
            return None
        return tuple(sorted(sizes, reverse=True))
    return None


def _isqrt_exact(d: int) -> int:
    m = isqrt(d)
    return m if m * m == d else 0


def _commutator_in_span_rows(C: list[Mat], probes: list[Mat], N: int) -> list[dict[int, Fraction]]:
    """Equations on coefficients c_i such that sum c_i C_i commutes with every probe."""
    rows: dict[tuple[int, int], dict[int, Fraction]] = {}
    for p_idx, p in enumerate(probes):
        for i, c in enumerate(C):
            for (a, b), v in c.bracket(p).entries.items():
                rows.setdefault((p_idx, a * N + b), {})[i] = v
    return list(rows.values())


def centralizer(basis: Sequence, N: int, blocks: bool = True) -> CentralizerResult:
    """Centralizer in gl(N) of the span of ``basis``: dimension and block sizes."""
    gens = [as_mat(b) for b in basis]
    C = commutant(gens, N)
    structure = _block_structure(C, N, gens) if blocks else None
    return CentralizerResult(len(C), structure, tuple(C))


# --------------------------------------------------------------------------
# Symmetric pairs


@dataclass(frozen=True)
class SymmetricPairData:
    """``k = s(gl(p) + gl(q))`` in ``sl(p+q)``; positions are 0-indexed."""

    n: int
    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1 or self.p + self.q != self.n:
            raise InvalidBlocks(f"invalid split n={self.n}, p={self.p}, q={self.q}")

    @property
    def k_span(self) -> tuple[tuple[int, int], ...]:
        n, p = self.n, self.p
        return tuple((i, j) for i in range(n) for j in range(n) if (i < p) == (j < p))

    @property
    def r_span(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, j) for i in range(self.p) for j in range(self.p, self.n))

    @property
    def rbar_span(self) -> tuple[tuple[int, int], ...]:
        return tuple((j, i) for i, j in self.r_span)

    @staticmethod
    def root_of(pos: tuple[int, int], n: int) -> Weight:
        i, j = pos
        w = [0] * n
        w[i] += 1
        w[j] -= 1
        return tuple(w)

    def k_roots(self) -> list[Weight]:
        return [self.root_of(x, self.n) for x in self.k_span if x[0] != x[1]]

    def r_roots(self) -> list[Weight]:
        return [self.root_of(x, self.n) for x in self.r_span]

    def rbar_roots(self) -> list[Weight]:
        return [self.root_of(x, self.n) for x in self.rbar_span]

    def r_matrices(self) -> list[Mat]:
        return [Mat.unit(self.n, i, j) for i, j in self.r_span]

    def rbar_matrices(self) -> list[Mat]:
        return [Mat.unit(self.n, i, j) for i, j in self.rbar_span]

    def to_json(self) -> dict:
        one = lambda xs: [[i + 1, j + 1] for i, j in xs]  # noqa: E731
        return {"n": self.n, "p": self.p, "q": self.q, "r": one(self.r_span), "rbar": one(self.rbar_span)}


def triangular_decomposition(n: int, p: int, q: int) -> SymmetricPairData:
    return SymmetricPairData(n, p, q)


def intersection_dims(sp: SymmetricPairData, par: ParabolicData) -> tuple[int, int]:
    """``(a, b) = (dim rbar cap n, dim r cap n)``."""
    if par.system.dim != sp.n:
        raise InvalidBlocks(f"parabolic lives on {par.system.dim} coordinates, pair on {sp.n}")
    n_set = set(par.n_roots)
    a = sum(1 for x in sp.rbar_roots() if x in n_set)
    b = sum(1 for x in sp.r_roots() if x in n_set)
    return a, b


def is_abelian(mats: Sequence[Mat]) -> bool:
    return all(x.bracket(y).is_zero() for x in mats for y in mats)


def echelon_rank(vectors) -> int:
    return len(echelon(vectors))


def enumerate_parabolics(t: TypeLike, values: Sequence[int] | None = None, standard_only: bool = False) -> list[ParabolicData]:
    """Distinct parabolics ``compatible_parabolic(t, h)`` for ``h`` with entries in ``values``.

    The default value range ``0..n-1`` (``-n..n`` for B/C/D) reaches every
    parabolic containing the torus.
    """
    from itertools import product

    system = as_system(t)
    n = system.dim
    if values is None:
        bcd = isinstance(t, LieType) and t.family in ("B", "C", "D")
        values = range(-n, n + 1) if bcd else range(n)
    seen: set[frozenset] = set()
    out = []
    for h in product(values, repeat=n):
        if standard_only and any(x < y for x, y in zip(h, h[1:])):
            continue
        par = compatible_parabolic(t, h)
        if standard_only and not par.standard:
            continue
        key = frozenset(par.n_roots)
        if key not in seen:
            seen.add(key)
            out.append(par)
    return out
