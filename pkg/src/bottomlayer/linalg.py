"""Exact sparse linear algebra over the rationals.

Matrices are dictionaries of keys; linear systems are lists of sparse rows
(``{column: coefficient}``). Elimination is fraction-free: rows are scaled to
primitive integer vectors and combined with integer multipliers only.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

Scalar = int | Fraction
SparseRow = dict[int, int]


def _clean(entries: Mapping[tuple[int, int], Scalar]) -> dict[tuple[int, int], Scalar]:
    out = {}
    for key, value in entries.items():
        if value:
            if isinstance(value, Fraction) and value.denominator == 1:
                value = value.numerator
            out[key] = value
    return out


@dataclass(frozen=True)
class Mat:
    """Square sparse matrix of size ``n`` with exact entries."""

    n: int
    entries: Mapping[tuple[int, int], Scalar] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "entries", _clean(self.entries))

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "Mat":
        return cls(n, {(i, j): 1})

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls(n, {(i, i): 1 for i in range(n)})

    @classmethod
    def diagonal(cls, values: Sequence[Scalar]) -> "Mat":
        return cls(len(values), {(i, i): v for i, v in enumerate(values)})

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[Scalar]]) -> "Mat":
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        return cls(n, {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r)})

    def to_dense(self) -> list[list[Scalar]]:
        out = [[0] * self.n for _ in range(self.n)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def __getitem__(self, key: tuple[int, int]) -> Scalar:
        return self.entries.get(key, 0)

    def _check(self, other: "Mat") -> None:
        if self.n != other.n:
            raise ValueError(f"size mismatch {self.n} != {other.n}")

    def __add__(self, other: "Mat") -> "Mat":
        self._check(other)
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, 0) + v
        return Mat(self.n, out)

    def __sub__(self, other: "Mat") -> "Mat":
        return self + other.scale(-1)

    def scale(self, c: Scalar) -> "Mat":
        return Mat(self.n, {k: c * v for k, v in self.entries.items()})

    def __matmul__(self, other: "Mat") -> "Mat":
        self._check(other)
        by_row: dict[int, list[tuple[int, Scalar]]] = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        out: dict[tuple[int, int], Scalar] = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                out[(i, j)] = out.get((i, j), 0) + a * b
        return Mat(self.n, out)

    def bracket(self, other: "Mat") -> "Mat":
        return self @ other - other @ self

    def transpose(self) -> "Mat":
        return Mat(self.n, {(j, i): v for (i, j), v in self.entries.items()})

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Mat) and self.n == other.n and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.entries.items())))


def as_mat(x) -> Mat:
    return x if isinstance(x, Mat) else Mat.from_dense(x)


def _normalize(ints: dict[int, int]) -> SparseRow:
    """Divide an integer row by its content; make the leading entry positive."""
    if not ints:
        return ints
    g = gcd(*ints.values())
    if ints[min(ints)] < 0:
        g = -g
    if g == 1:
        return ints
    return {c: v // g for c, v in ints.items()}


def _primitive(row: Mapping[int, Scalar]) -> SparseRow:
    """Scale a rational row to a primitive integer row with positive leading entry."""
    row = {c: v for c, v in row.items() if v}
    if not row:
        return {}
    if any(type(v) is not int for v in row.values()):
        den = lcm(*(Fraction(v).denominator for v in row.values()))
        row = {c: int(v * den) for c, v in row.items()}
    return _normalize(row)


def _combine(row: SparseRow, pivot: SparseRow, col: int) -> SparseRow:
    """Eliminate ``col`` from ``row`` using ``pivot`` without fractions."""
    a, b = pivot[col], row[col]
    g = gcd(a, b)
    a, b = a // g, b // g
    out = {c: a * v for c, v in row.items()} if a != 1 else dict(row)
    for c, v in pivot.items():
        w = out.get(c, 0) - b * v
        if w:
            out[c] = w
        else:
            out.pop(c, None)
    return _normalize(out)


def echelon(rows: Iterable[Mapping[int, Scalar]]) -> dict[int, SparseRow]:
    """Reduced row echelon form, keyed by pivot column."""
    pivots: dict[int, SparseRow] = {}
    for raw in rows:
        row = _primitive(raw)
        while row:
            lead = min(row)
            if lead in pivots:
                row = _combine(row, pivots[lead], lead)
            else:
                pivots[lead] = row
                break
    # back-substitute so each pivot column is zero outside its own row
    for col in sorted(pivots, reverse=True):
        prow = pivots[col]
        for other_col, other in list(pivots.items()):
            if other_col != col and col in other:
                pivots[other_col] = _combine(other, prow, col)
    return pivots


class RowSpace:
    """Incrementally grown row space; ``add`` reports whether a row was new."""

    def __init__(self) -> None:
        self.pivots: dict[int, SparseRow] = {}

    def __len__(self) -> int:
        return len(self.pivots)

    def add(self, raw: Mapping[int, Scalar]) -> bool:
        row = _primitive(raw)
        while row:
            lead = min(row)
            if lead in self.pivots:
                row = _combine(row, self.pivots[lead], lead)
            else:
                self.pivots[lead] = row
                return True
        return False


def rank(rows: Iterable[Mapping[int, Scalar]]) -> int:
    return len(echelon(rows))


def nullspace(rows: Iterable[Mapping[int, Scalar]], ncols: int) -> list[SparseRow]:
    """Integer basis of ``{x : row . x = 0 for every row}``, one vector per free column."""
    pivots = echelon(rows)
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        vec: dict[int, Fraction] = {free: Fraction(1)}
        for col, prow in pivots.items():
            if free in prow:
                vec[col] = Fraction(-prow[free], prow[col])
        basis.append(_primitive(vec))
    return basis


def solve_in_span(vectors: Sequence[Mapping[int, Scalar]], target: Mapping[int, Scalar]) -> list[Fraction] | None:
    """Coefficients ``c`` with ``sum c_i vectors[i] == target``, or None."""
    # columns = vectors, rows = coordinates; augment with -target
    k = len(vectors)
    coords = set(target)
    for v in vectors:
        coords |= set(v)
    rows = []
    for x in coords:
        row = {i: v.get(x, 0) for i, v in enumerate(vectors)}
        row[k] = -target.get(x, 0)
        rows.append(row)
    for sol in nullspace(rows, k + 1):
        if sol.get(k):
            return [Fraction(sol.get(i, 0), sol[k]) for i in range(k)]
    return None
