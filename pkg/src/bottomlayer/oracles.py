"""Brute-force reference computations.

These deliberately avoid the algorithms used elsewhere in the package so they
can serve as independent checks: Kostant's partition function instead of
Freudenthal, Gelfand-Tsetlin pattern counts instead of the Weyl product,
monomial enumeration instead of the Newton recursion, and root vectors read
off from explicit matrix algebras instead of the closed-form root lists.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Sequence

from .linalg import Mat, nullspace
from .rootdata import LieType, RootSystem, Weight, add, sub


def kostant_partition(vec: Weight, roots: tuple[Weight, ...]) -> int:
    """Number of ways to write ``vec`` as a sum of the given positive roots."""

    @lru_cache(maxsize=None)
    def count(v: Weight, i: int) -> int:
        if not any(v):
            return 1
        if i == len(roots):
            return 0
        total = 0
        a = roots[i]
        w = v
        while True:
            total += count(w, i + 1)
            w = sub(w, a)
            # sums of positive roots have nonnegative prefix sums
            # in epsilon coordinates, so a negative prefix means we overshot
            if _dead(w):
                break
        return total

    def _dead(v: Weight) -> bool:
        s = 0
        for x in v:
            s += x
            if s < 0:
                return True
        return False

    return count(tuple(vec), 0)


def kostant_multiplicity(lam: Sequence[int], mu: Sequence[int], t: LieType) -> int:
    """Multiplicity of ``mu`` in ``V(lam)`` by Kostant's formula (GL, B, C, D types)."""
    if t.family == "A":
        raise ValueError("use the GL type for sl weights")
    system = t.system
    roots = tuple(system.positive)
    lr = add(lam, system.rho)
    mr = add(mu, system.rho)
    total = 0
    for w in system.weyl_group():
        diff = sub(w(lr), mr)
        if any(isinstance(x, float) for x in diff):
            raise ValueError("float leaked into weights")
        if any(x != int(x) for x in diff):
            continue
        diff = tuple(int(x) for x in diff)
        total += (-1) ** system.length(w) * kostant_partition(diff, roots)
    return total


def gt_pattern_count(lam: Sequence[int]) -> int:
    """Number of Gelfand-Tsetlin patterns with top row ``lam`` (= dim of the gl(n) module)."""

    @lru_cache(maxsize=None)
    def count(row: tuple[int, ...]) -> int:
        if len(row) <= 1:
            return 1
        ranges = [range(row[i + 1], row[i] + 1) for i in range(len(row) - 1)]
        return sum(count(tuple(r)) for r in product(*ranges))

    return count(tuple(lam))


def symmetric_power_enumerated(weights: dict[Weight, int], t: int) -> Counter:
    """Weights of S^t by enumerating multisets of basis vectors."""
    basis: list[Weight] = []
    for w, m in sorted(weights.items()):
        basis.extend([w] * m)
    out: Counter = Counter()
    dim = len(next(iter(weights))) if weights else 0
    for combo in combinations_with_replacement(range(len(basis)), t):
        v = (0,) * dim
        for i in combo:
            v = add(v, basis[i])
        out[v] += 1
    return out


def classical_form(t: LieType) -> Mat:
    """Gram matrix of the invariant form on the natural module (antidiagonal)."""
    m = t.matrix_size
    entries = {}
    for i in range(m):
        j = m - 1 - i
        if t.family == "C":
            entries[(i, j)] = 1 if i < j else -1
        else:
            entries[(i, j)] = 1
    return Mat(m, entries)


def classical_algebra_basis(t: LieType) -> list[Mat]:
    """Basis of the matrix Lie algebra preserving the form (all of gl for A/GL)."""
    m = t.matrix_size
    units = [(i, j) for i in range(m) for j in range(m)]
    if t.family in ("A", "GL"):
        if t.family == "GL":
            return [Mat.unit(m, i, j) for i, j in units]
        mats = [Mat.unit(m, i, j) for i, j in units if i != j]
        return mats + [Mat(m, {(i, i): 1, (i + 1, i + 1): -1}) for i in range(m - 1)]
    J = classical_form(t)
    # X^T J + J X = 0, linear in the m*m entries of X
    rows = []
    for a in range(m):
        for b in range(m):
            row: dict[int, int] = {}
            for k in range(m):
                # (X^T J)_{ab} = sum_k X_{ka} J_{kb};  (J X)_{ab} = sum_k J_{ak} X_{kb}
                if J[(k, b)]:
                    row[k * m + a] = row.get(k * m + a, 0) + J[(k, b)]
                if J[(a, k)]:
                    row[k * m + b] = row.get(k * m + b, 0) + J[(a, k)]
            rows.append(row)
    return [Mat(m, {(c // m, c % m): v for c, v in vec.items()}) for vec in nullspace(rows, m * m)]


def brute_force_positive_roots(t: LieType) -> set[Weight]:
    """Torus weights of the strictly upper triangular part of the matrix algebra."""
    labels = t.matrix_labels()
    roots = set()
    for x in classical_algebra_basis(t):
        for (i, j), v in x.entries.items():
            if i < j:
                w = [0] * t.n
                ci, si = labels[i]
                cj, sj = labels[j]
                if ci >= 0:
                    w[ci] += si
                if cj >= 0:
                    w[cj] -= sj
                if any(w):
                    roots.add(tuple(w))
    return roots


def direct_weyl_group_size(system: RootSystem) -> int:
    return len(system.weyl_group())
