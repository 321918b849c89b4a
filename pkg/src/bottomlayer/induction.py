"""Bottom-layer calculus for cohomologically induced modules.

Conventions. ``k0`` carries its standard (upper triangular) Borel and ``p0``
must contain it, so the Levi ``m0`` inherits a positive system and

    nu_check(nu) = w_k0 w_m0^{-1} . nu      (dot action, rho of k0)

is the highest weight of the only nonvanishing Bott-Borel-Weil cohomology of
``nu`` when that weight is dominant; the cohomological degree is then
``s = dim k0/p0``.

For the Vogan-Zuckerman weight the positive system is the one compatible
with ``p`` (see :attr:`ParabolicData.borel`).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .charring import Character, decompose, exterior_algebra, mult
from .errors import (
    DuplicateWeight,
    IncompatibleBorel,
    InvalidModule,
    NonDominantWeight,
    NotProper,
    NotSymmetricSetup,
    WeightLengthMismatch,
)
from .parabolic import ParabolicData, SymmetricPairData, compatible_parabolic, intersection_dims
from .rootdata import LieType, RootSystem, TypeLike, Weight, add, as_system, format_weight, integral, sub


# --------------------------------------------------------------------------
# nu -> nu_check


@dataclass(frozen=True)
class NuCheck:
    weight: Weight
    dominant: bool

    def to_json(self):
        return list(self.weight) if self.dominant else "non-dominant"


def _weight(nu: Sequence, system: RootSystem) -> Weight:
    if len(nu) != system.dim:
        raise WeightLengthMismatch(f"weight {tuple(nu)} has length {len(nu)}, expected {system.dim}")
    return integral(system.canonical(nu))


def _check_standard(p0: ParabolicData) -> None:
    if not p0.standard:
        raise IncompatibleBorel("the parabolic does not contain the standard Borel; reorder h")


def _ambient(k0: TypeLike, p0: ParabolicData) -> RootSystem:
    system = as_system(k0)
    if system != p0.system:
        raise IncompatibleBorel(f"parabolic lives on {p0.system}, not on {system}")
    return system


def nu_check(nu: Sequence[int], k0: TypeLike, p0: ParabolicData) -> NuCheck:
    system = _ambient(k0, p0)
    _check_standard(p0)
    nu = _weight(nu, system)
    m0 = p0.standard_levi
    if not m0.is_dominant(nu):
        raise NonDominantWeight(f"{format_weight(nu)} is not dominant for the Levi factor")
    w = system.longest @ m0.longest.inverse()
    image = system.dot(w, nu)
    return NuCheck(image, system.is_dominant(image))


@dataclass(frozen=True)
class BottomLayerEntry:
    nu: Weight
    nu_check: NuCheck
    multiplicity_data: Character | int

    @property
    def contributes(self) -> bool:
        return self.nu_check.dominant and _nonzero(self.multiplicity_data)

    def to_json(self) -> dict:
        data = self.multiplicity_data
        return {
            "nu": list(self.nu),
            "nu_check": self.nu_check.to_json(),
            "multiplicity": data.to_json() if isinstance(data, Character) else data,
        }


def _nonzero(data: Character | int) -> bool:
    return bool(data.entries) if isinstance(data, Character) else data > 0


def bottom_layer(entries: Sequence[tuple[Sequence[int], Character | int]], k0: TypeLike, p0: ParabolicData) -> list[BottomLayerEntry]:
    """Apply ``nu -> nu_check`` to each isotypic piece of the Levi module.

    The entries with dominant image are the k0-types of the bottom layer.
    """
    system = _ambient(k0, p0)
    seen: set[Weight] = set()
    out = []
    for nu, data in entries:
        nu = _weight(nu, system)
        if nu in seen:
            raise DuplicateWeight(f"{format_weight(nu)} listed twice")
        seen.add(nu)
        out.append(BottomLayerEntry(nu, nu_check(nu, system, p0), data))
    images = [e.nu_check.weight for e in out]
    assert len(set(images)) == len(images), "nu -> nu_check is not injective"
    return out


@dataclass(frozen=True)
class BBWResult:
    """Cohomology of the line bundle: ``degree`` and highest weight, or zero."""

    degree: int | None
    weight: Weight | None

    @property
    def is_zero(self) -> bool:
        return self.degree is None

    def to_json(self):
        if self.is_zero:
            return "zero"
        return {"degree": self.degree, "weight": list(self.weight)}


def bbw_cohomology(k0: TypeLike, p0: ParabolicData, nu: Sequence[int]) -> BBWResult:
    """Bott-Borel-Weil: ``H^l(w) = V(w . nu)`` for the ``w`` making ``nu + rho`` dominant.

    The degree is at most ``s``, the complex dimension of ``K0/P0``.
    """
    system = _ambient(k0, p0)
    nu = _weight(nu, system)
    if not p0.standard_levi.is_dominant(nu):
        raise NonDominantWeight(f"{format_weight(nu)} is not dominant for the Levi factor")
    x = add(nu, system.rho)
    if not system.is_regular(x):
        return BBWResult(None, None)
    dom, _, steps = system.to_dominant(x)
    return BBWResult(steps, integral(system.canonical(sub(dom, system.rho))))


# --------------------------------------------------------------------------
# the gl(p) dominance criterion


@dataclass(frozen=True)
class MuDominance:
    mu: Weight
    mu_check: Weight
    dominant_and_regular: bool
    sums_nondecreasing: bool
    literal_check: Weight
    literal_dominant_and_regular: bool

    @property
    def agree(self) -> bool:
        return self.dominant_and_regular == self.sums_nondecreasing

    def to_json(self) -> dict:
        return {
            "mu": list(self.mu),
            "mu_check": list(self.mu_check),
            "dominant_and_regular": self.dominant_and_regular,
            "sums_nondecreasing": self.sums_nondecreasing,
            "literal_check": list(self.literal_check),
            "literal_dominant_and_regular": self.literal_dominant_and_regular,
        }


def _dominant_regular(x: Weight, system: RootSystem) -> bool:
    shifted = add(x, system.rho)
    return system.is_dominant(x) and len(set(shifted)) == len(shifted)


def mu_dominance(lambdas: Sequence[Sequence[int]]) -> MuDominance:
    """Test the ``k0 = gl(p)`` dominance of the weight built from ``p`` block weights.

    ``mu`` collects the coordinate sums of the block weights. The bottom layer
    is governed by ``E`` twisted by the top exterior power of ``n cap k0``,
    so ``mu_check`` is ``nu_check`` applied to ``mu - 2 rho(n cap k0)``; this
    is the linear action of ``w0`` on ``mu``. The untwisted dot image is kept
    as ``literal_check`` for comparison.
    """
    if not lambdas:
        raise InvalidModule("need at least one block weight")
    mu = tuple(sum(int(x) for x in lam) for lam in lambdas)
    p = len(mu)
    k0 = LieType("GL", p)
    system = k0.system
    p0 = compatible_parabolic(k0, list(range(p - 1, -1, -1)))
    two_rho_n = [0] * p
    for a in p0.n_roots:
        two_rho_n = add(two_rho_n, a)
    check = nu_check(sub(mu, two_rho_n), k0, p0).weight
    literal = nu_check(mu, k0, p0).weight
    return MuDominance(
        mu,
        check,
        _dominant_regular(check, system),
        all(x <= y for x, y in zip(mu, mu[1:])),
        literal,
        _dominant_regular(literal, system),
    )


# --------------------------------------------------------------------------
# Vogan-Zuckerman weights


def vz_lambda(g: TypeLike, p: ParabolicData, lam: Sequence[int] | None = None, order: str = "mg") -> Weight:
    """``w_m^{-1} w_g . lam`` in the positive system compatible with ``p``.

    With ``lam = 0`` this is ``-2 rho(n)``, which vanishes on the roots of
    the Levi factor. ``order="gm"`` computes ``w_g w_m^{-1} . lam`` instead;
    that weight is generally not trivial on the Levi factor and is exposed
    for comparison only.
    """
    system = as_system(g)
    if system != p.system:
        raise IncompatibleBorel(f"parabolic lives on {p.system}, not on {system}")
    b, m = p.borel, p.levi
    lam = _weight(lam if lam is not None else (0,) * system.dim, system)
    if not b.is_dominant(lam):
        raise NonDominantWeight(f"{format_weight(lam)} is not dominant for the Borel of the parabolic")
    wg, wm = b.longest, m.longest
    if order == "mg":
        w = wm.inverse() @ wg
    elif order == "gm":
        w = wg @ wm.inverse()
    else:
        raise ValueError(f"unknown order {order!r}")
    out = b.dot(w, lam)
    if order == "mg" and not any(lam):
        assert all(system.pair(out, a) == 0 for a in m.positive), "lambda_p is not trivial on the Levi factor"
    return out


def _check_symmetric(g: TypeLike, k: SymmetricPairData, p: ParabolicData) -> RootSystem:
    if not isinstance(g, LieType) or g.family not in ("A", "GL"):
        raise NotSymmetricSetup(f"{g} is not a special or general linear algebra")
    if not isinstance(k, SymmetricPairData):
        raise NotSymmetricSetup("k must be a block symmetric pair")
    if g.n != k.n:
        raise NotSymmetricSetup(f"{g} acts on {g.n} coordinates, the pair on {k.n}")
    system = g.system
    if p.system != system:
        raise NotSymmetricSetup(f"parabolic lives on {p.system}, not on {g}")
    return system


def lambda_p_check(g: TypeLike, k: SymmetricPairData, p: ParabolicData) -> tuple[Weight, RootSystem]:
    """``w_k w_{k cap m} . lambda_p`` and the system of ``k`` it lives on."""
    system = _check_symmetric(g, k, p)
    lam_p = vz_lambda(g, p)
    kroots = set(k.k_roots())
    mroots = set(p.m_roots)
    kpos = tuple(a for a in p.borel.positive if a in kroots)
    kmpos = tuple(a for a in kpos if a in mroots)
    ksys = RootSystem(kpos, system.dim, system.projective, None, "k")
    kmsys = RootSystem(kmpos, system.dim, system.projective, None, "k cap m")
    w = ksys.longest @ kmsys.longest.inverse()
    return ksys.dot(w, lam_p), ksys


def vz_bottom_nonzero(g: TypeLike, k: SymmetricPairData, p: ParabolicData) -> bool:
    """Does ``V_k(lambda_p_check)`` occur in the exterior algebra of ``k-perp = r + rbar``?"""
    check, ksys = lambda_p_check(g, k, p)
    if not ksys.is_dominant(check):
        return False
    wedge = exterior_algebra(k.r_roots() + k.rbar_roots(), ksys)
    return mult(decompose(wedge), check) > 0


# --------------------------------------------------------------------------
# Fernando-Kac subalgebra


_CASE_LABELS = {"K": "k", "KplusR": "k+r", "KplusRbar": "k+rbar"}


@dataclass(frozen=True)
class FKResult:
    case: str
    a: int
    b: int

    @property
    def label(self) -> str:
        return _CASE_LABELS[self.case]

    def __str__(self) -> str:
        return f"{self.label} (a={self.a}, b={self.b})"

    def to_json(self) -> dict:
        return {"case": self.label, "a": self.a, "b": self.b}


def fernando_kac(g: TypeLike, k: SymmetricPairData, p: ParabolicData) -> FKResult:
    """Locally finite part of ``A_p(F)``: ``k``, ``k + r`` or ``k + rbar``.

    ``a = dim(rbar cap n)`` and ``b = dim(r cap n)``; ``a = 0`` gives ``k + r``
    and ``b = 0`` gives ``k + rbar``.
    """
    _check_symmetric(g, k, p)
    if not p.proper:
        raise NotProper("the parabolic is the whole algebra")
    a, b = intersection_dims(k, p)
    if a == 0 and b == 0:
        raise NotProper("n meets neither r nor rbar")
    if a == 0:
        return FKResult("KplusR", a, b)
    if b == 0:
        return FKResult("KplusRbar", a, b)
    return FKResult("K", a, b)


def bidegree_profile(a: int, b: int, jmax: int) -> list[tuple[int, int]]:
    if a < 0 or b < 0:
        raise ValueError("a and b must be nonnegative")
    return [(a + j, b + j) for j in range(jmax + 1)]
