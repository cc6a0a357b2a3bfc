"""Squared matrix elements (structure functions) for each algebra family.

F(j, m) is the squared matrix element of the raising operator out of |j, m>.
The polynomial family is exact rational; the shifted Higgs, shifted quadratic
and q-base families carry irrational parameters and are floating point with
an explicit tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .coefficients import as_rationals
from .halfint import HalfInt, halfint, ladder
from .qdeform import q_bracket

ADMISSIBILITY_TOL = 1e-12
BOUNDARY_TOL = 1e-10


@dataclass(frozen=True)
class Polynomial:
    """Odd-polynomial deformation, phi coefficients alpha_1..alpha_{N+1}."""

    alpha: tuple

    def __init__(self, alpha: Sequence):
        object.__setattr__(self, "alpha", tuple(as_rationals(alpha)))


@dataclass(frozen=True)
class HiggsShifted:
    """Cubic (Higgs) family with a shifted diagonal spectrum m + gamma."""

    beta: float
    gamma: float


@dataclass(frozen=True)
class QuadraticShifted:
    """Quadratic family [J+, J-] = 2 J3 + 4 alpha J3^2 with shift gamma."""

    alpha: float
    gamma: float


@dataclass(frozen=True)
class QBase:
    """q-base polynomial family: phi applied to the q-brackets, q = e^delta."""

    alpha: tuple
    delta: float

    def __init__(self, alpha: Sequence, delta: float):
        if delta == 0:
            raise ValueError("QBase requires delta != 0")
        object.__setattr__(self, "alpha", tuple(float(a) for a in alpha))
        object.__setattr__(self, "delta", float(delta))


Family = Union[Polynomial, HiggsShifted, QuadraticShifted, QBase]


@dataclass(frozen=True)
class StructureSpec:
    """An algebra family together with the spin label j >= 0."""

    family: Family
    j: HalfInt

    def __post_init__(self):
        object.__setattr__(self, "j", halfint(self.j))
        if self.j.twice < 0:
            raise ValueError("spin label j must be >= 0")

    @property
    def gamma(self) -> float:
        if isinstance(self.family, (HiggsShifted, QuadraticShifted)):
            return float(self.family.gamma)
        return 0.0

    @property
    def family_name(self) -> str:
        return type(self.family).__name__


def _check_range(j: HalfInt, m: HalfInt):
    if not -j.twice <= m.twice <= j.twice:
        raise ValueError(f"m = {m} outside ladder -{j}..{j}")


def f2_polynomial(alpha: Sequence, j, m) -> Fraction:
    """Exact F(j, m) = sum_k alpha_k ((j(j+1))^k - (m(m+1))^k)."""
    j, m = halfint(j), halfint(m)
    _check_range(j, m)
    a = as_rationals(alpha)
    jj1, mm1 = j.mm1(), m.mm1()
    acc = Fraction(0)
    jp = mp = Fraction(1)
    for coeff in a:
        jp *= jj1
        mp *= mm1
        acc += coeff * (jp - mp)
    return acc


def f2_higgs_shifted_up(beta: float, gamma: float, j, m) -> float:
    """Raising structure function of the shifted Higgs family."""
    j, m = halfint(j), halfint(m)
    _check_range(j, m)
    jv, mv, b, g = j.value, m.value, float(beta), float(gamma)
    return (jv - mv) * (jv + mv + 1 + 2 * g) * (
        1 + 2 * b * (jv * (jv + 1) + mv * (mv + 1) + 2 * g * (jv + mv + 1 + g))
    )


def f2_higgs_shifted_down(beta: float, gamma: float, j, m) -> float:
    """Lowering structure function of the shifted Higgs family."""
    j, m = halfint(j), halfint(m)
    _check_range(j, m)
    jv, mv, b, g = j.value, m.value, float(beta), float(gamma)
    return (jv - mv + 1) * (jv + mv + 2 * g) * (
        1 + 2 * b * (jv * (jv + 1) + mv * (mv - 1) + 2 * g * (jv + mv + g))
    )


def f2_quadratic_up(alpha: float, gamma: float, j, m) -> float:
    """Raising structure function of the shifted quadratic family."""
    j, m = halfint(j), halfint(m)
    _check_range(j, m)
    jv, mv, a, g = j.value, m.value, float(alpha), float(gamma)
    inner = (
        4 * jv * jv / 3
        + 4 * jv * mv / 3
        + 4 * mv * mv / 3
        + 4 * g * jv
        + 4 * g * mv
        + 2 * jv
        + 2 * mv
        + 4 * g * g
        + 4 * g
        + 2.0 / 3
    )
    return (jv - mv) * (jv + mv + 1 + 2 * g + a * inner)


def f2_quadratic_down(alpha: float, gamma: float, j, m) -> float:
    """Lowering structure function of the shifted quadratic family."""
    j, m = halfint(j), halfint(m)
    _check_range(j, m)
    jv, mv, a, g = j.value, m.value, float(alpha), float(gamma)
    inner = (
        4 * jv * jv / 3
        + 4 * jv * mv / 3
        + 4 * mv * mv / 3
        + 4 * g * jv
        + 4 * g * mv
        + 2 * jv / 3
        - 2 * mv / 3
        + 4 * g * g
    )
    return (jv - mv + 1) * (jv + mv + 2 * g + a * inner)


def f2_qbase(alpha: Sequence, delta: float, j, m) -> float:
    """F(j, m) = sum_k alpha_k (([j][j+1])^k - ([m][m+1])^k), [x] the q-bracket."""
    j, m = halfint(j), halfint(m)
    _check_range(j, m)
    if delta == 0:
        raise ValueError("f2_qbase requires delta != 0")
    jj1 = q_bracket(j.value, delta) * q_bracket(j.value + 1, delta)
    mm1 = q_bracket(m.value, delta) * q_bracket(m.value + 1, delta)
    acc = 0.0
    jp = mp = 1.0
    for coeff in alpha:
        jp *= jj1
        mp *= mm1
        acc += float(coeff) * (jp - mp)
    return acc


def f2_up(spec: StructureSpec, m) -> float:
    """Family dispatch for the raising structure function (as float)."""
    fam, j = spec.family, spec.j
    if isinstance(fam, Polynomial):
        return float(f2_polynomial(fam.alpha, j, m))
    if isinstance(fam, HiggsShifted):
        return f2_higgs_shifted_up(fam.beta, fam.gamma, j, m)
    if isinstance(fam, QuadraticShifted):
        return f2_quadratic_up(fam.alpha, fam.gamma, j, m)
    if isinstance(fam, QBase):
        return f2_qbase(fam.alpha, fam.delta, j, m)
    raise TypeError(f"unknown family {fam!r}")


def f2_down(spec: StructureSpec, m) -> float:
    """Family dispatch for the lowering structure function (as float).

    For the unshifted families hermiticity makes this F(j, m-1); the shifted
    families have their own closed-form expressions.
    """
    fam, j = spec.family, spec.j
    m = halfint(m)
    if isinstance(fam, Polynomial):
        return float(f2_polynomial(fam.alpha, j, m - 1)) if m.twice > -j.twice else 0.0
    if isinstance(fam, HiggsShifted):
        return f2_higgs_shifted_down(fam.beta, fam.gamma, j, m)
    if isinstance(fam, QuadraticShifted):
        return f2_quadratic_down(fam.alpha, fam.gamma, j, m)
    if isinstance(fam, QBase):
        return f2_qbase(fam.alpha, fam.delta, j, m - 1) if m.twice > -j.twice else 0.0
    raise TypeError(f"unknown family {fam!r}")


def admissible(spec: StructureSpec) -> tuple[bool, list[HalfInt]]:
    """Unitarity screening: nonnegative ladder values and boundary annihilation.

    Returns (ok, offending_m). The polynomial family is screened exactly;
    the real-valued families within ADMISSIBILITY_TOL. For the shifted
    families the raising function must vanish at m = j and the lowering one
    at m = -j (within BOUNDARY_TOL), which pins the allowed gamma values.
    """
    j = spec.j
    offending: list[HalfInt] = []
    if j.twice == 0:
        return True, offending

    exact = isinstance(spec.family, Polynomial)
    for m in ladder(j):
        if m.twice == j.twice:
            continue
        if exact:
            val = f2_polynomial(spec.family.alpha, j, m)
            if val < 0:
                offending.append(m)
        else:
            if f2_up(spec, m) < -ADMISSIBILITY_TOL:
                offending.append(m)

    if isinstance(spec.family, (HiggsShifted, QuadraticShifted)):
        if abs(f2_up(spec, j)) > BOUNDARY_TOL:
            offending.append(j)
        if abs(f2_down(spec, -j)) > BOUNDARY_TOL and -j not in offending:
            offending.append(-j)

    return not offending, offending
