"""Dense matrix representations of the linear and nonlinear sl(2) algebras.

Basis order is m = j, j-1, ..., -j; J3 is diagonal with entries m + gamma,
the raising operator lives on the superdiagonal with nonnegative entries,
and the lowering operator is its transpose (hermiticity is by construction).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .coefficients import phi_eval, phi_prime
from .halfint import HalfInt, halfint, ladder_desc
from .qdeform import q_bracket
from .structure import (
    Polynomial,
    StructureSpec,
    admissible,
    f2_up,
)


class InadmissibleSpecError(ValueError):
    """The requested spec fails unitarity screening; carries the offending m."""

    def __init__(self, spec: StructureSpec, offending):
        self.spec = spec
        self.offending = list(offending)
        ms = ", ".join(str(m) for m in self.offending)
        super().__init__(
            f"{spec.family_name} spec at j={spec.j} is not admissible "
            f"(negative structure function or broken boundary annihilation at m = {ms})"
        )


class NonBijectiveError(ValueError):
    """phi is not strictly increasing on the needed interval; carries a witness."""

    def __init__(self, witness_x: float):
        self.witness_x = witness_x
        super().__init__(
            f"phi is not strictly increasing on the Casimir interval: "
            f"phi'({witness_x:.6g}) <= 0, inverse map rejected"
        )


@dataclass(frozen=True)
class MatrixRep:
    """A dense real matrix triple (J3, Jplus, Jminus) with its metadata."""

    dim: int
    two_j: int
    gamma: float
    family: str
    J3: np.ndarray
    Jplus: np.ndarray
    Jminus: np.ndarray

    @property
    def j(self) -> HalfInt:
        return HalfInt(self.two_j)

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "two_j": self.two_j,
            "gamma": self.gamma,
            "family": self.family,
            "J3": self.J3.flatten().tolist(),
            "Jplus": self.Jplus.flatten().tolist(),
            "Jminus": self.Jminus.flatten().tolist(),
        }


def _assemble(j: HalfInt, up_values, gamma: float = 0.0, family: str = "sl2",
              dtype=float) -> MatrixRep:
    """Build the matrix triple from the superdiagonal squared entries.

    up_values[i] is F(j, m_i) for the source states m_i = j-1, ..., -j
    (column index i+1).
    """
    dim = j.twice + 1
    j3 = np.diag(np.array([m.value + gamma for m in ladder_desc(j)], dtype=dtype))
    jp = np.zeros((dim, dim), dtype=dtype)
    for i, f2 in enumerate(up_values):
        if f2 < 0:
            raise ValueError(f"negative squared matrix element {f2} at position {i}")
        jp[i, i + 1] = np.sqrt(np.dtype(dtype).type(f2))
    return MatrixRep(dim, j.twice, gamma, family, j3, jp, jp.T.copy())


def build_sl2(j) -> MatrixRep:
    """Standard angular-momentum matrices for spin j."""
    j = halfint(j)
    ups = [(j.value - m.value) * (j.value + m.value + 1) for m in list(ladder_desc(j))[1:]]
    return _assemble(j, ups, family="sl2")


def build_deformed(spec: StructureSpec) -> MatrixRep:
    """Matrices of any admissible family, superdiagonal from its structure function."""
    ok, offending = admissible(spec)
    if not ok:
        raise InadmissibleSpecError(spec, offending)
    j = spec.j
    ups = [max(f2_up(spec, m), 0.0) for m in list(ladder_desc(j))[1:]]
    return _assemble(j, ups, gamma=spec.gamma, family=spec.family_name)


def build_uq(j, delta: float, dtype=float) -> MatrixRep:
    """U_q(sl(2)) irrep: raising entries sqrt([j-m][j+m+1]), q = e^delta.

    dtype=np.longdouble builds the matrices in extended precision, useful when
    a verification tolerance sits below the double-precision granularity of
    the large q-bracket entries.
    """
    j = halfint(j)
    if delta == 0:
        raise ValueError("build_uq requires delta != 0")
    dt = np.dtype(dtype).type
    d = dt(delta)
    sinh_d = np.sinh(d)

    def qb(x):
        return np.sinh(d * dt(x)) / sinh_d

    ups = [
        qb(j.value - m.value) * qb(j.value + m.value + 1)
        for m in list(ladder_desc(j))[1:]
    ]
    return _assemble(j, ups, family="Uq", dtype=dtype)


def _divided_difference(alpha: Sequence, c: Fraction, x: Fraction) -> Fraction:
    """(phi(c) - phi(x))/(c - x), with the phi'(x) limit at the removable point."""
    if c == x:
        return phi_prime(alpha, x)
    return (phi_eval(alpha, c) - phi_eval(alpha, x)) / (c - x)


def deformed_from_undeformed(rep: MatrixRep, alpha: Sequence) -> MatrixRep:
    """Second construction route: scalar functional calculus on (C, J3).

    On a single irrep C = j(j+1) is scalar and J3 diagonal, so the
    divided-difference factor reduces to a diagonal matrix evaluated at the
    source state; the raising operator is multiplied by its square root on
    the right.
    """
    j = rep.j
    c = j.mm1()
    ups = []
    for m in list(ladder_desc(j))[1:]:
        dd = _divided_difference(alpha, c, m.mm1())
        if dd < 0:
            raise InadmissibleSpecError(StructureSpec(Polynomial(alpha), j), [m])
        base = (j.value - m.value) * (j.value + m.value + 1)
        ups.append(base * float(dd))
    return _assemble(j, ups, family="Polynomial")


def build_quadratic_explicit(rep: MatrixRep, alpha: float) -> MatrixRep:
    """Quadratic-family generators written in terms of the undeformed ones.

    J3' = J3 - 1/(4a) + (1/(4a)) sqrt(1 - 16 a^2 C / 3) and the ladder
    operators pick up the factor ((2a/3)(2 J3 + 1) + sqrt(1 - 16 a^2 C/3))^(1/2)
    evaluated at the source state.
    """
    a = float(alpha)
    if abs(a) < 1e-12:
        raise ValueError("alpha too close to 0 (singular 1/(4 alpha) prefactor); use the undeformed rep")
    j = rep.j
    c = float(j.mm1())
    rad = 1 - 16 * a * a * c / 3
    if rad < 0:
        raise ValueError(
            f"negative radicand 1 - 16 a^2 j(j+1)/3 = {rad:.6g}; "
            f"alpha must satisfy alpha <= 3/(2(4j+1)) = {3 / (2 * (2 * j.twice + 1)):.6g}"
        )
    s = math.sqrt(rad)
    gamma = (-1 + s) / (4 * a)
    ups = []
    for m in list(ladder_desc(j))[1:]:
        factor = 2 * a * (2 * m.value + 1) / 3 + s
        base = (j.value - m.value) * (j.value + m.value + 1)
        val = base * factor
        if val < -1e-12:
            raise ValueError(f"negative squared matrix element at m={m} for alpha={a}")
        ups.append(max(val, 0.0))
    return _assemble(j, ups, gamma=gamma, family="QuadraticShifted")


def casimir_matrix(rep: MatrixRep, alpha: Sequence) -> np.ndarray:
    """Deformed Casimir (1/2)(J+J- + J-J+ + phi(J3(J3+1)) + phi(J3(J3-1))).

    Only meaningful for polynomial-family reps (unshifted spectrum), where it
    must equal phi(j(j+1)) times the identity.
    """
    if rep.gamma != 0.0:
        raise ValueError("casimir_matrix expects an unshifted (polynomial-family) rep")
    j = rep.j
    up = np.diag([float(phi_eval(alpha, m.mm1())) for m in ladder_desc(j)])
    dn = np.diag([float(phi_eval(alpha, m.mm1_down())) for m in ladder_desc(j)])
    return 0.5 * (rep.Jplus @ rep.Jminus + rep.Jminus @ rep.Jplus + up + dn)


def inverse_map_uq(repq: MatrixRep, delta: float) -> MatrixRep:
    """Reconstruct the undeformed irrep from a q-deformed one.

    Recovers the undeformed Casimir through the arcsinh inversion
    sqrt(C + 1/4) = (1/delta) arcsinh(sqrt(Chat + [1/2]^2) sinh(delta))
    and rescales the ladder entries accordingly.
    """
    if delta == 0:
        raise ValueError("inverse_map_uq requires delta != 0")
    j = repq.j
    jp, jm = repq.Jplus, repq.Jminus
    ms = [m.value for m in ladder_desc(j)]
    diag_up = np.array([q_bracket(m, delta) * q_bracket(m + 1, delta) for m in ms])
    diag_dn = np.array([q_bracket(m, delta) * q_bracket(m - 1, delta) for m in ms])
    chat_mat = 0.5 * (jp @ jm + jm @ jp + np.diag(diag_up) + np.diag(diag_dn))
    chat = float(chat_mat[0, 0])

    half = q_bracket(0.5, delta)
    arg = chat + half * half
    if arg < 0:
        raise ValueError("inconsistent q-deformed input: negative Chat + [1/2]^2")
    c = (math.asinh(math.sqrt(arg) * math.sinh(delta)) / delta) ** 2 - 0.25

    ups = []
    for i, m in enumerate(list(ladder_desc(j))[1:]):
        num = (c + 0.25) - (m.value + 0.5) ** 2
        den = arg - q_bracket(m.value + 0.5, delta) ** 2
        entry2 = jp[i, i + 1] ** 2
        if den <= 0:
            if entry2 > 1e-12 or num > 1e-12:
                raise ValueError(f"inconsistent q-deformed input at m={m}")
            ups.append(0.0)
            continue
        ratio = num / den
        if ratio < 0:
            raise ValueError(f"inconsistent q-deformed input: negative ratio at m={m}")
        ups.append(entry2 * ratio)
    return _assemble(j, ups, family="sl2")


def inverse_map_polynomial(rep: MatrixRep, alpha: Sequence, samples: int = 257) -> MatrixRep:
    """Reconstruct the undeformed irrep when phi is bijective on [0, j(j+1)].

    Monotonicity is screened by sampling the sign of phi' on the Casimir
    interval; a sign change raises NonBijectiveError with the witness point.
    """
    j = rep.j
    c = j.mm1()
    for i in range(samples):
        x = Fraction(i, samples - 1) * c if c != 0 else Fraction(0)
        if phi_prime(alpha, x) <= 0:
            raise NonBijectiveError(float(x))
    ups = []
    for i, m in enumerate(list(ladder_desc(j))[1:]):
        dd = float(_divided_difference(alpha, c, m.mm1()))
        entry2 = rep.Jplus[i, i + 1] ** 2
        ups.append(entry2 / dd)
    return _assemble(j, ups, family="sl2")
