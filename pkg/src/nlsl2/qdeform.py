"""q-number utilities and the q-deformed specializations.

The deformation parameter is the real exponent delta with q = e^delta, so
[x] = sinh(delta*x)/sinh(delta); delta = 0 is the classical limit and is
rejected by the deformed operations. q on the unit circle (roots of unity)
is out of scope.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .halfint import HalfInt, halfint, ladder_desc


@dataclass(frozen=True)
class QParam:
    """q = exp(delta) with real nonzero delta."""

    delta: float

    def __post_init__(self):
        if self.delta == 0:
            raise ValueError("QParam requires delta != 0 (q = e^delta must be deformed)")


def q_bracket(x: float, delta: float) -> float:
    """[x] = (q^x - q^-x)/(q - q^-1) = sinh(delta*x)/sinh(delta)."""
    if delta == 0:
        raise ValueError("q_bracket requires delta != 0")
    return math.sinh(delta * x) / math.sinh(delta)


def nested_q_bracket(x: float, deltas) -> float:
    """Iterated bracket [[...[x]_1...]_{n-1}]_n, a scalar curiosity only.

    No representation family is built on it; it exists so the nested-bracket
    commutator example can be evaluated numerically.
    """
    for d in deltas:
        x = q_bracket(x, d)
    return x


def q_beta_coeffs(qp: QParam, count: int) -> list[float]:
    """First `count` commutator coefficients of the q-deformation.

    beta_p = delta^(2p+1) / ((2p+1)! sinh(delta)); the N -> infinity series
    with these coefficients reproduces the q-bracket commutator.
    """
    d = qp.delta
    s = math.sinh(d)
    return [d ** (2 * p + 1) / (math.factorial(2 * p + 1) * s) for p in range(count)]


def uq_casimir_relation(j, qp: QParam) -> float:
    """Check the deformed Casimir identities of U_q(sl(2)) on one irrep.

    Builds the q-deformed rep, forms the Casimir from the matrices, and tests
    the two scalar identities
        sqrt(Chat + [1/2]^2) = [sqrt(C + 1/4)]
        sqrt(C + 1/4) = (1/delta) * arcsinh(sqrt(Chat + [1/2]^2) * sinh(delta))
    with C = j(j+1). Returns the maximum residual.
    """
    from .repbuilder import build_uq

    j = halfint(j)
    d = qp.delta
    rep = build_uq(j, d)
    jp, jm = rep.Jplus, rep.Jminus

    ms = [m.value for m in ladder_desc(j)]
    diag_up = np.array([q_bracket(m, d) * q_bracket(m + 1, d) for m in ms])
    diag_dn = np.array([q_bracket(m, d) * q_bracket(m - 1, d) for m in ms])
    chat_mat = 0.5 * (jp @ jm + jm @ jp + np.diag(diag_up) + np.diag(diag_dn))

    chat_diag = np.diag(chat_mat)
    scalar_residual = float(np.max(np.abs(chat_mat - chat_diag[0] * np.eye(rep.dim)))) if rep.dim else 0.0
    chat = float(chat_diag[0])

    half = q_bracket(0.5, d)
    lhs = math.sqrt(chat + half * half)
    rhs = q_bracket(j.value + 0.5, d)
    r1 = abs(lhs - rhs)

    back = math.asinh(lhs * math.sinh(d)) / d
    r2 = abs(back - (j.value + 0.5))

    return max(scalar_residual, r1, r2)


def qbase_example_commutator(j, beta: float, qp: QParam) -> float:
    """Residual of [J+hat, J-hat] = [2 J3](1 + beta [J3]^2) for phi(x) = x + beta x^2/[2].

    The representation is built from the q-base structure function with
    alpha = [1, beta/[2]]; the commutator must be the stated diagonal.
    """
    from .repbuilder import build_deformed
    from .structure import QBase, StructureSpec

    j = halfint(j)
    d = qp.delta
    alpha = [1.0, beta / q_bracket(2.0, d)]
    rep = build_deformed(StructureSpec(QBase(alpha, d), j))
    comm = rep.Jplus @ rep.Jminus - rep.Jminus @ rep.Jplus
    target = np.diag(
        [
            q_bracket(2 * m.value, d) * (1.0 + beta * q_bracket(m.value, d) ** 2)
            for m in ladder_desc(j)
        ]
    )
    return float(np.linalg.norm(comm - target))
