"""Exact and numerical verification checks producing structured reports."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .coefficients import beta_from_alpha, epsilon, format_rational
from .halfint import halfint, ladder
from .qdeform import q_bracket
from .repbuilder import MatrixRep
from .structure import f2_polynomial

DEFAULT_TOL = 1e-10


@dataclass
class Check:
    """One named verification: exact (no tolerance) or numeric (residual)."""

    name: str
    kind: str  # "exact" | "numeric"
    passed: bool
    residual: Optional[float] = None
    context: str = ""
    discrepancy: Optional[str] = None  # exact nonzero mismatch, as 'p/q'

    def to_json_dict(self) -> dict:
        d = {"name": self.name, "kind": self.kind, "pass": self.passed, "context": self.context}
        if self.kind == "numeric":
            d["residual"] = self.residual
        if self.discrepancy is not None:
            d["discrepancy"] = self.discrepancy
        return d


@dataclass
class VerificationReport:
    """A list of checks; serializable and renderable as a table."""

    checks: list = field(default_factory=list)

    def add_exact(self, name: str, discrepancy: Fraction, context: str = ""):
        ok = discrepancy == 0
        self.checks.append(
            Check(name, "exact", ok, context=context,
                  discrepancy=None if ok else format_rational(discrepancy))
        )

    def add_numeric(self, name: str, residual: float, tol: float, context: str = ""):
        self.checks.append(Check(name, "numeric", residual <= tol, float(residual), context))

    def extend(self, other: "VerificationReport"):
        self.checks.extend(other.checks)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json_dict(self) -> dict:
        return {
            "checks": [c.to_json_dict() for c in self.checks],
            "summary": {
                "total": len(self.checks),
                "passed": sum(c.passed for c in self.checks),
                "all_passed": self.all_passed,
            },
        }

    def render_table(self) -> str:
        lines = [f"{'check':<52} {'kind':<8} {'result':<6} residual"]
        for c in self.checks:
            res = "exact" if c.kind == "exact" else f"{c.residual:.3e}"
            if c.discrepancy:
                res = f"off by {c.discrepancy}"
            lines.append(f"{c.name:<52} {c.kind:<8} {'pass' if c.passed else 'FAIL':<6} {res}")
        lines.append(f"{sum(c.passed for c in self.checks)}/{len(self.checks)} checks passed")
        return "\n".join(lines)


def exact_recurrence_check(alpha: Sequence, j) -> VerificationReport:
    """Ladder difference identity, in exact rationals.

    For every m in -j+1..j the drop F(j, m-1) - F(j, m) must equal the odd
    polynomial sum_p beta_p (2m)^(2p+1) with beta recovered from alpha.
    """
    j = halfint(j)
    beta = beta_from_alpha(alpha)
    report = VerificationReport()
    for m in ladder(j):
        if m.twice == -j.twice:
            continue
        lhs = f2_polynomial(alpha, j, m - 1) - f2_polynomial(alpha, j, m)
        two_m = 2 * m.exact
        rhs = sum((b * two_m ** (2 * p + 1) for p, b in enumerate(beta)), Fraction(0))
        report.add_exact(
            f"ladder-difference j={j} m={m}", lhs - rhs,
            context="F(j,m-1)-F(j,m) vs odd polynomial in 2m",
        )
    return report


def commutator_residuals(rep: MatrixRep, beta: Sequence, tol: float = DEFAULT_TOL) -> VerificationReport:
    """Frobenius residuals of the two defining commutation relations."""
    j3, jp, jm = rep.J3, rep.Jplus, rep.Jminus
    report = VerificationReport()

    r_plus = np.linalg.norm(j3 @ jp - jp @ j3 - jp)
    r_minus = np.linalg.norm(j3 @ jm - jm @ j3 + jm)
    report.add_numeric("[J3,J+] = +J+", float(r_plus), tol, context=f"{rep.family} j={rep.j}")
    report.add_numeric("[J3,J-] = -J-", float(r_minus), tol, context=f"{rep.family} j={rep.j}")

    # The defining relation is in the (possibly shifted) diagonal generator
    # itself, so the shift gamma stays inside J3 here.
    target = np.zeros_like(j3)
    two_j3 = 2 * j3
    power = two_j3.copy()
    two_j3_sq = two_j3 @ two_j3
    for p, b in enumerate(beta):
        if p > 0:
            power = power @ two_j3_sq
        target = target + float(b) * power
    r_comm = np.linalg.norm(jp @ jm - jm @ jp - target)
    report.add_numeric(
        "[J+,J-] = sum_p beta_p (2 J3)^(2p+1)", float(r_comm), tol,
        context=f"{rep.family} j={rep.j} beta={[float(b) for b in beta]}",
    )
    return report


def q_series_identity_residual(j, m, delta: float, trunc: int) -> float:
    """Truncation residual of the q-bracket ratio against the epsilon series.

    LHS is (cosh(d(2j+1)) - cosh(d(2m+1))) / (2 sinh^2 d (j-m)(j+m+1)); RHS is
    the divergence-free series d/sinh d + sum_k 2^(2k+1) d^(2k+1)/((2k+2)! sinh d)
    * sum_{r,s} (j(j+1))^s (m(m+1))^(r-s) eps_r(k), truncated at k = trunc.
    """
    j, m = halfint(j), halfint(m)
    if j == m:
        raise ValueError("q_series_identity_residual requires m != j")
    if delta == 0:
        raise ValueError("q_series_identity_residual requires delta != 0")
    jv, mv = j.value, m.value
    lhs = (math.cosh(delta * (2 * jv + 1)) - math.cosh(delta * (2 * mv + 1))) / (
        2 * math.sinh(delta) ** 2 * (jv - mv) * (jv + mv + 1)
    )
    jj1, mm1 = float(j.mm1()), float(m.mm1())
    rhs = delta / math.sinh(delta)
    for k in range(1, trunc + 1):
        coeff = 2 ** (2 * k + 1) * delta ** (2 * k + 1) / (
            math.factorial(2 * k + 2) * math.sinh(delta)
        )
        inner = 0.0
        for r in range(1, k + 1):
            er = float(epsilon(r, k))
            inner += er * sum(jj1**s * mm1 ** (r - s) for s in range(r + 1))
        rhs += coeff * inner
    return abs(lhs - rhs)


def q_shift_rigidity(j, delta: float, span: float = 10.0, grid: int = 4001,
                     refine_tol: float = 1e-12) -> list[float]:
    """Real roots in gamma of the highest-weight condition [-2 gamma][2j+1] = 0.

    Sign-scan plus bisection over gamma in [-span, span]. For real delta the
    q-bracket vanishes only at zero argument, so the returned list must be
    exactly [0.0]: the spectrum shift buys no new q-deformed representations.
    """
    j = halfint(j)
    if delta == 0:
        raise ValueError("q_shift_rigidity requires delta != 0")

    bracket_2j1 = q_bracket(2 * j.value + 1, delta)

    def f(gamma: float) -> float:
        return q_bracket(-2 * gamma, delta) * bracket_2j1

    xs = np.linspace(-span, span, grid)
    vals = [f(x) for x in xs]
    roots: list[float] = []
    for i in range(grid - 1):
        a, b = xs[i], xs[i + 1]
        fa, fb = vals[i], vals[i + 1]
        if fa == 0.0:
            roots.append(float(a))
            continue
        if fa * fb < 0:
            while b - a > refine_tol:
                mid = 0.5 * (a + b)
                fm = f(mid)
                if fm == 0.0:
                    a = b = mid
                    break
                if fa * fm < 0:
                    b = mid
                else:
                    a, fa = mid, fm
            roots.append(0.5 * (a + b))
    if vals[-1] == 0.0:
        roots.append(float(xs[-1]))
    # merge numerically coincident roots
    merged: list[float] = []
    for r in sorted(roots):
        if not merged or abs(r - merged[-1]) > 1e-9:
            merged.append(r)
    return merged
