"""Tensor products, coproducts and Hopf-axiom checks.

The primitive coproduct is realized both formally (term lists, for exact
coassociativity/counit/antipode checks) and concretely on the product space.
Deformed coproducts are built by joint spectral calculus on the commuting
pair (Delta(C), Delta(J3)): Delta(J3) is diagonal in the product basis, so
Delta(C) is diagonalized inside each m-eigenspace only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

import numpy as np

from .coefficients import phi_eval, phi_prime
from .halfint import halfint
from .repbuilder import MatrixRep, build_sl2
from .verifier import DEFAULT_TOL, VerificationReport

JOINT_TOL = 1e-10


class InadmissibleProductError(ValueError):
    """A joint eigenvalue leaves the domain of the spectral function."""

    def __init__(self, message: str, c: float, m: float):
        self.c = c
        self.m = m
        super().__init__(f"{message} at joint eigenvalue (c={c:.6g}, m={m:.6g})")


# ---------------------------------------------------------------------------
# formal tensors


@dataclass
class FormalTensor:
    """A finite sum of elementary tensor terms over fixed factor spaces.

    Each term is a tuple of matrices, one per tensor leg. Canonicalization
    merges terms whose legs are pairwise proportional, so formal equality is
    insensitive to how a sum was assembled.
    """

    terms: list

    def canonicalize(self) -> "FormalTensor":
        """Merge terms whose legs are pairwise proportional."""
        merged: list[tuple[float, list]] = []  # (scale, legs)
        for term in self.terms:
            for i, (scale, legs) in enumerate(merged):
                s = _proportionality(list(term), legs)
                if s is not None:
                    merged[i] = (scale + s, legs)
                    break
            else:
                merged.append((1.0, [t.copy() for t in term]))
        out = []
        for scale, legs in merged:
            if scale == 0:
                continue
            out.append(tuple([scale * legs[0]] + legs[1:]))
        return FormalTensor(out)

    def realize(self) -> np.ndarray:
        """Kronecker-realize the sum on the product space."""
        acc = None
        for term in self.terms:
            mat = term[0]
            for leg in term[1:]:
                mat = np.kron(mat, leg)
            acc = mat if acc is None else acc + mat
        return acc


def _proportionality(a, b) -> Optional[float]:
    """Scale s with a == s*b legwise, or None. (Used by canonicalize.)"""
    if len(a) != len(b):
        return None
    scale = 1.0
    for x, y in zip(a, b):
        if x.shape != y.shape:
            return None
        ynorm = np.abs(y).max()
        if ynorm == 0:
            if np.abs(x).max() != 0:
                return None
            continue
        idx = np.unravel_index(np.abs(y).argmax(), y.shape)
        s = x[idx] / y[idx]
        if not np.allclose(x, s * y, atol=1e-14, rtol=1e-12):
            return None
        scale *= s
    return scale


def formal_equal(a: FormalTensor, b: FormalTensor, tol: float = 1e-14) -> bool:
    """Exact equality of formal sums, compared term-by-term after matching."""
    remaining = [list(t) for t in b.terms]
    for term in a.terms:
        for i, cand in enumerate(remaining):
            if len(term) == len(cand) and all(
                t.shape == c.shape and np.allclose(t, c, atol=tol, rtol=0)
                for t, c in zip(term, cand)
            ):
                remaining.pop(i)
                break
        else:
            return False
    return not remaining


# ---------------------------------------------------------------------------
# product representations


@dataclass
class ProductRep:
    """Primitive coproduct matrices on V1 (x) V2 with the joint eigenstructure."""

    d1: int
    d2: int
    DJ3: np.ndarray
    DJp: np.ndarray
    DJm: np.ndarray
    DC: np.ndarray
    joint_eigs: list = field(default_factory=list)  # (c, m, eigvec)

    @property
    def dim(self) -> int:
        return self.d1 * self.d2


def primitive_coproduct(rep1: MatrixRep, rep2: MatrixRep) -> ProductRep:
    """Delta(X) = X (x) 1 + 1 (x) X for the generators, with the product Casimir."""
    i1, i2 = np.eye(rep1.dim), np.eye(rep2.dim)
    dj3 = np.kron(rep1.J3, i2) + np.kron(i1, rep2.J3)
    djp = np.kron(rep1.Jplus, i2) + np.kron(i1, rep2.Jplus)
    djm = np.kron(rep1.Jminus, i2) + np.kron(i1, rep2.Jminus)
    c1 = float(rep1.j.mm1()) * i1
    c2 = float(rep2.j.mm1()) * i2
    dc = (
        np.kron(c1, i2)
        + np.kron(i1, c2)
        + np.kron(rep1.Jplus, rep2.Jminus)
        + np.kron(rep1.Jminus, rep2.Jplus)
        + 2 * np.kron(rep1.J3, rep2.J3)
    )
    pr = ProductRep(rep1.dim, rep2.dim, dj3, djp, djm, dc)
    pr.joint_eigs = _joint_eigenstructure(dj3, dc)
    return pr


def _joint_eigenstructure(dj3: np.ndarray, dc: np.ndarray) -> list:
    """Diagonalize DC inside each eigenspace of the diagonal DJ3."""
    dim = dj3.shape[0]
    diag = np.diag(dj3)
    # group indices by the (half-integer) DJ3 eigenvalue
    blocks: dict[int, list[int]] = {}
    for i, v in enumerate(diag):
        key = round(2 * v)
        blocks.setdefault(key, []).append(i)
    eigs = []
    for key in sorted(blocks):
        idx = blocks[key]
        sub = dc[np.ix_(idx, idx)]
        w, vecs = np.linalg.eigh(0.5 * (sub + sub.T))
        for col in range(len(idx)):
            vec = np.zeros(dim)
            vec[idx] = vecs[:, col]
            eigs.append((float(w[col]), key / 2.0, vec))
    return eigs


def joint_calculus(pr: ProductRep, g: Callable[[float, float], float]) -> np.ndarray:
    """Apply a scalar function of (c, m) over the joint spectrum of (DC, DJ3)."""
    out = np.zeros((pr.dim, pr.dim))
    for c, m, vec in pr.joint_eigs:
        out += g(c, m) * np.outer(vec, vec)
    return out


def product_casimir_spectrum(j1, j2) -> list[float]:
    """Clebsch-Gordan oracle: eigenvalues J(J+1), each with multiplicity 2J+1."""
    j1, j2 = halfint(j1), halfint(j2)
    vals = []
    for twoJ in range(abs(j1.twice - j2.twice), j1.twice + j2.twice + 1, 2):
        vals.extend([twoJ * (twoJ + 2) / 4.0] * (twoJ + 1))
    return sorted(vals)


def _snap_mm1(m: float) -> Fraction:
    """m(m+1) for a numerically half-integer m, exactly."""
    t = round(2 * m)
    return Fraction(t * (t + 2), 4)


def _divided_difference_real(alpha: Sequence, c: float, x: Fraction) -> float:
    phic = float(phi_eval_real(alpha, c))
    phix = float(phi_eval(alpha, x))
    den = c - float(x)
    if abs(den) < 1e-9:
        return float(phi_prime(alpha, x))
    return (phic - phix) / den


def phi_eval_real(alpha: Sequence, x: float) -> float:
    acc = 0.0
    for coeff in reversed([float(a) for a in alpha]):
        acc = (acc + coeff) * x
    return acc


def deformed_coproduct(pr: ProductRep, alpha: Sequence, order: str = "source"):
    """Coproduct of the polynomial-deformed generators on the product space.

    The square-rooted divided difference (phi(c) - phi(m(m+1)))/(c - m(m+1))
    is applied by joint calculus. With order='source' the factor sits to the
    right of Delta(J+) (evaluated at the source state, matching the single
    irrep construction); order='target' puts it on the left, which evaluates
    at the target state instead (and is not an algebra map in general).

    Returns (DJp_hat, DJm_hat, DJ3).
    """
    if order not in ("source", "target"):
        raise ValueError("order must be 'source' or 'target'")

    def g(c: float, m: float) -> float:
        x = _snap_mm1(m)
        dd = _divided_difference_real(alpha, c, x)
        if dd < -JOINT_TOL:
            if c - float(x) > 1e-9:
                raise InadmissibleProductError(
                    "negative divided difference (inadmissible tensor product)", c, m
                )
            # removable point at a block's highest weight: the factor
            # multiplies an annihilated direction, its sign is immaterial
            return 0.0
        return math.sqrt(max(dd, 0.0))

    factor = joint_calculus(pr, g)
    if order == "source":
        djp_hat = pr.DJp @ factor
    else:
        djp_hat = factor @ pr.DJp
    return djp_hat, djp_hat.T.copy(), pr.DJ3


def quadratic_coproduct(pr: ProductRep, alpha: float):
    """Hopf maps of the quadratic family realized on the product space.

    Returns (DJ3_a, DJp_a, DJm_a) built with joint calculus for both square
    roots; requires 1 - 16 alpha^2 c / 3 >= 0 at every Casimir eigenvalue.
    """
    a = float(alpha)
    if abs(a) < 1e-12:
        raise ValueError("alpha too close to 0 (singular 1/(4 alpha) prefactor)")
    cmax = max(c for c, _, _ in pr.joint_eigs)
    if 1 - 16 * a * a * cmax / 3 < 0:
        raise InadmissibleProductError(
            f"negative radicand: need alpha^2 <= 3/(16 c_max) = {3 / (16 * cmax):.6g}",
            cmax, float("nan"),
        )

    def root(c: float, m: float) -> float:
        return math.sqrt(max(1 - 16 * a * a * c / 3, 0.0))

    def ladder_factor(c: float, m: float) -> float:
        val = 2 * a * (2 * m + 1) / 3 + root(c, m)
        if val < -JOINT_TOL:
            raise InadmissibleProductError("negative ladder-factor radicand", c, m)
        return math.sqrt(max(val, 0.0))

    R = joint_calculus(pr, root)
    F = joint_calculus(pr, ladder_factor)
    dj3_a = pr.DJ3 - (1 / (4 * a)) * np.eye(pr.dim) + (1 / (4 * a)) * R
    djp_a = pr.DJp @ F
    djm_a = djp_a.T.copy()
    return dj3_a, djp_a, djm_a


def swap_matrix(d1: int, d2: int) -> np.ndarray:
    """Permutation realizing v (x) w -> w (x) v."""
    p = np.zeros((d1 * d2, d1 * d2))
    for a in range(d1):
        for b in range(d2):
            p[b * d1 + a, a * d2 + b] = 1.0
    return p


def cocommutativity_check(matrices: Sequence[np.ndarray], d: int) -> list[float]:
    """Swap-conjugation residuals for coproduct matrices on V (x) V."""
    dim = d * d
    for mat in matrices:
        if mat.shape != (dim, dim):
            raise ValueError("cocommutativity_check requires equal tensor factors")
    p = swap_matrix(d, d)
    return [float(np.linalg.norm(p @ mat @ p.T - mat)) for mat in matrices]


# ---------------------------------------------------------------------------
# Hopf axioms


def primitive_formal_coproduct(x: np.ndarray, eye: np.ndarray) -> FormalTensor:
    return FormalTensor([(x.copy(), eye.copy()), (eye.copy(), x.copy())])


def antipode_realization(j) -> np.ndarray:
    """Matrix W with W J3 W^-1 = -J3^T and W J+- W^-1 = -J-+^T on the irrep.

    The antipode of any realized algebra element X is then (W X W^-1)^T,
    linear in X and antimultiplicative, sending each generator to its
    negative.
    """
    j = halfint(j)
    d = j.twice + 1
    w = np.zeros((d, d))
    for i in range(d):
        w[d - 1 - i, i] = (-1.0) ** i
    return w


def apply_antipode(x: np.ndarray, w: np.ndarray) -> np.ndarray:
    return (w @ x @ np.linalg.inv(w)).T


def multiply_with_antipode(x: np.ndarray, d: int, w: np.ndarray, side: str = "right") -> np.ndarray:
    """Realize m(id (x) S) (side='right') or m(S (x) id) (side='left') on End(V (x) V).

    Any matrix on V (x) V is a sum of elementary tensors A_i (x) B_i; the map
    sends it to sum A_i S(B_i) (or sum S(A_i) B_i) with S realized by W. The
    result is decomposition-independent because the map is linear, so it is
    computed on the elementary-tensor basis E_ab (x) E_ce directly.
    """
    t = x.reshape(d, d, d, d)  # [a, c, b, e] = <a c| X |b e>
    winv = np.linalg.inv(w)
    out = np.zeros((d, d))
    if side == "right":
        for a in range(d):
            for b in range(d):
                block = t[a, :, b, :]  # B-part paired with E_ab on the left leg
                sb = (w @ block @ winv).T
                out[a, :] += sb[b, :]  # E_ab @ S(B)
    elif side == "left":
        for a in range(d):
            for b in range(d):
                e_ab = np.zeros((d, d))
                e_ab[a, b] = 1.0
                s_eab = (w @ e_ab @ winv).T
                out += s_eab @ t[a, :, b, :]
    else:
        raise ValueError("side must be 'right' or 'left'")
    return out


def hopf_axiom_checks(rep: MatrixRep, quadratic_alpha: Optional[float] = None,
                      tol: float = 1e-12) -> VerificationReport:
    """Verify coassociativity, counit and antipode identities on one irrep.

    Primitive generators are checked exactly as formal sums; with
    quadratic_alpha set, the quadratic antipode maps are additionally
    realized by functional calculus and the antipode axiom is checked at
    matrix level on the product space (equal factors, so the trivial
    component is present).
    """
    report = VerificationReport()
    eye = np.eye(rep.dim)
    gens = {"J+": rep.Jplus, "J-": rep.Jminus, "J3": rep.J3}

    def expand_left(term):
        """Apply Delta (x) id to one labeled two-leg term."""
        (llab, l), (rlab, r) = term
        if llab == "1":
            return [((llab, l), (llab, l), (rlab, r))]
        return [((llab, l), ("1", eye), (rlab, r)), (("1", eye), (llab, l), (rlab, r))]

    def expand_right(term):
        """Apply id (x) Delta to one labeled two-leg term."""
        (llab, l), (rlab, r) = term
        if rlab == "1":
            return [((llab, l), (rlab, r), (rlab, r))]
        return [((llab, l), (rlab, r), ("1", eye)), ((llab, l), ("1", eye), (rlab, r))]

    for name, x in gens.items():
        # labeled primitive coproduct: X (x) 1 + 1 (x) X
        delta = [((name, x), ("1", eye)), (("1", eye), (name, x))]

        left = FormalTensor(
            [tuple(mat for _, mat in t) for term in delta for t in expand_left(term)]
        ).canonicalize()
        right = FormalTensor(
            [tuple(mat for _, mat in t) for term in delta for t in expand_right(term)]
        ).canonicalize()
        report.add_exact(
            f"coassociativity Delta({name})",
            Fraction(0) if formal_equal(left, right) else Fraction(1),
            context="three-leg formal sums",
        )

        # counit: eps(generator) = 0, eps(1) = 1, applied legwise
        def eps(lab):
            return 1.0 if lab == "1" else 0.0

        id_eps = sum(eps(rlab) * l for (_, l), (rlab, _) in delta)
        eps_id = sum(eps(llab) * r for (llab, _), (_, r) in delta)
        report.add_numeric(f"counit (id x eps)Delta({name}) = {name}",
                           float(np.linalg.norm(id_eps - x)), tol)
        report.add_numeric(f"counit (eps x id)Delta({name}) = {name}",
                           float(np.linalg.norm(eps_id - x)), tol)

        # antipode: S(generator) = -generator, S(1) = 1, multiplied out
        def s_of(lab, mat):
            return mat if lab == "1" else -mat

        anti_r = sum(l @ s_of(rlab, r) for (_, l), (rlab, r) in delta)
        anti_l = sum(s_of(llab, l) @ r for (llab, l), (_, r) in delta)
        report.add_numeric(f"antipode m(id x S)Delta({name}) = 0",
                           float(np.linalg.norm(anti_r)), tol)
        report.add_numeric(f"antipode m(S x id)Delta({name}) = 0",
                           float(np.linalg.norm(anti_l)), tol)

    if quadratic_alpha is not None:
        report.extend(quadratic_antipode_checks(rep, quadratic_alpha))
    return report


def quadratic_antipode_checks(rep: MatrixRep, alpha: float,
                              tol: float = DEFAULT_TOL) -> VerificationReport:
    """Antipode identities for the quadratic maps realized on an irrep.

    Checks that the conjugation-transpose realization of S reproduces the
    closed-form expressions for S(J3') and S(J+-'), and that the antipode axiom
    m(id (x) S) Delta(X') = 0 holds at matrix level on V (x) V.
    """
    from .repbuilder import build_quadratic_explicit

    a = float(alpha)
    report = VerificationReport()
    j = rep.j
    c = float(j.mm1())
    s = math.sqrt(1 - 16 * a * a * c / 3)
    w = antipode_realization(j)

    quad = build_quadratic_explicit(rep, a)

    # closed-form antipode expressions
    s_j3_formula = -rep.J3 - (1 / (4 * a)) * np.eye(rep.dim) + (1 / (4 * a)) * s * np.eye(rep.dim)
    ladder_neg = np.diag([2 * a * (-2 * rep.J3[i, i] + 1) / 3 + s for i in range(rep.dim)])
    s_jp_formula = -_matrix_sqrt_diag(ladder_neg) @ rep.Jplus
    s_jm_formula = -rep.Jminus @ _matrix_sqrt_diag(ladder_neg)

    report.add_numeric(
        "S(J3') realization vs formula",
        float(np.linalg.norm(apply_antipode(quad.J3, w) - s_j3_formula)), tol,
        context=f"j={j} alpha={a}",
    )
    report.add_numeric(
        "S(J+') realization vs formula",
        float(np.linalg.norm(apply_antipode(quad.Jplus, w) - s_jp_formula)), tol,
    )
    report.add_numeric(
        "S(J-') realization vs formula",
        float(np.linalg.norm(apply_antipode(quad.Jminus, w) - s_jm_formula)), tol,
    )

    # antipode axiom on the product space (equal factors)
    pr = primitive_coproduct(rep, rep)
    dj3_a, djp_a, djm_a = quadratic_coproduct(pr, a)
    for name, mat in (("J3'", dj3_a), ("J+'", djp_a), ("J-'", djm_a)):
        resid_r = float(np.linalg.norm(multiply_with_antipode(mat, rep.dim, w, side="right")))
        report.add_numeric(f"antipode axiom m(id x S)Delta({name}) = 0", resid_r, tol,
                           context=f"j={j} (x) j={j}, alpha={a}")
    return report


def _matrix_sqrt_diag(d: np.ndarray) -> np.ndarray:
    vals = np.diag(d)
    if np.any(vals < -1e-12):
        raise ValueError("negative entry under matrix square root")
    return np.diag(np.sqrt(np.maximum(vals, 0.0)))


def triple_coassociativity_residual(j, alpha: Sequence) -> float:
    """Numeric coassociativity witness for the deformed coproduct on V^(x)3.

    Builds the total Casimir and ladder maps through both bracketing orders
    ((Delta x id)Delta vs (id x Delta)Delta of the primitive maps), applies
    the deformation through joint calculus in each, and returns the largest
    difference.
    """
    rep = build_sl2(halfint(j))
    d = rep.dim

    def pair(repA_j3, repA_jp, repA_jm, repA_c, dA, repB: MatrixRep):
        iA, iB = np.eye(dA), np.eye(repB.dim)
        j3 = np.kron(repA_j3, iB) + np.kron(iA, repB.J3)
        jp = np.kron(repA_jp, iB) + np.kron(iA, repB.Jplus)
        jm = np.kron(repA_jm, iB) + np.kron(iA, repB.Jminus)
        cB = float(repB.j.mm1()) * iB
        cc = (
            np.kron(repA_c, iB) + np.kron(iA, cB)
            + np.kron(repA_jp, repB.Jminus) + np.kron(repA_jm, repB.Jplus)
            + 2 * np.kron(repA_j3, repB.J3)
        )
        return j3, jp, jm, cc

    c0 = float(rep.j.mm1()) * np.eye(d)
    # left bracketing: (V1 x V2) x V3
    j3_12, jp_12, jm_12, c_12 = pair(rep.J3, rep.Jplus, rep.Jminus, c0, d, rep)
    j3_l, jp_l, jm_l, c_l = pair(j3_12, jp_12, jm_12, c_12, d * d, rep)
    # right bracketing: V1 x (V2 x V3)
    i1 = np.eye(d)
    j3_r = np.kron(rep.J3, np.eye(d * d)) + np.kron(i1, j3_12)
    jp_r = np.kron(rep.Jplus, np.eye(d * d)) + np.kron(i1, jp_12)
    jm_r = np.kron(rep.Jminus, np.eye(d * d)) + np.kron(i1, jm_12)
    c_r = (
        np.kron(c0, np.eye(d * d)) + np.kron(i1, c_12)
        + np.kron(rep.Jplus, jm_12) + np.kron(rep.Jminus, jp_12)
        + 2 * np.kron(rep.J3, j3_12)
    )

    resid = max(
        float(np.linalg.norm(j3_l - j3_r)),
        float(np.linalg.norm(jp_l - jp_r)),
        float(np.linalg.norm(c_l - c_r)),
    )

    def deform(j3, jp, cc):
        pr = ProductRep(1, d ** 3, j3, jp, jp.T.copy(), cc)
        pr.joint_eigs = _joint_eigenstructure(j3, cc)

        def g(c, m):
            dd = _divided_difference_real(alpha, c, _snap_mm1(m))
            return math.sqrt(max(dd, 0.0))

        return jp @ joint_calculus(pr, g)

    djp_l = deform(j3_l, jp_l, c_l)
    djp_r = deform(j3_r, jp_r, c_r)
    return max(resid, float(np.linalg.norm(djp_l - djp_r)))
