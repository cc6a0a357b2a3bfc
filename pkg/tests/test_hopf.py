from fractions import Fraction

import numpy as np
import pytest

from nlsl2.coefficients import alpha_from_beta
from nlsl2.halfint import halfint
from nlsl2.hopf import (
    FormalTensor,
    InadmissibleProductError,
    antipode_realization,
    apply_antipode,
    cocommutativity_check,
    deformed_coproduct,
    formal_equal,
    hopf_axiom_checks,
    joint_calculus,
    multiply_with_antipode,
    primitive_coproduct,
    product_casimir_spectrum,
    quadratic_antipode_checks,
    quadratic_coproduct,
    swap_matrix,
    triple_coassociativity_residual,
)
from nlsl2.repbuilder import MatrixRep, build_sl2
from nlsl2.verifier import commutator_residuals


def test_formal_tensor_canonicalize_merges():
    a = np.array([[1.0, 0], [0, 2.0]])
    b = np.array([[0, 1.0], [0, 0]])
    t = FormalTensor([(a, b), (2 * a, b)]).canonicalize()
    assert len(t.terms) == 1
    assert np.allclose(t.terms[0][0], 3 * a)
    # exact cancellation drops the term
    z = FormalTensor([(a, b), (-a, b)]).canonicalize()
    assert len(z.terms) == 0


def test_formal_equal_is_order_insensitive():
    a = np.eye(2)
    b = np.array([[0, 1.0], [0, 0]])
    s1 = FormalTensor([(a, b), (b, a)])
    s2 = FormalTensor([(b, a), (a, b)])
    assert formal_equal(s1, s2)
    assert not formal_equal(s1, FormalTensor([(a, b)]))


def test_primitive_coproduct_realizes_kron_sum():
    r1, r2 = build_sl2("1/2"), build_sl2(1)
    pr = primitive_coproduct(r1, r2)
    assert pr.dim == 6
    expected = np.kron(r1.Jplus, np.eye(3)) + np.kron(np.eye(2), r2.Jplus)
    assert np.allclose(pr.DJp, expected)
    # Delta(C) commutes with every coproduct generator
    for mat in (pr.DJ3, pr.DJp, pr.DJm):
        assert np.linalg.norm(pr.DC @ mat - mat @ pr.DC) < 1e-12


def test_product_casimir_spectrum_oracle():
    assert product_casimir_spectrum("1/2", "1/2") == [0.0, 2.0, 2.0, 2.0]
    got = sorted(c for c, _, _ in primitive_coproduct(build_sl2(1), build_sl2("3/2")).joint_eigs)
    assert np.allclose(got, product_casimir_spectrum(1, "3/2"), atol=1e-10)


def test_joint_calculus_reproduces_casimir():
    pr = primitive_coproduct(build_sl2("1/2"), build_sl2("1/2"))
    rebuilt = joint_calculus(pr, lambda c, m: c)
    assert np.allclose(rebuilt, pr.DC, atol=1e-12)
    identity = joint_calculus(pr, lambda c, m: 1.0)
    assert np.allclose(identity, np.eye(pr.dim), atol=1e-12)


def test_hopf_axioms_primitive():
    for j_str in ("1/2", "2"):
        report = hopf_axiom_checks(build_sl2(halfint(j_str)))
        assert report.all_passed
        kinds = {c.kind for c in report.checks}
        assert kinds == {"exact", "numeric"}


@pytest.mark.parametrize("j1,j2", [("1/2", "1/2"), ("1/2", "1"), ("1", "1")])
@pytest.mark.parametrize("b", [-0.1, -0.05])
def test_deformed_coproduct_is_algebra_map(j1, j2, b):
    if (j1, j2, b) == ("1", "1", -0.1):
        pytest.skip("covered by the inadmissible-product rejection test")
    pr = primitive_coproduct(build_sl2(halfint(j1)), build_sl2(halfint(j2)))
    beta = [Fraction(1), Fraction(b).limit_denominator(100)]
    djp, djm, dj3 = deformed_coproduct(pr, alpha_from_beta(beta))
    fake = MatrixRep(pr.dim, 0, 0.0, "product", dj3, djp, djm)
    assert commutator_residuals(fake, beta, tol=1e-8).all_passed


def test_deformed_coproduct_rejects_inadmissible_component():
    # at beta = -0.1 the spin-2 component of 1 (x) 1 has a negative structure
    # function (unshifted bound is beta >= -1/16), so the product is rejected
    pr = primitive_coproduct(build_sl2(halfint(1)), build_sl2(halfint(1)))
    with pytest.raises(InadmissibleProductError) as exc:
        deformed_coproduct(pr, alpha_from_beta([Fraction(1), Fraction(-1, 10)]))
    assert exc.value.c == pytest.approx(6.0, abs=1e-9)


def test_deformed_coproduct_target_order_is_not_homomorphism():
    pr = primitive_coproduct(build_sl2(halfint("1/2")), build_sl2(halfint("1/2")))
    beta = [Fraction(1), Fraction(-1, 10)]
    djp, djm, dj3 = deformed_coproduct(pr, alpha_from_beta(beta), order="target")
    fake = MatrixRep(pr.dim, 0, 0.0, "product", dj3, djp, djm)
    report = commutator_residuals(fake, beta, tol=1e-8)
    assert not report.all_passed
    with pytest.raises(ValueError):
        deformed_coproduct(pr, [1], order="sideways")


def test_deformed_coproduct_cocommutative_on_equal_factors():
    d = build_sl2(halfint(1))
    pr = primitive_coproduct(d, d)
    mats = deformed_coproduct(pr, alpha_from_beta([Fraction(1), Fraction(-1, 20)]))
    assert max(cocommutativity_check(list(mats), d.dim)) < 1e-10


def test_cocommutativity_requires_equal_factors():
    pr = primitive_coproduct(build_sl2("1/2"), build_sl2(1))
    with pytest.raises(ValueError):
        cocommutativity_check([pr.DJ3], 2)


def test_swap_matrix_is_involution():
    p = swap_matrix(2, 2)
    assert np.allclose(p @ p, np.eye(4))
    p23 = swap_matrix(2, 3)
    assert np.allclose(p23.T @ p23, np.eye(6))


def test_quadratic_coproduct_closes_algebra():
    rep = build_sl2(halfint("1/2"))
    pr = primitive_coproduct(rep, rep)
    a = 0.2
    dj3, djp, djm = quadratic_coproduct(pr, a)
    assert np.linalg.norm(dj3 @ djp - djp @ dj3 - djp) < 1e-10
    comm = djp @ djm - djm @ djp
    assert np.linalg.norm(comm - (2 * dj3 + 4 * a * dj3 @ dj3)) < 1e-10


def test_quadratic_coproduct_rejects_large_alpha():
    rep = build_sl2(halfint(1))
    pr = primitive_coproduct(rep, rep)
    with pytest.raises(InadmissibleProductError):
        quadratic_coproduct(pr, 0.9)
    with pytest.raises(ValueError):
        quadratic_coproduct(pr, 0.0)


def test_antipode_realization_negates_generators():
    for j_str in ("1/2", "1", "3/2"):
        rep = build_sl2(halfint(j_str))
        w = antipode_realization(rep.j)
        assert np.allclose(apply_antipode(rep.J3, w), -rep.J3, atol=1e-12)
        assert np.allclose(apply_antipode(rep.Jplus, w), -rep.Jplus, atol=1e-12)
        assert np.allclose(apply_antipode(rep.Jminus, w), -rep.Jminus, atol=1e-12)


def test_antipode_is_antimultiplicative():
    rep = build_sl2(halfint(1))
    w = antipode_realization(rep.j)
    x, y = rep.Jplus, rep.J3
    assert np.allclose(apply_antipode(x @ y, w), apply_antipode(y, w) @ apply_antipode(x, w))


def test_multiply_with_antipode_on_elementary_tensor():
    rep = build_sl2(halfint("1/2"))
    w = antipode_realization(rep.j)
    a, b = rep.Jplus, rep.J3
    x = np.kron(a, b)
    right = multiply_with_antipode(x, 2, w, side="right")
    left = multiply_with_antipode(x, 2, w, side="left")
    assert np.allclose(right, a @ apply_antipode(b, w), atol=1e-12)
    assert np.allclose(left, apply_antipode(a, w) @ b, atol=1e-12)
    with pytest.raises(ValueError):
        multiply_with_antipode(x, 2, w, side="middle")


def test_quadratic_antipode_checks_pass():
    rep = build_sl2(halfint("1/2"))
    report = quadratic_antipode_checks(rep, 0.2)
    assert report.all_passed
    combined = hopf_axiom_checks(rep, quadratic_alpha=0.2)
    assert combined.all_passed


def test_triple_coassociativity():
    assert triple_coassociativity_residual("1/2", [Fraction(1), Fraction(-1, 10)]) < 1e-10
