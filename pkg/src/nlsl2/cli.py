"""Command-line front end: build reps, verify identities, scan families."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

import numpy as np

from . import families as fam_mod
from . import hopf as hopf_mod
from . import qdeform
from . import repbuilder, verifier
from .coefficients import (
    alpha_from_beta,
    beta_from_alpha,
    format_rational,
    parse_rational,
)
from .halfint import halfint, ladder_desc
from .structure import HiggsShifted, Polynomial, QBase, QuadraticShifted, StructureSpec

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def _rational_list(text: str) -> list[Fraction]:
    return [parse_rational(tok) for tok in text.split(",") if tok.strip()]


def _float_list(text: str) -> list[float]:
    return [float(tok) for tok in text.split(",") if tok.strip()]


def _emit(args, payload: dict, table: str):
    if args.format == "json":
        clean = {k: v for k, v in payload.items() if k != "csv"}
        text = json.dumps(clean, indent=2, sort_keys=True)
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        header, rows = payload.get("csv", (["value"], [[json.dumps(payload)]]))
        writer.writerow(header)
        writer.writerows(rows)
        text = buf.getvalue().rstrip("\n")
    else:
        text = table
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _build_spec(args) -> StructureSpec:
    j = halfint(args.j)
    if args.family == "polynomial":
        return StructureSpec(Polynomial(_rational_list(args.alpha)), j)
    if args.family == "higgs":
        beta = float(parse_rational(args.beta))
        gamma = float(args.gamma or 0.0)
        return StructureSpec(HiggsShifted(beta, gamma), j)
    if args.family == "quadratic":
        alpha = float(parse_rational(args.alpha))
        gamma = float(args.gamma or 0.0)
        return StructureSpec(QuadraticShifted(alpha, gamma), j)
    if args.family == "qbase":
        return StructureSpec(QBase(_float_list(args.alpha), args.delta), j)
    raise ValueError(f"unknown family {args.family!r}")


def cmd_coeffs(args) -> int:
    if args.alpha_from_beta:
        out = alpha_from_beta(_rational_list(args.alpha_from_beta))
        label = "alpha"
    elif args.beta_from_alpha:
        out = beta_from_alpha(_rational_list(args.beta_from_alpha))
        label = "beta"
    else:
        print("coeffs: one of --alpha-from-beta / --beta-from-alpha is required", file=sys.stderr)
        return EXIT_USAGE
    payload = {label: [format_rational(v) for v in out],
               "csv": ([label], [[format_rational(v)] for v in out])}
    _emit(args, payload, ", ".join(str(v) for v in out))
    return EXIT_OK


def cmd_rep(args) -> int:
    j = halfint(args.j)
    if args.family == "sl2":
        rep = repbuilder.build_sl2(j)
    elif args.family == "uq":
        rep = repbuilder.build_uq(j, args.delta)
    else:
        rep = repbuilder.build_deformed(_build_spec(args))
    d = rep.to_json_dict()
    table = (
        f"family={rep.family} j={rep.j} dim={rep.dim} gamma={rep.gamma}\n"
        f"J3 diag: {np.diag(rep.J3).tolist()}\n"
        f"J+ superdiag: {[float(rep.Jplus[i, i + 1]) for i in range(rep.dim - 1)]}"
    )
    _emit(args, d, table)
    return EXIT_OK


def cmd_verify(args) -> int:
    j = halfint(args.j)
    report = verifier.VerificationReport()
    if args.family == "polynomial":
        alpha = _rational_list(args.alpha)
        report.extend(verifier.exact_recurrence_check(alpha, j))
        spec = StructureSpec(Polynomial(alpha), j)
        rep = repbuilder.build_deformed(spec)
        beta = beta_from_alpha(alpha)
        report.extend(verifier.commutator_residuals(rep, beta, tol=args.tol))
        cas = repbuilder.casimir_matrix(rep, alpha)
        from .coefficients import phi_eval

        expected = float(phi_eval(alpha, j.mm1()))
        report.add_numeric(
            "Casimir = phi(j(j+1)) I",
            float(np.linalg.norm(cas - expected * np.eye(rep.dim))),
            max(args.tol, 1e-12),
        )
    elif args.family == "higgs":
        spec = _build_spec(args)
        rep = repbuilder.build_deformed(spec)
        beta = [Fraction(1), Fraction(parse_rational(args.beta))]
        report.extend(verifier.commutator_residuals(rep, beta, tol=args.tol))
    elif args.family == "uq":
        rep = repbuilder.build_uq(j, args.delta)
        comm = rep.Jplus @ rep.Jminus - rep.Jminus @ rep.Jplus
        target = np.diag([qdeform.q_bracket(2 * m.value, args.delta) for m in ladder_desc(j)])
        report.add_numeric("[J+,J-] = [2 J3] diagonal",
                           float(np.linalg.norm(comm - target)), args.tol)
        report.add_numeric("q-Casimir arcsinh relation",
                           qdeform.uq_casimir_relation(j, qdeform.QParam(args.delta)), 1e-12)
    else:
        print(f"verify: unsupported family {args.family!r}", file=sys.stderr)
        return EXIT_USAGE
    _emit(args, report.to_json_dict(), report.render_table())
    return EXIT_OK if report.all_passed else EXIT_CHECK_FAILED


def cmd_families(args) -> int:
    j = halfint(args.j)
    if args.family == "higgs":
        grid = _float_list(args.beta_grid) if args.beta_grid else [float(parse_rational(args.beta))]
    else:
        grid = _float_list(args.alpha_grid) if args.alpha_grid else [float(parse_rational(args.alpha))]
    rows = fam_mod.scan(j, grid, args.family)
    header, csv_rows = fam_mod.scan_csv_rows(rows)
    payload = {"rows": rows, "csv": (header, csv_rows)}
    lines = ["  ".join(header)]
    for r in csv_rows:
        lines.append("  ".join(str(v) for v in r))
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_hopf(args) -> int:
    j1, j2 = halfint(args.j1), halfint(args.j2)
    rep1, rep2 = repbuilder.build_sl2(j1), repbuilder.build_sl2(j2)
    pr = hopf_mod.primitive_coproduct(rep1, rep2)
    report = verifier.VerificationReport()

    spectrum = sorted(c for c, _, _ in pr.joint_eigs)
    oracle = hopf_mod.product_casimir_spectrum(j1, j2)
    report.add_numeric(
        "Delta(C) spectrum = Clebsch-Gordan J(J+1) pattern",
        float(max(abs(a - b) for a, b in zip(spectrum, oracle))), 1e-8,
    )

    report.extend(hopf_mod.hopf_axiom_checks(rep1, quadratic_alpha=args.quadratic_alpha))

    if args.alpha:
        alpha = _rational_list(args.alpha)
        djp, djm, dj3 = hopf_mod.deformed_coproduct(pr, alpha)
        beta = beta_from_alpha(alpha)
        fake = repbuilder.MatrixRep(pr.dim, 0, 0.0, "product", dj3, djp, djm)
        for check in verifier.commutator_residuals(fake, beta, tol=1e-8).checks:
            check.name = "deformed coproduct: " + check.name
            report.checks.append(check)
        if j1 == j2:
            res = hopf_mod.cocommutativity_check([djp, djm, dj3], rep1.dim)
            report.add_numeric("co-commutativity of deformed coproduct", max(res), 1e-10)
    _emit(args, report.to_json_dict(), report.render_table())
    return EXIT_OK if report.all_passed else EXIT_CHECK_FAILED


def cmd_qlimit(args) -> int:
    j = halfint(args.j)
    report = verifier.VerificationReport()
    report.add_numeric(
        "q-Casimir arcsinh relation",
        qdeform.uq_casimir_relation(j, qdeform.QParam(args.delta)), 1e-12,
    )
    if j.twice > 0:
        report.add_numeric(
            "series identity truncation",
            verifier.q_series_identity_residual(j, -j, args.delta, trunc=25), 1e-8,
        )
    roots = verifier.q_shift_rigidity(j, args.delta)
    report.add_numeric(
        "shift rigidity: only gamma = 0",
        max(abs(r) for r in roots) if roots else float("inf"), 1e-12,
        context=f"roots: {roots}",
    )
    _emit(args, report.to_json_dict(), report.render_table())
    return EXIT_OK if report.all_passed else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nlsl2",
        description="Nonlinear sl(2) representations: build, verify, enumerate, Hopf-check",
    )
    parser.add_argument("--format", choices=["json", "csv", "table"], default="table")
    parser.add_argument("--output", default=None, help="write to file instead of stdout")
    parser.add_argument("--tol", type=float, default=1e-10, help="numeric tolerance")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="convert between beta and alpha coefficient vectors")
    p.add_argument("--alpha-from-beta", metavar="B0,B1,...")
    p.add_argument("--beta-from-alpha", metavar="A1,A2,...")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("rep", help="build a representation and emit its matrices")
    p.add_argument("--family", required=True,
                   choices=["sl2", "polynomial", "higgs", "quadratic", "qbase", "uq"])
    p.add_argument("--j", required=True, help="spin, e.g. 3/2")
    p.add_argument("--alpha", help="phi coefficients (polynomial/qbase) or scalar (quadratic)")
    p.add_argument("--beta", help="cubic-family deformation parameter")
    p.add_argument("--gamma", type=float, default=0.0, help="spectrum shift")
    p.add_argument("--delta", type=float, default=0.3, help="q = e^delta")
    p.set_defaults(func=cmd_rep)

    p = sub.add_parser("verify", help="run the verification suite for a spec")
    p.add_argument("--family", required=True, choices=["polynomial", "higgs", "uq"])
    p.add_argument("--j", required=True)
    p.add_argument("--alpha")
    p.add_argument("--beta")
    p.add_argument("--gamma", type=float, default=0.0)
    p.add_argument("--delta", type=float, default=0.3)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("families", help="enumerate admissible shifted families")
    p.add_argument("--family", required=True, choices=["higgs", "quadratic"])
    p.add_argument("--j", required=True)
    p.add_argument("--beta")
    p.add_argument("--beta-grid", metavar="B1,B2,...")
    p.add_argument("--alpha")
    p.add_argument("--alpha-grid", metavar="A1,A2,...")
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("hopf", help="tensor-product and Hopf-axiom checks")
    p.add_argument("--j1", required=True)
    p.add_argument("--j2", required=True)
    p.add_argument("--alpha", help="phi coefficients for the deformed coproduct")
    p.add_argument("--quadratic-alpha", type=float, default=None)
    p.set_defaults(func=cmd_hopf)

    p = sub.add_parser("qlimit", help="q-deformation identities and shift rigidity")
    p.add_argument("--j", required=True)
    p.add_argument("--delta", type=float, default=0.3)
    p.set_defaults(func=cmd_qlimit)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0,) else 0
    try:
        return args.func(args)
    except (ValueError, repbuilder.InadmissibleSpecError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
