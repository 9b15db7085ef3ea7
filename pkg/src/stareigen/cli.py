"""Command-line entry point: ``stareigen <subcommand> [options]``.

Exit status is 0 when every requested check passes, 1 when one fails and 2 on
usage or input errors.  Standard output depends only on the arguments and the
seed; wall-clock timings go to the optional ``--manifest`` file.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import checks
from .decomposition import decompose, verify_decomposition, verify_support_partitions
from .errors import IntegralityError, StarEigenError
from .graphs import SPECTRUM_CEILING, Variant, spectrum_report, star, star_jm, verify_eigenfunction
from .io import (
    boundary_from_function,
    dump_matrix_csv,
    dump_sparse_function,
    load_pispec,
    load_sparse_function,
    pispec_to_dict,
    tabloid_sum_to_list,
)
from .perm import CEILING_ENV, enumeration_ceiling, format_perm, parse_perm
from .pi import m1_label
from .reconstruction import build_mn, closed_form_det, det_exact, reconstruct, second_neighborhood
from .tableaux import (
    format_tableau,
    jm_on_perm_sum,
    jm_on_tabloid_sum,
    parse_tableau,
    phi,
    phi_polytabloid_alt,
    polytabloid,
    psi,
    verify_polytabloid_eigen,
)


class Run:
    """Collects output lines and check outcomes for one invocation."""

    def __init__(self, args):
        self.args = args
        self.lines: list[str] = []
        self.checks: dict[str, bool] = {}
        self.timings: dict[str, float] = {}
        self.ceilings = {
            "enumeration": enumeration_ceiling(),
            "spectrum": args.ceiling or SPECTRUM_CEILING,
        }

    def out(self, text: str = ""):
        self.lines.append(text)

    def check(self, name: str, passed: bool, started: float):
        self.checks[name] = bool(passed)
        self.timings[name] = round(time.perf_counter() - started, 4)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _read_text(value: str) -> str:
    """Inline JSON, or ``@path`` / a path to a file holding it."""
    if value.startswith("@"):
        return Path(value[1:]).read_text()
    if value.lstrip().startswith(("{", "[")):
        return value
    return Path(value).read_text()


def cmd_spectrum(run: Run):
    a = run.args
    g = star(a.n) if a.variant == Variant.STAR.value else star_jm(a.n)
    t0 = time.perf_counter()
    try:
        spec = spectrum_report(g, ceiling=a.ceiling or SPECTRUM_CEILING, tol=a.tol)
    except IntegralityError as exc:
        run.out(str(exc))
        run.check("integral", False, t0)
        return
    run.check("integral", True, t0)
    if a.format == "json":
        run.out(_json({"n": a.n, "variant": a.variant, "spectrum": {str(k): v for k, v in spec.items()}}))
    else:
        run.out("eigenvalue,multiplicity" if a.format == "csv" else f"{'eigenvalue':>10} {'multiplicity':>12}")
        for k, v in sorted(spec.items(), reverse=True):
            run.out(f"{k},{v}" if a.format == "csv" else f"{k:>10} {v:>12}")


def cmd_verify_pi(run: Run):
    a = run.args
    spec = load_pispec(_read_text(a.spec))
    theta = spec.eigenvalue if a.theta is None else a.theta
    g = star(spec.n) if spec.variant is Variant.STAR else star_jm(spec.n)
    t0 = time.perf_counter()
    rep = verify_eigenfunction(g, spec, theta, ceiling=a.ceiling)
    run.check("eigenfunction", rep.is_eigenfunction, t0)
    result = {
        "spec": pispec_to_dict(spec),
        "theta": str(rep.theta),
        "vertices_checked": rep.checked,
        "eigenfunction": rep.is_eigenfunction,
        "witnesses": [format_perm(w) for w in rep.witnesses],
    }
    if a.format == "json":
        run.out(_json(result))
    else:
        run.out(f"theta={rep.theta} checked={rep.checked} eigenfunction={rep.is_eigenfunction}")
        for w in result["witnesses"]:
            run.out(f"  fails at {w}")


def cmd_polytabloid(run: Run):
    t = parse_tableau(run.args.tableau)
    e = polytabloid(t)
    t0 = time.perf_counter()
    rep = verify_polytabloid_eigen(t)
    run.check("J_n eigen", rep.holds, t0)
    run.check("X part", rep.x_part_holds, t0)
    run.check("Y part", rep.y_part_holds, t0)
    if run.args.format == "json":
        run.out(_json({
            "tableau": format_tableau(t),
            "polytabloid": tabloid_sum_to_list(e),
            "theta": rep.theta,
            "k": rep.k,
            "eigen": rep.holds,
            "x_part": rep.x_part_holds,
            "y_part": rep.y_part_holds,
        }))
    else:
        run.out(f"e_t for {format_tableau(t)}: {len(e)} tabloids")
        run.out(f"J_n(e_t) = {rep.theta} e_t: {rep.holds}")
        run.out(f"J^X(e_t) = {rep.k} e_t: {rep.x_part_holds}")
        run.out(f"J^Y(e_t) = {rep.theta - rep.k} e_t: {rep.y_part_holds}")


def cmd_jm_check(run: Run):
    t = parse_tableau(run.args.tableau)
    n = t.n
    e = polytabloid(t)
    theta = n - t.shape.m - 1
    t0 = time.perf_counter()
    v = phi(e)
    run.check("two paths", v == phi_polytabloid_alt(t), t0)
    t0 = time.perf_counter()
    run.check("commutation", phi(jm_on_tabloid_sum(e, n)) == jm_on_perm_sum(v), t0)
    t0 = time.perf_counter()
    rep = verify_eigenfunction(star_jm(n), psi(v), theta, support_closure=True)
    run.check("StarJM eigen", rep.is_eigenfunction, t0)
    if run.args.format == "json":
        run.out(_json({"tableau": format_tableau(t), "theta": theta, **run.checks}))
    else:
        run.out(f"phi(e_t) for {format_tableau(t)}: support {len(v.terms)}, theta={theta}")
        for name, ok in run.checks.items():
            run.out(f"{name}: {ok}")


def cmd_decompose(run: Run):
    a = run.args
    t = parse_tableau(a.tableau)
    specs = decompose(t, a.y_assignment)
    t0 = time.perf_counter()
    rep = verify_decomposition(t, a.y_assignment)
    run.check("pointwise equality", rep.equal, t0)
    payload = _json([pispec_to_dict(s) for s in specs])
    if a.out:
        Path(a.out).write_text(payload + "\n")
    if a.format == "json":
        run.out(payload)
    else:
        run.out(f"{format_tableau(t)}: {rep.summands} summands, {rep.duplicates} repeated")
        for s in specs:
            run.out("  I=" + str(list(s.I)) + " P=" + str([list(p) for p in s.P]))
        run.out(f"sum equals f_phi(e_t) on {rep.checked} permutations: {rep.equal}")


def cmd_support_check(run: Run):
    t = parse_tableau(run.args.tableau)
    t0 = time.perf_counter()
    rep = verify_support_partitions(t, run.args.y_assignment)
    fields = (
        "values_in_pm1",
        "polytabloid_supports",
        "summand_supports",
        "inner_sum_supports",
        "inner_sums_disjoint",
        "union_is_support",
    )
    for f in fields:
        run.check(f, getattr(rep, f), t0)
    if run.args.format == "json":
        run.out(_json({"tableau": format_tableau(t), **{f: getattr(rep, f) for f in fields}}))
    else:
        for f in fields:
            run.out(f"{f}: {getattr(rep, f)}")


def cmd_matrix(run: Run):
    mat = build_mn(run.args.n)
    if run.args.format == "json":
        run.out(_json({
            "n": mat.n,
            "rows": [m1_label(s) for s in mat.row_labels],
            "cols": [format_perm(p) for p in mat.col_labels],
            "entries": [list(r) for r in mat.entries],
        }))
    elif run.args.format == "csv":
        run.out(dump_matrix_csv(mat).rstrip("\n"))
    else:
        width = max(len(m1_label(s)) for s in mat.row_labels)
        for s, row in zip(mat.row_labels, mat.entries):
            run.out(f"{m1_label(s):<{width}} " + " ".join(f"{x:>2}" for x in row))


def cmd_det(run: Run):
    n = run.args.n
    t0 = time.perf_counter()
    d, c = det_exact(build_mn(n)), closed_form_det(n)
    run.check("closed form", d == c, t0)
    if run.args.format == "json":
        run.out(_json({"n": n, "computed": d, "closed_form": c}))
    else:
        run.out(str(d))
        run.out(str(c))


def cmd_reconstruct(run: Run):
    a = run.args
    n = a.n
    f = load_sparse_function(_read_text(a.boundary))
    if f.n != n:
        raise StarEigenError(f"boundary function lives on Sym_{f.n}, not Sym_{n}")
    base = parse_perm(a.base_vertex) if a.base_vertex else None
    points = second_neighborhood(n, base)
    outside = sorted(set(f.support()).difference(points))
    if outside:
        raise StarEigenError(f"boundary has {len(outside)} keys outside the second neighbourhood, e.g. {outside[0]}")
    rec = reconstruct(n, boundary_from_function(f, points), base)
    t0 = time.perf_counter()
    full = rec.to_sparse(a.ceiling)
    agrees = all(full.evaluate(p) == f.evaluate(p) for p in points)
    run.check("boundary reproduced", agrees, t0)
    if not full.is_zero():
        t0 = time.perf_counter()
        run.check("eigenfunction", verify_eigenfunction(star(n), full, n - 2, support_closure=True).is_eigenfunction, t0)
    payload = dump_sparse_function(full)
    if a.out:
        Path(a.out).write_text(payload + "\n")
    if a.format == "json":
        run.out(_json({
            "coefficients": {m1_label(s): str(c) for s, c in zip(rec.basis, rec.coefficients)},
            "function": json.loads(payload),
        }))
    else:
        for s, c in zip(rec.basis, rec.coefficients):
            run.out(f"{m1_label(s)} {c}")
        run.out(f"support size {len(full.entries)}")


def cmd_reproduce(run: Run):
    a = run.args
    steps = [
        ("1", lambda: [checks.check_pi_family(a.max_n, a.seed)]),
        ("2", lambda: [checks.check_f2_basis(a.max_n)]),
        ("3", lambda: [checks.check_polytabloid_eigen(a.max_n)]),
        ("4", lambda: [checks.check_phi_correspondence(a.max_n, a.seed)]),
        ("5", lambda: [checks.check_decomposition(a.max_n)]),
        ("6", lambda: [checks.check_support(a.max_n)]),
        ("7", lambda: [checks.check_determinant()]),
        ("8", lambda: [checks.check_blocks()]),
        ("9", lambda: [checks.check_reconstruction(a.max_n, a.seed)]),
        ("10", lambda: [checks.check_spectrum(a.max_n)]),
    ]
    results = []
    for _, fn in steps:
        t0 = time.perf_counter()
        for r in fn():
            run.check(r.key, r.passed, t0)
            results.append(r)
    if a.format == "json":
        run.out(_json([{"key": r.key, "claim": r.claim, "passed": r.passed, "detail": r.detail} for r in results]))
        return
    width = max(len(r.claim) for r in results)
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        run.out(f"{r.key:>3}  {mark}  {r.claim:<{width}}  {r.detail}")
    failed = [r.key for r in results if not r.passed]
    run.out(f"{len(results) - len(failed)}/{len(results)} passed" + (f"; failed: {', '.join(failed)}" if failed else ""))


COMMANDS = {
    "spectrum": cmd_spectrum,
    "verify-pi": cmd_verify_pi,
    "polytabloid": cmd_polytabloid,
    "jm-check": cmd_jm_check,
    "decompose": cmd_decompose,
    "support-check": cmd_support_check,
    "matrix": cmd_matrix,
    "det": cmd_det,
    "reconstruct": cmd_reconstruct,
    "reproduce-paper": cmd_reproduce,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=checks.DEFAULT_SEED, help="seed for sampled checks")
    common.add_argument(
        "--ceiling",
        type=int,
        default=None,
        help=f"largest n for full enumeration (also via {CEILING_ENV}); each step up costs about n times more",
    )
    common.add_argument("--format", choices=("json", "csv", "table"), default="table")
    common.add_argument("--manifest", default=None, help="write a JSON run manifest to this path")

    parser = argparse.ArgumentParser(prog="stareigen", description="Exact checks for star graph eigenfunctions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common], help="eigenvalue multiplicities of a star graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--variant", choices=[v.value for v in Variant], default=Variant.STAR.value)
    p.add_argument("--tol", type=float, default=1e-8)

    p = sub.add_parser("verify-pi", parents=[common], help="check a PI spec is an eigenfunction")
    p.add_argument("--spec", required=True, help="PISpec JSON, inline or a file path")
    p.add_argument("--theta", type=int, default=None, help="eigenvalue to test (default n-m-1)")

    for name, text in (("polytabloid", "J_n eigen check of e_t"), ("jm-check", "phi checks for e_t")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--tableau", required=True, help='rows separated by "/", e.g. 1,2,5/3,4')

    for name, text in (("decompose", "PI decomposition of f_phi(e_t)"), ("support-check", "support partitions")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--tableau", required=True)
        p.add_argument("--y-assignment", choices=("asc", "desc"), default="asc")
        if name == "decompose":
            p.add_argument("--out", default=None, help="write the summand specs as JSON here")

    for name, text in (("matrix", "the matrix M_n"), ("det", "det(M_n), computed and closed form")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("reconstruct", parents=[common], help="rebuild an eigenfunction from N_2 values")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--boundary", required=True, help="SparseFunction JSON, inline or a file path")
    p.add_argument("--base-vertex", default=None, help="base vertex as [..]; default the identity")
    p.add_argument("--out", default=None, help="write the reconstructed function JSON here")

    p = sub.add_parser("reproduce-paper", parents=[common], help="run every acceptance check")
    p.add_argument("--max-n", type=int, default=None, help="cap for checks that sweep Sym_n")
    return parser


def _manifest(run: Run, argv: list[str], status: int) -> dict:
    return {
        "command": argv,
        "seed": run.args.seed,
        "ceilings": run.ceilings,
        "timings": run.timings,
        "checks": run.checks,
        "exit_code": status,
    }


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    previous = os.environ.get(CEILING_ENV)
    if args.ceiling is not None:
        os.environ[CEILING_ENV] = str(args.ceiling)
    run = Run(args)
    try:
        COMMANDS[args.command](run)
        status = 0 if run.ok else 1
    except (StarEigenError, ValueError, OSError) as exc:
        print(f"stareigen {args.command}: {exc}", file=sys.stderr)
        status = 2
    finally:
        if args.ceiling is not None:
            if previous is None:
                os.environ.pop(CEILING_ENV, None)
            else:
                os.environ[CEILING_ENV] = previous
    if run.lines:
        print("\n".join(run.lines))
    if args.manifest:
        Path(args.manifest).write_text(_json(_manifest(run, argv, status)) + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
