"""Command-line front end.

    symspace info        --space sl:3
    symspace roots       --space su:2,1 --json
    symspace invariants  --space hyperbolic:4 --normalize-curvature -1
    symspace verify all  --space so:4,1 --seed 42 --samples 100000

Exit codes: 0 success (all checks passed), 1 at least one check failed,
2 usage or space-specification error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from .errors import SpecError, SymspaceError
from .invariants import rank_one_curvature_bounds, rescale_invariants, space_invariants
from .report import VerificationReport, fmt_real, make_check, render_report
from .root_space import root_label
from .spaces import SpaceSpec, parse_space
from .suites import VERIFY_TARGETS, SpaceContext, busemann_supported, run_suite

__all__ = ["SpaceSpec", "parse_space", "build_parser", "run", "main"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
METRIC = "killing"


class UsageError(Exception):
    pass


def _seed(text):
    value = int(text)
    if not 0 <= value < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _positive_int(text):
    value = int(float(text))  # accepts 1e5
    if value <= 0:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--space", required=True, help="sl:n | so:p,q | su:p,q | sp:n | hyperbolic:n")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=_seed, default=42)
    common.add_argument("--threads", type=_positive_int, default=1, help="Monte Carlo worker threads")

    parser = argparse.ArgumentParser(prog="symspace", description=(
        "Restricted roots, curvature and the invariants I = v = |H|, lambda0 = |H|^2/4 "
        "of symmetric spaces of noncompact type, with numerical verification suites."))
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("info", parents=[common], help="dimensions and rank")
    sub.add_parser("roots", parents=[common], help="restricted roots, multiplicities and H")
    inv = sub.add_parser("invariants", parents=[common], help="I, v, lambda0 in the Killing metric")
    inv.add_argument("--normalize-curvature", type=float, metavar="KAPPA", default=None,
                     help="rescale so the maximal sectional curvature is KAPPA < 0 (rank one only)")
    ver = sub.add_parser("verify", parents=[common], help="run a verification suite")
    ver.add_argument("target", choices=VERIFY_TARGETS)
    ver.add_argument("--samples", type=_positive_int, default=100_000, help="Monte Carlo samples")
    ver.add_argument("--r1", type=float, default=10.0)
    ver.add_argument("--r2", type=float, default=20.0)
    ver.add_argument("--tol", type=float, default=None,
                     help="relative tolerance replacing every per-check default")
    return parser


def _dump(obj):
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _kv_table(pairs):
    width = max(len(k) for k, _ in pairs)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in pairs)


def _cmd_info(args, spec):
    ctx = SpaceContext(spec, seed=args.seed)
    alg, dec = ctx.alg, ctx.dec
    data = {
        "space": spec.canonical,
        "family": spec.family,
        "params": list(spec.params),
        "dim_g": alg.dim_g,
        "d_rep": alg.d_rep,
        "dim_t": dec.dim_t,
        "dim_M": dec.dim_p,
        "rank": ctx.a.rank,
        "metric": METRIC,
    }
    return (_dump(data) if args.json else _kv_table([(k, str(v)) for k, v in data.items()])), EXIT_OK


def _cmd_roots(args, spec):
    rs = SpaceContext(spec, seed=args.seed).rs
    roots = []
    for i, root in enumerate(rs.roots):
        roots.append({
            "label": root_label(rs, i),
            "alpha": [fmt_real(v) for v in root.alpha],
            "multiplicity": root.multiplicity,
            "positive": i in rs.positive,
        })
    mult = {r["label"]: r["multiplicity"] for r in roots if r["positive"]}
    data = {
        "space": spec.canonical,
        "metric": METRIC,
        "rank": rs.rank,
        "dim_g0": rs.dim_g0,
        "roots": roots,
        "positive_multiplicities": mult,
        "chamber_witness": [fmt_real(v) for v in rs.chamber_witness],
        "H": [fmt_real(v) for v in rs.H_coords],
        "norm_H": fmt_real(rs.norm_H),
    }
    if args.json:
        return _dump(data), EXIT_OK
    lines = [f"space: {spec.canonical}   rank: {rs.rank}   dim g0: {rs.dim_g0}   metric: {METRIC}",
             f"{'root':<10} {'mult':>4}  {'sign':<4}  alpha (orthonormal a-coordinates)"]
    for r in roots:
        coords = ", ".join(f"{v:+.9f}" for v in r["alpha"])
        lines.append(f"{r['label']:<10} {r['multiplicity']:>4}  {'+' if r['positive'] else '-':<4}  ({coords})")
    lines.append("H = (" + ", ".join(f"{v:+.9f}" for v in rs.H_coords) + f")   |H| = {rs.norm_H:.12g}")
    return "\n".join(lines), EXIT_OK


def _cmd_invariants(args, spec):
    ctx = SpaceContext(spec, seed=args.seed)
    inv = space_invariants(ctx.alg, rs=ctx.rs)
    metric = METRIC
    kappa_max = None
    if ctx.rs.rank == 1:
        kappa_max = rank_one_curvature_bounds(ctx.rs)[1]
    if args.normalize_curvature is not None:
        kappa = args.normalize_curvature
        if ctx.rs.rank != 1:
            raise UsageError(f"--normalize-curvature needs a rank-one space; {spec.canonical} has rank "
                             f"{ctx.rs.rank}, so it has flat planes and no pinching normalization")
        if not kappa < 0:
            raise UsageError("--normalize-curvature needs a negative curvature value")
        inv = rescale_invariants(inv, kappa_max / kappa)
        kappa_max = kappa
        metric = "curvature-normalized"
    data = {
        "space": spec.canonical,
        "metric": metric,
        "metric_scale": fmt_real(inv.metric_scale),
        "dim_M": inv.dim_M,
        "rank": inv.rank,
        "norm_H": fmt_real(inv.norm_H),
        "isoperimetric": fmt_real(inv.isoperimetric),
        "entropy": fmt_real(inv.entropy),
        "lambda0": fmt_real(inv.lambda0),
        "max_sectional_curvature": None if kappa_max is None else fmt_real(kappa_max),
    }
    if args.json:
        return _dump(data), EXIT_OK
    return _kv_table([(k, "n/a" if v is None else str(v)) for k, v in data.items()]), EXIT_OK


def _cmd_verify(args, spec):
    if args.target == "busemann" and not busemann_supported(spec):
        raise UsageError("verify busemann is only available for sl:n (SPD model)")
    if not 5.0 <= args.r1 < args.r2:
        raise UsageError("need 5 <= --r1 < --r2")
    if args.samples < 1000:
        raise UsageError("--samples must be at least 1000")
    if args.tol is not None and not args.tol >= 0:
        raise UsageError("--tol must be nonnegative")
    ctx = SpaceContext(spec, seed=args.seed, samples=args.samples, r1=args.r1, r2=args.r2, threads=args.threads)
    start = time.perf_counter()
    checks = run_suite(ctx, args.target)
    if args.tol is not None:
        checks = [make_check(c.name, c.measured, c.expected, args.tol) for c in checks]
    elapsed = int(round(1000 * (time.perf_counter() - start)))
    report = VerificationReport(spec.canonical, args.seed, checks, elapsed)
    text = render_report(report, "json" if args.json else "table")
    return text, report.exit_code


_COMMANDS = {"info": _cmd_info, "roots": _cmd_roots, "invariants": _cmd_invariants, "verify": _cmd_verify}


def run(argv=None, stdout=None, stderr=None):
    """Run the CLI on ``argv`` and return the exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the message
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        spec = parse_space(args.space)
        text, code = _COMMANDS[args.command](args, spec)
    except (SpecError, UsageError) as exc:
        print(f"symspace: error: {exc}", file=stderr)
        return EXIT_USAGE
    except SymspaceError as exc:
        print(f"symspace: internal consistency failure: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_FAIL
    print(text, file=stdout)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
