"""Command-line front end.

Subcommands: list, build, jacobi, der, locder, twolocal, analyze, table,
witness.  All numeric output is exact (rational strings or integers).

Exit codes for `analyze`: 0 ok, 1 invalid input, 2 Jacobi violation,
3 local space not stabilized or 2-local search inconclusive.  `table`
exits 0 iff every computed dimension matches its expected value.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .catalog import Family, FamilySpec, build, list_families
from .dersolve import derivation_space, is_trivial_space
from .errors import HalfderError, ParameterError, ParseError, ValidationError, WitnessRefusalError
from .exactlin import Mat, rat, rat_from_str, rat_to_str
from .liealg import LieAlgebra
from .locder import (SamplingPlan, expected_locder_form, printed_form_notes,
                     sampled_locder_space, stratified_certify)
from .twolocal import certify_two_local_rigidity, report_to_dict


# ---------------------------------------------------------------------------
# expected dimension table
# ---------------------------------------------------------------------------

# table row keys; "s1" is the beta=2 row of the published table, "s1g" the
# generic-beta row (catalog default beta 5/3)
def expected_dims(key, n=None, m=None):
    """(expected dim Der_1/2, expected dim LocDer_1/2) for a table row."""
    if key == "s1":
        return (n + 1, 2 * n)
    if key in ("s1g", "s2", "s4"):
        return (n, 2 * n - 1)
    if key == "s3":
        return (n, 2 * n - 2)
    if key == "s_n2":
        return (2, 2)
    if key in ("tau1", "tau2"):
        return (3, 4)
    if key == "tau3":
        return (3, 3)
    if key == "tau_2n2":
        return (2, 2)
    if key == "heis":
        return (2, 2)
    if key == "abelian":
        return (2 * n, 3 * n)
    if key == "oscillator":
        return (2 * n + 2, 4 * n + 4)
    if key == "sl2module":
        return (2, 2) if m == 2 else (1, 1)
    if key == "schrodinger":
        return (2, 2) if n == 2 else (1, 1)
    raise ParameterError(f"unknown table row key {key!r}")


def verified_dims(key, n=None, m=None):
    """Machine-verified (dim Der_1/2, dim LocDer_1/2) for a table row.

    Differs from the published values where exact arithmetic disproves
    them: the s-family local dimensions overcount by one (an evaluation at
    e_1 + e_2 couples the x/e_1 scalar to the e_i scalar), and s^1(2) at
    n = 4 has extra weight-shift 1/2-derivations.
    """
    if key == "s1" and n == 4:
        return (7, 15)
    if key in ("s1g", "s2", "s4"):
        return (n, 2 * n - 2)
    if key == "s3":
        return (n, 2 * n - 3)
    return expected_dims(key, n=n, m=m)


def spec_for_row(key, n=None, m=None):
    if key == "s1":
        return FamilySpec(Family.S1, n=n, beta=2)
    if key == "s1g":
        return FamilySpec(Family.S1, n=n)
    if key == "tau1":
        return FamilySpec(Family.TAU1, n=n)
    if key == "sl2module":
        return FamilySpec(Family.SL2_MODULE, m=m)
    fam = {"s2": Family.S2, "s3": Family.S3, "s4": Family.S4, "s_n2": Family.S_N2,
           "tau2": Family.TAU2, "tau3": Family.TAU3, "tau_2n2": Family.TAU_2N2,
           "heis": Family.HEIS_SOLV, "abelian": Family.ABELIAN_SOLV,
           "oscillator": Family.OSCILLATOR, "schrodinger": Family.SCHRODINGER}[key]
    return FamilySpec(fam, n=n)


FILIFORM_ROW_KEYS = ("s1", "s1g", "s2", "s3", "s4", "s_n2",
                     "tau1", "tau2", "tau3", "tau_2n2")
# per-row default parameter ranges for the full table run
ROW_DEFAULT_RANGES = {"heis": (1, 3), "abelian": (2, 4), "oscillator": (1, 3),
                      "sl2module": (2, 5), "schrodinger": (1, 3)}


def compute_row(key, n=None, m=None, seed=2024):
    """One TableRow-shaped dict: expected vs computed dims plus 2-local status."""
    spec = spec_for_row(key, n=n, m=m)
    A = build(spec)
    S = derivation_space(A, rat(1, 2))
    plan = SamplingPlan.default(A.dim, seed=seed)
    result = sampled_locder_space(A, S, plan)
    pub_der, pub_loc = expected_dims(key, n=n, m=m)
    ver_der, ver_loc = verified_dims(key, n=n, m=m)
    two = certify_two_local_rigidity(A, S, seed=seed)
    row = {
        "row": key,
        "label": spec.label(),
        "params": {"n": n, "m": m},
        "der_dim_published": pub_der,
        "der_dim_expected": ver_der,
        "der_dim_computed": S.dim,
        "locder_dim_published": pub_loc,
        "locder_dim_expected": ver_loc,
        "locder_dim_computed": result.upper_space.dim,
        "stabilized": result.stabilized,
        "match": (ver_der == S.dim and ver_loc == result.upper_space.dim),
        "published_match": (pub_der == S.dim and pub_loc == result.upper_space.dim),
        "twolocal_status": two.status,
    }
    notes = printed_form_notes(spec)
    if notes:
        row["print_notes"] = notes
    return row


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

TABLE_COLUMNS = ["label", "der_dim_published", "locder_dim_published",
                 "der_dim_computed", "locder_dim_computed", "published_match",
                 "match", "twolocal_status"]


def render_table(rows, fmt):
    if fmt == "json":
        return json.dumps({"rows": rows}, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=TABLE_COLUMNS, extrasaction="ignore")
        w.writeheader()
        for r in rows:
            w.writerow(r)
        return buf.getvalue()
    # markdown
    head = "| " + " | ".join(TABLE_COLUMNS) + " |"
    sep = "|" + "|".join("---" for _ in TABLE_COLUMNS) + "|"
    lines = [head, sep]
    for r in rows:
        lines.append("| " + " | ".join(str(r.get(c, "")) for c in TABLE_COLUMNS) + " |")
    notes = [n for r in rows for n in r.get("print_notes", [])]
    seen = set()
    for n in notes:
        if n["code"] not in seen:
            seen.add(n["code"])
            lines.append(f"\nNote [{n['code']}]: {n['note']}")
    return "\n".join(lines)


def render_report(report, fmt):
    if fmt == "json":
        return json.dumps(report, indent=2)
    if fmt == "csv":
        flat = {k: v for k, v in report.items() if not isinstance(v, (dict, list))}
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(flat))
        w.writeheader()
        w.writerow(flat)
        return buf.getvalue()
    lines = []
    for k, v in report.items():
        if isinstance(v, (dict, list)):
            v = json.dumps(v)
        lines.append(f"- **{k}**: {v}")
    return "\n".join(lines)


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


# ---------------------------------------------------------------------------
# subcommand helpers
# ---------------------------------------------------------------------------


def _parse_range(text):
    if ":" in text:
        a, b = text.split(":", 1)
        return list(range(int(a), int(b) + 1))
    return [int(text)]


def _spec_from_args(args) -> FamilySpec:
    try:
        fam = Family(args.family)
    except ValueError:
        raise ParameterError(f"unknown family {args.family!r}; see `halfder list`") from None
    kwargs = {}
    if args.n is not None:
        kwargs["n"] = args.n
    if args.m is not None:
        kwargs["m"] = args.m
    if getattr(args, "beta", None):
        kwargs["beta"] = rat_from_str(args.beta)
    if getattr(args, "alphas", None):
        kwargs["alphas"] = tuple(rat_from_str(s) for s in args.alphas.split(","))
    if getattr(args, "lambdas", None):
        kwargs["lambdas"] = tuple(rat_from_str(s) for s in args.lambdas.split(","))
    return FamilySpec(family=fam, **kwargs)


def _load_algebra(path):
    return LieAlgebra.load(path, validate_jacobi=False)


def _mat_to_strs(M: Mat):
    return [[rat_to_str(v) for v in row] for row in M.entries]


def _locder_report(A, S, result):
    return {
        "algebra": A.name,
        "delta": rat_to_str(rat(S.delta)),
        "der_dim": S.dim,
        "locder_dim": result.upper_space.dim,
        "stabilized": result.stabilized,
        "samples": result.samples_used,
        "strata": [list(s) for s in result.plan.strata],
        "per_stratum_certified": {
            (k if isinstance(k, str) else ",".join(map(str, k)) or "free"): v
            for k, v in result.per_stratum_certified.items()},
        "pencil_samples": result.pencil_samples,
    }


def find_witness(spec: FamilySpec, seed=2024):
    """A Delta certified local (stratified) and provably outside Der_1/2.

    Raises WitnessRefusalError when the local space equals the derivation
    space (no such Delta exists).
    """
    A = build(spec)
    S = derivation_space(A, rat(1, 2))
    plan = SamplingPlan.default(A.dim, seed=seed)
    result = sampled_locder_space(A, S, plan)
    if result.upper_space.dim == S.dim:
        raise WitnessRefusalError(
            f"{A.name}: every local 1/2-derivation is a 1/2-derivation "
            f"(dim {S.dim} = dim {result.upper_space.dim}); no witness exists")
    for Delta in result.upper_space.basis:
        if S.contains(Delta) is None:
            cert = stratified_certify(A, S, Delta, plan)
            if cert.passed:
                return A, S, Delta, cert
    raise HalfderError(f"{A.name}: witness search failed unexpectedly")


# ---------------------------------------------------------------------------
# subcommand implementations
# ---------------------------------------------------------------------------


def cmd_list(args):
    entries = [{"family": fam.value, "display_name": display, "params": schema}
               for fam, schema, display in list_families()]
    if args.format == "json":
        _emit(json.dumps({"families": entries}, indent=2), args.out)
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=["family", "display_name", "params"])
        w.writeheader()
        for e in entries:
            w.writerow({**e, "params": json.dumps(e["params"])})
        _emit(buf.getvalue(), args.out)
    else:
        lines = [f"- `{e['family']}` ({e['display_name']}): {json.dumps(e['params'])}"
                 for e in entries]
        _emit("\n".join(lines), args.out)
    return 0


def cmd_build(args):
    A = build(_spec_from_args(args))
    _emit(A.dumps(), args.out)
    return 0


def cmd_jacobi(args):
    A = _load_algebra(args.algebra)
    bad = A.check_jacobi()
    if bad is None:
        _emit(render_report({"algebra": A.name, "jacobi": "ok"}, args.format), args.out)
        return 0
    i, j, k, res = bad
    _emit(render_report({"algebra": A.name, "jacobi": "violated",
                         "triple": [i, j, k],
                         "residual": [rat_to_str(v) for v in res]}, args.format), args.out)
    return 2


def cmd_der(args):
    A = _load_algebra(args.algebra)
    S = derivation_space(A, rat_from_str(args.delta))
    _emit(S.dumps() if args.format == "json" else render_report(S.to_dict(), args.format),
          args.out)
    return 0


def _plan_from_args(A, args):
    return SamplingPlan.default(A.dim, depth=args.strata_depth,
                                trials_per_stratum=args.trials, seed=args.seed)


def cmd_locder(args):
    A = _load_algebra(args.algebra)
    S = derivation_space(A, rat_from_str(args.delta))
    result = sampled_locder_space(A, S, _plan_from_args(A, args))
    report = _locder_report(A, S, result)
    report["basis"] = [_mat_to_strs(M) for M in result.upper_space.basis]
    _emit(render_report(report, args.format), args.out)
    return 0 if result.stabilized else 3


def cmd_twolocal(args):
    A = _load_algebra(args.algebra)
    S = derivation_space(A, rat(1, 2))
    rep = certify_two_local_rigidity(A, S, budget=args.budget, seed=args.seed)
    _emit(render_report(report_to_dict(rep), args.format), args.out)
    return 0 if rep.status == "PASS" else 3


def cmd_analyze(args):
    try:
        A = _load_algebra(args.algebra)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    bad = A.check_jacobi()
    if bad is not None:
        i, j, k, res = bad
        _emit(render_report({"algebra": A.name, "jacobi": "violated",
                             "triple": [i, j, k],
                             "residual": [rat_to_str(v) for v in res]}, args.format),
              args.out)
        return 2
    S = derivation_space(A, rat_from_str(args.delta))
    result = sampled_locder_space(A, S, _plan_from_args(A, args))
    two = certify_two_local_rigidity(A, S, seed=args.seed)
    report = {
        "algebra": A.name,
        "jacobi": "ok",
        "delta": args.delta,
        "der_dim": S.dim,
        "der_trivial": is_trivial_space(S) if rat_from_str(args.delta) == rat(1, 2) else None,
        "der_basis": [_mat_to_strs(M) for M in S.basis],
        "locder": _locder_report(A, S, result),
        "twolocal": report_to_dict(two),
    }
    _emit(render_report(report, args.format), args.out)
    if not result.stabilized or two.status != "PASS":
        return 3
    return 0


def cmd_table(args):
    rows = []
    ns = _parse_range(args.n) if args.n else None
    ms = _parse_range(args.m) if args.m else None
    keys = args.families.split(",") if args.families else None
    all_keys = list(FILIFORM_ROW_KEYS) + list(ROW_DEFAULT_RANGES)
    for key in (keys or all_keys):
        if key not in all_keys:
            raise ParameterError(f"unknown table family {key!r} "
                                 f"(one of: {', '.join(all_keys)})")
        if key == "sl2module":
            for m in (ms or range(*_incl(ROW_DEFAULT_RANGES[key]))):
                rows.append(compute_row(key, m=m, seed=args.seed))
        elif key in ROW_DEFAULT_RANGES:
            for n in (ns or range(*_incl(ROW_DEFAULT_RANGES[key]))):
                if n > 12:
                    raise ParameterError("table: n must stay <= 12")
                rows.append(compute_row(key, n=n, seed=args.seed))
        else:
            for n in (ns or [4, 5, 6]):
                if n > 12:
                    raise ParameterError("table: n must stay <= 12")
                rows.append(compute_row(key, n=n, seed=args.seed))
    _emit(render_table(rows, args.format), args.out)
    return 0 if all(r["match"] for r in rows) else 1


def _incl(pair):
    return (pair[0], pair[1] + 1)


def cmd_witness(args):
    spec = _spec_from_args(args)
    try:
        A, S, Delta, cert = find_witness(spec, seed=args.seed)
    except WitnessRefusalError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 1
    report = {
        "algebra": A.name,
        "witness": _mat_to_strs(Delta),
        "stratified_certificate": {"passed": cert.passed, "trials": cert.trials,
                                   "probabilistic": cert.probabilistic},
        "der_membership": S.contains(Delta) is not None,
        "der_dim": S.dim,
    }
    _emit(render_report(report, args.format), args.out)
    return 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _add_common(p):
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--format", choices=["md", "csv", "json"], default="md")
    p.add_argument("--out", default=None, help="write output to FILE instead of stdout")


def _add_family_flags(p):
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--beta", default=None, help="rational p/q (s1, tau1)")
    p.add_argument("--alphas", default=None, help="comma-separated rationals (s4, tau3)")
    p.add_argument("--lambdas", default=None, help="comma-separated rationals (oscillator)")


def _add_plan_flags(p):
    p.add_argument("--delta", default="1/2")
    p.add_argument("--trials", type=int, default=8)
    p.add_argument("--strata-depth", type=int, default=3, dest="strata_depth")


def build_parser():
    ap = argparse.ArgumentParser(prog="halfder",
                                 description="exact half-derivation analysis of Lie algebras")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="list the algebra families")
    _add_common(p)
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("build", help="build a family instance as algebra JSON")
    _add_family_flags(p)
    _add_common(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("jacobi", help="verify the Jacobi identity of an algebra file")
    p.add_argument("algebra")
    _add_common(p)
    p.set_defaults(func=cmd_jacobi)

    p = sub.add_parser("der", help="compute the delta-derivation space")
    p.add_argument("algebra")
    p.add_argument("--delta", default="1/2")
    _add_common(p)
    p.set_defaults(func=cmd_der)

    p = sub.add_parser("locder", help="sampled local derivation space")
    p.add_argument("algebra")
    _add_plan_flags(p)
    _add_common(p)
    p.set_defaults(func=cmd_locder)

    p = sub.add_parser("twolocal", help="certify 2-local rigidity")
    p.add_argument("algebra")
    p.add_argument("--budget", type=int, default=64)
    _add_common(p)
    p.set_defaults(func=cmd_twolocal)

    p = sub.add_parser("analyze", help="full report: Jacobi, Der, LocDer, 2-local")
    p.add_argument("algebra")
    _add_plan_flags(p)
    _add_common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("table", help="reproduce the dimension table")
    p.add_argument("--families", default=None,
                   help="comma-separated row keys (s1 = beta 2 row, s1g = generic beta)")
    p.add_argument("--n", default=None, help="range A:B for the n parameter")
    p.add_argument("--m", default=None, help="range A:B for the m parameter (sl2module)")
    _add_common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("witness", help="emit a local-but-not-derivation witness")
    _add_family_flags(p)
    _add_common(p)
    p.set_defaults(func=cmd_witness)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ParameterError, ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
