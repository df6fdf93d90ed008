"""``hrruns`` command line: table, verify, orbit, tree, oeis.

Exit codes: 0 success, 1 verification or diff failure, 2 usage or environment.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import oeis
from .actions import orbit
from .andre import STATISTICS, count_table
from .errors import CapacityError, DomainError, FixtureError, HRRunsError, StructureError
from .identities.registry import SCOPES, any_failed, random_action_laws, run_suite
from .minmax_tree import build_tree, from_raw, parse_raw_tree, render, validate
from .parallel import default_jobs
from .perm_core import FAMILIES, parse_perm
from .polynomial.arith import basis_decompose
from .polynomial.generators import eulerian_polynomial, run_polynomial
from .polynomial.named import named_polynomial

OK, FAIL, USAGE = 0, 1, 2

TRIANGLES = {"d-triangle": "d", **{s: s for s in STATISTICS if s != "d"}}
NAMED = {"andre-D": "andre_D", "T": "T", "M": "M_formula", "M-trees": "M_trees"}
EULERIAN = {"eulerian-A": "A", "eulerian-B": "B"}
TABLE_FAMILIES = tuple(FAMILIES) + tuple(EULERIAN) + tuple(NAMED) + tuple(TRIANGLES)


class UsageError(Exception):
    pass


# --- table --------------------------------------------------------------------

def _poly_for(family: str, n: int, jobs: int):
    if family in FAMILIES:
        return run_polynomial(n, family, jobs)
    if family in EULERIAN:
        return eulerian_polynomial(n, EULERIAN[family], jobs)
    return named_polynomial(n, NAMED[family])


def _tex(family: str, n: int, p) -> str:
    if family == "eulerian-A":
        return "x\\left(" + basis_decompose(p.shift(-1), n - 1, "gamma").to_tex() + "\\right)"
    if family == "eulerian-B":
        return basis_decompose(p, n, "gamma").to_tex()
    if family in FAMILIES:
        m = max(n - 1, p.degree) if family == "A" else n
    elif family in ("M", "M-trees"):
        m = (n + 1) // 2
    else:
        return " + ".join(f"{c}x^{{{k}}}" for k, c in enumerate(p.coeffs) if c) or "0"
    return basis_decompose(p, m).to_tex()


def cmd_table(args) -> int:
    family = args.family
    lo = args.n if args.n is not None else (2 if family in ("M", "M-trees") else 1)
    hi = args.n if args.n is not None else args.n_max
    if hi is None:
        raise UsageError("give --n or --n-max")
    out = sys.stdout
    if args.format == "csv":
        out.write("family,n,k,value\n")
    for n in range(lo, hi + 1):
        if family in TRIANGLES:
            rows = count_table(n, TRIANGLES[family]).rows
            ks = sorted(rows)
            vals = [rows[k] for k in ks]
            if args.format == "ascii":
                out.write(f"n={n}: " + " ".join(map(str, vals)) + "\n")
            elif args.format == "csv":
                out.writelines(f"{family},{n},{k},{rows[k]}\n" for k in ks)
            elif args.format == "json":
                out.write(json.dumps({"family": family, "n": n, "k0": ks[0] if ks else 0, "coeffs": vals}) + "\n")
            else:
                out.write(f"{n} & " + " & ".join(map(str, vals)) + " \\\\\n")
            continue
        p = _poly_for(family, n, args.jobs)
        if args.format == "ascii":
            out.write(f"n={n}: {p}\n")
        elif args.format == "csv":
            out.writelines(f"{family},{n},{k},{c}\n" for k, c in enumerate(p.coeffs))
        elif args.format == "json":
            out.write(json.dumps({"family": family, "n": n, "coeffs": list(p.coeffs)}) + "\n")
        else:
            out.write(f"n={n}: {_tex(family, n, p)}\n")
    return OK


# --- verify -------------------------------------------------------------------

def cmd_verify(args) -> int:
    saved = os.environ.get("HRRUNS_FIXTURES")
    if args.fixtures:
        os.environ["HRRUNS_FIXTURES"] = args.fixtures
    try:
        results = run_suite(args.suite, args.n_max, args.jobs)
    finally:
        if saved is None:
            os.environ.pop("HRRUNS_FIXTURES", None)
        else:
            os.environ["HRRUNS_FIXTURES"] = saved
    if args.random_trials:
        results.append(random_action_laws(args.random_n, args.random_trials, args.seed))
    for r in results:
        sys.stdout.write(r.to_json() + "\n")
    counts: dict[str, int] = {}
    for r in results:
        counts[r.status] = counts.get(r.status, 0) + 1
    err = sys.stderr
    err.write("status            count\n")
    for status in ("pass", "fail", "fixture_mismatch", "skipped"):
        err.write(f"{status:<17} {counts.get(status, 0)}\n")
    findings = [r for r in results if r.status in ("fail", "fixture_mismatch") or r.note]
    if findings:
        err.write("FINDINGS\n")
        for r in findings:
            detail = r.witness or r.note
            err.write(f"  [{r.status}] {r.identity_id} n={r.n}: {detail}\n")
    return FAIL if any_failed(results) else OK


# --- orbit / tree -------------------------------------------------------------

def cmd_orbit(args) -> int:
    w = parse_perm(args.perm)
    rep = orbit(build_tree(w), args.action.upper(), args.stat)
    if args.format == "json":
        reps = rep.representatives
        sys.stdout.write(json.dumps({
            "base": rep.base.text(), "action": rep.action, "stat": rep.stat,
            "active_indices": list(rep.active_indices),
            "members": [m.text() for m in rep.members],
            "stat_poly": list(rep.stat_poly.coeffs),
            "representatives": {k: (v.text() if v is not None else None)
                                for k, v in (("check", reps.check), ("star", reps.star), ("andre", reps.andre))},
        }) + "\n")
        return OK
    out = sys.stdout
    out.write(f"orbit of {rep.base.text()} under {rep.action} ({rep.size} members)\n")
    out.write(f"active: {', '.join(map(str, rep.active_indices)) or '-'}\n")
    for m in rep.members:
        out.write(f"  {m.text()}\n")
    out.write(f"{rep.stat} polynomial: {rep.stat_poly}\n")
    reps = rep.representatives
    for label, v in (("check", reps.check), ("star", reps.star), ("andre", reps.andre)):
        if v is not None:
            out.write(f"{label}: {v.text()}\n")
    return OK


def cmd_tree(args) -> int:
    if args.raw_file:
        raw = parse_raw_tree(Path(args.raw_file).read_text())
        v = validate(raw)
        sys.stderr.write(f"min-max: {v.is_min_max}, HR: {v.is_hr}\n")
        if not v.is_hr:
            return FAIL
        t = from_raw(raw)
    elif args.perm:
        t = build_tree(parse_perm(args.perm))
    else:
        raise UsageError("give --perm or --raw-file")
    text = render(t, args.format)
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return OK


# --- oeis ---------------------------------------------------------------------

def cmd_oeis(args) -> int:
    directory = Path(args.fixtures) if args.fixtures else None
    try:
        cmp = oeis.compare(args.sequence, args.n_max, directory, args.allow_network)
    except FileNotFoundError as exc:
        sys.stderr.write(f"{exc}\n")
        return USAGE
    except FixtureError as exc:
        sys.stderr.write(f"corrupted fixture for {args.sequence}: {exc}\n")
        return FAIL
    for w in cmp.warnings:
        sys.stderr.write(f"warning: {w}\n")
    if cmp.ok:
        sys.stdout.write(f"{args.sequence}: {cmp.compared} terms match (n <= {cmp.n_max})\n")
        return OK
    sys.stdout.write(f"{args.sequence}: first difference at index {cmp.first_diff}: "
                     f"fixture {cmp.expected}, regenerated {cmp.got}\n")
    return FAIL


# --- parser -------------------------------------------------------------------

def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hrruns", description=__doc__.splitlines()[0])
    p.add_argument("--jobs", type=_positive, default=None, help="worker processes (default HRRUNS_JOBS or 1)")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="coefficients of run polynomials and counting triangles")
    t.add_argument("--family", required=True, choices=TABLE_FAMILIES)
    t.add_argument("--n", type=_positive)
    t.add_argument("--n-max", type=_positive)
    t.add_argument("--format", choices=("ascii", "csv", "json", "tex"), default="ascii")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="run the identity suite; JSON lines on stdout, summary on stderr")
    v.add_argument("--suite", choices=("all",) + SCOPES, default="all")
    v.add_argument("--n-max", type=_positive, default=None)
    v.add_argument("--random-trials", type=int, default=0, help="randomized MHR/BHR law trials")
    v.add_argument("--random-n", type=_positive, default=5)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--fixtures", default=None, help="fixtures directory for the oeis scope")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("orbit", help="orbit of a permutation under HR, MHR or BHR")
    o.add_argument("--perm", required=True)
    o.add_argument("--action", choices=("hr", "mhr", "bhr", "HR", "MHR", "BHR"), default="hr")
    o.add_argument("--stat", choices=("as", "run"), default=None)
    o.add_argument("--format", choices=("ascii", "json"), default="ascii")
    o.set_defaults(func=cmd_orbit)

    r = sub.add_parser("tree", help="render the tree of a permutation or validate a raw tree")
    g = r.add_mutually_exclusive_group(required=True)
    g.add_argument("--perm")
    g.add_argument("--raw-file")
    r.add_argument("--format", choices=("ascii", "dot", "raw"), default="ascii")
    r.set_defaults(func=cmd_tree)

    e = sub.add_parser("oeis", help="diff a bundled OEIS b-file against regenerated data")
    e.add_argument("sequence", choices=sorted(oeis.SEQUENCES))
    e.add_argument("--n-max", type=_positive, default=None)
    e.add_argument("--fixtures", default=None, help="fixtures directory (default HRRUNS_FIXTURES or bundled)")
    e.add_argument("--allow-network", action="store_true")
    e.set_defaults(func=cmd_oeis)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs is None:
        args.jobs = default_jobs()
    try:
        return args.func(args)
    except (UsageError, DomainError, CapacityError, StructureError, ValueError) as exc:
        sys.stderr.write(f"hrruns: {exc}\n")
        return USAGE
    except HRRunsError as exc:
        sys.stderr.write(f"hrruns: {exc}\n")
        return FAIL


if __name__ == "__main__":
    sys.exit(main())
