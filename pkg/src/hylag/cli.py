"""Command-line front end: build, lagrangian, sparse, verify, report.

Exit codes: 0 pass, 1 claim failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable

from . import __version__
from .constructions import (
    ConstructionParams,
    FamilyChoice,
    N_of_ell,
    N_of_ell_q,
    alpha,
    attach_sparse,
    build_layered,
    condition7,
    exact_density,
    lift_to_r,
    parse_family,
    part_range,
)
from .hypergraph import Hypergraph, InvalidInput, dumps, read_hyg, write_hyg
from .lagrangian import OptimizerConfig, maximize
from .nonjump import claims as C
from .nonjump.reports import ClaimRefused, ClaimReport, VerificationReport
from .sparse import SparseBuildError, SparseParams, build_sparse, verify_edge_count, verify_local_sparsity

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

CLAIM_IDS = (
    "f_bound", "g_max", "h_max", "f_a1", "rho_block", "F", "H", "claim8",
    "case_a", "case_b", "case_c", "case_d", "case_e", "claim1", "subgraph", "all",
)
CASE_FAMILY = {
    "case_a": FamilyChoice.ALPHA,
    "case_b": FamilyChoice.COMPLEMENT,
    "case_c": FamilyChoice.N12_125,
    "case_d": FamilyChoice.N96_625,
    "case_e": FamilyChoice.N252_625,
}


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    seed: int
    fmt: str = "json"
    options: dict = field(default_factory=dict)


def _default_seed() -> int:
    raw = os.environ.get("HYLAG_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise InvalidInput(f"HYLAG_SEED must be an integer, got {raw!r}") from None


def _int_range(text: str) -> tuple[int, int]:
    """'7' -> (7, 7); '2..50' -> (2, 50)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        v = int(text)
        return v, v
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or a range a..b, got {text!r}") from None


def _emit(payload: dict, fmt: str, table: str | None = None) -> None:
    if fmt == "table" and table is not None:
        print(table)
    else:
        print(json.dumps(payload, indent=2, sort_keys=True))


def _default_ell(family: FamilyChoice, ell: int | None) -> int:
    if ell is not None:
        return ell
    return 5


# --- build -------------------------------------------------------------------


def cmd_build(args: argparse.Namespace, run: RunConfig) -> int:
    family = parse_family(args.family)
    ell = _default_ell(family, args.ell)
    p = ConstructionParams(family, ell, args.q, args.t, args.r)
    g = build_layered(ConstructionParams(family, ell, args.q, args.t, 5))
    if args.r > 5:
        g = lift_to_r(g, args.r, args.t)
    side = {
        "choice": family.value,
        "ell": ell,
        "q": p.q,
        "t": p.t,
        "r": p.r,
        "edge_count": g.num_edges,
        "density_exact": str(exact_density(g)),
        "N_ell": str(N_of_ell(family, ell)),
        "N_ell_q": str(N_of_ell_q(family, ell, p.q)),
        "condition7": condition7(family, ell, p.q),
        "seed": run.seed,
        "version": __version__,
    }
    if args.out:
        out = Path(args.out)
        write_hyg(g, out, comment=f"{family.value} ell={ell} q={p.q} t={p.t} r={p.r}")
        out.with_suffix(out.suffix + ".json").write_text(json.dumps(side, indent=2, sort_keys=True) + "\n")
        side["path"] = str(out)
        _emit(side, "json")
    else:
        sys.stdout.write(dumps(g))
        print(json.dumps(side, sort_keys=True), file=sys.stderr)
    return EXIT_PASS


# --- lagrangian --------------------------------------------------------------


def cmd_lagrangian(args: argparse.Namespace, run: RunConfig) -> int:
    g = read_hyg(args.file)
    cfg = OptimizerConfig(restarts=args.restarts, seed=run.seed, max_iterations=args.max_iterations)
    res = maximize(g, cfg)
    out = res.to_dict()
    out.update(edge_count=g.num_edges, vertices=g.n, r=g.r, version=__version__)
    table = "\n".join(f"{k}: {v}" for k, v in out.items() if k != "argmax")
    _emit(out, run.fmt, table)
    return EXIT_PASS


# --- sparse ------------------------------------------------------------------


def cmd_sparse(args: argparse.Namespace, run: RunConfig) -> int:
    p = SparseParams(r=args.r, t=args.t, k=args.k, sigma=args.sigma, seed=run.seed, max_attempts=args.attempts, c=args.c)
    try:
        a = build_sparse(p)
    except SparseBuildError as e:
        _emit({"ok": False, "error": str(e), "best_edges": e.best_edges, "shortfall": e.shortfall, "seed": run.seed}, "json")
        return EXIT_FAIL
    check = verify_local_sparsity(a, p.k, p.budget)
    record = {
        "r": p.r,
        "t": p.t,
        "k": p.k,
        "sigma": p.sigma,
        "seed": run.seed,
        "edge_count": a.num_edges,
        "required_edges": p.required_edges,
        "edge_count_ok": verify_edge_count(a, p.sigma),
        "locally_sparse": check.ok,
        "subsets_checked": check.subsets_checked,
        "version": __version__,
    }
    if args.out:
        out = Path(args.out)
        write_hyg(a, out, comment=f"locally sparse r={p.r} t={p.t} k={p.k} sigma={p.sigma} seed={run.seed}")
        out.with_suffix(out.suffix + ".json").write_text(json.dumps(record, indent=2, sort_keys=True) + "\n")
        record["path"] = str(out)
    else:
        record["edges"] = [list(e) for e in a.edges]
    _emit(record, run.fmt, "\n".join(f"{k}: {v}" for k, v in record.items() if k != "edges"))
    return EXIT_PASS


# --- verify ------------------------------------------------------------------


def claim1_graph(seed: int, t: int = 8) -> Hypergraph:
    """A globally sparse 5-graph (every vertex set obeys the bound, k = t)."""
    return build_sparse(SparseParams(t=t, k=t, sigma=2 / t**4, seed=seed))


def subgraph_instance(seed: int, t: int = 6) -> tuple[Hypergraph, list[int], Fraction]:
    """H(l=2, t) with a locally sparse graph on part 1, and the bound alpha(2)/120."""
    base = build_layered(ConstructionParams(FamilyChoice.ALPHA, 2, 1, t))
    a = build_sparse(SparseParams(t=t, k=t, sigma=2 / t**4, seed=seed))
    part1 = list(part_range(0, t))
    return attach_sparse(base, a, part1), part1, alpha(2) / 120


def _jobs(args: argparse.Namespace, run: RunConfig) -> list[Callable[[], ClaimReport]]:
    vc = C.VerifierConfig(restarts=args.budget, seed=run.seed)
    claim = args.claim
    fam = parse_family(args.family) if args.family else None
    ell = args.ell
    q_lo, q_hi = args.q if args.q else (None, None)

    def fams(default):
        return [fam] if fam else default

    def ells(choice, default):
        if choice.is_special:
            return [5]
        return [ell] if ell is not None else default

    def qs(default):
        return list(range(q_lo, q_hi + 1)) if q_lo is not None else default

    if claim == "f_bound":
        return [lambda l=l: C.verify_claim_f_bound(l, vc) for l in ([ell] if ell else [2, 3, 4, 5])]
    if claim == "g_max":
        Ls = [args.L] if args.L else [ell] if ell else [2, 3, 4, 5, 6]
        return [lambda L=L: C.verify_claim_g_max(L, Fraction(args.c), vc) for L in Ls]
    if claim == "h_max":
        return [lambda l=l: C.verify_claim_h_max(l, Fraction(args.c), vc) for l in ([ell] if ell else [3, 4, 5, 6])]
    if claim == "f_a1":
        return [lambda l=l: C.verify_claim_f_a1(l, vc) for l in ([ell] if ell else list(range(2, 9)))]
    if claim == "rho_block":
        return [lambda: C.verify_rho_block_bound(vc)]
    if claim in ("F", "H"):
        fn = C.verify_claim_F if claim == "F" else C.verify_claim_H
        return [
            lambda f=f, l=l, q=q: fn(f, l, q, vc)
            for f in fams(list(FamilyChoice))
            for l in ells(f, [2, 3, 5])
            for q in qs([1, 2, 3])
        ]
    if claim == "claim8":
        return [
            lambda f=f, l=l: C.verify_claim8_coefficients(f, l, args.samples, run.seed)
            for f in fams(list(FamilyChoice))
            for l in ells(f, [2, 3, 4, 5])
        ]
    if claim in CASE_FAMILY:
        f = CASE_FAMILY[claim]
        rng = (q_lo, q_hi) if q_lo is not None else None
        return [lambda l=l: C.verify_case_derivatives(f, l, rng) for l in ells(f, list(range(2, 9)))]
    if claim == "claim1":
        return [lambda: C.verify_claim1(claim1_graph(run.seed), args.samples, run.seed)]
    if claim == "subgraph":
        def job():
            g, part1, bound = subgraph_instance(run.seed)
            return C.verify_subgraph_bound(g, bound, 7, args.samples, run.seed, part1, label="subgraph[alpha,l=2,t=6]")
        return [job]
    raise InvalidInput(f"unknown claim id {claim!r}")


def _all_jobs(args: argparse.Namespace, run: RunConfig) -> list[Callable[[], ClaimReport]]:
    jobs = []
    for cid in CLAIM_IDS[:-1]:
        sub = argparse.Namespace(**{**vars(args), "claim": cid})
        if cid in ("F", "H"):
            # only the parameter sets where the bound is asserted
            for f in FamilyChoice:
                for l in ([5] if f.is_special else [2, 3, 5]):
                    for q in (1, 2, 3):
                        if q == 1 or condition7(f, l, q):
                            sub2 = argparse.Namespace(**{**vars(sub), "family": f.value, "ell": l, "q": (q, q)})
                            jobs.extend(_jobs(sub2, run))
            continue
        jobs.extend(_jobs(sub, run))
    return jobs


def cmd_verify(args: argparse.Namespace, run: RunConfig) -> int:
    if args.claim not in CLAIM_IDS:
        raise InvalidInput(f"unknown claim id {args.claim!r}; choose from {', '.join(CLAIM_IDS)}")
    jobs = _all_jobs(args, run) if args.claim == "all" else _jobs(args, run)
    reports, refused = [], []
    for job in jobs:
        try:
            reports.append(job())
        except ClaimRefused as e:
            refused.append(str(e))
    config = {"seed": run.seed, "restarts": args.budget, "samples": args.samples, "version": __version__,
              "tolerance": C.VerifierConfig().tolerance}
    report = VerificationReport(reports, config)
    if refused and not reports:
        _emit({"refused": refused, "config": config}, "json")
        return EXIT_USAGE
    payload = report.to_dict()
    if refused:
        payload["refused"] = refused
    _emit(payload, run.fmt, report.table() + "".join(f"\nrefused: {r}" for r in refused))
    return EXIT_PASS if report.passed else EXIT_FAIL


# --- report ------------------------------------------------------------------


def cmd_report(args: argparse.Namespace, run: RunConfig) -> int:
    rows: list[dict] = []
    if args.kind == "nonjump":
        fam = parse_family(args.family)
        lo, hi = args.ell if args.ell else ((5, 5) if fam.is_special else (2, 6))
        qlo, qhi = args.q if args.q else (1, 1)
        for l in range(lo, hi + 1):
            for q in range(qlo, qhi + 1):
                n = N_of_ell_q(fam, l, q)
                rows.append({"family": fam.value, "ell": l, "q": q, "N_ell_q": str(n), "N_float": float(n),
                             "over_120": str(n / 120), "condition7": condition7(fam, l, q)})
    elif args.kind == "lift":
        lo, hi = args.r if args.r else (5, 8)
        for r in range(lo, hi + 1):
            target = Fraction(151, 6 * r**r)
            rows.append({"r": r, "lambda_target": str(target), "lambda_float": float(target),
                         "density_target": float(target * math.factorial(r))})
    else:  # density
        fam = parse_family(args.family)
        l = _default_ell(fam, args.ell[0] if args.ell else None)
        q = args.q[0] if args.q else 1
        lo, hi = args.t if args.t else (2, 10)
        for t in range(lo, hi + 1):
            g = build_layered(ConstructionParams(fam, l, q, t))
            d = exact_density(g)
            rows.append({"family": fam.value, "ell": l, "q": q, "t": t, "edges": g.num_edges,
                         "density": str(d), "density_float": float(d),
                         "limit": float(N_of_ell_q(fam, l, q))})
    payload = {"kind": args.kind, "rows": rows, "seed": run.seed, "version": __version__}
    if rows:
        keys = list(rows[0])
        widths = [max(len(k), *(len(str(r[k])) for r in rows)) for k in keys]
        lines = ["  ".join(k.ljust(w) for k, w in zip(keys, widths))]
        lines += ["  ".join(str(r[k]).ljust(w) for k, w in zip(keys, widths)) for r in rows]
        table = "\n".join(line.rstrip() for line in lines)
    else:
        table = "(empty)"
    _emit(payload, run.fmt, table)
    return EXIT_PASS


# --- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hylag", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"hylag {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=None, help="defaults to $HYLAG_SEED or 0")
        p.add_argument("--format", choices=("json", "table"), default="json")

    b = sub.add_parser("build", help="build G(l, q, t) and write HYG v1 plus a JSON sidecar")
    b.add_argument("--family", default="alpha")
    b.add_argument("--ell", type=int)
    b.add_argument("--q", type=int, default=1)
    b.add_argument("--t", type=int, required=True)
    b.add_argument("--r", type=int, default=5)
    b.add_argument("--out")
    common(b)

    g = sub.add_parser("lagrangian", help="multi-start lower bound on the Lagrangian of a HYG file")
    g.add_argument("file")
    g.add_argument("--restarts", type=int, default=32)
    g.add_argument("--max-iterations", type=int, default=100_000)
    common(g)

    s = sub.add_parser("sparse", help="build and verify a locally sparse graph")
    s.add_argument("--r", type=int, default=5)
    s.add_argument("--t", type=int, default=12)
    s.add_argument("--k", type=int, default=7)
    s.add_argument("--sigma", type=float, default=0.002)
    s.add_argument("--attempts", type=int, default=16)
    s.add_argument("--c", type=float, default=SparseParams.c)
    s.add_argument("--out")
    common(s)

    v = sub.add_parser("verify", help="verify one claim or all of them")
    v.add_argument("--claim", required=True)
    v.add_argument("--family")
    v.add_argument("--ell", type=int)
    v.add_argument("--L", type=int)
    v.add_argument("--q", type=_int_range)
    v.add_argument("--c", default="1", help="scale of the g/h constraint (rational)")
    v.add_argument("--budget", type=int, default=64, help="optimizer restarts per claim")
    v.add_argument("--samples", type=int, default=100)
    common(v)

    r = sub.add_parser("report", help="tables of non-jump values, lift targets or densities")
    r.add_argument("--kind", choices=("nonjump", "lift", "density"), default="nonjump")
    r.add_argument("--family", default="alpha")
    r.add_argument("--ell", type=_int_range)
    r.add_argument("--q", type=_int_range)
    r.add_argument("--t", type=_int_range)
    r.add_argument("--r", type=_int_range)
    common(r)
    return parser


COMMANDS = {
    "build": cmd_build,
    "lagrangian": cmd_lagrangian,
    "sparse": cmd_sparse,
    "verify": cmd_verify,
    "report": cmd_report,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PASS if e.code == 0 else EXIT_USAGE
    try:
        seed = args.seed if args.seed is not None else _default_seed()
        run = RunConfig(args.subcommand, seed, args.format, vars(args))
        return COMMANDS[args.subcommand](args, run)
    except (InvalidInput, OSError, ValueError) as e:
        print(f"hylag: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
