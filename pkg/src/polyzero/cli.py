"""Command-line front end: ``polyzero {gen,roots,verify,report}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional

from . import __version__
from .complexroots import AmbiguousRootMatch, all_roots, check_modulus_bound, to_csv
from .families import Family, FamilySpec, g_sequence
from .polycore import format_fraction
from .realroots import DEFAULT_TOL, RootIsolationError, decimal_string, real_roots
from .theorems import (
    CLAIM_GROUPS,
    FAIL,
    PARTIAL,
    PASS,
    SweepConfig,
    VerificationReport,
    combine_status,
    manifest,
    run_group,
)

EXIT_OK, EXIT_FAIL, EXIT_PARTIAL, EXIT_USAGE = 0, 1, 2, 64
STATUS_EXIT = {PASS: EXIT_OK, PARTIAL: EXIT_PARTIAL, FAIL: EXIT_FAIL}

# claim-id prefixes produced by each group, used to resolve --claims selectors
GROUP_PREFIXES = {
    "table1": ("table1",),
    "special_values": ("intro.special_values",),
    "g_ratio": ("intro.g_ratio",),
    "identity": ("intro.c_identity",),
    "c_limit": ("intro.c_limit_identity",),
    "unit_disk": ("intro.unit_disk",),
    "numerator": ("thm1.numerator_form",),
    "thm1": ("thm1.l", "thm1.item"),
    "thm2": ("thm2.item", "thm2.complex_bound", "thm2"),
    "bound_limit": ("thm2.bound_limit",),
    "thm3": ("thm3.l", "thm3.item", "thm3"),
}
LIMITS = {"F": None, "D": 2, "I": 2, "H": 2}


class UsageError(Exception):
    pass


class NonConvergence(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_tolerance(text: str) -> Fraction:
    """Decimal or scientific notation to an exact rational (``1e-12`` -> 1/10^12)."""
    try:
        tol = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a decimal tolerance: {text!r}") from None
    if tol <= 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return tol


@dataclass
class RunConfig:
    command: str
    family: Optional[Family] = None
    k_range: tuple = (1, 1)
    l: int = 0  # noqa: E741
    tolerance: Fraction = DEFAULT_TOL
    seed: int = 0x5EED
    output_format: str = "json"
    output_path: Optional[str] = None
    claims: list = field(default_factory=list)
    jobs: int = 1
    kmax_given: bool = False
    l_given: bool = False

    def specs(self) -> list[FamilySpec]:
        lo, hi = self.k_range
        if lo > hi:
            raise UsageError(f"empty k range {lo}..{hi}")
        try:
            return [FamilySpec(self.family, k, self.l) for k in range(lo, hi + 1)]
        except ValueError as exc:
            raise UsageError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", choices=[f.value for f in Family])
    common.add_argument("--k", type=int, help="single index")
    common.add_argument("--kmax", type=int, help="sweep bound (range starts at --k or 1)")
    common.add_argument("--l", type=int, default=None, help="derivative order (D) or depth (H)")
    common.add_argument("--tol", type=parse_tolerance, default=DEFAULT_TOL, help="e.g. 1e-12")
    common.add_argument("--seed", type=int, default=0x5EED, help="overridden by POLYZERO_SEED")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--out", help="output file (default: stdout)")

    parser = _Parser(prog="polyzero", description=__doc__)
    parser.add_argument("--version", action="version", version=f"polyzero {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", parents=[common], help="emit polynomials or G(k,.) terms")
    gen.add_argument("--sequence", action="store_true", help="emit G(k,1..count), one per line")
    gen.add_argument("--count", type=int, default=20)

    roots = sub.add_parser("roots", parents=[common], help="real (and complex) roots")
    roots.add_argument("--complex", action="store_true", help="all complex roots instead of real ones")
    roots.add_argument("--plot", action="store_true", help="k vs root and k vs |root - limit| CSV")

    verify = sub.add_parser("verify", parents=[common], help="run verification sweeps")
    verify.add_argument("--claims", default="all", help="comma list of groups or claim ids, or 'all'")

    report = sub.add_parser("report", parents=[common], help="merge verify outputs into one manifest")
    report.add_argument("inputs", nargs="+")
    return parser


def config_from_args(args, environ=os.environ) -> RunConfig:
    seed = args.seed
    if environ.get("POLYZERO_SEED"):
        try:
            seed = int(environ["POLYZERO_SEED"], 0)
        except ValueError:
            raise UsageError(f"POLYZERO_SEED is not an integer: {environ['POLYZERO_SEED']!r}") from None
    if not 0 <= seed < 2**64:
        raise UsageError("seed must fit in 64 bits")
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    cfg = RunConfig(
        command=args.command,
        family=Family(args.family) if args.family else None,
        l=args.l if args.l is not None else 0,
        tolerance=args.tol,
        seed=seed,
        output_format=args.format,
        output_path=args.out,
        jobs=args.jobs,
        kmax_given=args.kmax is not None,
        l_given=args.l is not None,
    )
    if args.command in ("gen", "roots"):
        if args.k is None and args.kmax is None:
            raise UsageError("give --k or --kmax")
        lo = args.k if args.k is not None else 1
        hi = args.kmax if args.kmax is not None else lo
        cfg.k_range = (lo, hi)
        if cfg.family is None and not getattr(args, "sequence", False):
            raise UsageError("--family is required")
        if lo > hi:
            raise UsageError(f"empty k range {lo}..{hi}")
    if args.command == "verify":
        cfg.claims = [c.strip() for c in args.claims.split(",") if c.strip()]
        if not cfg.claims:
            raise UsageError("--claims needs a selector or 'all'")
        cfg.k_range = (1, args.kmax) if args.kmax is not None else (1, 1)
    return cfg


# -- output ----------------------------------------------------------------


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def write_output(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


# -- commands --------------------------------------------------------------


def cmd_gen(cfg: RunConfig, args) -> int:
    if args.sequence:
        lo, hi = cfg.k_range
        if args.count < 1:
            raise UsageError("--count must be >= 1")
        try:
            text = "".join(g_sequence(k, args.count).to_lines() for k in range(lo, hi + 1))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        write_output(text, cfg.output_path)
        return EXIT_OK
    rows = []
    for spec in cfg.specs():
        p = spec.build()
        rows.append({"spec": spec.to_json(), "degree": p.degree, **p.to_json(), "text": str(p)})
    if cfg.output_format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["family", "k", "l", "power", "coeff"])
        for row in rows:
            s = row["spec"]
            for i, c in enumerate(row["coeffs"]):
                w.writerow([s["family"], s["k"], s.get("l", ""), i, c])
        write_output(buf.getvalue(), cfg.output_path)
    else:
        write_output(dump_json(rows[0] if len(rows) == 1 else rows), cfg.output_path)
    return EXIT_OK


ROOT_FIELDS = ["family", "k", "l", "lo", "hi", "approx_decimal", "tol"]
PLOT_FIELDS = ["family", "k", "l", "branch", "root", "limit", "gap"]


def _real_rows(cfg: RunConfig):
    out = []
    for spec in cfg.specs():
        try:
            recs = real_roots(spec.build(), cfg.tolerance, spec=spec)
        except RootIsolationError as exc:
            raise NonConvergence(f"{spec.label}: {exc}") from None
        out.append((spec, recs))
    return out


def _plot_rows(results) -> list[dict]:
    rows = []
    for spec, recs in results:
        limit_pos = LIMITS[spec.family.value]
        for rec in recs:
            branch = "positive" if rec.lo >= 0 else "negative"
            limit = limit_pos if branch == "positive" else (-1 if limit_pos is not None else None)
            root = float(rec.approx)
            rows.append({
                "family": spec.family.value,
                "k": spec.k,
                "l": spec.l,
                "branch": branch,
                "root": repr(root),
                "limit": "" if limit is None else limit,
                "gap": "" if limit is None else repr(abs(root - limit)),
            })
    return rows


def cmd_roots(cfg: RunConfig, args) -> int:
    if args.complex:
        sets = []
        for spec in cfg.specs():
            p = spec.build()
            try:
                rs = all_roots(p, seed=cfg.seed, spec=spec)
            except ValueError as exc:
                raise UsageError(f"{spec.label}: {exc}") from None
            if not rs.converged:
                raise NonConvergence(f"{spec.label}: root iteration did not converge in {rs.iterations} steps")
            sets.append(rs)
        if cfg.output_format == "csv":
            write_output(to_csv(sets), cfg.output_path)
        else:
            payload = [
                {"spec": s.spec.to_json(), "iterations": s.iterations, "roots": s.to_rows()} for s in sets
            ]
            write_output(dump_json(payload), cfg.output_path)
        return EXIT_OK

    results = _real_rows(cfg)
    if args.plot:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=PLOT_FIELDS, lineterminator="\n")
        w.writeheader()
        w.writerows(_plot_rows(results))
        write_output(buf.getvalue(), cfg.output_path)
        return EXIT_OK
    if cfg.output_format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=ROOT_FIELDS, lineterminator="\n")
        w.writeheader()
        for spec, recs in results:
            for rec in recs:
                row = rec.to_json()
                w.writerow({
                    "family": spec.family.value, "k": spec.k, "l": spec.l,
                    "lo": row["lo"], "hi": row["hi"],
                    "approx_decimal": row["approx_decimal"], "tol": row["tol"],
                })
        write_output(buf.getvalue(), cfg.output_path)
    else:
        payload = [rec.to_json() for _, recs in results for rec in recs]
        write_output(dump_json(payload), cfg.output_path)
    return EXIT_OK


def resolve_claims(selectors: list[str]) -> tuple[list[str], list[str]]:
    """Map selectors to (groups to run, claim-id prefixes to keep)."""
    if "all" in selectors:
        return list(CLAIM_GROUPS), []
    groups, keep = [], []
    for sel in selectors:
        if sel in CLAIM_GROUPS:
            hit = [sel]
        else:
            hit = [g for g, prefixes in GROUP_PREFIXES.items()
                   if any(sel.startswith(p) or p.startswith(sel) for p in prefixes)]
            if not hit:
                raise UsageError(f"unknown claim selector {sel!r}")
            keep.append(sel)
        groups.extend(g for g in hit if g not in groups)
    return groups, keep


def filter_reports(reports: list[VerificationReport], keep: list[str]) -> list[VerificationReport]:
    if not keep:
        return reports
    out = []
    for r in reports:
        if any(r.claim_id.startswith(k) for k in keep):
            out.append(r)
            continue
        kids = filter_reports(r.children, keep)
        if kids:
            out.append(replace(r, children=kids, status=combine_status(c.status for c in kids)))
    return out


def sweep_config(cfg: RunConfig) -> SweepConfig:
    sc = SweepConfig(tol=cfg.tolerance, seed=cfg.seed)
    if cfg.kmax_given:
        kmax = cfg.k_range[1]
        sc = replace(sc, table_kmax=kmax, d_jmax=kmax, i_kmax=kmax, h_kmax=kmax)
    if cfg.l_given:
        sc = replace(sc, d_ls=(cfg.l,), h_ls=(cfg.l,))
    return sc


def cmd_verify(cfg: RunConfig, args) -> int:
    groups, keep = resolve_claims(cfg.claims)
    sc = sweep_config(cfg)
    try:
        if cfg.jobs > 1 and len(groups) > 1:
            from concurrent.futures import ProcessPoolExecutor

            from .theorems import _run_group_task

            reports = []
            with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
                for part in pool.map(_run_group_task, [(g, sc) for g in groups]):
                    reports.extend(part)
        else:
            reports = [r for g in groups for r in run_group(g, sc)]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    except AmbiguousRootMatch as exc:
        raise NonConvergence(str(exc)) from None
    reports = filter_reports(reports, keep)
    if not reports:
        raise UsageError(f"no claims matched {cfg.claims}")
    out = manifest(reports, sc, groups)
    write_output(dump_json(out), cfg.output_path)
    return STATUS_EXIT[out["status"]]


def cmd_report(cfg: RunConfig, args) -> int:
    by_id = {}
    configs = []
    for path in args.inputs:
        try:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read {path}: {exc}") from None
        configs.append(data.get("config"))
        for r in data.get("reports", []):
            by_id[r["claim_id"]] = r
    reports = [by_id[k] for k in sorted(by_id)]
    status = combine_status(r["status"] for r in reports)
    out = {
        "tool": "polyzero",
        "version": __version__,
        "inputs": len(args.inputs),
        "configs": configs,
        "status": status,
        "reports": reports,
    }
    write_output(dump_json(out), cfg.output_path)
    return STATUS_EXIT[status]


COMMANDS = {"gen": cmd_gen, "roots": cmd_roots, "verify": cmd_verify, "report": cmd_report}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        return COMMANDS[args.command](cfg, args)
    except UsageError as exc:
        print(f"polyzero: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NonConvergence as exc:
        print(f"polyzero: non-convergence: {exc}", file=sys.stderr)
        return EXIT_PARTIAL


if __name__ == "__main__":
    sys.exit(main())
