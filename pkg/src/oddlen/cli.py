"""Command line front end.

Exit status: 0 when every executed check is verified, 1 on any mismatch (the
first counterexample goes to stderr), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .closed_forms import MJ_READINGS, ClaimId, Status, default_range, verify_claim, verify_range
from .harness import (
    RunConfig,
    factor_record,
    gf_record,
    parse_range,
    reports_to_text,
    rows_to_text,
    scan_all_subsets,
)
from .indexset import IndexSet
from .kernel import WORKERS_ENV, default_workers
from .perm import GroupLabel


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="oddlen",
        description="Signed generating functions of odd length on types A, B, D.",
        epilog=f"Worker count defaults to the number of CPUs; override with --workers or ${WORKERS_ENV}.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, n_required=True):
        sp.add_argument("--n", required=n_required, help="rank, or inclusive range like 2..6")
        sp.add_argument("--format", dest="fmt", choices=["text", "json", "csv"], default="json")
        sp.add_argument("--workers", type=int, default=None,
                        help=f"worker processes (default: ${WORKERS_ENV} or CPU count)")

    g = sub.add_parser("gf", help="generating function of one quotient")
    common(g)
    g.add_argument("--group", default="D", help="A, B, D or BD (odd-signed complement of D)")
    g.add_argument("--set", default="", help='quotient index set, comma separated; "" is empty')
    g.add_argument("--graded", action="store_true", help="sum y^length x^oddlength instead of the signed gf")

    v = sub.add_parser("verify", help="check claims by exhaustive enumeration")
    common(v, n_required=False)
    v.add_argument("--claim", action="append", default=None,
                   help="claim id (repeatable or comma separated; default: all)")
    v.add_argument("--set", default=None, help="restrict to one index set")
    v.add_argument("--i", type=int, default=None)
    v.add_argument("--a", type=int, default=None)
    v.add_argument("--k", type=int, default=None)
    v.add_argument("--value", type=int, default=None)
    v.add_argument("--full", action="store_true", help="extend default conjecture ranges to n=8")
    v.add_argument("--no-timing", action="store_true", help="omit elapsed_ms fields")
    v.add_argument("--mj-reading", choices=MJ_READINGS, default="literal")

    s = sub.add_parser("scan", help="all 2^n quotients with M_J extraction")
    common(s)
    s.add_argument("--group", default="D")
    s.add_argument("--mj-reading", choices=MJ_READINGS, default="literal")

    f = sub.add_parser("factor", help="extract the M_J cofactor of one type-D quotient")
    common(f)
    f.add_argument("--set", default="")
    f.add_argument("--mj-reading", choices=MJ_READINGS, default="literal")
    return p


def config_from_args(args) -> RunConfig:
    try:
        workers = args.workers if args.workers is not None else default_workers()
        ns = parse_range(args.n) if args.n is not None else None
        group = GroupLabel.parse(getattr(args, "group", "D"))
        claims = []
        for c in getattr(args, "claim", None) or []:
            for name in c.split(","):
                name = name.strip()
                try:
                    claims.append(ClaimId(name))
                except ValueError:
                    raise UsageError(f"unknown claim {name!r}") from None
        extra = {k: getattr(args, k) for k in ("i", "a", "k", "value")
                 if getattr(args, k, None) is not None}
        cfg = RunConfig(
            command=args.command,
            group=group,
            ns=ns,
            index_set=getattr(args, "set", None),
            claims=claims or list(ClaimId),
            graded=getattr(args, "graded", False),
            fmt=args.fmt,
            workers=workers,
            full=getattr(args, "full", False),
            timing=not getattr(args, "no_timing", False),
            mj_reading=getattr(args, "mj_reading", "literal"),
            extra_params=extra,
        )
    except ValueError as e:
        raise UsageError(str(e)) from None
    return cfg


def run(cfg: RunConfig, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    if cfg.command == "gf":
        if len(cfg.ns) != 1:
            raise UsageError("gf takes a single n")
        n = cfg.ns[0]
        I = IndexSet.parse(n, cfg.index_set or "")
        poly = gf_record(n, cfg.group, I, cfg.graded, cfg.workers)
        if cfg.fmt == "json":
            out.write(json.dumps({"coeffs": poly.to_json_obj()}, separators=(",", ":")) + "\n")
        elif cfg.fmt == "csv":
            out.write("n,group,set,gf\n")
            out.write(f'{n},{cfg.group.value},"{I.cli_form()}",{poly}\n')
        else:
            out.write(f"{poly}\n")
        return 0

    if cfg.command == "factor":
        if len(cfg.ns) != 1:
            raise UsageError("factor takes a single n")
        n = cfg.ns[0]
        if n < 3:
            raise UsageError("factor needs n >= 3")
        J = IndexSet.parse(n, cfg.index_set or "")
        rec = factor_record(n, J, cfg.workers, cfg.mj_reading)
        if cfg.fmt == "json":
            out.write(json.dumps(rec, separators=(",", ":")) + "\n")
        else:
            M = "" if rec["M_J"] is None else json.dumps(rec["M_J"]["coeffs"], separators=(",", ":"))
            if cfg.fmt == "csv":
                out.write("n,set,m,status,M_J\n")
                out.write(f'{n},"{J.cli_form()}",{rec["m"]},{rec["status"]},"{M}"\n')
            else:
                out.write(f"n={n} J={J} m={rec['m']} {rec['status']} M_J={M}\n")
        if rec["status"] != "verified":
            err.write(f"not divisible: n={n} J={J}\n")
            return 1
        return 0

    if cfg.command == "scan":
        status = 0
        for n in cfg.ns:
            rows = scan_all_subsets(n, cfg.group, cfg.workers, cfg.mj_reading)
            out.write(rows_to_text(n, rows, cfg.fmt))
            for r in rows:
                if r.status == "mismatch":
                    if status == 0:
                        err.write(f"first mismatch: n={n} J={r.J} divisible={r.divisible} "
                                  f"class_consistent={r.class_consistent}\n")
                    status = 1
        return status

    # verify
    reports = []
    single = cfg.index_set is not None or cfg.extra_params
    for claim in cfg.claims:
        ns = cfg.ns if cfg.ns is not None else list(default_range(claim, cfg.full))
        if single:
            for n in ns:
                params = dict(cfg.extra_params)
                if cfg.index_set is not None:
                    params["set"] = list(IndexSet.parse(n, cfg.index_set).members)
                reports.append(verify_claim(claim, n, params, cfg.workers, cfg.mj_reading))
        else:
            reports.extend(verify_range(claim, ns, cfg.workers, cfg.mj_reading))
    out.write(reports_to_text(reports, cfg.fmt, cfg.timing))
    bad = [r for r in reports if r.status is Status.mismatch]
    if bad:
        r = bad[0]
        err.write("first counterexample: "
                  + json.dumps(r.to_dict(timing=False), separators=(",", ":")) + "\n")
        return 1
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        return run(cfg)
    except UsageError as e:
        parser.error(str(e))  # exits 2
    except ValueError as e:
        # bad index sets and similar input problems surface from the library
        parser.error(str(e))
    return 2


if __name__ == "__main__":
    sys.exit(main())
