"""Run configurations, the all-subsets scan, and report serialization."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any

from .closed_forms import (
    ClaimId,
    Report,
    extract_MJ,
    mj_index_set,
    mj_representative,
    mj_signature,
    mj_tower,
    quotient_params,
)
from .genfun import graded_gf, signed_gf
from .indexset import IndexSet, all_subsets
from .perm import GroupLabel
from .poly import BiPoly, IntPoly, NotDivisible
from .quotients import Flavor


def parse_range(text: str) -> list[int]:
    """``"5"`` or ``"2..6"`` (inclusive)."""
    text = text.strip()
    try:
        if ".." in text:
            lo, hi = text.split("..")
            ns = list(range(int(lo), int(hi) + 1))
        else:
            ns = [int(text)]
    except ValueError:
        raise ValueError(f"malformed n or n-range {text!r}") from None
    if not ns:
        raise ValueError(f"empty n-range {text!r}")
    if ns[0] < 1:
        raise ValueError("n must be >= 1")
    return ns


@dataclass
class RunConfig:
    command: str
    group: GroupLabel = GroupLabel.D
    ns: list[int] | None = None
    index_set: str | None = None
    claims: list[ClaimId] = field(default_factory=list)
    graded: bool = False
    fmt: str = "json"
    workers: int = 1
    full: bool = False
    timing: bool = True
    mj_reading: str = "literal"
    extra_params: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.command not in ("gf", "verify", "scan", "factor"):
            raise ValueError(f"unknown command {self.command!r}")
        if self.fmt not in ("text", "json", "csv"):
            raise ValueError(f"unknown format {self.fmt!r}")
        if self.workers < 1:
            raise ValueError("worker count must be >= 1")
        if self.ns is not None and min(self.ns) < 1:
            raise ValueError("n must be >= 1")
        if self.ns is not None and self.index_set is not None:
            for n in self.ns:
                I = IndexSet.parse(n, self.index_set)
                if self.group is GroupLabel.A and 0 in I and self.command == "gf":
                    raise ValueError("type A index sets lie in [1, n-1]")


# ---------------------------------------------------------------- scan

@dataclass
class ScanRow:
    J: IndexSet
    gf: IntPoly
    signature: tuple[int, tuple[int, ...]] | None
    M_J: IntPoly | None
    divisible: bool | None
    class_consistent: bool | None

    @property
    def status(self) -> str:
        if self.divisible is None:
            return "inapplicable"
        return "verified" if self.divisible and self.class_consistent else "mismatch"

    def to_dict(self) -> dict[str, Any]:
        return {
            "set": list(self.J.members),
            "mask": self.J.mask,
            "gf": self.gf.to_json_obj(),
            "signature": None if self.signature is None else [self.signature[0], list(self.signature[1])],
            "M_J": None if self.M_J is None else self.M_J.to_json_obj(),
            "divisible": self.divisible,
            "class_consistent": self.class_consistent,
            "status": self.status,
        }


def scan_all_subsets(n: int, group: GroupLabel = GroupLabel.D, workers: int | None = None,
                     reading: str = "literal") -> list[ScanRow]:
    """One histogram sweep, then a row per J in ascending bitmask order.

    M_J extraction applies to type D with n >= 3; other groups get gf only.
    """
    if n < 2:
        raise ValueError("scan needs n >= 2")
    rows = []
    lo = 1 if group is GroupLabel.A else 0
    for J in all_subsets(n, lo):
        gf = signed_gf(n, group, J, workers)
        if group is not GroupLabel.D or n < 3:
            rows.append(ScanRow(J, gf, None, None, None, None))
            continue
        sig = mj_signature(J, reading)
        try:
            M = extract_MJ(n, J, reading, workers)
        except NotDivisible:
            rows.append(ScanRow(J, gf, sig, None, False, None))
            continue
        rep = mj_representative(J, reading)
        try:
            consistent = extract_MJ(n, rep, reading, workers) == M
        except NotDivisible:
            consistent = False
        rows.append(ScanRow(J, gf, sig, M, True, consistent))
    return rows


def mj_symmetry_failures(rows: list[ScanRow]) -> list[tuple]:
    """Ordered signatures whose M_J differs from that of a reordering of |J_1|..|J_s|."""
    by_sig: dict[tuple, set] = {}
    for r in rows:
        if r.M_J is not None:
            by_sig.setdefault(r.signature, set()).add(r.M_J)
    bad = []
    for (j0, rest), Ms in by_sig.items():
        for (j0b, restb), Mb in by_sig.items():
            if j0b == j0 and restb != rest and sorted(restb) == sorted(rest) and Ms != Mb:
                bad.append(((j0, rest), (j0b, restb)))
    return bad


def mj_dependence_failures(rows: list[ScanRow]) -> list[tuple]:
    """Ordered signatures carried by sets with different M_J."""
    by_sig: dict[tuple, dict] = {}
    for r in rows:
        if r.M_J is not None:
            by_sig.setdefault(r.signature, {}).setdefault(r.M_J, []).append(list(r.J.members))
    return [(sig, list(d.values())) for sig, d in by_sig.items() if len(d) > 1]


# ---------------------------------------------------------------- output

def poly_text(p: IntPoly | BiPoly | None) -> str:
    return "" if p is None else str(p)


def reports_to_text(reports: list[Report], fmt: str, timing: bool = True) -> str:
    if fmt == "json":
        return "".join(json.dumps(r.to_dict(timing), separators=(",", ":")) + "\n" for r in reports)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        head = ["claim", "n", "params", "status", "lhs", "rhs", "counterexample"]
        if timing:
            head.append("elapsed_ms")
        w.writerow(head)
        for r in reports:
            row = [r.claim.value, r.n, json.dumps(r.params, separators=(",", ":")), r.status.value,
                   poly_text(r.lhs), poly_text(r.rhs),
                   "" if r.counterexample is None else json.dumps(r.counterexample, separators=(",", ":"))]
            if timing:
                row.append(round(r.elapsed * 1000, 3))
            w.writerow(row)
        return buf.getvalue()
    lines = []
    for r in reports:
        p = json.dumps(r.params, separators=(",", ":"))
        line = f"{r.claim.value:16s} n={r.n} {p:32s} {r.status.value}"
        if r.status.value == "mismatch":
            line += f"  lhs={poly_text(r.lhs)}  rhs={poly_text(r.rhs)}"
        if timing:
            line += f"  ({r.elapsed * 1000:.1f} ms)"
        lines.append(line + "\n")
    return "".join(lines)


def rows_to_text(n: int, rows: list[ScanRow], fmt: str) -> str:
    if fmt == "json":
        return "".join(json.dumps(dict(n=n, **r.to_dict()), separators=(",", ":")) + "\n" for r in rows)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "set", "mask", "gf", "signature", "M_J", "divisible", "class_consistent", "status"])
        for r in rows:
            d = r.to_dict()
            w.writerow([n, J_text(r.J), r.J.mask, str(r.gf),
                        "" if r.signature is None else json.dumps(d["signature"], separators=(",", ":")),
                        poly_text(r.M_J), d["divisible"], d["class_consistent"], r.status])
        return buf.getvalue()
    return "".join(
        f"n={n} J={{{J_text(r.J)}}} gf={r.gf}  M_J={poly_text(r.M_J)}  {r.status}\n" for r in rows
    )


def J_text(J: IndexSet) -> str:
    return J.cli_form()


def gf_record(n: int, group: GroupLabel, I: IndexSet, graded: bool, workers: int) -> IntPoly | BiPoly:
    if graded:
        return graded_gf(n, group, I, workers)
    return signed_gf(n, group, I, workers)


def factor_record(n: int, J: IndexSet, workers: int, reading: str) -> dict[str, Any]:
    m = quotient_params(mj_index_set(J, reading), Flavor.CONJ_D).m
    rec: dict[str, Any] = {"n": n, "set": list(J.members)}
    tower = mj_tower(n, J, reading)
    try:
        M = extract_MJ(n, J, reading, workers)
        rec.update(status="verified", M_J={"coeffs": M.to_json_obj()})
    except NotDivisible:
        rec.update(status="mismatch", M_J=None)
    rec["m"] = m
    rec["tower"] = {"coeffs": tower.to_json_obj()}
    return rec
