"""Product formulas, cofactor extraction, and per-claim verification.

Every claim is checked by comparing a brute-force generating function (read
off the descent histogram) with the corresponding product or identity.
Rational identities are compared cross-multiplied so all arithmetic stays in
Z[x].
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Iterator

from .genfun import graded_gf, restricted_gf, signed_gf
from .indexset import IndexSet, all_subsets, components
from .perm import GroupLabel
from .poly import BiPoly, IntPoly, NotDivisible, exact_div, one_minus_xk, q_multinomial, tower_factor
from .quotients import Flavor, quotient_params

A, B, D, BD = GroupLabel.A, GroupLabel.B, GroupLabel.D, GroupLabel.BminusD
X2 = IntPoly.monomial(2)


class ClaimId(enum.Enum):
    thmA_quotient = "thmA_quotient"
    corA_trivial = "corA_trivial"
    thmB_quotient = "thmB_quotient"
    thmD_trivial = "thmD_trivial"
    corDA_square = "corDA_square"
    thmD_singleton = "thmD_singleton"
    corD_02 = "corD_02"
    thmD_01 = "thmD_01"
    conj_0i = "conj_0i"
    conj_01i = "conj_01i"
    conj_0i_square = "conj_0i_square"
    conj_01i_square = "conj_01i_square"
    conj_MJ = "conj_MJ"
    lem_complement = "lem_complement"
    prop_01swap = "prop_01swap"
    lem_vanishing = "lem_vanishing"
    prop_shift = "prop_shift"

    @property
    def is_conjecture(self) -> bool:
        return self.value.startswith("conj_")


class Status(enum.Enum):
    verified = "verified"
    mismatch = "mismatch"
    inapplicable = "inapplicable"


class OutOfRange(ValueError):
    pass


# ---------------------------------------------------------------- formulas

def formula_A_trivial(n: int) -> IntPoly:
    if n < 2:
        raise OutOfRange(f"needs n >= 2, got {n}")
    return tower_factor(2, n, 1)


def formula_D_trivial(n: int) -> IntPoly:
    if n < 2:
        raise OutOfRange(f"needs n >= 2, got {n}")
    return tower_factor(2, n, 2)


def formula_D_singleton(n: int) -> IntPoly:
    if n < 3:
        raise OutOfRange(f"needs n >= 3, got {n}")
    return (1 - X2) * tower_factor(4, n, 2)


def formula_D_01(n: int) -> IntPoly:
    if n < 3:
        raise OutOfRange(f"needs n >= 3, got {n}")
    return (1 + X2) * tower_factor(4, n, 2)


def formula_D_02(n: int) -> IntPoly:
    if n < 4:
        raise OutOfRange(f"needs n >= 4, got {n}")
    return (1 - X2) * tower_factor(4, n, 2)


def conjecture_formula(claim: ClaimId | str, n: int, i: int | None = None) -> tuple[IntPoly, IntPoly]:
    """(multiplier, rhs) such that the conjecture reads multiplier * gf == rhs."""
    claim = ClaimId(claim)
    if n < 5:
        raise OutOfRange(f"needs n >= 5, got {n}")
    if i is not None and not 3 <= i <= n - 1:
        raise OutOfRange(f"i must lie in [3, {n - 1}], got {i}")
    T = tower_factor(4, n, 2)
    if claim is ClaimId.conj_0i:
        return IntPoly.one(), T
    if claim is ClaimId.conj_01i:
        return 1 - X2, (1 + X2) * T
    raise ValueError(f"{claim.value} has no product formula")


def type_b_numerator(n: int, a: int) -> IntPoly:
    out = IntPoly.one()
    for j in range(a + 1, n + 1):
        out = out * one_minus_xk(j)
    return out


def type_b_denominator(m: int) -> IntPoly:
    out = IntPoly.one()
    for i in range(1, m + 1):
        out = out * one_minus_xk(2 * i)
    return out


# ---------------------------------------------------------------- M_J

MJ_READINGS = ("literal", "swap01")


def mj_index_set(J: IndexSet, reading: str = "literal") -> IndexSet:
    """Index set whose components define m and the signature.

    ``swap01`` first applies the diagram automorphism exchanging 0 and 1 when
    0 is in J but 1 is not; the generating function is unchanged by it.
    """
    if reading not in MJ_READINGS:
        raise ValueError(f"unknown M_J reading {reading!r}")
    if reading == "swap01" and 0 in J and 1 not in J and J.n >= 2:
        return J.without(0).with_(1)
    return J


def mj_signature(J: IndexSet, reading: str = "literal") -> tuple[int, tuple[int, ...]]:
    """(|J_0|, (|J_1|, ..., |J_s|)) with the non-zero components in order."""
    return quotient_params(mj_index_set(J, reading), Flavor.CONJ_D).signature


def mj_tower(n: int, J: IndexSet, reading: str = "literal") -> IntPoly:
    m = quotient_params(mj_index_set(J, reading), Flavor.CONJ_D).m
    return tower_factor(2 * m + 2, n, 2)


@lru_cache(maxsize=4096)
def _extract_mj(n: int, mask: int, reading: str, workers: int | None) -> IntPoly:
    J = IndexSet(n, mask)
    return exact_div(signed_gf(n, D, J, workers), mj_tower(n, J, reading))


def extract_MJ(n: int, J, reading: str = "literal", workers: int | None = None) -> IntPoly:
    """Cofactor of the tower in the type-D quotient gf; raises NotDivisible."""
    if n < 3:
        raise OutOfRange(f"needs n >= 3, got {n}")
    J = J if isinstance(J, IndexSet) else IndexSet.of(n, J)
    return _extract_mj(n, J.mask, reading, workers)


def mj_class_key(J: IndexSet, reading: str = "literal") -> tuple[int, tuple[int, ...]]:
    j0, rest = mj_signature(J, reading)
    return j0, tuple(sorted(rest))


@lru_cache(maxsize=64)
def _class_representatives(n: int, reading: str) -> dict[tuple, int]:
    reps: dict[tuple, int] = {}
    for J in all_subsets(n):
        reps.setdefault(mj_class_key(J, reading), J.mask)
    return reps


def mj_representative(J: IndexSet, reading: str = "literal") -> IndexSet:
    """Lowest-bitmask set sharing J's signature up to reordering of |J_1|..|J_s|."""
    return IndexSet(J.n, _class_representatives(J.n, reading)[mj_class_key(J, reading)])


# ---------------------------------------------------------------- reports

@dataclass
class Report:
    claim: ClaimId
    n: int
    params: dict[str, Any]
    status: Status
    lhs: IntPoly | BiPoly | None = None
    rhs: IntPoly | BiPoly | None = None
    counterexample: dict[str, Any] | None = None
    elapsed: float = 0.0
    extra: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status is not Status.mismatch

    def to_dict(self, timing: bool = True) -> dict[str, Any]:
        d: dict[str, Any] = {
            "claim": self.claim.value,
            "n": self.n,
            "params": self.params,
            "status": self.status.value,
            "lhs": None if self.lhs is None else self.lhs.to_json_obj(),
            "rhs": None if self.rhs is None else self.rhs.to_json_obj(),
        }
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        for k, v in self.extra.items():
            d[k] = v.to_json_obj() if isinstance(v, (IntPoly, BiPoly)) else v
        if timing:
            d["elapsed_ms"] = round(self.elapsed * 1000, 3)
        return d


# ---------------------------------------------------------------- domains

def _set_param(n: int, params: dict) -> IndexSet:
    s = params.get("set", ())
    return s if isinstance(s, IndexSet) else IndexSet.of(n, s)


def shift_target(I: IndexSet, i: int, k: int) -> IndexSet | None:
    """(I minus {i}) plus {i+2k+1}, or None when the shift hypotheses fail."""
    n = I.n
    end = i + 2 * k
    if i < 1 or k < 0 or end + 1 > n - 1:
        return None
    if (i, end) not in components(I):
        return None
    if end + 2 in I:
        return None
    if 0 in I and i <= 2:
        return None
    return I.without(i).with_(end + 1)


def vanishing_applicable(I: IndexSet, a: int) -> bool:
    n = I.n
    if n < 3:
        return False
    d0 = 1 if 0 in I else 0
    if not 2 + d0 <= a <= n - 1:
        return False
    return all(j not in I for j in range(a - 2, a + 2))


def claim_domain(claim: ClaimId | str, n: int) -> Iterator[dict[str, Any]]:
    """All admissible parameter sets of a claim at rank n, in deterministic order."""
    claim = ClaimId(claim)
    c = ClaimId
    if claim in (c.corA_trivial, c.thmD_trivial, c.corDA_square):
        if n >= 2:
            yield {}
    elif claim in (c.thmD_01,):
        if n >= 3:
            yield {}
    elif claim is c.corD_02:
        if n >= 4:
            yield {}
    elif claim is c.thmD_singleton:
        if n >= 3:
            for i in range(n):
                yield {"i": i}
    elif claim in (c.conj_0i, c.conj_01i, c.conj_0i_square, c.conj_01i_square):
        if n >= 5:
            for i in range(3, n):
                yield {"i": i}
    elif claim is c.thmA_quotient:
        for I in all_subsets(n, 1):
            yield {"set": list(I.members)}
    elif claim in (c.thmB_quotient, c.lem_complement):
        for J in all_subsets(n):
            yield {"set": list(J.members)}
    elif claim is c.conj_MJ:
        if n >= 3:
            for J in all_subsets(n):
                yield {"set": list(J.members)}
    elif claim is c.prop_01swap:
        if n >= 2:
            for I in all_subsets(n, 2):
                yield {"set": list(I.members)}
    elif claim is c.lem_vanishing:
        for I in all_subsets(n):
            for a in range(n):
                if vanishing_applicable(I, a):
                    for v in (n, -n):
                        yield {"set": list(I.members), "a": a, "value": v}
    elif claim is c.prop_shift:
        for I in all_subsets(n):
            for lo, hi in components(I):
                if (hi - lo) % 2 == 0 and shift_target(I, lo, (hi - lo) // 2) is not None:
                    yield {"set": list(I.members), "i": lo, "k": (hi - lo) // 2}


def default_range(claim: ClaimId | str, full: bool = False) -> range:
    """Default n-range: theorems to 8, conjectures to 7 (8 with full)."""
    claim = ClaimId(claim)
    c = ClaimId
    lo = {
        c.corA_trivial: 2, c.thmD_trivial: 2, c.corDA_square: 2, c.thmD_singleton: 3,
        c.thmD_01: 3, c.corD_02: 4, c.conj_MJ: 3, c.prop_01swap: 2, c.lem_vanishing: 3,
    }.get(claim, 5 if claim.is_conjecture else 1)
    if claim in (c.conj_0i, c.conj_01i, c.conj_0i_square, c.conj_01i_square):
        lo = 5
    if claim.is_conjecture:
        hi = 8 if full else 7
    elif claim in (c.thmA_quotient, c.thmB_quotient, c.thmD_singleton, c.thmD_01, c.corD_02):
        hi = 7
    elif claim in (c.lem_complement, c.prop_01swap, c.lem_vanishing, c.prop_shift):
        hi = 6
    else:
        hi = 8
    return range(lo, hi + 1)


# ---------------------------------------------------------------- verification

def _compare(lhs, rhs) -> Status:
    return Status.verified if lhs == rhs else Status.mismatch


def verify_claim(claim: ClaimId | str, n: int, params: dict | None = None,
                 workers: int | None = None, mj_reading: str = "literal") -> Report:
    claim = ClaimId(claim)
    params = dict(params or {})
    if "set" in params:
        params["set"] = list(_set_param(n, params).members)
    t0 = time.perf_counter()
    try:
        rep = _verify(claim, n, params, workers, mj_reading)
    except OutOfRange as e:
        rep = Report(claim, n, params, Status.inapplicable, extra={"reason": str(e)})
    rep.elapsed = time.perf_counter() - t0
    return rep


def _inapplicable(msg: str):
    raise OutOfRange(msg)


def _need_i(params: dict, lo: int, hi: int) -> int:
    if "i" not in params:
        _inapplicable("parameter i is required")
    i = int(params["i"])
    if not lo <= i <= hi:
        _inapplicable(f"i must lie in [{lo}, {hi}], got {i}")
    return i


def _verify(claim: ClaimId, n: int, params: dict, workers, mj_reading) -> Report:
    c = ClaimId
    R = lambda status, lhs, rhs, **kw: Report(claim, n, params, status, lhs, rhs, **kw)  # noqa: E731
    if n < 1:
        _inapplicable("n must be positive")

    if claim is c.corA_trivial:
        lhs, rhs = signed_gf(n, A, (), workers), formula_A_trivial(n)
        return R(_compare(lhs, rhs), lhs, rhs)

    if claim is c.thmD_trivial:
        lhs, rhs = signed_gf(n, D, (), workers), formula_D_trivial(n)
        return R(_compare(lhs, rhs), lhs, rhs)

    if claim is c.corDA_square:
        if n < 2:
            _inapplicable("needs n >= 2")
        lhs, rhs = signed_gf(n, D, (), workers), signed_gf(n, A, (), workers) ** 2
        return R(_compare(lhs, rhs), lhs, rhs)

    if claim is c.thmD_singleton:
        rhs = formula_D_singleton(n)
        i = _need_i(params, 0, n - 1)
        lhs = signed_gf(n, D, [i], workers)
        whole = signed_gf(n, D, (), workers)
        status = _compare(lhs, rhs)
        extra = {}
        # the whole-group identity (1 - x^2) * quotient gf = group gf rides along
        if (1 - X2) * lhs != whole:
            status = Status.mismatch
            extra["failed"] = "whole group gf != (1 - x^2) * quotient gf"
        return R(status, lhs, rhs, extra=extra)

    if claim is c.thmD_01:
        rhs = formula_D_01(n)
        lhs = signed_gf(n, D, [0, 1], workers)
        return R(_compare(lhs, rhs), lhs, rhs)

    if claim is c.corD_02:
        rhs = formula_D_02(n)
        lhs = signed_gf(n, D, [0, 2], workers)
        return R(_compare(lhs, rhs), lhs, rhs)

    if claim in (c.conj_0i, c.conj_01i):
        if n < 5:
            _inapplicable("needs n >= 5")
        i = _need_i(params, 3, n - 1)
        mult, rhs = conjecture_formula(claim, n, i)
        I = [0, i] if claim is c.conj_0i else [0, 1, i]
        lhs = mult * signed_gf(n, D, I, workers)
        return R(_compare(lhs, rhs), lhs, rhs)

    if claim is c.conj_0i_square:
        if n < 5:
            _inapplicable("needs n >= 5")
        i = _need_i(params, 3, n - 1)
        lhs = signed_gf(n, D, [0, i], workers)
        rhs = signed_gf(n, A, [i], workers) ** 2
        return R(_compare(lhs, rhs), lhs, rhs)

    if claim is c.conj_01i_square:
        if n < 5:
            _inapplicable("needs n >= 5")
        i = _need_i(params, 3, n - 1)
        lhs = signed_gf(n, D, [0, 1, i], workers)
        rhs = one_minus_xk(4) * signed_gf(n, A, [1, i], workers) ** 2
        return R(_compare(lhs, rhs), lhs, rhs)

    if claim is c.thmA_quotient:
        I = _set_param(n, params)
        if 0 in I:
            _inapplicable("type A index sets lie in [1, n-1]")
        p = quotient_params(I, Flavor.A)
        lhs = signed_gf(n, A, I, workers)
        tower = tower_factor(2 * p.m + 2, n, 1)
        parts = [(b - a + 2) // 2 for a, b in p.components]
        return _cofactor_report(R, lhs, tower, q_multinomial(p.m, parts, 2), {"m": p.m})

    if claim is c.thmB_quotient:
        J = _set_param(n, params)
        p = quotient_params(J, Flavor.B)
        lhs = signed_gf(n, B, J, workers) * type_b_denominator(p.m)
        num = type_b_numerator(n, p.a)
        parts = [(s + 1) // 2 for s in p.other_sizes]
        return _cofactor_report(R, lhs, num, q_multinomial(p.m, parts, 2), {"m": p.m, "a": p.a})

    if claim is c.conj_MJ:
        if n < 3:
            _inapplicable("needs n >= 3")
        J = _set_param(n, params)
        gf = signed_gf(n, D, J, workers)
        tower = mj_tower(n, J, mj_reading)
        extra = {"signature": _sig_json(mj_signature(J, mj_reading)), "reading": mj_reading}
        try:
            M = extract_MJ(n, J, mj_reading, workers)
        except NotDivisible:
            return R(Status.mismatch, gf, tower, extra=extra,
                     counterexample={"set": list(J.members), "reason": "not divisible by tower"})
        extra["M_J"] = M
        rep = mj_representative(J, mj_reading)
        M_rep = extract_MJ(n, rep, mj_reading, workers)
        if M_rep != M:
            # lhs/rhs carry the two cofactors that disagree
            return R(Status.mismatch, M, M_rep, extra=extra,
                     counterexample={"set": list(J.members), "representative": list(rep.members),
                                     "reason": "M_J differs within a signature class"})
        return R(Status.verified, gf, M * tower, extra=extra)

    if claim is c.lem_complement:
        I = _set_param(n, params)
        lhs, rhs = graded_gf(n, D, I, workers), graded_gf(n, BD, I, workers)
        return R(_compare(lhs, rhs), lhs, rhs)

    if claim is c.prop_01swap:
        if n < 2:
            _inapplicable("needs n >= 2")
        I = _set_param(n, params)
        if I.mask & 0b11:
            _inapplicable("I must lie in [2, n-1]")
        lhs, rhs = graded_gf(n, D, I.with_(0), workers), graded_gf(n, D, I.with_(1), workers)
        return R(_compare(lhs, rhs), lhs, rhs)

    if claim is c.lem_vanishing:
        I = _set_param(n, params)
        if "a" not in params:
            _inapplicable("parameter a is required")
        a = int(params["a"])
        if not vanishing_applicable(I, a):
            _inapplicable(f"a={a} violates the hypotheses for I={I}")
        values = [int(params["value"])] if "value" in params else [n, -n]
        if any(abs(v) != n for v in values):
            _inapplicable(f"value must be +-{n}")
        lhs = IntPoly.zero()
        bad = None
        for v in values:
            lhs = restricted_gf(n, D, I, a, v)
            if lhs:
                bad = v
                break
        if bad is not None:
            return R(Status.mismatch, lhs, IntPoly.zero(),
                     counterexample={"set": list(I.members), "a": a, "value": bad})
        return R(Status.verified, lhs, IntPoly.zero())

    if claim is c.prop_shift:
        I = _set_param(n, params)
        if "i" not in params or "k" not in params:
            _inapplicable("parameters i and k are required")
        i, k = int(params["i"]), int(params["k"])
        It = shift_target(I, i, k)
        if It is None:
            _inapplicable(f"shift hypotheses fail for I={I}, i={i}, k={k}")
        lhs = signed_gf(n, D, I, workers)
        rhs = signed_gf(n, D, It, workers)
        both = signed_gf(n, D, I | It, workers)
        status = Status.verified if lhs == rhs == both else Status.mismatch
        extra = {"shifted": list(It.members)}
        if lhs != both:
            extra["union_gf"] = both
        return R(status, lhs, rhs, extra=extra)

    raise AssertionError(claim)


def _sig_json(sig: tuple[int, tuple[int, ...]]) -> list:
    return [sig[0], list(sig[1])]


def _cofactor_report(R, lhs: IntPoly, divisor: IntPoly, hypothesis: IntPoly, info: dict) -> Report:
    try:
        cof = exact_div(lhs, divisor)
    except NotDivisible:
        return R(Status.mismatch, lhs, divisor, extra=dict(info),
                 counterexample={"reason": "not divisible by the explicit factor"})
    extra = dict(info, cofactor=cof)
    if cof != hypothesis:
        extra["warning"] = f"cofactor differs from q-multinomial hypothesis {hypothesis}"
    return R(Status.verified, lhs, divisor * cof, extra=extra)


def verify_range(claim: ClaimId | str, ns, workers: int | None = None,
                 mj_reading: str = "literal") -> list[Report]:
    """Every admissible parameter set of the claim for each n; inapplicable n produce one record."""
    out = []
    for n in ns:
        dom = list(claim_domain(claim, n))
        if not dom:
            out.append(verify_claim(claim, n, {}, workers, mj_reading))
            continue
        for params in dom:
            out.append(verify_claim(claim, n, params, workers, mj_reading))
    return out
