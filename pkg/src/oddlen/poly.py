"""Sparse integer polynomials in one variable (x) and two variables (y, x).

Coefficients are Python ints but every result is checked against the signed
64-bit range; anything outside raises :class:`CoefficientOverflow` instead of
being carried along silently.
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1


class CoefficientOverflow(OverflowError):
    pass


class NotDivisible(ArithmeticError):
    """Raised by :func:`exact_div` when the quotient is not in Z[x]."""


def _check(c: int) -> int:
    if c < INT64_MIN or c > INT64_MAX:
        raise CoefficientOverflow(f"coefficient {c} outside signed 64-bit range")
    return c


class IntPoly:
    """Polynomial in x with integer coefficients, stored as {exponent: coeff}.

    Zero coefficients are never stored, so equality and hashing are on the
    canonical form.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[int] | None = None):
        c: dict[int, int] = {}
        if coeffs is None:
            pass
        elif isinstance(coeffs, Mapping):
            for e, v in coeffs.items():
                e = int(e)
                if e < 0:
                    raise ValueError(f"negative exponent {e}")
                v = int(v)
                if v:
                    c[e] = _check(v)
        else:
            # dense list, index = exponent
            for e, v in enumerate(coeffs):
                v = int(v)
                if v:
                    c[e] = _check(v)
        self._c = c

    @classmethod
    def _raw(cls, c: dict[int, int]) -> IntPoly:
        p = cls.__new__(cls)
        p._c = {e: _check(v) for e, v in c.items() if v}
        return p

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> IntPoly:
        return cls({exp: coeff})

    @classmethod
    def one(cls) -> IntPoly:
        return cls({0: 1})

    @classmethod
    def zero(cls) -> IntPoly:
        return cls()

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(sorted(self._c.items()))

    @property
    def degree(self) -> int | None:
        return max(self._c) if self._c else None

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPoly({0: other})
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __add__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly({0: other})
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return IntPoly._raw(c)

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly({0: other})
        return self + (-other)

    def __rsub__(self, other: int) -> IntPoly:
        return IntPoly({0: other}) - self

    def scale(self, k: int) -> IntPoly:
        return IntPoly._raw({e: v * k for e, v in self._c.items()})

    def shift(self, k: int) -> IntPoly:
        """Multiply by x**k."""
        return IntPoly._raw({e + k: v for e, v in self._c.items()})

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return self.scale(other)
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return IntPoly._raw(c)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPoly:
        if k < 0:
            raise ValueError("negative power")
        out = IntPoly.one()
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        return sum(v * x**e for e, v in self._c.items())

    def to_json_obj(self) -> dict[str, int]:
        return {str(e): v for e, v in sorted(self._c.items())}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: Mapping[str, int]) -> IntPoly:
        return cls({int(k): v for k, v in obj.items()})

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e, v in sorted(self._c.items()):
            mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
            if mono and abs(v) == 1:
                term = mono
            else:
                term = f"{abs(v)}{'*' if mono else ''}{mono}"
            sign = "-" if v < 0 else "+"
            parts.append((sign, term))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, term in parts[1:]:
            s += f" {sign} {term}"
        return s

    def __repr__(self) -> str:
        return f"IntPoly({self.to_json()})"


class BiPoly:
    """Polynomial in (y, x); keys are (y exponent, x exponent)."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | None = None):
        c: dict[tuple[int, int], int] = {}
        for (ey, ex), v in (coeffs or {}).items():
            if ey < 0 or ex < 0:
                raise ValueError(f"negative exponent {(ey, ex)}")
            v = int(v)
            if v:
                c[(int(ey), int(ex))] = _check(v)
        self._c = c

    @classmethod
    def _raw(cls, c: dict[tuple[int, int], int]) -> BiPoly:
        p = cls.__new__(cls)
        p._c = {k: _check(v) for k, v in c.items() if v}
        return p

    @classmethod
    def zero(cls) -> BiPoly:
        return cls._raw({})

    @classmethod
    def one(cls) -> BiPoly:
        return cls._raw({(0, 0): 1})

    @property
    def coeffs(self) -> dict[tuple[int, int], int]:
        return dict(sorted(self._c.items()))

    def __getitem__(self, k: tuple[int, int]) -> int:
        return self._c.get(k, 0)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __add__(self, other: BiPoly) -> BiPoly:
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return BiPoly._raw(c)

    def __neg__(self) -> BiPoly:
        return BiPoly._raw({k: -v for k, v in self._c.items()})

    def __sub__(self, other: BiPoly) -> BiPoly:
        return self + (-other)

    def scale(self, k: int) -> BiPoly:
        return BiPoly._raw({e: v * k for e, v in self._c.items()})

    def __mul__(self, other: BiPoly | int) -> BiPoly:
        if isinstance(other, int):
            return self.scale(other)
        c: dict[tuple[int, int], int] = {}
        for (a1, b1), v1 in self._c.items():
            for (a2, b2), v2 in other._c.items():
                k = (a1 + a2, b1 + b2)
                c[k] = c.get(k, 0) + v1 * v2
        return BiPoly._raw(c)

    __rmul__ = __mul__

    def specialize_y(self, y: int) -> IntPoly:
        c: dict[int, int] = {}
        for (ey, ex), v in self._c.items():
            c[ex] = c.get(ex, 0) + v * y**ey
        return IntPoly._raw(c)

    def __call__(self, y, x):
        return sum(v * y**ey * x**ex for (ey, ex), v in self._c.items())

    def to_json_obj(self) -> dict[str, int]:
        return {f"{ey},{ex}": v for (ey, ex), v in sorted(self._c.items())}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: Mapping[str, int]) -> BiPoly:
        out = {}
        for k, v in obj.items():
            ey, ex = k.split(",")
            out[(int(ey), int(ex))] = v
        return cls(out)

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for (ey, ex), v in sorted(self._c.items()):
            mono = "*".join(
                s for s in (
                    "" if ey == 0 else ("y" if ey == 1 else f"y^{ey}"),
                    "" if ex == 0 else ("x" if ex == 1 else f"x^{ex}"),
                ) if s
            )
            if not mono:
                terms.append(str(v))
            elif abs(v) == 1:
                terms.append(("-" if v < 0 else "") + mono)
            else:
                terms.append(f"{v}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"BiPoly({self.to_json()})"


def exact_div(num: IntPoly, den: IntPoly) -> IntPoly:
    """Quotient of num by den in Z[x].

    Long division eliminating the leading term each step. Raises
    :class:`NotDivisible` if a step needs a non-integer coefficient or the
    remainder is nonzero.
    """
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    r = dict(num._c)
    dd = den.degree
    lead = den[dd]
    q: dict[int, int] = {}
    while r:
        rd = max(r)
        if rd < dd:
            raise NotDivisible(f"nonzero remainder dividing {num} by {den}")
        c, rem = divmod(r[rd], lead)
        if rem:
            raise NotDivisible(f"non-integer quotient coefficient dividing {num} by {den}")
        shift = rd - dd
        q[shift] = c
        for e, v in den._c.items():
            k = e + shift
            nv = r.get(k, 0) - c * v
            if nv:
                r[k] = _check(nv)
            else:
                r.pop(k, None)
    return IntPoly._raw(q)


def divides(num: IntPoly, den: IntPoly) -> bool:
    try:
        exact_div(num, den)
    except NotDivisible:
        return False
    return True


def tower_factor(lo: int, hi: int, power: int = 1) -> IntPoly:
    """prod_{j=lo}^{hi} (1 + (-1)^(j-1) x^floor(j/2)) ** power; 1 when lo > hi."""
    out = IntPoly.one()
    for j in range(lo, hi + 1):
        sign = 1 if (j - 1) % 2 == 0 else -1
        f = IntPoly({0: 1}) + IntPoly.monomial(j // 2, sign)
        out = out * f**power
    return out


def one_minus_xk(k: int) -> IntPoly:
    return IntPoly({0: 1, k: -1}) if k else IntPoly.zero()


def q_integer(k: int, q_exponent: int = 1) -> IntPoly:
    """[k]_q = 1 + q + ... + q^(k-1) with q = x**q_exponent."""
    return IntPoly({i * q_exponent: 1 for i in range(k)})


def q_factorial(k: int, q_exponent: int = 1) -> IntPoly:
    out = IntPoly.one()
    for i in range(1, k + 1):
        out = out * q_integer(i, q_exponent)
    return out


def q_multinomial(top: int, parts: Iterable[int], q_exponent: int = 1) -> IntPoly:
    """q-multinomial [top; parts..., top - sum(parts)] with q = x**q_exponent.

    Computed as an exact quotient of q-factorials.
    """
    parts = [int(p) for p in parts]
    if top < 0 or any(p < 0 for p in parts) or sum(parts) > top:
        raise ValueError(f"invalid q-multinomial arguments top={top}, parts={parts}")
    if q_exponent < 1:
        raise ValueError("q_exponent must be positive")
    out = q_factorial(top, q_exponent)
    for p in parts + [top - sum(parts)]:
        out = exact_div(out, q_factorial(p, q_exponent))
    return out
