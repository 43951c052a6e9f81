"""Exact integer polynomials and truncated power series.

Rationals are plain :class:`fractions.Fraction` values; ``Rat`` is exported
as an alias so the rest of the package can name them.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest
from typing import Iterable

Rat = Fraction


class DivisionError(ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


class SeriesError(ArithmeticError):
    """Denominator is not invertible as an integer power series."""


class IntPoly:
    """Dense polynomial with integer coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> IntPoly:
        if not terms:
            return cls()
        out = [0] * (max(terms) + 1)
        for k, c in terms.items():
            out[k] += c
        return cls(out)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' + mono if mono else ''}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other) -> IntPoly:
        other = _coerce(other)
        return IntPoly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __sub__(self, other) -> IntPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other) -> IntPoly:
        return _coerce(other) - self

    def __mul__(self, other) -> IntPoly:
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> IntPoly:
        if n < 0:
            raise ValueError("negative power")
        result = IntPoly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: IntPoly) -> tuple[IntPoly, IntPoly]:
        """Long division; the divisor must have leading coefficient +-1
        unless every step divides exactly."""
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        dq = other.degree
        if len(rem) <= dq:
            return IntPoly(), IntPoly(rem)
        quot = [0] * (len(rem) - dq)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q, r = divmod(c, lead)
            if r:
                raise DivisionError(f"non-integral quotient coefficient at t^{k - dq}")
            quot[k - dq] = q
            for j, b in enumerate(other.coeffs):
                rem[k - dq + j] -= q * b
        return IntPoly(quot), IntPoly(rem)

    def exact_div(self, other: IntPoly) -> IntPoly:
        q, r = self.divmod(other)
        if not r.is_zero():
            raise DivisionError(f"nonzero remainder {r}")
        return q

    def __call__(self, x):
        """Horner evaluation at any ring element (int, Fraction, complex...)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> IntPoly:
        return IntPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def substitute_power(self, m: int) -> IntPoly:
        """p(t^m)."""
        if m < 1:
            raise ValueError("m must be positive")
        return IntPoly.from_terms({k * m: c for k, c in enumerate(self.coeffs) if c})


def _coerce(x) -> IntPoly:
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly([x])
    raise TypeError(f"cannot use {type(x).__name__} as IntPoly")


def poly_arith(p: IntPoly, q: IntPoly, op: str) -> IntPoly:
    """Dispatch ``add``, ``sub``, ``mul`` or ``exact_div``."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "exact_div":
        return p.exact_div(q)
    raise ValueError(f"unknown op {op!r}")


def series_quotient_coeffs(num: IntPoly, den: IntPoly, upto: int) -> list[int]:
    """Coefficients 0..upto of the power series num/den over the integers."""
    d0 = den[0]
    if d0 not in (1, -1):
        raise SeriesError(f"constant term {d0} is not a unit")
    out: list[int] = []
    dc = den.coeffs
    for k in range(upto + 1):
        acc = num[k]
        for j in range(1, min(k, len(dc) - 1) + 1):
            acc -= dc[j] * out[k - j]
        out.append(acc * d0)  # d0 is its own inverse
    return out


def one_minus_t_power(k: int) -> IntPoly:
    """1 - t^k."""
    return IntPoly([1]) - IntPoly.monomial(k)
