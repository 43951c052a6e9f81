"""Semigroup distribution property of a unicuspidal degree-d curve.

Three polynomials are computed independently and compared:

* ``D`` counts semigroup elements in the intervals ((l-1)d, ld];
* ``N`` collects the defects n_l = c_l - (l+1)(l+2)/2;
* ``R`` is the root-of-unity average of Delta(t)/(1-t)^2, which picks out
  the exponents divisible by d of that series, minus the matching series
  of the Brieskorn model.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .branchdata import Semigroup
from .curvecheck import geometric_genus, k2_plus_sharp_surgery
from .localinv import ConsistencyError, alexander_poly, c_profile
from .numerics import IntPoly, one_minus_t_power, series_quotient_coeffs


class GenusWarning(UserWarning):
    pass


@dataclass(frozen=True)
class IntervalRow:
    l: int
    count: int
    expected: int


def _scan_bound(sg: Semigroup, d: int) -> int:
    return max(d, -(-sg.conductor // d) + 1)


def _warn_genus(sg: Semigroup, d: int) -> bool:
    ok = sg.mu == (d - 1) * (d - 2)
    if not ok:
        warnings.warn(
            f"2*delta = {sg.mu} but (d-1)(d-2) = {(d - 1) * (d - 2)}", GenusWarning, stacklevel=3
        )
    return ok


def interval_table(sg: Semigroup, d: int) -> list[IntervalRow]:
    """Row l = 0 is the bucket {0}; row l >= 1 is ((l-1)d, ld]."""
    rows = [IntervalRow(0, 1, 1)]
    for l in range(1, _scan_bound(sg, d) + 1):
        count = sg.count_upto(l * d) - sg.count_upto((l - 1) * d)
        rows.append(IntervalRow(l, count, min(l + 1, d)))
    return rows


def d_poly(sg: Semigroup, d: int) -> tuple[IntPoly, list[IntervalRow]]:
    if d < 3:
        raise ValueError("d must be >= 3")
    _warn_genus(sg, d)
    rows = interval_table(sg, d)
    return IntPoly([r.count - r.expected for r in rows]), rows


def n_poly(sg: Semigroup, d: int) -> IntPoly:
    """sum_l n_l t^{d-3-l}."""
    if d < 3:
        raise ValueError("d must be >= 3")
    cs = c_profile(sg, d)
    return IntPoly.from_terms({d - 3 - l: cl - (l + 1) * (l + 2) // 2 for l, cl in enumerate(cs)})


def r_poly(sg: Semigroup, d: int) -> IntPoly:
    """R(t), computed from the series Delta(t)/(1-t)^2 restricted to exponents in dZ."""
    if d < 3:
        raise ValueError("d must be >= 3")
    delta_poly = alexander_poly(sg).delta_poly
    top = max(2 * d, -(-delta_poly.degree // d) + 2)
    one_minus_t = IntPoly([1, -1])
    b = series_quotient_coeffs(delta_poly, one_minus_t * one_minus_t, top * d)
    u = series_quotient_coeffs(one_minus_t_power(d), one_minus_t ** 3, top)
    coeffs = {l * d: b[l * d] - u[l] for l in range(top + 1)}
    # R = N(t^d) has degree <= d(d-3); anything beyond is a broken input
    tail = {k: v for k, v in coeffs.items() if k > d * (d - 3) and v}
    if tail:
        raise ConsistencyError(f"R(t) has nonzero tail {tail}; genus condition likely fails")
    return IntPoly.from_terms(coeffs)


@dataclass(frozen=True)
class DistributionReport:
    d: int
    d_poly: IntPoly
    n_poly: IntPoly
    r_poly: Optional[IntPoly]
    interval_table: tuple[IntervalRow, ...]
    genus_ok: bool
    chain_ok: Optional[bool] = None
    r_at_one_ok: Optional[bool] = None

    @property
    def dp_holds(self) -> bool:
        return self.d_poly.is_zero()

    def failing_intervals(self) -> list[IntervalRow]:
        return [r for r in self.interval_table if r.count != r.expected]


def verify_identities(sg: Semigroup, d: int, sw: Fraction) -> tuple[bool, bool]:
    """R = D(t^d)/(1-t^d) = N(t^d) and R(1) = sw - (K^2+#)/8 - p_g."""
    dp, _ = d_poly(sg, d)
    try:
        from_d = dp.substitute_power(d).exact_div(one_minus_t_power(d))
    except ArithmeticError:
        return False, False
    try:
        r = r_poly(sg, d)
    except ConsistencyError:
        return False, False
    n_sub = n_poly(sg, d).substitute_power(d)
    chain = r == from_d == n_sub
    r_at_1 = sum(r.coeffs)
    r_at_one = r_at_1 == sw - Fraction(k2_plus_sharp_surgery(d), 8) - geometric_genus(d)
    return chain, r_at_one


def distribution_report(sg: Semigroup, d: int, sw: Optional[Fraction] = None) -> DistributionReport:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", GenusWarning)
        dp, rows = d_poly(sg, d)
    genus_ok = sg.mu == (d - 1) * (d - 2)
    r = None
    chain = r_at_one = None
    if genus_ok:
        r = r_poly(sg, d)
        if sw is not None:
            chain, r_at_one = verify_identities(sg, d, sw)
    return DistributionReport(
        d=d,
        d_poly=dp,
        n_poly=n_poly(sg, d),
        r_poly=r,
        interval_table=tuple(rows),
        genus_ok=genus_ok,
        chain_ok=chain,
        r_at_one_ok=r_at_one,
    )
