"""Per-cusp invariants: Alexander polynomial, c_l profile, tau^es, M-bar, spectrum."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .branchdata import BranchType, MultiplicityData, Semigroup, semigroup_of
from .numerics import IntPoly


class ConsistencyError(AssertionError):
    """Two independent routes to the same invariant disagree."""


@dataclass(frozen=True)
class AlexanderData:
    delta: int
    delta_poly: IntPoly
    gap_poly: IntPoly
    q_poly: IntPoly


def q_poly_of(delta_poly: IntPoly, delta: int) -> IntPoly:
    """Q with Delta = 1 + (t-1)*delta + (t-1)^2 * Q."""
    t_minus_1 = IntPoly([-1, 1])
    rest = delta_poly - 1 - t_minus_1 * delta
    try:
        return rest.exact_div(t_minus_1 * t_minus_1)
    except ArithmeticError as exc:
        raise ConsistencyError(f"Delta - 1 - (t-1)delta not divisible by (t-1)^2: {exc}")


def alexander_poly(sg: Semigroup) -> AlexanderData:
    c = sg.conductor
    members = IntPoly([1 if k in sg else 0 for k in range(c)])
    delta_poly = IntPoly([1, -1]) * members + IntPoly.monomial(c)
    gap_poly = IntPoly.from_terms({k: 1 for k in sg.gap_set})
    try:
        q = (gap_poly - sg.delta).exact_div(IntPoly([-1, 1]))
    except ArithmeticError as exc:
        raise ConsistencyError(f"(P - delta)/(t - 1) is not exact: {exc}")
    return AlexanderData(sg.delta, delta_poly, gap_poly, q)


def c_from_q(q_poly: IntPoly, d: int) -> list[int]:
    """c_l = coefficient of t^{(d-3-l)d} in Q, l = 0..d-3."""
    return [q_poly[(d - 3 - l) * d] for l in range(d - 2)]


def c_profile(sg: Semigroup, d: int) -> list[int]:
    """c_0..c_{d-3} for a single branch, by counting; cross-checked against
    the Q coefficients when 2*delta = (d-1)(d-2), the only case where the
    two agree (the identity runs through the symmetry of the semigroup)."""
    if d < 3:
        raise ValueError("d must be >= 3")
    counted = [sg.count_upto(l * d) for l in range(d - 2)]
    if sg.mu != (d - 1) * (d - 2):
        return counted
    from_q = c_from_q(alexander_poly(sg).q_poly, d)
    if counted != from_q:
        raise ConsistencyError(f"c_l by counting {counted} != from Q {from_q}")
    return counted


def tau_es(md: MultiplicityData) -> int:
    """Codimension of the equisingular stratum (Wall's formula, both printed forms)."""
    first = sum((m - 1) * (m + 2) // 2 * c for m, c in md.sequence) + md.omega - 1
    second = sum(m * (m + 1) // 2 * c for m, c in md.sequence) - md.L
    if first != second:
        raise ConsistencyError(f"tau^es forms disagree: {first} vs {second}")
    return second


def mbar(md: MultiplicityData) -> int:
    first = sum((m - 1) * c for m, c in md.sequence) + md.omega - 1
    second = md.sum_m() - md.L
    if first != second:
        raise ConsistencyError(f"M-bar forms disagree: {first} vs {second}")
    delta = md.two_delta() // 2
    if tau_es(md) - delta != second:
        raise ConsistencyError("M-bar != tau^es - delta")
    return second


@dataclass(frozen=True)
class LocalInvariants:
    tau_es: int
    mbar: int
    delta: int
    mu: int


def local_invariants(md: MultiplicityData) -> LocalInvariants:
    delta = md.two_delta() // 2
    return LocalInvariants(tau_es(md), mbar(md), delta, 2 * delta)


@dataclass(frozen=True)
class Spectrum:
    """Spectral numbers in (0, 1), sorted, with multiplicity."""

    values: tuple[Fraction, ...]

    def __len__(self) -> int:
        return len(self.values)

    def count_below(self, x: Fraction) -> int:
        return sum(1 for a in self.values if a < x)


def spectrum(b: BranchType) -> Spectrum:
    out: list[Fraction] = []
    for k, ((p, _), a) in enumerate(zip(b.newton_pairs, b.splice_decorations), start=1):
        tail = b.tail_product(k)
        for i in range(1, a):
            for j in range(1, p):
                base = Fraction(i, a) + Fraction(j, p)
                if base >= 1:
                    break
                out.extend((base + t) / tail for t in range(tail))
    values = tuple(sorted(out))
    delta = semigroup_of(b).delta
    if len(values) != delta:
        raise ConsistencyError(f"spectrum has {len(values)} values, delta = {delta}")
    return Spectrum(values)


@dataclass(frozen=True)
class SemicontinuityRow:
    l: int
    count: int
    bound: int

    @property
    def passed(self) -> bool:
        return self.count <= self.bound

    @property
    def excess(self) -> int:
        return self.count - self.bound


def semicontinuity_check(b: BranchType, d: int) -> list[SemicontinuityRow]:
    """#{alpha < l/d} <= (l-2)(l-1)/2 for l = 2..d-1."""
    if d < 3:
        raise ValueError("d must be >= 3")
    sp = spectrum(b)
    return [
        SemicontinuityRow(l, sp.count_below(Fraction(l, d)), (l - 2) * (l - 1) // 2)
        for l in range(2, d)
    ]


def failing_levels(rows: Sequence[SemicontinuityRow]) -> list[int]:
    return [r.l for r in rows if not r.passed]
