"""Global invariants of a rational cuspidal plane curve of degree d.

Everything here is a sum over the cusps of local data, plus the degree.
The stabilizer dimension of the curve in PGL(3) enters the virtual
dimension; it is either declared, derived from the few implication rules
known for it, or assumed to be 0 and flagged as such.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Optional, Union

from .branchdata import (
    BranchType,
    MultiplicityData,
    Semigroup,
    multiplicity_data,
    semigroup_of,
)
from .localinv import ConsistencyError, alexander_poly, c_from_q, mbar, q_poly_of, tau_es
from .numerics import IntPoly

Cusp = Union[BranchType, Semigroup]
KAPPA_VALUES = ("-inf", "0", "1", "2", "unknown")


class GenusError(ValueError):
    pass


class StabUnknown(ValueError):
    pass


class NeedsNewtonPairs(ValueError):
    """The requested quantity needs the full topological type, not just the semigroup."""


@dataclass(frozen=True)
class CurveSpec:
    degree: int
    cusps: tuple[Cusp, ...]
    stab_dim: Optional[int] = None
    kappa_bar: Optional[str] = None
    pencil: Optional[tuple[int, int]] = None

    def __post_init__(self):
        if self.degree < 3:
            raise ValueError(f"degree must be >= 3, got {self.degree}")
        if not self.cusps:
            raise ValueError("at least one cusp is required")
        if self.stab_dim is not None and not 0 <= self.stab_dim <= 6:
            raise ValueError(f"stab_dim must be in 0..6, got {self.stab_dim}")
        if self.kappa_bar is not None and self.kappa_bar not in KAPPA_VALUES:
            raise ValueError(f"kappa_bar must be one of {KAPPA_VALUES}")

    @property
    def nu(self) -> int:
        return len(self.cusps)

    def semigroups(self) -> list[Semigroup]:
        return [c if isinstance(c, Semigroup) else semigroup_of(c) for c in self.cusps]

    def branches(self) -> list[BranchType]:
        if not all(isinstance(c, BranchType) for c in self.cusps):
            raise NeedsNewtonPairs("this computation needs Newton pairs for every cusp")
        return list(self.cusps)

    def multiplicities(self) -> list[MultiplicityData]:
        return [multiplicity_data(b) for b in self.branches()]


def curve(d: int, *cusps: Cusp, **kw) -> CurveSpec:
    return CurveSpec(d, tuple(cusps), **kw)


def genus_defect(c: CurveSpec) -> int:
    """sum of 2*delta minus (d-1)(d-2); zero for a rational cuspidal curve."""
    return sum(sg.mu for sg in c.semigroups()) - (c.degree - 1) * (c.degree - 2)


def genus_check(c: CurveSpec) -> bool:
    target = (c.degree - 1) * (c.degree - 2)
    from_semigroups = sum(sg.mu for sg in c.semigroups())
    if all(isinstance(x, BranchType) for x in c.cusps):
        from_mults = sum(md.two_delta() for md in c.multiplicities())
        if from_mults != from_semigroups:
            raise ConsistencyError(
                f"sum m(m-1) = {from_mults} but semigroup 2*delta = {from_semigroups}"
            )
    return from_semigroups == target


def product_alexander(c: CurveSpec) -> tuple[IntPoly, int]:
    """(prod Delta_i, sum delta_i)."""
    delta_poly = IntPoly([1])
    total = 0
    for sg in c.semigroups():
        delta_poly = delta_poly * alexander_poly(sg).delta_poly
        total += sg.delta
    return delta_poly, total


# -- stabilizer and log Kodaira dimension hints ------------------------------

@dataclass(frozen=True)
class KappaStabHints:
    kappa_bar: str
    stab_dim: Optional[int]
    notes: tuple[str, ...]


def pencil_cusps(d: int, a: int) -> list[tuple[int, int]]:
    """One-pair cusp types of a generic member of y^d + s z^a x^(d-a)."""
    return sorted((e, d) for e in (a, d - a) if e >= 2)


def kappa_stab_hints(c: CurveSpec) -> KappaStabHints:
    notes: list[str] = []
    kappa = c.kappa_bar or "unknown"
    stab = c.stab_dim
    if kappa == "0":
        notes.append("declared kappa_bar = 0 cannot occur for a rational cuspidal curve")
    if c.nu >= 3:
        if kappa not in ("unknown", "2"):
            notes.append(f"declared kappa_bar = {kappa} contradicts nu >= 3 (forces 2)")
        kappa = "2"
        notes.append("nu >= 3 implies kappa_bar = 2")
    elif c.nu == 2 and kappa == "unknown":
        notes.append("nu = 2 implies kappa_bar in {1, 2}; not resolved")
    if c.pencil is not None:
        d, a = c.pencil
        if d != c.degree or not 0 < a < d or gcd(d, a) != 1:
            notes.append(f"pencil {c.pencil} is not a valid (d, a) with gcd 1 for degree {c.degree}")
        else:
            declared = _one_pair_types(c)
            expected = pencil_cusps(d, a)
            if declared is not None and declared != expected:
                notes.append(f"pencil ({d},{a}) has cusps {expected}, curve declares {declared}")
            pencil_kappa = "-inf" if a in (1, d - 1) else "1"
            if kappa == "unknown":
                kappa = pencil_kappa
            if stab is None:
                stab = 1
            notes.append(f"pencil member y^{d} + s z^{a} x^{d - a}: stab_dim = 1, kappa_bar = {pencil_kappa}")
    if stab is None and kappa == "2":
        stab = 0
        notes.append("kappa_bar = 2 implies stab_dim = 0")
    return KappaStabHints(kappa, stab, tuple(notes))


def _one_pair_types(c: CurveSpec) -> Optional[list[tuple[int, int]]]:
    if not all(isinstance(x, BranchType) and x.g == 1 for x in c.cusps):
        return None
    return sorted(x.newton_pairs[0] for x in c.cusps)


# -- dimensions ---------------------------------------------------------------

@dataclass(frozen=True)
class GlobalReport:
    degree: int
    stab_dim: int
    stab_assumed: bool
    tau_es: int
    sum_mbar: int
    sum_L: int
    expdim: int
    virtdim: int
    cbar_sq: int
    chi_theta: int
    orevkov_ok: bool
    virtdim_ok: bool
    identities_ok: bool
    kappa_bar: str = "unknown"
    notes: tuple[str, ...] = field(default=())


def dimensions_report(c: CurveSpec, assume_stab0: bool = False) -> GlobalReport:
    hints = kappa_stab_hints(c)
    stab = hints.stab_dim
    assumed = False
    notes = list(hints.notes)
    if stab is None:
        if not assume_stab0:
            raise StabUnknown(
                "stabilizer dimension not declared and not implied; declare it or assume 0"
            )
        stab, assumed = 0, True
        notes.append("stab_dim assumed 0")
    d = c.degree
    mds = c.multiplicities()
    tau = sum(tau_es(md) for md in mds)
    sum_mbar = sum(mbar(md) for md in mds)
    sum_L = sum(md.L for md in mds)
    expdim = d * (d + 3) // 2 - tau
    virt_9 = expdim - (8 - stab)
    virt_12 = 3 * d - 9 - sum_mbar + stab
    cbar_sq = d * d - sum(md.sum_m_sq() for md in mds)
    virt_16 = cbar_sq - 7 + sum_L + stab
    chi = -3 * (d - 3) + sum_mbar
    genus_ok = genus_check(c)
    identities_ok = virt_9 == virt_12 == virt_16 and chi + virt_12 == stab
    if genus_ok and not identities_ok:
        raise ConsistencyError(
            f"virtual dimension forms disagree: {virt_9}, {virt_12}, {virt_16}; chi = {chi}"
        )
    if not genus_ok:
        notes.append("genus condition fails; dimension identities are not expected to hold")
    if hints.kappa_bar == "2" and chi == 0:
        notes.append("chi = 0 with kappa_bar = 2: Cremona-transformable to a line")
    return GlobalReport(
        degree=d,
        stab_dim=stab,
        stab_assumed=assumed,
        tau_es=tau,
        sum_mbar=sum_mbar,
        sum_L=sum_L,
        expdim=expdim,
        virtdim=virt_12,
        cbar_sq=cbar_sq,
        chi_theta=chi,
        orevkov_ok=sum_mbar <= 3 * d - 9,
        virtdim_ok=virt_12 >= 0,
        identities_ok=identities_ok,
        kappa_bar=hints.kappa_bar,
        notes=tuple(notes),
    )


# -- Conjecture A -------------------------------------------------------------

@dataclass(frozen=True)
class ConjectureAReport:
    c: tuple[int, ...]
    n: tuple[int, ...]

    @property
    def passed(self) -> bool:
        return all(x <= 0 for x in self.n)


def c_values(c: CurveSpec) -> list[int]:
    delta_poly, delta = product_alexander(c)
    return c_from_q(q_poly_of(delta_poly, delta), c.degree)


def conjectureA_check(c: CurveSpec) -> ConjectureAReport:
    if not genus_check(c):
        raise GenusError(
            f"sum 2*delta != (d-1)(d-2) for d = {c.degree} (defect {genus_defect(c)})"
        )
    cs = c_values(c)
    n = [cl - (l + 1) * (l + 2) // 2 for l, cl in enumerate(cs)]
    if n[0] != 0 or n != n[::-1]:
        raise ConsistencyError(f"n_l not symmetric with n_0 = 0: {n}")
    return ConjectureAReport(tuple(cs), tuple(n))


# -- superisolated singularity ------------------------------------------------

@dataclass(frozen=True)
class SuperisolatedInvariants:
    d: int
    p_g: int
    k2_plus_sharp: int
    sigma_F: int


def k2_plus_sharp_surgery(d: int) -> int:
    return 1 - d * (d - 2) ** 2


def k2_plus_sharp_brieskorn(d: int) -> int:
    return -d * (d - 1) * (d - 3)


def geometric_genus(d: int) -> int:
    return d * (d - 1) * (d - 2) // 6


def superisolated_invariants(d: int) -> SuperisolatedInvariants:
    if d < 3:
        raise ValueError("d must be >= 3")
    pg = geometric_genus(d)
    k2 = k2_plus_sharp_surgery(d)
    return SuperisolatedInvariants(d, pg, k2, -8 * pg - k2)
