"""Candidate enumeration and the full filter pipeline for unicuspidal data."""
from __future__ import annotations

import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd, isqrt
from typing import Optional

from .branchdata import BranchType, one_pair, semigroup_of
from .curvecheck import CurveSpec, conjectureA_check, dimensions_report, genus_check
from .localinv import semicontinuity_check
from .numerics import IntPoly
from .semidist import GenusWarning, d_poly


@lru_cache(maxsize=None)
def fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def classification_tags(d: int, a: int, b: int) -> list[str]:
    """Cases of the one-Puiseux-pair realizability list that (d, a, b) matches."""
    tags = []
    if (a, b) == (d - 1, d):
        tags.append("a")
    if d % 2 == 0 and (a, b) == (d // 2, 2 * d - 1):
        tags.append("b")
    phi = fibonacci
    j = 5
    while phi(j - 2) <= max(a, d):
        if j % 2 == 1:
            if (a, b) == (phi(j - 2) ** 2, phi(j) ** 2) and d == phi(j - 1) ** 2 + 1:
                assert d == phi(j - 2) * phi(j)
                tags.append("c")
            if (a, b) == (phi(j - 2), phi(j + 2)) and d == phi(j):
                tags.append("d")
        j += 1
    if (d, a, b) == (phi(6), phi(4), phi(8) + 1):
        tags.append("e")
    if (d, a, b) == (2 * phi(6), 2 * phi(4), 2 * phi(8) + 1):
        tags.append("f")
    return tags


def listed_triples(d_max: int) -> list[tuple[int, int, int]]:
    """Every (d, a, b) of the realizability list with 3 <= d <= d_max."""
    out = set()
    for d in range(3, d_max + 1):
        out.add((d, d - 1, d))
        if d % 2 == 0:
            out.add((d, d // 2, 2 * d - 1))
    j = 5
    while fibonacci(j) <= d_max or fibonacci(j - 1) ** 2 + 1 <= d_max:
        if j % 2 == 1:
            d = fibonacci(j - 1) ** 2 + 1
            if d <= d_max:
                out.add((d, fibonacci(j - 2) ** 2, fibonacci(j) ** 2))
            if fibonacci(j) <= d_max:
                out.add((fibonacci(j), fibonacci(j - 2), fibonacci(j + 2)))
        j += 1
    for d, a, b in ((8, 3, 22), (16, 6, 43)):
        if d <= d_max:
            out.add((d, a, b))
    return sorted(out)


@dataclass(frozen=True)
class CandidateVerdict:
    d: int
    newton_pairs: tuple[tuple[int, int], ...]
    genus_ok: bool
    dp_holds: bool
    d_poly: IntPoly
    semicontinuity_ok: bool
    semicontinuity_failures: tuple[tuple[int, int, int], ...]  # (l, count, bound)
    virtdim: Optional[int]
    virtdim_nonneg: Optional[bool]
    stab_dim: Optional[int]
    stab_assumed: bool
    conjA_ok: Optional[bool]
    n_values: tuple[int, ...]
    tags: tuple[str, ...]
    notes: tuple[str, ...] = field(default=())

    @property
    def tag(self) -> str:
        return ",".join(self.tags) if self.tags else "unlisted"

    @property
    def refuted(self) -> bool:
        return not (self.genus_ok and self.dp_holds and self.semicontinuity_ok) or (
            self.virtdim_nonneg is False
        )

    @property
    def surplus(self) -> bool:
        """Passes the distribution property yet is not on the realizability list."""
        return self.genus_ok and self.dp_holds and not self.tags


def candidate_pipeline(c: CurveSpec) -> CandidateVerdict:
    if c.nu != 1 or not isinstance(c.cusps[0], BranchType):
        raise ValueError("the pipeline needs exactly one cusp given by Newton pairs")
    b: BranchType = c.cusps[0]
    d = c.degree
    notes: list[str] = []
    sg = semigroup_of(b)
    genus = genus_check(c)
    if not genus:
        notes.append("genus condition fails")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", GenusWarning)
        dp, _ = d_poly(sg, d)
    rows = semicontinuity_check(b, d)
    fails = tuple((r.l, r.count, r.bound) for r in rows if not r.passed)
    tags: tuple[str, ...] = ()
    if b.g == 1:
        p, q = b.newton_pairs[0]
        tags = tuple(classification_tags(d, p, q))
    spec = c
    if spec.stab_dim is None and spec.pencil is None and "a" in tags:
        # the list realizes case (a) by a member of the pencil y^d + s z^(d-1) x
        spec = CurveSpec(d, c.cusps, kappa_bar=c.kappa_bar, pencil=(d, d - 1))
        notes.append("stab_dim from the pencil realization of case (a)")
    virtdim = virt_ok = stab = None
    assumed = False
    conj_ok = None
    n_values: tuple[int, ...] = ()
    if genus:
        rep = dimensions_report(spec, assume_stab0=True)
        virtdim, virt_ok, stab, assumed = rep.virtdim, rep.virtdim_ok, rep.stab_dim, rep.stab_assumed
        ca = conjectureA_check(c)
        conj_ok, n_values = ca.passed, ca.n
    return CandidateVerdict(
        d=d,
        newton_pairs=b.newton_pairs,
        genus_ok=genus,
        dp_holds=dp.is_zero(),
        d_poly=dp,
        semicontinuity_ok=not fails,
        semicontinuity_failures=fails,
        virtdim=virtdim,
        virtdim_nonneg=virt_ok,
        stab_dim=stab,
        stab_assumed=assumed,
        conjA_ok=conj_ok,
        n_values=n_values,
        tags=tags,
        notes=tuple(notes),
    )


def one_pair_triples(d: int) -> list[tuple[int, int]]:
    """(a, b) with 1 < a < b, gcd 1 and (a-1)(b-1) = (d-1)(d-2), sorted by a."""
    n = (d - 1) * (d - 2)
    out = []
    for x in range(1, isqrt(n) + 1):
        if n % x:
            continue
        for a1 in {x, n // x}:
            a, b = a1 + 1, n // a1 + 1
            if a < b and gcd(a, b) == 1:
                out.append((a, b))
    return sorted(out)


def _verdicts_for_degree(d: int) -> list[CandidateVerdict]:
    return [candidate_pipeline(CurveSpec(d, (one_pair(a, b),))) for a, b in one_pair_triples(d)]


def enumerate_one_pair(d_max: int, workers: int = 1) -> list[CandidateVerdict]:
    if d_max < 3:
        raise ValueError("d_max must be >= 3")
    degrees = range(3, d_max + 1)
    if workers <= 1:
        chunks = map(_verdicts_for_degree, degrees)
        return [v for chunk in chunks for v in chunk]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        chunks = pool.map(_verdicts_for_degree, degrees)
        return [v for chunk in chunks for v in chunk]


def counterexample_curve() -> CurveSpec:
    """Degree 17 with Newton pairs (2,7),(4,17): passes DP, fails semicontinuity."""
    from .branchdata import branch_from_newton_pairs

    return CurveSpec(17, (branch_from_newton_pairs([(2, 7), (4, 17)]),))
