"""Graded roots built from tau functions, and the graded ranks of H(R, chi).

A tau function on {0..r} yields the merge tree of its sublevel sets on the
path graph: the vertices at level n are the connected components of
{i : tau(i) <= n}, and each one is joined to the component containing it
one level up.  Above ``stem_top`` the root is a single infinite chain,
which we keep only as a marker.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .branchdata import Semigroup
from .curvecheck import k2_plus_sharp_brieskorn, k2_plus_sharp_surgery
from .localinv import c_profile


@dataclass(frozen=True)
class TauFunction:
    values: tuple[int, ...]

    def __post_init__(self):
        if not self.values:
            raise ValueError("tau needs at least one value")

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def drops(self) -> list[int]:
        """tau(2l+1) - tau(2l+2) for every l with 2l+2 in range."""
        v = self.values
        return [v[2 * l + 1] - v[2 * l + 2] for l in range((len(v) - 1) // 2)]


def _tau_from_c(d: int, delta: int, cs: Sequence[int]) -> TauFunction:
    r = 2 * d - 4
    vals = [0] * (r + 1)
    for l in range(d - 1):
        vals[2 * l] = l * (l - 1) // 2 * d - l * (delta - 1)
    for l in range(d - 2):
        vals[2 * l + 1] = vals[2 * l + 2] + cs[d - 3 - l]
    return TauFunction(tuple(vals))


def tau_surgery(sg: Semigroup, d: int) -> TauFunction:
    """tau for S^3_{-d}(K), K the link of the cusp with semigroup ``sg``."""
    if d < 3:
        raise ValueError("d must be >= 3")
    if sg.mu != (d - 1) * (d - 2):
        raise ValueError(f"2*delta = {sg.mu} != (d-1)(d-2) = {(d - 1) * (d - 2)}")
    return _tau_from_c(d, sg.delta, c_profile(sg, d))


def tau_brieskorn(d: int) -> TauFunction:
    """tau for Sigma(d, d, d+1)."""
    if d < 3:
        raise ValueError("d must be >= 3")
    delta = (d - 1) * (d - 2) // 2
    return _tau_from_c(d, delta, [(l + 1) * (l + 2) // 2 for l in range(d - 2)])


def tau_for(kind: str, d: int, sg: Optional[Semigroup] = None) -> TauFunction:
    if kind == "surgery":
        if sg is None:
            raise ValueError("surgery needs a semigroup")
        return tau_surgery(sg, d)
    if kind == "brieskorn":
        return tau_brieskorn(d)
    raise ValueError(f"unknown manifold kind {kind!r}")


@dataclass(frozen=True)
class Vertex:
    level: int
    lo: int
    hi: int


@dataclass
class GradedRoot:
    """Finite part of a graded root, levels min_level..stem_top inclusive."""

    levels: dict[int, list[Vertex]]
    parent: dict[Vertex, Vertex]
    stem_top: int
    min_level: int
    _canon: Optional[tuple] = field(default=None, repr=False, compare=False)

    def vertices(self) -> Iterator[Vertex]:
        for n in sorted(self.levels):
            yield from self.levels[n]

    def children(self, v: Vertex) -> list[Vertex]:
        return [w for w in self.levels.get(v.level - 1, []) if self.parent[w] == v]

    def count_at(self, n: int) -> int:
        if n < self.min_level:
            return 0
        if n >= self.stem_top:
            return 1
        return len(self.levels[n])

    @property
    def top(self) -> Vertex:
        return self.levels[self.stem_top][0]

    def canonical(self) -> tuple:
        if self._canon is None:
            memo: dict[Vertex, tuple] = {}
            for n in range(self.min_level, self.stem_top + 1):
                for v in self.levels[n]:
                    memo[v] = tuple(sorted(memo[w] for w in self.children(v)))
            self._canon = (self.stem_top, memo[self.top])
        return self._canon

    def adjacency_view(self) -> dict[int, list[tuple[Vertex, Optional[Vertex]]]]:
        """level -> [(vertex, parent or None at the stem top)], top level first."""
        return {
            n: [(v, self.parent.get(v)) for v in self.levels[n]]
            for n in sorted(self.levels, reverse=True)
        }

    def check_structure(self) -> list[str]:
        """Violations of the graded-root axioms on the stored part (empty if fine)."""
        problems = []
        for v, w in self.parent.items():
            if w.level - v.level != 1:
                problems.append(f"edge {v}->{w} changes level by {w.level - v.level}")
            if not (w.lo <= v.lo and v.hi <= w.hi):
                problems.append(f"{v} not contained in parent {w}")
        for n, vs in self.levels.items():
            if not vs:
                problems.append(f"empty level {n}")
            if n < self.stem_top:
                for v in vs:
                    if v not in self.parent:
                        problems.append(f"{v} has no parent")
        if len(self.levels.get(self.stem_top, [])) != 1:
            problems.append("stem top is not a single vertex")
        if self.top in self.parent:
            problems.append("stem top has a stored parent")
        return problems


def _components(tau: Sequence[int], n: int) -> list[tuple[int, int]]:
    out = []
    start = None
    for i, x in enumerate(tau):
        if x <= n:
            if start is None:
                start = i
        elif start is not None:
            out.append((start, i - 1))
            start = None
    if start is not None:
        out.append((start, len(tau) - 1))
    return out


def root_from_tau(tau: TauFunction | Sequence[int]) -> GradedRoot:
    vals = tau.values if isinstance(tau, TauFunction) else tuple(tau)
    lo, hi = min(vals), max(vals)
    comps = {n: _components(vals, n) for n in range(lo, hi + 1)}
    stem_top = hi
    while stem_top > lo and len(comps[stem_top - 1]) == 1:
        stem_top -= 1
    levels = {n: [Vertex(n, a, b) for a, b in comps[n]] for n in range(lo, stem_top + 1)}
    parent: dict[Vertex, Vertex] = {}
    for n in range(lo, stem_top):
        ups = levels[n + 1]
        for v in levels[n]:
            parent[v] = next(w for w in ups if w.lo <= v.lo and v.hi <= w.hi)
    return GradedRoot(levels, parent, stem_top, lo)


def roots_isomorphic(a: GradedRoot, b: GradedRoot) -> bool:
    return a.canonical() == b.canonical()


def components_below(root: GradedRoot, n: int) -> int:
    """Connected components of the subgraph on {v : chi(v) <= n} (stem included)."""
    if n < root.min_level:
        return 0
    if n > root.stem_top:
        return 1
    verts = [v for v in root.vertices() if v.level <= n]
    index = {v: i for i, v in enumerate(verts)}
    up = list(range(len(verts)))

    def find(i: int) -> int:
        while up[i] != i:
            up[i] = up[up[i]]
            i = up[i]
        return i

    for v in verts:
        w = root.parent.get(v)
        if w is not None and w.level <= n:
            up[find(index[v])] = find(index[w])
    return len({find(i) for i in range(len(verts))})


@dataclass(frozen=True)
class HFRanks:
    shift: Fraction
    ranks: dict[int, int]

    def shifted(self) -> dict[Fraction, int]:
        """Ranks indexed by the shifted degree h + shift."""
        return {h + self.shift: r for h, r in self.ranks.items()}


def hplus_ranks(
    root: GradedRoot, h_min: int, h_max: int, k2_plus_sharp: Optional[int] = None
) -> HFRanks:
    """Rank of the degree-h part of H(R, chi) for h_min <= h <= h_max."""
    ranks = {}
    for h in range(h_min, h_max + 1):
        ranks[h] = 0 if h % 2 else components_below(root, h // 2)
    shift = Fraction(-k2_plus_sharp, 4) if k2_plus_sharp is not None else Fraction(0)
    return HFRanks(shift, ranks)


def sw_from_root(tau: TauFunction, k2_plus_sharp: int) -> Fraction:
    """sw = (K^2 + #)/8 + sum_l (tau(2l+1) - tau(2l+2))."""
    return Fraction(k2_plus_sharp, 8) + sum(tau.drops())


def hf_match_after_shift(d: int, sg: Semigroup, span: int = 0) -> bool:
    """Compare shifted HF ranks of -S^3_{-d}(K) and -Sigma(d,d,d+1), after
    undoing each manifold's own grading shift."""
    ra = root_from_tau(tau_surgery(sg, d))
    rb = root_from_tau(tau_brieskorn(d))
    lo = 2 * min(ra.min_level, rb.min_level) - 2
    hi = 2 * max(ra.stem_top, rb.stem_top) + 2 + span
    ha = hplus_ranks(ra, lo, hi, k2_plus_sharp_surgery(d))
    hb = hplus_ranks(rb, lo, hi, k2_plus_sharp_brieskorn(d))
    a = {deg - ha.shift: r for deg, r in ha.shifted().items()}
    b = {deg - hb.shift: r for deg, r in hb.shifted().items()}
    return a == b
