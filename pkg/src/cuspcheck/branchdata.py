"""Topological type of a single cusp and the data derived from it.

A branch is given by its Newton pairs ``(p_k, q_k)``.  From these we build
the splice-diagram weights ``a_k``, the semigroup of the branch, and its
multiplicity sequence along the minimal good embedded resolution together
with the free/satellite classification of the blown-up centres.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd, prod
from typing import Iterable, Sequence


class InvalidBranch(ValueError):
    pass


class InvalidSemigroup(ValueError):
    pass


@dataclass(frozen=True)
class BranchType:
    newton_pairs: tuple[tuple[int, int], ...]
    splice_decorations: tuple[int, ...]

    @property
    def g(self) -> int:
        return len(self.newton_pairs)

    @property
    def p(self) -> tuple[int, ...]:
        return tuple(pk for pk, _ in self.newton_pairs)

    def tail_product(self, k: int) -> int:
        """p_{k+1} * ... * p_g for 1-based k."""
        return prod(self.p[k:])

    def __str__(self) -> str:
        return "[" + ", ".join(f"({p},{q})" for p, q in self.newton_pairs) + "]"


def branch_from_newton_pairs(pairs: Iterable[Sequence[int]]) -> BranchType:
    pairs = tuple((int(p), int(q)) for p, q in pairs)
    if not pairs:
        raise InvalidBranch("at least one Newton pair is required")
    for k, (p, q) in enumerate(pairs, start=1):
        if p < 2:
            raise InvalidBranch(f"pair {k}: p={p} must be >= 2")
        if q < 1:
            raise InvalidBranch(f"pair {k}: q={q} must be >= 1")
        if gcd(p, q) != 1:
            raise InvalidBranch(f"pair {k}: gcd({p},{q}) != 1")
    if pairs[0][1] <= pairs[0][0]:
        raise InvalidBranch(f"first pair needs q_1 > p_1, got {pairs[0]}")
    a = [pairs[0][1]]
    for k in range(1, len(pairs)):
        p, q = pairs[k]
        a.append(q + p * pairs[k - 1][0] * a[-1])
    return BranchType(pairs, tuple(a))


def one_pair(a: int, b: int) -> BranchType:
    """Branch with the single Puiseux pair (a, b), i.e. the torus knot T(a,b)."""
    return branch_from_newton_pairs([(a, b)])


@dataclass(frozen=True)
class Semigroup:
    """Numerical semigroup stored as a membership table up to the conductor.

    Membership at or above ``conductor`` is answered without storage.
    """

    generators: tuple[int, ...]
    conductor: int
    members_below: tuple[bool, ...] = field(repr=False)

    @cached_property
    def gap_set(self) -> tuple[int, ...]:
        return tuple(k for k, m in enumerate(self.members_below) if not m)

    @property
    def delta(self) -> int:
        return len(self.gap_set)

    @property
    def mu(self) -> int:
        return 2 * self.delta

    def __contains__(self, k: int) -> bool:
        if k < 0:
            return False
        if k >= self.conductor:
            return True
        return self.members_below[k]

    def elements_upto(self, n: int) -> list[int]:
        """Sorted members k with k <= n."""
        return [k for k in range(n + 1) if k in self]

    def count_upto(self, n: int) -> int:
        if n < 0:
            return 0
        if n < self.conductor:
            return sum(self.members_below[: n + 1])
        return self.conductor - self.delta + (n - self.conductor + 1)

    def is_symmetric(self) -> bool:
        mu = self.mu
        return all((k in self) != ((mu - 1 - k) in self) for k in range(mu))


def semigroup_from_generators(gens: Iterable[int]) -> Semigroup:
    """Semigroup generated by ``gens``; they must have gcd 1."""
    gens = tuple(sorted(set(int(x) for x in gens)))
    if not gens or gens[0] < 1:
        raise InvalidSemigroup("generators must be positive integers")
    g = 0
    for x in gens:
        g = gcd(g, x)
    if g != 1:
        raise InvalidSemigroup(f"generators {gens} have gcd {g}; complement is infinite")
    m = gens[0]
    # Apery-set bound: every integer >= the largest Apery element - m + 1 is a member
    apery = _apery_set(gens)
    frobenius = max(apery) - m
    conductor = frobenius + 1
    members = [False] * conductor
    for k in range(conductor):
        members[k] = k >= apery[k % m]
    return Semigroup(_minimal_generators(gens), conductor, tuple(members))


def _apery_set(gens: tuple[int, ...]) -> list[int]:
    """Smallest member in each residue class mod min(gens) (Dijkstra on residues)."""
    import heapq

    m = gens[0]
    dist = [None] * m
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        w, r = heapq.heappop(heap)
        if w != dist[r]:
            continue
        for g in gens[1:]:
            nw, nr = w + g, (r + g) % m
            if dist[nr] is None or nw < dist[nr]:
                dist[nr] = nw
                heapq.heappush(heap, (nw, nr))
    return dist


def _minimal_generators(gens: tuple[int, ...]) -> tuple[int, ...]:
    top = gens[-1]
    reach = [False] * (top + 1)
    reach[0] = True
    minimal: list[int] = []
    for x in gens:
        if reach[x]:
            continue
        minimal.append(x)
        for k in range(x, top + 1):
            reach[k] = reach[k] or reach[k - x]
    return tuple(minimal)


def semigroup_generators(b: BranchType) -> tuple[int, ...]:
    """beta_0 = p_1...p_g and beta_k = a_k * p_{k+1}...p_g."""
    return (b.tail_product(0),) + tuple(
        a * b.tail_product(k) for k, a in enumerate(b.splice_decorations, start=1)
    )


def semigroup_of(b: BranchType) -> Semigroup:
    gens = semigroup_generators(b)
    conductor = sum((p - 1) * beta for p, beta in zip(b.p, gens[1:])) - gens[0] + 1
    members = [False] * conductor
    if conductor:
        members[0] = True
    for k in range(1, conductor):
        members[k] = any(k >= x and members[k - x] for x in gens)
    sg = Semigroup(gens, conductor, tuple(members))
    if 2 * sg.delta != conductor:
        raise InvalidSemigroup(
            f"gap count {sg.delta} inconsistent with conductor {conductor} for {b}"
        )
    return sg


@dataclass(frozen=True)
class MultiplicityData:
    sequence: tuple[tuple[int, int], ...]  # run-length (m, count)
    satellite: tuple[bool, ...]  # per centre, 1-based order flattened

    @property
    def flat(self) -> list[int]:
        return [m for m, c in self.sequence for _ in range(c)]

    @property
    def k(self) -> int:
        return sum(c for _, c in self.sequence)

    @property
    def omega(self) -> int:
        return sum(self.satellite)

    @property
    def rho(self) -> int:
        return self.k - 1 - self.omega

    @property
    def L(self) -> int:
        return 2 + self.rho

    def sum_m(self) -> int:
        return sum(m * c for m, c in self.sequence)

    def sum_m_sq(self) -> int:
        return sum(m * m * c for m, c in self.sequence)

    def two_delta(self) -> int:
        return sum(m * (m - 1) * c for m, c in self.sequence)

    def __str__(self) -> str:
        return "[" + ", ".join(f"{m}x{c}" if c > 1 else str(m) for m, c in self.sequence) + "]"


def characteristic_exponents(b: BranchType) -> tuple[int, ...]:
    """(beta_0; beta_1, ..., beta_g) of the Puiseux expansion, scaled to integers."""
    n = b.tail_product(0)
    betas = [n]
    m = 0
    for k, (p, q) in enumerate(b.newton_pairs, start=1):
        m = q + p * m
        betas.append(m * b.tail_product(k))
    return tuple(betas)


def _euclid_multiplicities(x: int, e: int) -> list[int]:
    out: list[int] = []
    while e:
        q, r = divmod(x, e)
        out.extend([e] * q)
        x, e = e, r
    return out


def multiplicity_sequence(b: BranchType) -> list[int]:
    betas = characteristic_exponents(b)
    seq: list[int] = []
    e = betas[0]
    prev = 0
    for beta in betas[1:]:
        seq.extend(_euclid_multiplicities(beta - prev, e))
        e = gcd(e, beta)
        prev = beta
    return seq


def satellite_flags(mults: Sequence[int]) -> list[bool]:
    """Mark centres proximate to two earlier centres.

    For a single branch the centres proximate to centre i are the
    consecutive run i+1, i+2, ... whose multiplicities sum to m_i.
    """
    k = len(mults)
    proximate_to = [0] * k
    for i, m in enumerate(mults):
        total = 0
        j = i + 1
        while j < k and total < m:
            total += mults[j]
            proximate_to[j] += 1
            j += 1
        if j < k and total != m:
            raise InvalidBranch(f"proximity equality fails at centre {i + 1} of {list(mults)}")
    return [n >= 2 for n in proximate_to]


def multiplicity_data(b: BranchType) -> MultiplicityData:
    flat = multiplicity_sequence(b)
    runs: list[tuple[int, int]] = []
    for m in flat:
        if runs and runs[-1][0] == m:
            runs[-1] = (m, runs[-1][1] + 1)
        else:
            runs.append((m, 1))
    return MultiplicityData(tuple(runs), tuple(satellite_flags(flat)))
