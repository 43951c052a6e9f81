"""End-to-end acceptance gate: eight criteria, all exact.

Each test records a PASS/FAIL line that is printed in the terminal summary
(and to stdout immediately, visible with -s).
"""
import random
import time
from fractions import Fraction

import pytest

from cuspcheck.branchdata import branch_from_newton_pairs, multiplicity_data, one_pair, semigroup_of
from cuspcheck.curvecheck import (
    CurveSpec,
    conjectureA_check,
    curve,
    dimensions_report,
    genus_check,
    geometric_genus,
    k2_plus_sharp_surgery,
    superisolated_invariants,
)
from cuspcheck.gradedroots import (
    hplus_ranks,
    root_from_tau,
    roots_isomorphic,
    sw_from_root,
    tau_brieskorn,
    tau_surgery,
)
from cuspcheck.localinv import alexander_poly, local_invariants, semicontinuity_check, spectrum
from cuspcheck.numerics import IntPoly
from cuspcheck.search import enumerate_one_pair, listed_triples, one_pair_triples
from cuspcheck.semidist import distribution_report, n_poly, r_poly
from cuspcheck.swtorsion import casson_walker, sw_both_ways, torsion

import oracles
from conftest import ACCEPTANCE


def record(n, ok, detail):
    ACCEPTANCE[n] = (ok, detail)
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def unicuspidal_inputs(d_max):
    """Every branch (g <= 3) whose Milnor number is (d-1)(d-2), for 3 <= d <= d_max."""
    for d in range(3, d_max + 1):
        for pairs in oracles.branches_with_mu((d - 1) * (d - 2)):
            yield d, pairs


def test_criterion_1_counterexample():
    b = branch_from_newton_pairs([(2, 7), (4, 17)])
    sg = semigroup_of(b)
    md = multiplicity_data(b)
    rep = distribution_report(sg, 17)
    rows = semicontinuity_check(b, 17)
    fails = [(r.l, r.count, r.bound) for r in rows if not r.passed]
    ok = (
        sg.generators == (8, 28, 73)
        and md.sequence == ((8, 3), (4, 6), (1, 4))
        and sg.mu == 240
        and rep.d_poly.is_zero()
        and fails == [(12, 56, 55)]
    )
    record(1, ok, f"<8,28,73>, mu=240, D=0, semicontinuity fails only at {fails}")


def test_criterion_2_one_pair_list():
    start = time.perf_counter()
    verdicts = enumerate_one_pair(34)
    elapsed = time.perf_counter() - start
    by = {(v.d, *v.newton_pairs[0]): v for v in verdicts}
    listed = listed_triples(34)
    expected = {(d, d - 1, d) for d in range(3, 35)}
    expected |= {(d, d // 2, 2 * d - 1) for d in range(4, 35, 2)}
    expected |= {(10, 4, 25), (5, 2, 13), (13, 5, 34), (8, 3, 22), (16, 6, 43)}
    missing = [t for t in sorted(expected) if not (t in by and by[t].dp_holds)]
    listed_ok = all(by[t].dp_holds and by[t].semicontinuity_ok for t in listed)
    surplus = [t for t, v in by.items() if v.surplus]
    if surplus:
        print(f"WARNING: DP-passing triples outside the list: {surplus}")
    ok = not missing and listed_ok and not by[(5, 3, 7)].dp_holds and elapsed < 60
    record(
        2, ok,
        f"{len(verdicts)} candidates in {elapsed:.1f}s; {sum(v.dp_holds for v in verdicts)} pass DP; "
        f"missing={missing}; unlisted DP-passing={surplus}",
    )


def test_criterion_3_seiberg_witten():
    sg = semigroup_of(one_pair(2, 3))
    rep = sw_both_ways(sg, 3)
    cubic = (
        torsion(sg, 3) == Fraction(4, 9)
        and casson_walker(sg, 3) == Fraction(-11, 12)
        and rep.sw_surgery == Fraction(3, 4)
        and rep.sw_root == Fraction(-1, 4) + 1
    )
    bad = []
    count = 0
    for d in range(3, 21):
        for a, b in one_pair_triples(d):
            r = sw_both_ways(semigroup_of(one_pair(a, b)), d)
            count += 1
            if r.sw_surgery != r.sw_root:
                bad.append((d, a, b))
    record(3, cubic and not bad, f"cubic sw=3/4 both ways; {count} one-pair inputs d<=20, disagreements={bad}")


def test_criterion_4_identity_chain():
    bad = []
    count = 0
    for d, pairs in unicuspidal_inputs(20):
        sg = semigroup_of(branch_from_newton_pairs(pairs))
        sw = sw_both_ways(sg, d).sw_surgery
        rep = distribution_report(sg, d, sw)
        count += 1
        r = rep.r_poly
        chain = r == n_poly(sg, d).substitute_power(d)
        chain = chain and rep.d_poly.substitute_power(d) == (1 - IntPoly.monomial(d)) * r
        r1 = sum(r.coeffs) == sw - Fraction(k2_plus_sharp_surgery(d), 8) - geometric_genus(d)
        if not (chain and r1 and rep.chain_ok and rep.r_at_one_ok):
            bad.append((d, pairs))
    witness = r_poly(semigroup_of(one_pair(3, 7)), 5) == IntPoly.monomial(5, -1)
    record(4, witness and not bad, f"{count} unicuspidal inputs d<=20, failures={bad}; (3,7,5) R=-t^5: {witness}")


def test_criterion_5_graded_roots():
    left = [0, 1, -5, -2, -5, 1, 0]
    right = [0, 1, -5, -3, -5, 1, 0]
    taus_ok = (
        list(tau_surgery(semigroup_of(one_pair(2, 13)), 5).values) == left
        and list(tau_surgery(semigroup_of(one_pair(4, 5)), 5).values) == left
        and list(tau_brieskorn(5).values) == left
        and list(tau_surgery(semigroup_of(one_pair(3, 7)), 5).values) == right
    )
    br5 = root_from_tau(tau_brieskorn(5))
    iso_ok = roots_isomorphic(root_from_tau(left), br5) and not roots_isomorphic(root_from_tau(right), br5)
    bad = []
    separated = []
    count = 0
    for d, pairs in unicuspidal_inputs(12):
        sg = semigroup_of(branch_from_newton_pairs(pairs))
        rep = distribution_report(sg, d)
        iso = roots_isomorphic(root_from_tau(tau_surgery(sg, d)), root_from_tau(tau_brieskorn(d)))
        n = rep.n_poly
        count += 1
        if len({iso, rep.dp_holds, n.is_zero(), rep.r_poly.is_zero()}) != 1:
            bad.append((d, pairs))
        r1_zero = sum(rep.r_poly.coeffs) == 0
        if r1_zero != rep.dp_holds:
            # R(1) = 0 forces R = 0 only when N has coefficients of one sign,
            # which every existing curve satisfies; record data that breaks it
            if all(c >= 0 for c in n.coeffs):
                bad.append((d, pairs, "R(1)"))
            else:
                separated.append((d, pairs, str(n)))
    record(
        5, taus_ok and iso_ok and not bad,
        f"d=5 figure reproduced; iso<=>DP<=>N=0<=>R=0 on {count} inputs d<=12, failures={bad}; "
        f"R(1)=0 leg agrees wherever N>=0, separated only on non-realizable data with mixed-sign N: {separated}",
    )


def test_criterion_6_hplus_ranks():
    taus = []
    for d in range(3, 9):
        taus.append(list(tau_brieskorn(d).values))
        for pairs in oracles.branches_with_mu((d - 1) * (d - 2)):
            taus.append(list(tau_surgery(semigroup_of(branch_from_newton_pairs(pairs)), d).values))
    rng = random.Random(2024)
    taus += [oracles.random_tau(rng) for _ in range(200)]
    bad = []
    for tau in taus:
        root = root_from_tau(tau)
        lo, hi = 2 * min(tau) - 2, 2 * max(tau) + 6
        ranks = hplus_ranks(root, lo, hi).ranks
        for h in range(lo, hi + 1):
            if ranks[h] != oracles.hplus_rank_oracle(tau, h):
                bad.append((tau, h))
        for h in range(2 * root.stem_top + 1, hi + 1):
            if ranks[h] != (1 if h % 2 == 0 else 0):
                bad.append((tau, h, "stem"))
    record(6, not bad, f"{len(taus)} roots checked against the constraint-solving oracle, mismatches={bad[:3]}")


def test_criterion_7_global_identities():
    rng = random.Random(11)
    pool = oracles.cusp_pool(110)
    specs = [CurveSpec(d, (branch_from_newton_pairs(p),)) for d, p in unicuspidal_inputs(12)]
    for _ in range(300):
        d = rng.randint(3, 12)
        combo = oracles.random_cusp_combo(rng, d, pool)
        specs.append(CurveSpec(d, tuple(branch_from_newton_pairs(p) for p in combo)))
    bad = []
    for c in specs:
        for stab in (0, 1, 3):
            spec = CurveSpec(c.degree, c.cusps, stab_dim=stab)
            rep = dimensions_report(spec)
            d = c.degree
            mds = spec.multiplicities()
            invs = [local_invariants(m) for m in mds]
            smbar = sum(i.mbar for i in invs)
            forms = {
                d * (d + 3) // 2 - sum(i.tau_es for i in invs) - (8 - stab),
                3 * d - 9 - smbar + stab,
                d * d - sum(m.sum_m_sq() for m in mds) - 7 + sum(m.L for m in mds) + stab,
                rep.virtdim,
            }
            ca = conjectureA_check(spec)
            if len(forms) != 1 or rep.chi_theta != stab - rep.virtdim or ca.n[0] != 0 or ca.n != ca.n[::-1]:
                bad.append((d, stab, c.cusps))
    smoothing_ok = all(
        8 * s.p_g + s.sigma_F + s.k2_plus_sharp == 0
        and oracles.superisolated_mu(d) == 12 * s.p_g + s.k2_plus_sharp
        for d in range(3, 101)
        for s in [superisolated_invariants(d)]
    )
    cubic = dimensions_report(curve(3, one_pair(2, 3), stab_dim=1))
    cubic_ok = cubic.virtdim == 0 and not cubic.orevkov_ok and cubic.virtdim_ok
    record(
        7, not bad and smoothing_ok and cubic_ok,
        f"{len(specs)} genus-valid curves x 3 stabilizers, failures={len(bad)}; 8p_g+sigma+K2 d<=100: {smoothing_ok}; cubic: {cubic_ok}",
    )


def test_criterion_8_structural_invariants():
    bad = []
    branches = oracles.random_branches(500, seed=8, max_g=3, max_mu=2000)
    t_minus_1 = IntPoly([-1, 1])
    for pairs in branches:
        b = branch_from_newton_pairs(pairs)
        sg = semigroup_of(b)
        mu = sg.mu
        seen = oracles.brute_members(sorted(sg.generators), mu + 1)
        alex = alexander_poly(sg)
        delta = sg.delta
        checks = [
            all(seen[k] != seen[mu - 1 - k] for k in range(mu)),
            sg.conductor == 2 * delta == mu,
            all(seen[k] == (k in sg) for k in range(mu + 2)),
            multiplicity_data(b).two_delta() == 2 * delta,
            len(spectrum(b)) == delta,
            alex.delta_poly(1) == 1 and alex.delta_poly.degree == 2 * delta,
            1 + t_minus_1 * delta + t_minus_1 * t_minus_1 * alex.q_poly == alex.delta_poly,
            alex.delta_poly == oracles.cable_alexander(pairs),
        ]
        if not all(checks):
            bad.append((pairs, checks))
    gs = {len(p) for p in branches}
    record(8, not bad and gs == {1, 2, 3}, f"500 random branches (g in {sorted(gs)}, mu<=2000), failures={bad[:2]}")
