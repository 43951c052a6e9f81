"""Command-line interface.

Exit codes: 0 computed (and every gate passed), 1 a conjecture gate failed
or two independent computations disagreed, 2 invalid input.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Callable, Optional

from .branchdata import (
    BranchType,
    Semigroup,
    branch_from_newton_pairs,
    multiplicity_data,
    semigroup_of,
)
from .curvecheck import (
    CurveSpec,
    GenusError,
    NeedsNewtonPairs,
    StabUnknown,
    conjectureA_check,
    dimensions_report,
    genus_check,
    k2_plus_sharp_brieskorn,
    k2_plus_sharp_surgery,
    superisolated_invariants,
)
from .descriptor import DescriptorError, load_descriptor
from .gradedroots import (
    GradedRoot,
    TauFunction,
    hplus_ranks,
    root_from_tau,
    roots_isomorphic,
    sw_from_root,
    tau_brieskorn,
    tau_surgery,
)
from .localinv import ConsistencyError, alexander_poly, local_invariants, semicontinuity_check, spectrum
from .numerics import IntPoly
from .search import candidate_pipeline, enumerate_one_pair
from .semidist import distribution_report
from .swtorsion import sw_both_ways


class UsageError(ValueError):
    pass


# -- serialization helpers ------------------------------------------------------

def _jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, IntPoly):
        return list(x.coeffs)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


def _cusp_semigroup(c) -> Semigroup:
    return c if isinstance(c, Semigroup) else semigroup_of(c)


def branch_record(cusp) -> dict:
    sg = _cusp_semigroup(cusp)
    alex = alexander_poly(sg)
    rec: dict[str, Any] = {
        "semigroup_generators": list(sg.generators),
        "delta": sg.delta,
        "mu": sg.mu,
        "conductor": sg.conductor,
        "gaps": list(sg.gap_set),
        "alexander": list(alex.delta_poly.coeffs),
        "q_poly": list(alex.q_poly.coeffs),
    }
    if isinstance(cusp, BranchType):
        md = multiplicity_data(cusp)
        inv = local_invariants(md)
        rec = {
            "newton_pairs": [list(p) for p in cusp.newton_pairs],
            "splice_decorations": list(cusp.splice_decorations),
            **rec,
            "multiplicities": [list(r) for r in md.sequence],
            "omega": md.omega,
            "rho": md.rho,
            "L": md.L,
            "tau_es": inv.tau_es,
            "mbar": inv.mbar,
            "spectrum_size": len(spectrum(cusp)),
        }
    return rec


def branch_from_record(rec: dict) -> dict:
    """Recompute a record from the identifying fields of a parsed one."""
    if "newton_pairs" in rec:
        return branch_record(branch_from_newton_pairs(rec["newton_pairs"]))
    from .branchdata import semigroup_from_generators

    return branch_record(semigroup_from_generators(rec["semigroup_generators"]))


# -- rendering ------------------------------------------------------------------

class Output:
    def __init__(self, machine: bool, stream=None):
        self.machine = machine
        self.stream = stream or sys.stdout

    def record(self, name: str, fields: dict, human: Optional[Callable[[], str]] = None) -> None:
        if self.machine:
            payload = {"report": name, **_jsonable(fields)}
            print(json.dumps(payload, sort_keys=False), file=self.stream)
        else:
            print(human() if human else _table(name, fields), file=self.stream)


def _fmt(v: Any) -> str:
    if isinstance(v, IntPoly):
        return str(v)
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (list, tuple)) and len(v) > 24:
        return "[" + ", ".join(map(str, v[:24])) + f", ... ({len(v)} total)]"
    return str(v)


def _table(title: str, fields: dict) -> str:
    width = max((len(k) for k in fields), default=0)
    lines = [f"== {title} =="]
    lines += [f"  {k.ljust(width)}  {_fmt(v)}" for k, v in fields.items()]
    return "\n".join(lines)


def render_root_ascii(root: GradedRoot, tau: Optional[TauFunction] = None) -> str:
    lines = []
    if tau is not None:
        lines.append(f"tau = {list(tau.values)}")
    lines.append(f"chi {root.stem_top + 1:>4} |  |   (stem continues upward)")
    view = root.adjacency_view()
    ids = {}
    for n in sorted(view, reverse=True):
        for v, _ in view[n]:
            ids[v] = len(ids)
    for n in sorted(view, reverse=True):
        cells = []
        for v, up in view[n]:
            link = f"^{ids[up]}" if up is not None else ""
            cells.append(f"v{ids[v]}[{v.lo}..{v.hi}]{link}")
        lines.append(f"chi {n:>4} |  " + "  ".join(cells))
    return "\n".join(lines)


def render_root_dot(root: GradedRoot, name: str = "root") -> str:
    ids = {v: i for i, v in enumerate(root.vertices())}
    lines = [f'graph "{name}" {{', "  rankdir=BT;"]
    for v, i in ids.items():
        lines.append(f'  v{i} [label="{v.level}", chi={v.level}];')
    lines.append(f'  stem [label="{root.stem_top + 1}", chi={root.stem_top + 1}, shape=point];')
    for v, w in root.parent.items():
        lines.append(f"  v{ids[v]} -- v{ids[w]};")
    lines.append(f"  v{ids[root.top]} -- stem;")
    lines.append("}")
    return "\n".join(lines)


# -- commands -------------------------------------------------------------------

def _read_descriptor(arg: str) -> CurveSpec:
    if arg == "-":
        text = sys.stdin.read()
    elif arg.startswith("@"):
        with open(arg[1:], encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = arg
    return load_descriptor(text)


def _single_cusp(c: CurveSpec):
    if c.nu != 1:
        raise UsageError(f"cusps: this command needs a unicuspidal curve, got {c.nu} cusps")
    return c.cusps[0]


def _stab_fields(rep) -> dict:
    return {"stab_dim": rep.stab_dim, "stab_assumed": rep.stab_assumed}


def cmd_branch_invariants(args, out: Output) -> int:
    c = _read_descriptor(args.descriptor)
    for i, cusp in enumerate(c.cusps):
        out.record("branch-invariants", {"cusp": i, **branch_record(cusp)})
    return 0


def cmd_curve_check(args, out: Output) -> int:
    c = _read_descriptor(args.descriptor)
    genus = genus_check(c)
    si = superisolated_invariants(c.degree)
    fields: dict[str, Any] = {"degree": c.degree, "nu": c.nu, "genus_ok": genus}
    ok = genus
    if all(isinstance(x, BranchType) for x in c.cusps):
        rep = dimensions_report(c, assume_stab0=args.assume_stab0)
        fields.update(
            {
                **_stab_fields(rep),
                "kappa_bar": rep.kappa_bar,
                "tau_es": rep.tau_es,
                "sum_mbar": rep.sum_mbar,
                "sum_L": rep.sum_L,
                "expdim": rep.expdim,
                "virtdim": rep.virtdim,
                "cbar_sq": rep.cbar_sq,
                "chi_theta": rep.chi_theta,
                "virtdim_ok": rep.virtdim_ok,
                "orevkov_ok": rep.orevkov_ok,
                "identities_ok": rep.identities_ok,
                "notes": list(rep.notes),
            }
        )
        ok = ok and rep.virtdim_ok
    else:
        fields["notes"] = ["dimension report skipped: some cusps given only by semigroup"]
    if genus:
        ca = conjectureA_check(c)
        fields.update({"c": list(ca.c), "n": list(ca.n), "conjA_ok": ca.passed})
        ok = ok and ca.passed
    fields.update({"p_g": si.p_g, "k2_plus_sharp": si.k2_plus_sharp, "sigma_F": si.sigma_F})
    out.record("curve-check", fields)
    return 0 if ok else 1


def cmd_dp_check(args, out: Output) -> int:
    c = _read_descriptor(args.descriptor)
    sg = _cusp_semigroup(_single_cusp(c))
    d = c.degree
    sw = sw_both_ways(sg, d).sw_surgery if sg.mu == (d - 1) * (d - 2) else None
    rep = distribution_report(sg, d, sw)
    fields = {
        "degree": d,
        "genus_ok": rep.genus_ok,
        "dp_holds": rep.dp_holds,
        "D": rep.d_poly,
        "N": rep.n_poly,
        "R": rep.r_poly,
        "chain_ok": rep.chain_ok,
        "r_at_one_ok": rep.r_at_one_ok,
        "failing_intervals": [[r.l, r.count, r.expected] for r in rep.failing_intervals()],
    }
    out.record("dp-check", fields)
    return 0 if rep.dp_holds and rep.genus_ok else 1


def cmd_sw(args, out: Output) -> int:
    c = _read_descriptor(args.descriptor)
    sg = _cusp_semigroup(_single_cusp(c))
    rep = sw_both_ways(sg, c.degree)
    fields = {
        "degree": c.degree,
        "h1_order": rep.h1_order,
        "torsion": rep.torsion,
        "casson_walker": rep.casson_walker,
        "sw_surgery": rep.sw_surgery,
        "sw_root": rep.sw_root,
        "agree": rep.agree,
        "genus_ok": rep.genus_valid,
    }
    out.record("sw", fields)
    return 0 if rep.agree else 1


def cmd_spectrum_check(args, out: Output) -> int:
    c = _read_descriptor(args.descriptor)
    cusp = _single_cusp(c)
    if not isinstance(cusp, BranchType):
        raise UsageError("cusps[0]: the spectrum needs newton_pairs, not semigroup_generators")
    rows = semicontinuity_check(cusp, c.degree)
    fails = [[r.l, r.count, r.bound] for r in rows if not r.passed]
    fields = {
        "degree": c.degree,
        "spectrum_size": len(spectrum(cusp)),
        "rows": [[r.l, r.count, r.bound, r.passed] for r in rows],
        "failing": fails,
        "passed": not fails,
    }

    def human() -> str:
        lines = [f"== spectrum-check (d = {c.degree}) ==", "   l  count  bound  ok"]
        lines += [f"{r.l:>4} {r.count:>6} {r.bound:>6}  {'yes' if r.passed else 'NO'}" for r in rows]
        lines.append("semicontinuity: " + ("passes" if not fails else f"fails at l = {[f[0] for f in fails]}"))
        return "\n".join(lines)

    out.record("spectrum-check", fields, human)
    return 0 if not fails else 1


def _parse_surgery(spec: str):
    """'D:p,q' or 'D:p1,q1/p2,q2'."""
    try:
        d_text, pairs_text = spec.split(":", 1)
        pairs = [tuple(int(x) for x in part.split(",")) for part in pairs_text.split("/")]
        d = int(d_text)
    except ValueError:
        raise UsageError(f"--surgery {spec!r}: expected D:p,q[/p,q...]")
    try:
        b = branch_from_newton_pairs(pairs)
    except ValueError as exc:
        raise UsageError(f"--surgery {spec!r}: {exc}")
    return d, semigroup_of(b)


def _manifold_tau(kind: str, value) -> tuple[str, TauFunction, int]:
    if kind == "surgery":
        d, sg = value
        try:
            tau = tau_surgery(sg, d)
        except ValueError as exc:
            raise UsageError(f"--surgery: {exc}")
        return f"S^3_-{d}(K)", tau, k2_plus_sharp_surgery(d)
    d = value
    if d < 3:
        raise UsageError("--brieskorn: d must be >= 3")
    return f"Sigma({d},{d},{d + 1})", tau_brieskorn(d), k2_plus_sharp_brieskorn(d)


def cmd_graded_root(args, out: Output) -> int:
    picks = [x is not None for x in (args.descriptor, args.brieskorn, args.tau)]
    if sum(picks) != 1:
        raise UsageError("give exactly one of a descriptor, --brieskorn D or --tau LIST")
    k2 = None
    if args.tau is not None:
        try:
            tau = TauFunction(tuple(int(x) for x in args.tau.split(",")))
        except ValueError:
            raise UsageError(f"--tau {args.tau!r}: expected comma-separated integers")
        name = "tau"
    elif args.brieskorn is not None:
        name, tau, k2 = _manifold_tau("brieskorn", args.brieskorn)
    else:
        c = _read_descriptor(args.descriptor)
        sg = _cusp_semigroup(_single_cusp(c))
        name, tau, k2 = _manifold_tau("surgery", (c.degree, sg))
    root = root_from_tau(tau)
    if args.dot:
        print(render_root_dot(root, name), file=out.stream)
        return 0
    h_lo, h_hi = 2 * root.min_level, 2 * root.stem_top + 2
    ranks = hplus_ranks(root, h_lo, h_hi, k2)
    fields = {
        "manifold": name,
        "tau": list(tau.values),
        "stem_top": root.stem_top,
        "min_level": root.min_level,
        "levels": {n: len(vs) for n, vs in sorted(root.levels.items())},
        "ranks": {h: r for h, r in ranks.ranks.items() if r},
        "shift": ranks.shift,
    }
    if k2 is not None:
        fields["sw"] = sw_from_root(tau, k2)

    def human() -> str:
        text = [f"== graded root of {name} ==", render_root_ascii(root, tau)]
        text.append("H ranks (even h, pre-shift): " + ", ".join(f"{h}:{r}" for h, r in fields["ranks"].items()))
        if k2 is not None:
            text.append(f"grading shift {ranks.shift}; sw = {fields['sw']}")
        return "\n".join(text)

    out.record("graded-root", fields, human)
    return 0


def cmd_compare_roots(args, out: Output) -> int:
    mans = [("surgery", _parse_surgery(s)) for s in args.surgery or []]
    mans += [("brieskorn", d) for d in args.brieskorn or []]
    if len(mans) != 2:
        raise UsageError("compare-roots needs exactly two manifolds (--surgery D:p,q / --brieskorn D)")
    (na, ta, _), (nb, tb, _) = (_manifold_tau(k, v) for k, v in mans)
    iso = roots_isomorphic(root_from_tau(ta), root_from_tau(tb))
    out.record(
        "compare-roots",
        {"first": na, "tau_first": list(ta.values), "second": nb, "tau_second": list(tb.values), "isomorphic": iso},
    )
    return 0 if iso else 1


def _verdict_fields(v) -> dict:
    return {
        "degree": v.d,
        "newton_pairs": [list(p) for p in v.newton_pairs],
        "genus_ok": v.genus_ok,
        "dp_holds": v.dp_holds,
        "D": v.d_poly,
        "semicontinuity_ok": v.semicontinuity_ok,
        "semicontinuity_failures": [list(f) for f in v.semicontinuity_failures],
        "virtdim": v.virtdim,
        "virtdim_nonneg": v.virtdim_nonneg,
        "stab_dim": v.stab_dim,
        "stab_assumed": v.stab_assumed,
        "conjA_ok": v.conjA_ok,
        "tag": v.tag,
        "refuted": v.refuted,
        "notes": list(v.notes),
    }


def cmd_pipeline(args, out: Output) -> int:
    c = _read_descriptor(args.descriptor)
    cusp = _single_cusp(c)
    if not isinstance(cusp, BranchType):
        raise UsageError("cusps[0]: the pipeline needs newton_pairs, not semigroup_generators")
    v = candidate_pipeline(c)
    out.record("pipeline", _verdict_fields(v))
    return 1 if v.refuted else 0


def cmd_search(args, out: Output) -> int:
    if args.d_max < 3:
        raise UsageError("--d-max must be >= 3")
    verdicts = enumerate_one_pair(args.d_max, workers=args.workers)
    passing = [v for v in verdicts if v.dp_holds]
    surplus = [v for v in passing if v.surplus]
    if out.machine:
        for v in verdicts:
            out.record("search-candidate", _verdict_fields(v))
        out.record(
            "search-summary",
            {"d_max": args.d_max, "candidates": len(verdicts), "dp_passing": len(passing), "unlisted_dp_passing": len(surplus)},
        )
        return 0
    lines = [f"== one-Puiseux-pair candidates, 3 <= d <= {args.d_max} ==", "   d     a     b   DP  semicont  tag"]
    for v in passing:
        (a, b), = v.newton_pairs
        lines.append(f"{v.d:>4} {a:>5} {b:>5}  yes  {'yes' if v.semicontinuity_ok else 'NO ':>8}  {v.tag}")
    lines.append(f"{len(verdicts)} genus-valid candidates, {len(passing)} pass DP")
    if surplus:
        lines.append("WARNING: DP-passing triples not on the realizability list: "
                     + ", ".join(f"(d={v.d}, {v.newton_pairs[0]})" for v in surplus))
    else:
        lines.append("DP-passing set coincides with the realizability list")
    print("\n".join(lines), file=out.stream)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cuspcheck",
        description="Invariants and conjecture checks for rational cuspidal plane curves.",
    )
    parser.add_argument("--format", choices=("human", "machine"), default="human")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_descriptor(name, func, help_text, **extra):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("descriptor", help="JSON descriptor, @FILE, or - for stdin")
        p.set_defaults(func=func)
        return p

    with_descriptor("branch-invariants", cmd_branch_invariants, "local invariants of every cusp")
    p = with_descriptor("curve-check", cmd_curve_check, "genus, virtual dimension, Orevkov, Conjecture A")
    p.add_argument("--assume-stab0", action="store_true", help="take stab_dim = 0 when it is not implied")
    with_descriptor("dp-check", cmd_dp_check, "semigroup distribution property and R/N/D identities")
    with_descriptor("sw", cmd_sw, "Seiberg-Witten invariant by surgery and by graded root")
    with_descriptor("spectrum-check", cmd_spectrum_check, "spectrum semicontinuity against x^d + y^d")
    with_descriptor("pipeline", cmd_pipeline, "every filter on one unicuspidal candidate")

    p = sub.add_parser("graded-root", help="graded root and H ranks")
    p.add_argument("descriptor", nargs="?", help="unicuspidal JSON descriptor")
    p.add_argument("--brieskorn", type=int, metavar="D")
    p.add_argument("--tau", metavar="LIST", help="comma-separated tau values")
    p.add_argument("--dot", action="store_true", help="emit a graph description instead")
    p.set_defaults(func=cmd_graded_root)

    p = sub.add_parser("compare-roots", help="decide whether two graded roots are isomorphic")
    p.add_argument("--surgery", action="append", metavar="D:p,q[/p,q]")
    p.add_argument("--brieskorn", action="append", type=int, metavar="D")
    p.set_defaults(func=cmd_compare_roots)

    p = sub.add_parser("search", help="enumerate one-pair unicuspidal candidates")
    p.add_argument("--d-max", type=int, default=20)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_search)

    # accept global flags after the subcommand too
    for action in list(sub.choices.values()):
        action.add_argument("--format", choices=("human", "machine"), default=argparse.SUPPRESS)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args.format == "machine")
    try:
        return args.func(args, out)
    except (DescriptorError, UsageError, NeedsNewtonPairs, StabUnknown, GenusError, OSError) as exc:
        msg = str(exc)
        if isinstance(exc, StabUnknown):
            msg += " (declare stab_dim, kappa_bar or pencil, or pass --assume-stab0)"
        print(f"error: {msg}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
