import json
import subprocess
import sys

import pytest

from cuspcheck.cli import branch_from_record, main

BIG = '{"degree":17,"cusps":[{"newton_pairs":[[2,7],[4,17]]}]}'
CUBIC = '{"degree":3,"cusps":[{"newton_pairs":[[2,3]]}]}'


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def machine(argv, capsys):
    code, out, _ = run(["--format", "machine", *argv], capsys)
    return code, [json.loads(line) for line in out.splitlines()]


def test_dp_check_counterexample(capsys):
    code, recs = machine(["dp-check", BIG], capsys)
    assert code == 0 and recs[0]["dp_holds"] is True and recs[0]["D"] == []


def test_pipeline_counterexample(capsys):
    code, recs = machine(["pipeline", BIG], capsys)
    assert code == 1
    assert recs[0]["semicontinuity_failures"] == [[12, 56, 55]]
    assert recs[0]["stab_assumed"] is True


def test_compare_roots(capsys):
    assert run(["compare-roots", "--surgery", "5:2,13", "--brieskorn", "5"], capsys)[0] == 0
    assert run(["compare-roots", "--surgery", "5:3,7", "--brieskorn", "5"], capsys)[0] == 1
    assert run(["compare-roots", "--surgery", "17:2,7/4,17", "--brieskorn", "17"], capsys)[0] == 0


def test_malformed_descriptor_points_at_field(capsys):
    code, _, err = run(["dp-check", '{"degree":5,"cusps":[{"newton_pairs":[[3,"x"]]}]}'], capsys)
    assert code == 2 and "cusps[0].newton_pairs[0][1]" in err
    code, _, err = run(["dp-check", "{not json"], capsys)
    assert code == 2
    code, _, err = run(["sw", '{"cusps":[]}'], capsys)
    assert code == 2 and "degree" in err


def test_generator_only_cusp_rejected_for_spectrum(capsys):
    desc = '{"degree":5,"cusps":[{"semigroup_generators":[2,13]}]}'
    code, _, err = run(["spectrum-check", desc], capsys)
    assert code == 2 and "newton_pairs" in err
    assert run(["dp-check", desc], capsys)[0] == 0


def test_curve_check_needs_stabilizer(capsys):
    desc = '{"degree":5,"cusps":[{"newton_pairs":[[4,5]]}]}'
    code, _, err = run(["curve-check", desc], capsys)
    assert code == 2 and "--assume-stab0" in err
    code, recs = machine(["curve-check", "--assume-stab0", desc], capsys)
    assert code == 0 and recs[0]["stab_assumed"] is True


def test_curve_check_cubic(capsys):
    desc = '{"degree":3,"cusps":[{"newton_pairs":[[2,3]]}],"stab_dim":1}'
    code, recs = machine(["curve-check", desc], capsys)
    assert code == 0
    r = recs[0]
    assert r["virtdim"] == 0 and r["orevkov_ok"] is False and r["stab_assumed"] is False


def test_sw_report(capsys):
    code, recs = machine(["sw", CUBIC], capsys)
    assert code == 0 and recs[0]["sw_surgery"] == "3/4" == recs[0]["sw_root"]


def test_branch_invariants_round_trip(capsys):
    code, recs = machine(["branch-invariants", BIG], capsys)
    assert code == 0
    rec = recs[0]
    assert rec["semigroup_generators"] == [8, 28, 73] and rec["mu"] == 240
    again = json.loads(json.dumps(branch_from_record(rec)))
    assert again == {k: v for k, v in rec.items() if k not in ("report", "cusp")}


def test_graded_root_renderings(capsys):
    code, out, _ = run(["graded-root", "--brieskorn", "5"], capsys)
    assert code == 0 and "chi   -5" in out
    code, out, _ = run(["graded-root", "--tau", "0,1,-5,-3,-5,1,0", "--dot"], capsys)
    assert code == 0 and out.startswith('graph "tau"') and "chi=-3" in out
    code, recs = machine(["graded-root", CUBIC], capsys)
    assert recs[0]["sw"] == "3/4"


def test_search_summary(capsys):
    code, recs = machine(["search", "--d-max", "8"], capsys)
    assert code == 0
    summary = recs[-1]
    assert summary["report"] == "search-summary" and summary["unlisted_dp_passing"] == 0


def test_descriptor_from_stdin_and_file(tmp_path, monkeypatch, capsys):
    path = tmp_path / "c.json"
    path.write_text(CUBIC)
    assert run(["sw", f"@{path}"], capsys)[0] == 0
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO(CUBIC))
    assert run(["sw", "-"], capsys)[0] == 0


def test_exit_codes_stable_across_runs(capsys):
    first = [run(["pipeline", BIG], capsys)[0] for _ in range(3)]
    assert first == [1, 1, 1]


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cuspcheck", "--format", "machine", "spectrum-check", BIG],
        capture_output=True, text=True,
    )
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["failing"] == [[12, 56, 55]]
