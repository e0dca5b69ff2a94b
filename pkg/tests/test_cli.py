import json
import os
import subprocess
import sys

import pytest

from oddlen.cli import main

MAX_WORKERS = os.cpu_count() or 1


def run_cli(*args, workers=None):
    cmd = [sys.executable, "-m", "oddlen", *args]
    if workers is not None:
        cmd += ["--workers", str(workers)]
    return subprocess.run(cmd, capture_output=True, text=True, timeout=600)


def test_gf_d2_json(capsys):
    assert main(["gf", "--group", "D", "--n", "2", "--set", ""]) == 0
    assert capsys.readouterr().out == '{"coeffs":{"0":1,"1":-2,"2":1}}\n'


def test_gf_text_and_csv(capsys):
    main(["gf", "--group", "A", "--n", "3", "--format", "text"])
    assert capsys.readouterr().out.strip() == "1 - x^2"
    main(["gf", "--group", "D", "--n", "3", "--set", "1", "--format", "csv"])
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "n,group,set,gf"
    assert out[1] == '3,D,"1",1 - x^2'


def test_gf_graded(capsys):
    main(["gf", "--group", "B", "--n", "1", "--graded"])
    assert json.loads(capsys.readouterr().out) == {"coeffs": {"0,0": 1, "1,1": 1}}


def test_factor_n3(capsys):
    assert main(["factor", "--n", "3", "--set", "1"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["M_J"] == {"coeffs": {"0": 1, "2": -1}}
    assert rec["status"] == "verified"


def test_verify_thmD_trivial_range(capsys):
    assert main(["verify", "--claim", "thmD_trivial", "--n", "2..6"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 5
    recs = [json.loads(x) for x in lines]
    assert [r["n"] for r in recs] == [2, 3, 4, 5, 6]
    assert all(r["status"] == "verified" for r in recs)
    assert all("elapsed_ms" in r for r in recs)


def test_verify_csv_header(capsys):
    main(["verify", "--claim", "thmD_01", "--n", "3", "--format", "csv", "--no-timing"])
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "claim,n,params,status,lhs,rhs,counterexample"
    assert out[1].startswith("thmD_01,3,{},verified,1 + x^2,1 + x^2")


def test_verify_mismatch_exit_and_stderr(capsys):
    code = main(["verify", "--claim", "lem_vanishing", "--n", "4", "--set", "0", "--a", "3"])
    assert code == 1
    err = capsys.readouterr().err
    assert err.startswith("first counterexample: ")
    assert json.loads(err.split(": ", 1)[1])["status"] == "mismatch"


@pytest.mark.parametrize("argv", [
    ["verify", "--claim", "no_such_claim", "--n", "3"],
    ["gf", "--n", "3", "--set", "1,,2"],
    ["gf", "--n", "3", "--set", "7"],
    ["gf", "--n", "0"],
    ["gf", "--n", "x..y"],
    ["gf", "--group", "A", "--n", "3", "--set", "0"],
    ["gf", "--n", "2..4"],
    ["factor", "--n", "2"],
    ["scan", "--n", "3", "--workers", "0"],
])
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as e:
        main(argv)
    assert e.value.code == 2


def test_help_mentions_workers_env():
    r = run_cli("--help")
    assert r.returncode == 0
    assert "ODDLEN_WORKERS" in r.stdout


def test_scan_rows(capsys):
    assert main(["scan", "--n", "2", "--group", "D"]) == 0
    rows = [json.loads(x) for x in capsys.readouterr().out.splitlines()]
    assert [r["mask"] for r in rows] == [0, 1, 2, 3]
    assert rows[0]["gf"] == {"0": 1, "1": -2, "2": 1}
    main(["scan", "--n", "3", "--group", "D"])
    rows = [json.loads(x) for x in capsys.readouterr().out.splitlines()]
    assert len(rows) == 8
    singles = [r["gf"] for r in rows if len(r["set"]) == 1]
    assert singles == [{"0": 1, "2": -1}] * 3
    order = 4 * 6
    for r in rows:
        assert sum(abs(c) for c in r["gf"].values()) <= order


def test_scan_empty_row_matches_gf(capsys):
    main(["scan", "--n", "4", "--group", "B"])
    first = json.loads(capsys.readouterr().out.splitlines()[0])
    main(["gf", "--n", "4", "--group", "B"])
    assert json.loads(capsys.readouterr().out)["coeffs"] == first["gf"]


@pytest.mark.parametrize("args", [
    ("verify", "--n", "2..6", "--no-timing",
     "--claim", "thmD_trivial,corDA_square,thmD_singleton,lem_complement,prop_shift"),
    ("scan", "--n", "5", "--group", "D"),
    ("scan", "--n", "4", "--group", "B", "--format", "csv"),
])
def test_output_independent_of_workers(args):
    outs = {w: run_cli(*args, workers=w) for w in sorted({1, 2, 4, MAX_WORKERS})}
    bodies = {r.stdout for r in outs.values()}
    codes = {r.returncode for r in outs.values()}
    assert len(bodies) == 1 and len(codes) == 1
