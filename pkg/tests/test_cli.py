import json
import subprocess
import sys

import pytest

from outerspread.cli import EXIT_FINDING, main
from outerspread.codec import graph6_encode
from outerspread.graph import fan, star


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_spread_star(capsys):
    code, out, _ = run(capsys, "spread", "--graph", "star:10")
    assert code == 0
    header, row = out.strip().splitlines()
    assert header == "graph6,n,edges,lambda1,lambda_n,spread"
    assert row.endswith(",6.000000000000")


def test_spread_fan_json(capsys):
    code, out, _ = run(capsys, "spread", "--graph", "fan:10", "--format", "json")
    assert code == 0
    (row,) = json.loads(out)
    assert row["n"] == 10 and row["edges"] == 17
    assert row["spread"] == pytest.approx(row["lambda1"] - row["lambda_n"], abs=1e-11)


def test_spread_from_stdin(capsys, monkeypatch):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO(graph6_encode(star(5)) + "\n" + graph6_encode(fan(6)) + "\n"))
    code, out, _ = run(capsys, "spread", "--input", "-")
    assert code == 0 and len(out.strip().splitlines()) == 3


def test_enumerate_connected(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "3", "--connected")
    assert code == 0
    assert sorted(out.split()) == ["BW", "Bw"]
    code, out, _ = run(capsys, "enumerate", "--n", "3")
    assert len(out.split()) == 4


def test_codec_commands(capsys):
    assert run(capsys, "codec", "encode", "--graph", "path:2")[1] == "A_\n"
    code, out, _ = run(capsys, "codec", "decode", "--graph6", "Bw")
    assert code == 0 and out.splitlines()[1] == '3,3,0-1 0-2 1-2'


@pytest.mark.parametrize("argv", [
    ["spread", "--graph6", "A"],
    ["spread", "--graph", "nope:3"],
    ["spread"],
    ["spread", "--graph", "fan:5", "--graph6", "A_"],
    ["spread", "--graph", "fan:5", "--unknown"],
    ["bogus"],
    ["enumerate", "--n", "40"],
    ["max-spread", "--n", "1"],
    ["spread", "--graph", "fan:5", "--workers", "0"],
    ["spread", "--graph", "fan:5", "--tol", "0"],
    ["codec", "decode", "--graph6", "A`"],
    ["check-bounds"],
    ["check-bounds", "--graph", "complete:4"],
    ["spread", "--input", "/nonexistent/file"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1
    assert err


def test_help_exits_cleanly(capsys):
    assert main(["--help"]) == 0


def test_computation_failure_exit(capsys, monkeypatch):
    from outerspread import spectra

    def boom(*a, **k):
        raise spectra.ConvergenceError("no convergence")

    monkeypatch.setattr("outerspread.cli.spread", boom)
    code, _, err = run(capsys, "spread", "--graph", "fan:5")
    assert code == 2 and "ConvergenceError" in err


def test_check_bounds_single(capsys):
    code, out, _ = run(capsys, "check-bounds", "--graph", "path:20")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "graph6,check,lhs,rhs,margin,holds,extremal_only"
    assert any("lambda1>=sqrt(n-1)-2" in l and ",false,true" in l for l in lines)
    assert any(l.split(",")[1].startswith("reattach_t") for l in lines)


def test_check_bounds_finding_exit(capsys, monkeypatch):
    from outerspread import bounds

    real = bounds.star_reattach

    def broken(g, t, tol=1e-10):
        r = real(g, t, tol)
        return bounds.AlterationResult(r.g_star, r.t, r.w, r.actual_delta + 1.0, r.actual_delta)

    monkeypatch.setattr(bounds, "star_reattach", broken)
    code, _, _ = run(capsys, "check-bounds", "--graph", "path:6")
    assert code == EXIT_FINDING


def test_check_bounds_enumeration(capsys):
    code, out, _ = run(capsys, "check-bounds", "--n-max", "6")
    assert code == 0
    assert len(out.strip().splitlines()) == 7


def test_check_bounds_enumeration_violation(capsys, monkeypatch):
    import outerspread.search as search

    def fake(n_max, workers, n_min, tol):
        return [], [fan(5)]

    monkeypatch.setattr(search, "spectral_radius_scan", fake)
    code, _, err = run(capsys, "check-bounds", "--n-max", "5")
    assert code == EXIT_FINDING and "violation" in err


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.csv"
    code, out, _ = run(capsys, "fan-scan", "--n", "6", "--output", str(target))
    assert code == 0 and out == ""
    assert len(target.read_text().splitlines()) == 8


def test_workers_env(capsys, monkeypatch):
    monkeypatch.setenv("OUTERSPREAD_WORKERS", "2")
    a = run(capsys, "max-spread", "--n", "6")
    monkeypatch.setenv("OUTERSPREAD_WORKERS", "x")
    assert run(capsys, "max-spread", "--n", "6")[0] == 1
    monkeypatch.delenv("OUTERSPREAD_WORKERS")
    b = run(capsys, "max-spread", "--n", "6")
    assert a == b


def test_other_subcommands(capsys):
    code, out, err = run(capsys, "residuals", "--n", "16", "32")
    assert code == 0 and len(out.splitlines()) == 3 and "slope_z" in err
    code, out, _ = run(capsys, "fan-scan", "--n", "12", "20", "--best-only")
    assert code == 0 and len(out.splitlines()) == 3
    code, out, _ = run(capsys, "conjecture", "--n-lo", "4", "--n-hi", "6")
    assert code == 0 and len(out.splitlines()) == 4
    code, out, _ = run(capsys, "climb", "--graph", "star:8", "--budget", "20", "--seed", "4")
    assert code == 0 and len(out.splitlines()) == 2


def test_repeatable_output(capsys):
    argv = ["climb", "--graph", "path:9", "--budget", "25", "--seed", "11"]
    assert run(capsys, *argv) == run(capsys, *argv)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "outerspread", "spread", "--graph", "star:10"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.strip().endswith("6.000000000000")
