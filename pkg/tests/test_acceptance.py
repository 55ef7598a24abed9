"""End-to-end acceptance checks, one test per criterion.

Each test prints a single ``criterion N: PASS|FAIL`` line (also collected into
the terminal summary) before asserting.
"""

import math
import time

import networkx as nx
import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from outerspread.bounds import residual_scan, star_reattach, valid_reattach_targets
from outerspread.cli import main
from outerspread.enumeration import enumerate_outerplanar
from outerspread.graph import (
    complete, fan, from_edges, join, linear_forest, random_linear_forest, random_outerplanar, star, wheel,
)
from outerspread.minors import K4, K23, has_minor
from outerspread.search import exhaustive_max_spread, fan_family_max, fan_structure
from outerspread.spectra import extremal_pairs, fan_spread_lower_bound, spread

from oracles import all_labeled_graphs, apex_planar_outerplanar, brute_canonical

pytestmark = pytest.mark.slow

GRID = [64, 128, 256, 512, 1024]


def report(num: int, ok: bool, detail: str, started: float) -> None:
    line = f"criterion {num}: {'PASS' if ok else 'FAIL'} ({detail}; {time.time() - started:.1f}s)"
    print(line)
    ACCEPTANCE_LINES.append(line)


@pytest.fixture(scope="module")
def fan_residuals():
    t0 = time.time()
    rows, summary = residual_scan(GRID)
    return rows, summary, time.time() - t0


def test_criterion_1_exact_spectra():
    t0 = time.time()
    err_star = max(abs(spread(star(n)).spread - 2 * math.sqrt(n - 1)) for n in range(4, 201))
    err_wheel = max(abs(spread(wheel(n)).lambda1 - (math.sqrt(n) + 1)) for n in range(5, 201))
    ok = err_star <= 1e-9 and err_wheel <= 1e-9
    report(1, ok, f"max err star {err_star:.2e}, wheel {err_wheel:.2e}", t0)
    assert ok


def test_criterion_2_fan_spread_bound():
    t0 = time.time()
    worst_margin, worst_cert = math.inf, -math.inf
    for n in range(4, 501):
        s = spread(fan(n)).spread
        worst_margin = min(worst_margin, s - (2 * math.sqrt(n) - 1 / n))
        worst_cert = max(worst_cert, fan_spread_lower_bound(n) - s)
    ok = worst_margin >= 0 and worst_cert <= 1e-9
    report(2, ok, f"min margin {worst_margin:.3e}, max certificate excess {worst_cert:.3e}", t0)
    assert ok


def test_criterion_3_rayleigh_bracketing():
    t0 = time.time()
    rng = np.random.default_rng(3)
    worst = -math.inf
    for _ in range(200):
        n = int(rng.integers(4, 121))
        spec = random_linear_forest(n - 1, rng)
        r = spread(join(complete(1), linear_forest(spec)))
        base = spec.m / (n - 1)
        worst = max(worst, r.lambda_n - (-math.sqrt(n - 1) + base), (math.sqrt(n - 1) + base) - r.lambda1)
    ok = worst <= 1e-9
    report(3, ok, f"worst violation {worst:.3e}", t0)
    assert ok


def test_criterion_4_entry_estimate_scaling(fan_residuals):
    rows, summary, took = fan_residuals
    t0 = time.time() - took
    sz, sx = summary["slope_z"], summary["slope_x"]
    ok = abs(sz + 1.5) <= 0.2 and abs(sx + 1.5) <= 0.2
    report(4, ok, f"slope z {sz:.3f}, slope x {sx:.3f}, C_z {summary['c_z']:.3f}, C_x {summary['c_x']:.3f}", t0)
    assert ok


def test_criterion_5_refined_eigenvalue_scaling(fan_residuals):
    rows, summary, took = fan_residuals
    t0 = time.time() - took
    s1, sn = summary["slope_lambda1_per_m"], summary["slope_lambda_n_per_m"]
    ok = abs(s1 + 1.5) <= 0.2 and abs(sn + 1.5) <= 0.2
    report(5, ok, f"slope lambda1/m {s1:.3f}, lambda_n/m {sn:.3f}, C {summary['c_lambda1']:.3f}", t0)
    assert ok


def test_criterion_6_reattachment_certificate():
    t0 = time.time()
    rng = np.random.default_rng(6)
    cases = failures = 0
    while cases < 500:
        g = random_outerplanar(int(rng.integers(3, 13)), rng)
        ts = valid_reattach_targets(g, extremal_pairs(g).w)
        if not ts:
            continue
        r = star_reattach(g, int(rng.choice(ts)))
        cases += 1
        failures += r.actual_delta < r.predicted_delta - 1e-8
    ok = failures == 0
    report(6, ok, f"{cases} cases, {failures} failures", t0)
    assert ok


def test_criterion_7_enumeration_correctness():
    t0 = time.time()
    mismatches = []
    for n in range(1, 7):
        if n <= 5:
            oracle = len({brute_canonical(g) for g in all_labeled_graphs(n) if g.is_connected() and apex_planar_outerplanar(g)})
        else:
            oracle = sum(1 for h in nx.graph_atlas_g()[1:] if h.number_of_nodes() == n and nx.is_connected(h)
                         and apex_planar_outerplanar(from_edges(n, h.edges())))
        graphs = list(enumerate_outerplanar(n))
        valid = all(g.num_edges <= max(2 * n - 3, n - 1) and not has_minor(g, K4) and not has_minor(g, K23)
                    for g in graphs)
        if len(graphs) != oracle or not valid:
            mismatches.append(n)
    ok = not mismatches
    report(7, ok, "counts 1,1,2,5,13,46 match oracle" if ok else f"mismatch at n={mismatches}", t0)
    assert ok


def test_criterion_8_structure_findings():
    t0 = time.time()
    findings = []
    for n in range(5, 10):
        r = exhaustive_max_spread(n)
        st = fan_structure(r.best)
        findings.append(f"n={n}: hub={max(r.best.degrees()) == n - 1} forest={st} "
                        f"is_K1vP={st is not None and st.parts == (n - 1,)}")
    ratios = []
    for n in range(10, 81):
        ratios.append(fan_family_max(n, table_size=1).m_ratio)
    c = min(ratios)
    for line in findings:
        print(line)
    ok = c > 0
    report(8, ok, f"exhaustive n=5..9 [{'; '.join(findings)}]; fan family n=10..80 min m/n = {c:.4f}, "
                  f"max m/n = {max(ratios):.4f}", t0)
    assert ok


DETERMINISM_RUNS = [
    ["enumerate", "--n", "8", "--connected"],
    ["max-spread", "--n", "7", "8"],
    ["fan-scan", "--n", "12", "25", "--top", "40"],
    ["fan-scan", "--n", "40", "60", "--best-only"],
    ["conjecture", "--n-lo", "4", "--n-hi", "12", "--exhaustive-limit", "8"],
    ["check-bounds", "--n-max", "7"],
    ["climb", "--graph", "star:14", "--budget", "40", "--seed", "5"],
    ["spread", "--graph", "fan:30", "--format", "json"],
]


def test_criterion_9_determinism(tmp_path):
    t0 = time.time()
    differing = []
    for i, argv in enumerate(DETERMINISM_RUNS):
        outputs = []
        for workers in (1, 2, 3):
            target = tmp_path / f"run{i}_{workers}.out"
            assert main(argv + ["--workers", str(workers), "--output", str(target)]) == 0
            outputs.append(target.read_bytes())
        if len(set(outputs)) != 1:
            differing.append(argv[0])
    ok = not differing
    report(9, ok, f"{len(DETERMINISM_RUNS)} scans x workers 1,2,3 byte-identical" if ok else f"differ: {differing}", t0)
    assert ok


def test_criterion_10_spectral_radius(tmp_path):
    t0 = time.time()
    target = tmp_path / "radius.csv"
    code = main(["check-bounds", "--n-max", "9", "--output", str(target)])
    lines = target.read_text().splitlines()[1:]
    total = sum(int(l.split(",")[1]) for l in lines)
    min_margin = min(float(l.split(",")[4]) for l in lines)
    ok = code == 0
    report(10, ok, f"{total} graphs n<=9, violations={'none' if code == 0 else 'found'}, "
                   f"min margin {min_margin:.6f}, exit {code}", t0)
    assert ok
