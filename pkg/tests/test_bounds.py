import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from outerspread.bounds import (
    LemmaCheck, b_set_diagnostic, bound_suite, degree_bound_diagnostic, entry_estimate_residual, find_hub,
    loglog_slope, reattach, refined_eigenvalue_prediction, residual_scan, star_reattach, valid_reattach_targets,
)
from outerspread.enumeration import enumerate_outerplanar
from outerspread.graph import (
    complete, cycle, disjoint_union, fan, join, linear_forest, path, random_linear_forest, random_outerplanar, star,
    wheel,
)
from outerspread.spectra import extremal_pairs, spread


def by_name(checks):
    return {c.name: c for c in checks}


def test_lemma_check_orientation():
    c = LemmaCheck.upper("x", 1.0, 2.0)
    assert c.margin == 1.0 and c.holds
    c = LemmaCheck.lower("x", 1.0, 2.0)
    assert c.margin == -1.0 and not c.holds
    assert LemmaCheck.upper("x", 2.0 + 5e-10, 2.0).holds


def test_suite_on_fan_100():
    c = by_name(bound_suite(fan(100)))
    assert c["lambda1<=sqrt(n)+1"].holds
    assert c["lambda1<=sqrt(n)+1"].rhs == 11.0
    assert all(ch.holds for ch in c.values())


def test_suite_on_star():
    c = by_name(bound_suite(star(100)))
    lam = c["|lambda_n|<=sqrt(n-1)+2"].lhs
    assert lam == pytest.approx(math.sqrt(99), abs=1e-9)
    assert c["|lambda_n|>=sqrt(n-1)-2"].holds


def test_extremal_only_checks_reported_not_raised():
    c = by_name(bound_suite(path(20)))
    for name in ("|lambda_n|>=sqrt(n-1)-2", "lambda1>=sqrt(n-1)-2"):
        assert c[name].extremal_only and not c[name].holds
    assert all(ch.holds for ch in c.values() if not ch.extremal_only)
    # on P10 the window is loose enough that both lower bounds hold
    c = by_name(bound_suite(path(10)))
    assert c["lambda1>=sqrt(n-1)-2"].holds


def test_suite_rejects_bad_input():
    with pytest.raises(ValueError):
        bound_suite(complete(4))
    with pytest.raises(ValueError):
        bound_suite(disjoint_union(path(3), path(3)))


def test_universal_checks_on_enumeration():
    for n in range(2, 8):
        for g in enumerate_outerplanar(n):
            assert all(c.holds for c in bound_suite(g) if not c.extremal_only)


def test_entry_residual_star_exact():
    for n in (10, 17, 64, 200):
        r = entry_estimate_residual(star(n))
        assert r.max_res_z <= 1e-8 and r.max_res_x <= 1e-8


def test_entry_residual_fan():
    r = entry_estimate_residual(fan(100))
    assert r.hub == 0 and r.w == 0
    assert r.max_res_z < 5 * 100 ** -1.5 * 10
    with pytest.raises(ValueError):
        entry_estimate_residual(path(12))
    with pytest.raises(ValueError):
        entry_estimate_residual(fan(9))


def test_find_hub():
    assert find_hub(fan(8)) == 0
    assert find_hub(path(5)) is None
    assert find_hub(complete(3)) == 0


def test_refined_prediction():
    l1, ln = refined_eigenvalue_prediction(100, 98)
    assert l1 == pytest.approx(math.sqrt(99) + 98 / 99)
    assert ln == pytest.approx(-math.sqrt(99) + 98 / 99)
    l1, ln = refined_eigenvalue_prediction(50, 0)
    r = spread(star(50))
    assert (l1, ln) == pytest.approx((r.lambda1, r.lambda_n), abs=1e-9)
    for bad in ((10, -1), (10, 9), (1, 0)):
        with pytest.raises(ValueError):
            refined_eigenvalue_prediction(*bad)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 60), st.integers(0, 2**32 - 1))
def test_refined_prediction_brackets(n, seed):
    spec = random_linear_forest(n - 1, np.random.default_rng(seed))
    r = spread(join(complete(1), linear_forest(spec)))
    l1, ln = refined_eigenvalue_prediction(n, spec.m)
    assert r.lambda_n <= ln + 1e-9
    assert r.lambda1 >= l1 - 1e-9


def test_degree_diagnostic():
    n = 50
    d = degree_bound_diagnostic(star(n))
    # hub slack is -1/sqrt(n); each leaf sits lower at (1 - n/sqrt(n-1))/sqrt(n)
    leaf = (1 - n / math.sqrt(n - 1)) / math.sqrt(n)
    assert d.min_slack_x == pytest.approx(leaf, abs=1e-9)
    assert d.min_slack_z == pytest.approx(leaf, abs=1e-9)
    assert d.argmin_x != 0
    d = degree_bound_diagnostic(path(10))
    assert math.isfinite(d.min_slack_x) and math.isfinite(d.min_slack_z)


def test_b_set():
    b = b_set_diagnostic(path(5))
    assert b.w == 2 and b.B == (0, 4)
    for spec in ([5], [3, 2, 1], [1, 1, 1]):
        b = b_set_diagnostic(join(complete(1), linear_forest(spec)))
        assert b.B == () and b.sum_abs_z == 0.0 and b.sum_x == 0.0


def test_reattach_graph():
    h = reattach(path(4), 3, 1)
    assert sorted(h.edges()) == [(0, 1), (1, 2), (1, 3)]
    assert valid_reattach_targets(path(4), 1) == [3]


def test_star_reattach_path4():
    r = star_reattach(path(4), 3)
    assert r.w == 1
    assert r.actual_delta >= r.predicted_delta - 1e-8
    assert r.certified


def test_star_reattach_errors():
    with pytest.raises(ValueError):
        star_reattach(fan(8), 3)  # every vertex touches the hub
    with pytest.raises(ValueError):
        star_reattach(path(4), 1)
    with pytest.raises(ValueError):
        star_reattach(path(4), 9)
    with pytest.raises(ValueError):
        star_reattach(disjoint_union(path(2), path(2)), 3)


@settings(max_examples=150, deadline=None)
@given(st.integers(3, 12), st.integers(0, 2**32 - 1))
def test_star_reattach_certificate(n, seed):
    rng = np.random.default_rng(seed)
    g = random_outerplanar(n, rng)
    ts = valid_reattach_targets(g, extremal_pairs(g).w)
    if not ts:
        return
    r = star_reattach(g, int(rng.choice(ts)))
    assert r.actual_delta >= r.predicted_delta - 1e-8


def test_loglog_slope():
    ns = [10, 20, 40, 80]
    assert loglog_slope(ns, [n ** -1.5 for n in ns]) == pytest.approx(-1.5)


def test_residual_scan_small():
    rows, summary = residual_scan([32, 64, 128])
    assert [r["n"] for r in rows] == [32, 64, 128]
    assert summary["slope_z"] < -1.0
    assert summary["c_z"] >= max(r["c_z"] for r in rows) - 1e-15
    assert residual_scan([])[0] == []


def test_wheel_not_accepted_by_diagnostics():
    with pytest.raises(ValueError):
        degree_bound_diagnostic(wheel(8))
