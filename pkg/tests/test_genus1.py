"""Genus-1 period solve: the root alpha0, coefficient c, and both torus surfaces."""

import numpy as np

from afront.elliptic import lattice_invariants
from afront.ends import classify_end, end_orders, osserman_report
from afront.genus1 import (
    P_of_alpha,
    build_genus1_8pi,
    build_genus1_10pi,
    choose_c,
    continue_genus1,
    period_pair,
    solve_alpha0,
)
from afront.periods import check_period_condition
from afront.surface import total_curvature


def test_bracket_closed_forms():
    lat3 = lattice_invariants(np.exp(1j * np.pi / 3))
    p3 = period_pair(np.pi / 3)
    expected = 9 * np.sqrt(3) / 2 * lat3.g3.real**2
    assert abs(p3.P - expected) < 1e-6 * abs(expected)
    assert p3.P > 0

    lat2 = lattice_invariants(1j)
    p2 = period_pair(np.pi / 2)
    expected2 = -4 * lat2.g2.real**2 * np.pi**2
    assert abs(p2.P - expected2) < 1e-6 * abs(expected2)
    assert p2.P < 0


def test_alpha0_reference_value():
    alpha0 = solve_alpha0()
    assert abs(alpha0 - 1.37048) < 1e-3


def test_sign_change_around_root():
    alpha0 = solve_alpha0()
    assert P_of_alpha(alpha0 - 0.01) > 0
    assert P_of_alpha(alpha0 + 0.01) < 0


def test_period_function_slope_at_root():
    # regression pin for the finite-difference slope of P at the root;
    # consistent with the analytic modular-derivative computation
    alpha0 = solve_alpha0()
    h = 1e-5
    slope = (P_of_alpha(alpha0 + h) - P_of_alpha(alpha0 - h)) / (2 * h)
    assert abs(slope + 1.31499e7) < 0.01 * 1.31499e7


def test_choose_c_reference_value():
    alpha0 = solve_alpha0()
    c = choose_c(alpha0)
    ref = 1265.89 + 370.33j
    assert abs(c.real - ref.real) < 0.01 * abs(ref.real)
    assert abs(c.imag - ref.imag) < 0.01 * abs(ref.imag)


def test_p1_p2_never_both_vanish():
    for alpha in np.linspace(0.4, np.pi - 0.4, 25):
        pair = period_pair(alpha)
        assert max(abs(pair.p1), abs(pair.p2)) > 1e-6


def test_P_continuity_scan():
    alphas = np.linspace(0.1, np.pi - 0.1, 200)
    vals = np.array([P_of_alpha(a) for a in alphas])
    d = np.abs(np.diff(vals))
    # no isolated jump wildly above the local secant scale
    local = np.maximum(np.abs(vals[:-1]), np.abs(vals[1:])) + 1.0
    assert np.all(d < 50 * local)


def test_root_stability_under_truncation():
    a1 = solve_alpha0()

    # re-solve with doubled Eisenstein rows by monkeypatching the default
    import afront.genus1 as g1
    import afront.elliptic as ell

    orig = ell.Lattice.__init__

    def patched(self, tau, rows=None):
        if rows is None:
            rows = 2 * max(12, int(np.ceil(7.0 / complex(tau).imag)))
        orig(self, tau, rows=rows)

    ell.Lattice.__init__ = patched
    try:
        a2 = g1.solve_alpha0()
    finally:
        ell.Lattice.__init__ = orig
    assert abs(a1 - a2) < 1e-6


def test_build_8pi():
    data = build_genus1_8pi(a=1.0, b=0j)
    report = check_period_condition(data)
    assert report.passed
    deg, tc = total_curvature(data)
    assert deg == 4 and abs(tc + 8 * np.pi) < 1e-12
    assert end_orders(data, 0j) == (-3, -2)
    rep = classify_end(data, 0j)
    assert not rep.embedded
    ledger = osserman_report(data)
    assert ledger.deg_rho == 4 and ledger.rhs == 2 and not ledger.equality


def test_8pi_b_term_carries_no_period():
    r0 = check_period_condition(build_genus1_8pi(a=1.0, b=0j))
    r1 = check_period_condition(build_genus1_8pi(a=1.0, b=1.0 + 0j))
    for e0, e1 in zip(r0.entries, r1.entries):
        assert abs(e0.closed_form.real - e1.closed_form.real) < 1e-9
        assert abs(e0.numeric.real - e1.numeric.real) < 1e-7


def test_build_8pi_rejects_bad_a():
    for bad in (0.0, -1.0, 1j):
        try:
            build_genus1_8pi(a=bad)
            assert False, f"expected rejection of a={bad}"
        except ValueError:
            pass


def test_build_10pi():
    data = build_genus1_10pi()
    report = check_period_condition(data)
    assert report.passed
    for e in report.entries:
        assert abs(e.numeric.real) < 1e-6
    deg, tc = total_curvature(data)
    assert deg == 5 and abs(tc + 10 * np.pi) < 1e-12
    assert end_orders(data, 0j) == (-4, -3)
    ledger = osserman_report(data)
    assert ledger.deg_rho == 5 and ledger.rhs == 2


def test_continuation_traces_family():
    fam = continue_genus1(steps=4, step=0.02)
    assert len(fam) == 4
    for f in fam:
        assert f["P_residual"] < 1e-3
        assert f["tau"].imag > 0
    # the modulus genuinely leaves the unit circle
    assert abs(fam[-1]["abs_tau"] - 1.0) > 0.05
