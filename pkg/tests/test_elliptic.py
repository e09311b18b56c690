"""Elliptic engine: invariants, wp/zeta values, combinations, antiderivatives."""

import numpy as np

from afront.elliptic import (
    EllipticCombination,
    EllipticFunction,
    lattice_invariants,
    wp_eval,
    zeta_eval,
)
from afront.errors import InvalidModulus, PoleAt

RNG = np.random.default_rng(7)

TAUS = [1j, np.exp(1j * np.pi / 3), 0.3 + 1.2j]


def random_torus_points(lat, n, margin=0.08):
    pts = []
    while len(pts) < n:
        z = RNG.uniform(0.02, 0.98) + RNG.uniform(0.02, 0.98) * lat.tau
        if lat.distance_to_lattice(z) > margin:
            pts.append(z)
    return np.array(pts)


# -- invariants ---------------------------------------------------------------------


def test_square_torus_values():
    lat = lattice_invariants(1j)
    assert abs(lat.g3) < 1e-10
    assert abs(lat.g2.imag) < 1e-10 and lat.g2.real > 0
    assert abs(lat.eta1 - np.pi) < 1e-8
    assert abs(lat.eta2 + 1j * np.pi) < 1e-8


def test_equilateral_torus_values():
    lat = lattice_invariants(np.exp(1j * np.pi / 3))
    assert abs(lat.g2) < 1e-10
    assert abs(lat.g3.imag) < 1e-10 and lat.g3.real > 0
    assert abs(lat.eta1 - 2 * np.pi / np.sqrt(3)) < 1e-8


def test_legendre_identity():
    for tau in TAUS + [0.5 + 0.8j, -0.4 + 0.6j]:
        lat = lattice_invariants(tau)
        assert abs(lat.eta1 * lat.tau - lat.eta2 - 2j * np.pi) < 1e-9


def test_invalid_modulus():
    for bad in (0.5, 1.0 - 0.2j, 0j):
        try:
            lattice_invariants(bad)
            assert False, f"expected InvalidModulus for {bad}"
        except InvalidModulus:
            pass


def test_truncation_doubling():
    for tau in TAUS:
        a = lattice_invariants(tau)
        b = lattice_invariants(tau, rows=2 * a.rows)
        assert abs(a.g2 - b.g2) < 1e-9 * max(1.0, abs(a.g2))
        assert abs(a.g3 - b.g3) < 1e-9 * max(1.0, abs(a.g3))


def test_g2_g2_sixty_g4():
    lat = lattice_invariants(0.3 + 1.2j)
    assert abs(lat.g2 - 60 * lat.G4) < 1e-14 * abs(lat.g2)
    assert abs(lat.g3 - 140 * lat.G6) < 1e-14 * abs(lat.g3)


# -- wp ------------------------------------------------------------------------------


def test_wp_differential_equation():
    lat = lattice_invariants(1j)
    z = 0.3 + 0.2j
    p = wp_eval(lat, z)
    p1 = wp_eval(lat, z, 1)
    resid = p1**2 - (4 * p**3 - lat.g2 * p - lat.g3)
    assert abs(resid) < 1e-8 * max(1.0, abs(p1) ** 2)


def test_wp_ode_random_points():
    for tau in TAUS:
        lat = lattice_invariants(tau)
        z = random_torus_points(lat, 50)
        p = lat.wp(z)
        p1 = lat.wp(z, derivative=1)
        resid = np.abs(p1**2 - (4 * p**3 - lat.g2 * p - lat.g3))
        scale = np.maximum(1.0, np.abs(p1) ** 2)
        assert np.max(resid / scale) < 1e-8


def test_half_period_values_sum_to_zero():
    lat = lattice_invariants(1j)
    e1, e2, e3 = lat.half_period_values()
    assert abs(e1 + e2 + e3) < 1e-8


def test_g2_g3_from_half_period_values():
    lat = lattice_invariants(1j)
    e1, e2, e3 = lat.half_period_values()
    g2 = -4 * (e1 * e2 + e2 * e3 + e3 * e1)
    g3 = 4 * e1 * e2 * e3
    assert abs(g2 - lat.g2) < 1e-7 * abs(lat.g2)
    assert abs(g3 - lat.g3) < 1e-7 * max(1.0, abs(lat.g3))


def test_double_periodicity():
    for tau in TAUS:
        lat = lattice_invariants(tau)
        z = random_torus_points(lat, 20)
        for shift in (1.0, tau):
            d = np.abs(lat.wp(z + shift) - lat.wp(z))
            assert np.max(d) < 1e-9 * np.max(np.maximum(1.0, np.abs(lat.wp(z))))


def test_parity():
    lat = lattice_invariants(0.3 + 1.2j)
    z = random_torus_points(lat, 12)
    assert np.max(np.abs(lat.wp(-z) - lat.wp(z))) < 1e-9 * np.max(np.abs(lat.wp(z)))
    assert np.max(np.abs(lat.wp(-z, 1) + lat.wp(z, 1))) < 1e-9 * np.max(
        np.abs(lat.wp(z, 1))
    )
    assert np.max(np.abs(lat.zeta(-z) + lat.zeta(z))) < 1e-9 * np.max(
        np.maximum(1.0, np.abs(lat.zeta(z)))
    )


def test_wp_higher_derivatives_are_identities():
    lat = lattice_invariants(np.exp(1.4j))
    z = 0.31 + 0.22j
    p = wp_eval(lat, z)
    p1 = wp_eval(lat, z, 1)
    assert abs(wp_eval(lat, z, 2) - (6 * p**2 - lat.g2 / 2)) < 1e-12 * abs(p) ** 2
    assert abs(wp_eval(lat, z, 3) - 12 * p * p1) < 1e-12 * abs(p * p1)


def test_pole_guard():
    lat = lattice_invariants(1j)
    for bad in (0j, 1.0 + 0j, 1e-9 + 1e-9j):
        try:
            wp_eval(lat, bad)
            assert False, "expected PoleAt"
        except PoleAt:
            pass
    try:
        zeta_eval(lat, 1.0 + 1j)
        assert False, "expected PoleAt"
    except PoleAt:
        pass


# -- zeta ----------------------------------------------------------------------------


def test_zeta_normalization_at_origin():
    lat = lattice_invariants(1j)
    z = 0.001
    assert abs(lat.zeta(z) - 1.0 / z) < 1e-5


def test_zeta_quasi_periods():
    lat = lattice_invariants(1j)
    for z in (0.2 + 0.3j, 0.4 + 0.1j):
        assert abs(lat.zeta(z + 1) - lat.zeta(z) - lat.eta1) < 1e-9
        assert abs(lat.zeta(z + lat.tau) - lat.zeta(z) - lat.eta2) < 1e-9


def test_zeta_derivative_is_minus_wp():
    lat = lattice_invariants(0.3 + 1.2j)
    h = 1e-6
    for z in (0.31 + 0.4j, 0.6 + 0.7j):
        fd = (lat.zeta(z + h) - lat.zeta(z - h)) / (2 * h)
        assert abs(fd + lat.wp(z)) < 1e-6 * max(1.0, abs(lat.wp(z)))


# -- combinations and the (P, Q) algebra ----------------------------------------------


def test_combination_constant():
    lat = lattice_invariants(1j)
    f = EllipticCombination(lat, (), 5.0 + 0j)
    assert abs(f(0.3 + 0.4j) - 5.0) < 1e-14


def test_combination_single_term_matches_wp_eval():
    lat = lattice_invariants(1j)
    z = 0.27 + 0.33j
    for k in range(4):
        f = EllipticCombination(lat, ((k, 1.0 + 0j),))
        assert abs(f(z) - wp_eval(lat, z, k)) < 1e-10 * max(1.0, abs(wp_eval(lat, z, k)))


def test_combination_periodicity():
    lat = lattice_invariants(np.exp(1.37j))
    f = EllipticCombination(lat, ((0, 2.0 + 0j),))
    z = 0.21 + 0.37j
    assert abs(f(z + 1) - f(z)) < 1e-9 * max(1.0, abs(f(z)))


def test_derivative_closure():
    lat = lattice_invariants(1j)
    f = EllipticCombination(lat, ((2, 1.0 + 0j), (0, 0.5 + 0j))).to_function()
    df = f.derivative()
    h = 1e-6
    z = 0.31 + 0.24j
    fd = (f(z + h) - f(z - h)) / (2 * h)
    assert abs(df(z) - fd) < 1e-5 * max(1.0, abs(fd))


def test_pole_orders():
    lat = lattice_invariants(1j)
    wp = EllipticCombination(lat, ((0, 1.0 + 0j),)).to_function()
    wp1 = EllipticCombination(lat, ((1, 1.0 + 0j),)).to_function()
    combo = EllipticCombination(lat, ((1, 2.0 + 0j), (0, 1.0 + 0j))).to_function()
    assert wp.pole_order() == 2
    assert wp1.pole_order() == 3
    assert combo.pole_order() == 3
    assert (wp * wp).pole_order() == 4
    assert (wp * wp1).pole_order() == 5


def test_antiderivative_matches_function():
    lat = lattice_invariants(np.exp(1.37j))
    f = (
        EllipticCombination(lat, ((1, 1.3 + 0j), (0, -0.4 + 0.2j))).to_function()
        * EllipticCombination(lat, ((1, 2.0 + 0j),)).to_function()
    )
    H = f.antiderivative()
    h = 1e-6
    for z in (0.31 + 0.27j, 0.62 + 0.55j):
        fd = (H(z + h) - H(z - h)) / (2 * h)
        assert abs(fd - f(z)) < 1e-5 * max(1.0, abs(f(z)))


def test_quadrature_matches_closed_form_antiderivative():
    # straight-segment quadrature oracle against the closed form
    lat = lattice_invariants(1j)
    F = EllipticCombination(lat, ((1, 1.0 + 0j), (0, 0.7 + 0j))).to_function()
    G1 = EllipticCombination(lat, ((1, 1.5 + 0j),)).to_function()
    f = F * G1
    H = f.antiderivative()
    z0, z1 = 0.31 + 0.22j, 0.68 + 0.61j
    x, w = np.polynomial.legendre.leggauss(32)
    total = 0j
    edges = np.linspace(0.0, 1.0, 33)
    for a, b in zip(edges[:-1], edges[1:]):
        t = a + (b - a) * 0.5 * (x + 1.0)
        zz = z0 + t * (z1 - z0)
        total += (b - a) * 0.5 * np.sum(w * f(zz)) * (z1 - z0)
    closed = H(z1) - H(z0)
    assert abs(total - closed) < 1e-8 * max(1.0, abs(closed))
