"""Genus-1 construction: the period functions, their root, and the surfaces.

For tau = e^(i alpha) set

    p1(alpha) = 2 g2 eta1 - 3 g3,
    p2(alpha) = 2 g2 eta2 - 3 g3 tau,
    P(alpha)  = Im( conj(p1) p2 ).

P changes sign between pi/3 and pi/2; at the bisected root alpha0, the
choice c = i conj(p1(alpha0)) makes both closed-form periods of F dG for
F = a wp' + b wp, G = c wp purely imaginary, which is the period condition.
A second fixed construction lives on the square torus: F = wp'' +
(5 g2 / 7 pi) wp, G = wp', with mapping degree 5.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .elliptic import EllipticCombination, Lattice, lattice_invariants
from .errors import BracketLost, NotBothZero
from .surface import DomainSpec, WeierstrassData, validate

__all__ = [
    "Genus1PeriodPair",
    "period_pair",
    "solve_alpha0",
    "choose_c",
    "build_genus1_8pi",
    "build_genus1_10pi",
    "continue_genus1",
]


@dataclass(frozen=True)
class Genus1PeriodPair:
    alpha: float
    p1: complex
    p2: complex
    P: float


def _pair_from_lattice(lat: Lattice):
    p1 = 2.0 * lat.g2 * lat.eta1 - 3.0 * lat.g3
    p2 = 2.0 * lat.g2 * lat.eta2 - 3.0 * lat.g3 * lat.tau
    return p1, p2


def period_pair(alpha: float) -> Genus1PeriodPair:
    """p1, p2 and P = Im(conj(p1) p2) for the unit-circle modulus e^(i alpha)."""
    alpha = float(alpha)
    lat = lattice_invariants(np.exp(1j * alpha))
    p1, p2 = _pair_from_lattice(lat)
    scale = max(abs(lat.g2), abs(lat.g3), 1.0)
    if abs(p1) < 1e-9 * scale and abs(p2) < 1e-9 * scale:
        raise NotBothZero(
            "p1 and p2 vanish together only on the equianharmonic lattice, "
            "which the Legendre identity excludes"
        )
    return Genus1PeriodPair(alpha, complex(p1), complex(p2), float(np.imag(np.conj(p1) * p2)))


def P_of_alpha(alpha: float) -> float:
    return period_pair(alpha).P


def P_of_tau(tau: complex) -> float:
    """The same quantity as a function on the upper half plane."""
    lat = lattice_invariants(tau)
    p1, p2 = _pair_from_lattice(lat)
    return float(np.imag(np.conj(p1) * p2))


def solve_alpha0(tol: float = 1e-12) -> float:
    """Bisect P on [pi/3, pi/2] down to the given bracket width."""
    a, b = np.pi / 3.0, np.pi / 2.0
    fa, fb = P_of_alpha(a), P_of_alpha(b)
    if not (fa > 0 > fb):
        raise BracketLost(
            f"expected P(pi/3) > 0 > P(pi/2), got {fa:.6g}, {fb:.6g}"
        )
    while b - a > tol:
        m = 0.5 * (a + b)
        fm = P_of_alpha(m)
        if fm == 0.0:
            return m
        if fa * fm > 0:
            a, fa = m, fm
        else:
            b = m
    return 0.5 * (a + b)


@lru_cache(maxsize=1)
def _alpha0_default() -> float:
    return solve_alpha0()


def choose_c(alpha0: float) -> complex:
    """c = i conj(p1), falling back to i conj(p2) only when p1 vanishes."""
    pair = period_pair(alpha0)
    scale = max(abs(pair.p1), abs(pair.p2))
    if abs(pair.p1) > 1e-9 * scale:
        return 1j * np.conj(pair.p1)
    return 1j * np.conj(pair.p2)


def build_genus1_8pi(a: float = 1.0, b: complex = 0j, alpha0=None) -> WeierstrassData:
    """Total curvature -8 pi, genus 1: F = a wp' + b wp, G = c wp.

    a must be positive; b is free (its contribution to F dG is elliptic and
    carries no period).  The modulus is e^(i alpha0) with the solved root,
    c = i conj(p1(alpha0)); the period condition then holds by construction
    independently of a.
    """
    if not (np.isreal(a) and float(np.real(a)) > 0):
        raise ValueError("a must be a positive real number")
    a = float(np.real(a))
    if alpha0 is None:
        alpha0 = _alpha0_default()
    lat = lattice_invariants(np.exp(1j * alpha0))
    c = choose_c(alpha0)
    F = EllipticCombination(lat, ((1, a + 0j), (0, complex(b))))
    G = EllipticCombination(lat, ((0, c),))
    data = WeierstrassData(DomainSpec("torus", (0j,), lat.tau), F, G)
    return validate(data)


def build_genus1_10pi() -> WeierstrassData:
    """Total curvature -10 pi on the square torus: F = wp'' + (5 g2/7 pi) wp,
    G = wp'."""
    lat = lattice_invariants(1j)
    k = 5.0 * lat.g2 / (7.0 * np.pi)
    F = EllipticCombination(lat, ((2, 1.0 + 0j), (0, complex(k))))
    G = EllipticCombination(lat, ((1, 1.0 + 0j),))
    data = WeierstrassData(DomainSpec("torus", (0j,), lat.tau), F, G)
    return validate(data)


def continue_genus1(steps: int = 10, step: float = 0.02, alpha0=None):
    """Trace the zero curve of P through e^(i alpha0) off the unit circle.

    Predictor-corrector continuation: step along the tangent of the zero
    set of P as a function on the upper half plane, then correct with a
    two-variable Newton step toward P = 0.  Returns a list of dicts with
    tau, the matching c, and the residual |P(tau)|.
    """
    if alpha0 is None:
        alpha0 = _alpha0_default()
    tau = np.exp(1j * alpha0)
    h = 1e-6
    out = []

    def grad(t):
        gx = (P_of_tau(t + h) - P_of_tau(t - h)) / (2 * h)
        gy = (P_of_tau(t + 1j * h) - P_of_tau(t - 1j * h)) / (2 * h)
        return gx, gy

    for _ in range(steps):
        gx, gy = grad(tau)
        norm2 = gx * gx + gy * gy
        # tangent of the level set, oriented to move off the unit circle
        tx, ty = -gy, gx
        radial = tx * tau.real + ty * tau.imag
        if radial < 0:
            tx, ty = -tx, -ty
        tau = tau + step * (tx + 1j * ty) / np.sqrt(norm2)
        for _ in range(6):
            val = P_of_tau(tau)
            gx, gy = grad(tau)
            norm2 = gx * gx + gy * gy
            tau = tau - val * (gx + 1j * gy) / norm2
            if abs(val) < 1e-4:
                break
        lat = lattice_invariants(tau)
        p1, p2 = _pair_from_lattice(lat)
        big = max(abs(p1), abs(p2))
        c = 1j * np.conj(p1) if abs(p1) > 1e-9 * big else 1j * np.conj(p2)
        out.append(
            {
                "tau": complex(tau),
                "c": complex(c),
                "P_residual": abs(P_of_tau(tau)),
                "abs_tau": abs(tau),
            }
        )
    return out
