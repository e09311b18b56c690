"""Period condition Re of the loop integral of F dG = 0, two ways.

Every cycle gets a closed-form value (2 pi i times a residue for genus 0,
quasi-period combinations of the closed-form antiderivative for the torus)
and an independent composite Gauss-Legendre quadrature value.  The report
carries both so the oracle never collapses into the thing it checks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import PoleOnCycle
from .rational import INF, residue

__all__ = [
    "CircleCycle",
    "SegmentCycle",
    "PeriodReport",
    "contour_integral",
    "check_period_condition",
    "torus_closed_form_periods",
]


class CircleCycle:
    """Positively oriented circle, parametrized over t in [0, 1]."""

    def __init__(self, center, radius):
        self.center = complex(center)
        self.radius = float(radius)

    def at(self, t):
        w = np.exp(2j * np.pi * t)
        return self.center + self.radius * w, 2j * np.pi * self.radius * w

    def describe(self):
        return f"circle({self.center:.6g}, r={self.radius:.4g})"


class SegmentCycle:
    """Straight segment, closed as a cycle on the torus."""

    def __init__(self, z0, z1):
        self.z0 = complex(z0)
        self.z1 = complex(z1)

    def at(self, t):
        d = self.z1 - self.z0
        return self.z0 + t * d, np.full_like(np.asarray(t, dtype=complex), d)

    def describe(self):
        return f"segment({self.z0:.6g} -> {self.z1:.6g})"


_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(16)
_GL_T = 0.5 * (_GL_NODES + 1.0)
_GL_W = 0.5 * _GL_WEIGHTS


def _quad(func, cycle, panels):
    total = 0j
    edges = np.linspace(0.0, 1.0, panels + 1)
    for a, b in zip(edges[:-1], edges[1:]):
        t = a + (b - a) * _GL_T
        z, dz = cycle.at(t)
        total += (b - a) * np.sum(_GL_W * func(z) * dz)
    return total


def _integrand(data):
    F, dG = data.F, data.dG()
    return lambda z: np.asarray(F(z)) * np.asarray(dG(z))


def _min_pole_distance(data, cycle, samples=257):
    t = np.linspace(0.0, 1.0, samples)
    z, _ = cycle.at(t)
    if data.domain.kind == "torus":
        return float(np.min(data.lattice.distance_to_lattice(z)))
    dmin = np.inf
    for p in data.domain.finite_ends():
        dmin = min(dmin, float(np.min(np.abs(z - p))))
    return dmin


def contour_integral(data, cycle, n=8, tol=1e-10, max_doublings=7):
    """Loop integral of F dG by adaptive composite Gauss-Legendre panels.

    Panels are doubled until two refinements agree to tol (scaled);
    raises PoleOnCycle when the path comes within 1e-3 of a pole.
    """
    if _min_pole_distance(data, cycle) < 1e-3:
        raise PoleOnCycle(f"{cycle.describe()} approaches a pole of F dG")
    f = _integrand(data)
    val = _quad(f, cycle, n)
    for _ in range(max_doublings):
        n *= 2
        nxt = _quad(f, cycle, n)
        if abs(nxt - val) < tol * max(1.0, abs(nxt)):
            return nxt
        val = nxt
    return val


@dataclass(frozen=True)
class PeriodEntry:
    cycle: str
    closed_form: complex
    numeric: complex
    re_abs: float


@dataclass(frozen=True)
class PeriodReport:
    entries: tuple
    passed: bool
    tolerance: float

    def worst(self):
        vals = [e.re_abs for e in self.entries]
        for e in self.entries:
            if e.closed_form is not None:
                vals.append(abs(e.closed_form.real))
        return max(vals) if vals else 0.0

    def to_json(self):
        return {
            "passed": bool(self.passed),
            "tolerance": self.tolerance,
            "entries": [
                {
                    "cycle": e.cycle,
                    "re": e.re_abs,
                    "value": [e.numeric.real, e.numeric.imag],
                    "closed_form": (
                        None
                        if e.closed_form is None
                        else [e.closed_form.real, e.closed_form.imag]
                    ),
                }
                for e in self.entries
            ],
        }


def _puncture_radius(p, finite, default=1.0):
    others = [q for q in finite if abs(q - p) > 1e-12]
    if not others:
        return default
    return 0.5 * min(abs(q - p) for q in others)


def check_period_condition(data, tol=1e-8) -> PeriodReport:
    """Verify Re of every period of F dG vanishes.

    Genus 0: one loop per finite puncture; the closed form is
    2 pi i Res(F G', p), so the condition is that every residue is real.
    Genus 1: the two fundamental cycles gamma_1(t) = 1/4 + tau t and
    gamma_2(t) = t + tau/4 plus a loop around the puncture; closed forms
    come from the quasi-period increments of the antiderivative.
    """
    entries = []
    if data.domain.kind == "torus":
        tau = data.domain.tau
        H = data.height_antiderivative()
        cycles = [
            ("gamma1", SegmentCycle(0.25, 0.25 + tau), H.lattice_period(2)),
            ("gamma2", SegmentCycle(0.25 * tau, 1.0 + 0.25 * tau), H.lattice_period(1)),
            ("puncture:0", CircleCycle(0.0, 0.25), 0j),
        ]
        for name, cyc, closed in cycles:
            num = contour_integral(data, cyc)
            entries.append(
                PeriodEntry(name, complex(closed), complex(num), abs(num.real))
            )
    else:
        fg = data.F * data.dG()
        finite = data.domain.finite_ends()
        for idx, p in enumerate(finite):
            closed = 2j * np.pi * residue(fg, p)
            cyc = CircleCycle(p, _puncture_radius(p, finite))
            num = contour_integral(data, cyc)
            entries.append(
                PeriodEntry(
                    f"puncture:{idx}", complex(closed), complex(num), abs(num.real)
                )
            )
    ok = all(
        e.re_abs <= tol * max(1.0, abs(e.numeric))
        and abs(e.closed_form.real) <= tol * max(1.0, abs(e.closed_form))
        for e in entries
    )
    return PeriodReport(entries=tuple(entries), passed=ok, tolerance=tol)


def torus_closed_form_periods(a, b, c, lattice):
    """Periods of F dG for F = a wp' + b wp, G = c wp along the two cycles.

    A1 = (1/5) a c (2 g2 eta2 - 3 g3 tau) along gamma_1,
    A2 = (1/5) a c (2 g2 eta1 - 3 g3) along gamma_2; the b part is elliptic
    and contributes nothing.
    """
    g2, g3 = lattice.g2, lattice.g3
    a, c = complex(a), complex(c)
    A1 = 0.2 * a * c * (2.0 * g2 * lattice.eta2 - 3.0 * g3 * lattice.tau)
    A2 = 0.2 * a * c * (2.0 * g2 * lattice.eta1 - 3.0 * g3)
    return A1, A2
