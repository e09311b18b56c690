"""Surface objects built from Weierstrass data (F, G).

The immersion is

    psi = ( G + conj(F),  |G|^2/2 - |F|^2/2 + Re( G F - 2 int F dG ) )

into C x R.  The integral runs from a fixed base point; for rational data
it is evaluated through the closed-form partial-fraction antiderivative,
for torus data through the closed-form reduction to wp-polynomials, a
wp' part, zeta and a linear term.  Strict mode refuses evaluation when the
period condition fails, since the height would then depend on the path.
"""

from __future__ import annotations

import os
import warnings
from dataclasses import dataclass

import numpy as np

from .elliptic import (
    EllipticCombination,
    EllipticFunction,
    EllipticRatio,
    Lattice,
    common_zeros_xy,
)
from .errors import (
    ConstantG,
    NotRegularCurve,
    NotUnimodular,
    PeriodConditionViolated,
    PoleAt,
    PoleOffPuncture,
)
from .rational import (
    INF,
    RationalFunction,
    degree,
    eval_pole_terms,
    partial_fraction_antiderivative,
    residue,
)

__all__ = [
    "DomainSpec",
    "WeierstrassData",
    "PsiValue",
    "MetricSample",
    "validate",
    "evaluate_psi",
    "metrics_at",
    "gauss_map",
    "total_curvature",
    "singular_locus",
    "equiaffine_transform",
]

_MATCH_TOL = 1e-8


@dataclass(frozen=True)
class DomainSpec:
    """Domain description: a punctured sphere, plane or torus.

    kind "sphere":  Riemann sphere minus the listed punctures (INF allowed).
    kind "plane":   C minus the listed finite punctures; infinity is always
                    an end and is appended implicitly.
    kind "torus":   C/[1,tau] minus the lattice class [0].
    """

    kind: str
    punctures: tuple = ()
    tau: complex = None

    def __post_init__(self):
        if self.kind not in ("sphere", "plane", "torus"):
            raise ValueError(f"unknown domain kind {self.kind!r}")
        if self.kind == "torus":
            if self.tau is None:
                raise ValueError("torus domain needs tau")
        pts = tuple(self.punctures)
        for i, p in enumerate(pts):
            for q in pts[i + 1 :]:
                if p is INF or q is INF:
                    if p is INF and q is INF:
                        raise ValueError("duplicate puncture at infinity")
                elif abs(p - q) < _MATCH_TOL:
                    raise ValueError(f"punctures {p} and {q} coincide")
        if not self.ends():
            raise ValueError("at least one end is required")

    @property
    def genus(self):
        return 1 if self.kind == "torus" else 0

    def ends(self):
        """Full end list; for the plane kind infinity is an implicit end."""
        if self.kind == "torus":
            return (0j,)
        ends = tuple(self.punctures)
        if self.kind == "plane" and INF not in ends:
            ends = ends + (INF,)
        return ends

    def finite_ends(self):
        return tuple(p for p in self.ends() if p is not INF)


@dataclass(frozen=True)
class PsiValue:
    """One sample of the immersion: first two coordinates as a complex
    number, the real height, and the conormal part conj(F) - G."""

    x: complex
    x3: float
    N: complex

    def as_xyz(self):
        return (np.real(self.x), np.imag(self.x), self.x3)


@dataclass(frozen=True)
class MetricSample:
    ds2: float
    h: float
    dtau2: float
    K_tau: float


class WeierstrassData:
    """Domain plus the pair (F, G) and a base point for the height integral."""

    def __init__(self, domain: DomainSpec, F, G, base_point=None):
        self.domain = domain
        self.F = self._normalize(F)
        self.G = self._normalize(G)
        if domain.kind == "torus":
            for f in (self.F, self.G):
                if not isinstance(f, EllipticFunction):
                    raise TypeError("torus data needs elliptic F and G")
            if abs(self.F.lattice.tau - domain.tau) > 1e-12:
                raise ValueError("function lattice does not match domain tau")
        else:
            for f in (self.F, self.G):
                if not isinstance(f, RationalFunction):
                    raise TypeError("genus-0 data needs rational F and G")
        self.base_point = (
            complex(base_point) if base_point is not None else self._pick_base()
        )
        self._dF = None
        self._dG = None
        self._rho = None
        self._anti = None
        self._report = None
        self._validated = False

    @staticmethod
    def _normalize(f):
        if isinstance(f, EllipticCombination):
            return f.to_function()
        return f

    def _pick_base(self):
        if self.domain.kind == "torus":
            tau = self.domain.tau
            return 0.37 + 0.29 * tau
        candidates = [
            1.0 + 0j, 0.5 + 0j, 2.0 + 0j, 1.0 + 0.5j, 0.37 + 0.29j,
            -1.3 + 0.7j, 3.1 + 0j, 0.21 - 1.1j,
        ]
        finite = self.domain.finite_ends()
        for c in candidates:
            if all(abs(c - p) > 0.2 for p in finite):
                return c
        return 0.123 + 0.456j

    # -- cached derived objects ------------------------------------------------

    def dF(self):
        if self._dF is None:
            self._dF = self.F.derivative()
        return self._dF

    def dG(self):
        if self._dG is None:
            self._dG = self.G.derivative()
        return self._dG

    def height_antiderivative(self):
        """Closed-form antiderivative of F G' (structured, pole-stable)."""
        if self._anti is None:
            integrand = self.F * self.dG()
            if self.domain.kind == "torus":
                self._anti = integrand.antiderivative()
            else:
                self._anti = partial_fraction_antiderivative(integrand)
        return self._anti

    def period_report(self, tol=1e-8):
        if self._report is None:
            from .periods import check_period_condition

            self._report = check_period_condition(self, tol=tol)
        return self._report

    @property
    def lattice(self) -> Lattice:
        if self.domain.kind != "torus":
            raise ValueError("no lattice on a genus-0 domain")
        return self.F.lattice

    def __repr__(self):
        return f"WeierstrassData(kind={self.domain.kind!r}, ends={self.domain.ends()!r})"


# -- validation ----------------------------------------------------------------


def _pole_points(f: RationalFunction):
    return [(p, m) for p, m in f.profile().poles()]


def validate(data: WeierstrassData) -> WeierstrassData:
    """Check the complex-regular-curve and pole-placement conditions.

    Raises NotRegularCurve if (dF, dG) = (0, 0) somewhere on the domain,
    PoleOffPuncture if F or G has a pole away from the ends.
    """
    dom = data.domain
    if dom.kind == "torus":
        zs = common_zeros_xy(data.dF(), data.dG())
        if data.dF().is_zero and data.dG().is_zero:
            raise NotRegularCurve("dF and dG vanish identically")
        if zs:
            raise NotRegularCurve(f"dF = dG = 0 at wp-coordinate(s) {zs}")
        data._validated = True
        return data

    ends = dom.ends()
    finite = dom.finite_ends()
    for name, f in (("F", data.F), ("G", data.G)):
        if f.is_zero:
            continue
        for p, m in _pole_points(f):
            if p is INF:
                if INF not in ends:
                    raise PoleOffPuncture(f"{name} has a pole at infinity")
            elif not any(abs(p - q) < 1e-6 * max(1.0, abs(p)) for q in finite):
                raise PoleOffPuncture(f"{name} has a pole at {p} off the punctures")

    dF, dG = data.dF(), data.dG()
    if dF.is_zero and dG.is_zero:
        raise NotRegularCurve("dF and dG vanish identically")
    if not dF.is_zero and not dG.is_zero:
        zf = [p for p, m in dF.profile().zeros() if p is not INF]
        zg = [p for p, m in dG.profile().zeros() if p is not INF]
        for p in zf:
            if any(abs(p - q) < 1e-6 * max(1.0, abs(p)) for q in zg):
                if not any(abs(p - e) < 1e-6 for e in finite):
                    raise NotRegularCurve(f"dF = dG = 0 at z = {p}")
    if INF not in ends:
        # same check in the chart w = 1/z
        wf = dF if dF.is_zero else data.F.at_infinity().derivative()
        wg = dG if dG.is_zero else data.G.at_infinity().derivative()
        f_flat = wf.is_zero or wf.order_at(0j) >= 1
        g_flat = wg.is_zero or wg.order_at(0j) >= 1
        if f_flat and g_flat:
            raise NotRegularCurve("dF = dG = 0 at infinity")
    data._validated = True
    return data


# -- evaluation ------------------------------------------------------------------


def _strict_enabled():
    return os.environ.get("AFRONT_STRICT", "1") != "0"


def _check_strict(data, force):
    report = data.period_report()
    if report.passed:
        return
    if force or not _strict_enabled():
        warnings.warn(
            "period condition fails; psi is path dependent (forced evaluation)",
            stacklevel=3,
        )
        return
    raise PeriodConditionViolated(
        f"max |Re period| = {report.worst():.3e}; pass force=True or set "
        "AFRONT_STRICT=0 to evaluate anyway"
    )


def _re_height_integral(data, z):
    """Re of int_base^z F dG through the closed-form antiderivative."""
    z = np.asarray(z, dtype=complex)
    b = data.base_point
    if data.domain.kind == "torus":
        H = data.height_antiderivative()
        return np.real(H(z) - H(b))
    terms, poly, logs = data.height_antiderivative()
    val = np.real(eval_pole_terms(terms, z) - eval_pole_terms(terms, b))
    val = val + np.real(poly(z) - poly(b))
    for p, r in logs:
        val = val + r.real * (np.log(np.abs(z - p)) - np.log(abs(b - p)))
        if abs(r.imag) > 0:
            val = val - r.imag * (np.angle(z - p) - np.angle(b - p))
    return val


def evaluate_psi(data: WeierstrassData, z, force=False) -> PsiValue:
    """The immersion at z (scalar or array).

    The additive constant is fixed by the base point:
    psi(base) = (G + conj F, (|G|^2-|F|^2)/2 + Re(G F)) there.
    """
    _check_strict(data, force)
    z = np.asarray(z, dtype=complex)
    if data.domain.kind == "torus":
        if np.any(data.lattice.distance_to_lattice(z) < 1e-8):
            raise PoleAt(z)
    else:
        for p in data.domain.finite_ends():
            if np.any(np.abs(z - p) < 1e-8):
                raise PoleAt(p)
    fv = data.F(z)
    gv = data.G(z)
    x = gv + np.conj(fv)
    x3 = 0.5 * (np.abs(gv) ** 2 - np.abs(fv) ** 2) + np.real(
        gv * fv
    ) - 2.0 * _re_height_integral(data, z)
    n = np.conj(fv) - gv
    if z.shape:
        return PsiValue(x=x, x3=x3, N=n)
    return PsiValue(x=complex(x), x3=float(x3), N=complex(n))


def gauss_map(data: WeierstrassData):
    """The map rho = dF/dG, reduced.  Raises ConstantG when dG = 0."""
    if data._rho is None:
        dG = data.dG()
        if dG.is_zero:
            raise ConstantG("G is constant; rho = dF/dG is undefined")
        if data.domain.kind == "torus":
            data._rho = EllipticRatio(data.dF(), dG)
        else:
            data._rho = data.dF() / dG
    return data._rho


def _rho_pair(data):
    """(rho, rho') or (None, None) when G is constant (rho = infinity)."""
    try:
        rho = gauss_map(data)
    except ConstantG:
        return None, None
    drho = rho.derivative()
    return rho, drho


def metrics_at(data: WeierstrassData, z) -> MetricSample:
    """Flat form, affine metric, complete metric and its Gauss curvature at z."""
    z = np.asarray(z, dtype=complex)
    fp = data.dF()(z)
    gp = data.dG()(z)
    if np.any(~np.isfinite(np.asarray(fp))) or np.any(~np.isfinite(np.asarray(gp))):
        raise PoleAt(z)
    af, ag = np.abs(fp) ** 2, np.abs(gp) ** 2
    ds2 = af + ag + 2.0 * np.real(fp * gp)
    h = ag - af
    dtau2 = 2.0 * (af + ag)
    rho, drho = _rho_pair(data)
    if rho is None:
        k = np.zeros_like(ds2)
    else:
        rv = rho(z)
        if isinstance(rho, RationalFunction) and rho.is_constant:
            k = np.zeros_like(ds2)
        elif isinstance(rho, EllipticRatio) and rho.is_constant:
            k = np.zeros_like(ds2)
        else:
            k = -np.abs(drho(z) / gp) ** 2 / (1.0 + np.abs(rv) ** 2) ** 3
    if np.asarray(z).shape:
        return MetricSample(ds2=ds2, h=h, dtau2=dtau2, K_tau=k)
    return MetricSample(ds2=float(ds2), h=float(h), dtau2=float(dtau2), K_tau=float(k))


def total_curvature(data: WeierstrassData):
    """(deg rho, -2 pi deg rho).  Constant rho (or constant 1/rho) has degree 0."""
    dG = data.dG()
    dF = data.dF()
    if dG.is_zero and dF.is_zero:
        raise ConstantG("both F and G are constant")
    if dG.is_zero:
        # rho is identically infinity: a constant map, degree 0
        return 0, 0.0
    rho = gauss_map(data)
    if data.domain.kind == "torus":
        d = 0 if rho.is_constant else rho.degree()
    else:
        d = 0 if rho.is_constant else degree(rho)
    return d, -2.0 * np.pi * d


def singular_locus(data: WeierstrassData, grid, tol=1e-8, max_points=4096):
    """Points where |rho| = 1, located by bisection along grid edges.

    Returns a list of complex points with ||rho| - 1| < tol; empty when the
    affine metric never degenerates on the sampled region.
    """
    rho, _ = _rho_pair(data)
    if rho is None:
        return []
    if (isinstance(rho, RationalFunction) and rho.is_constant) or (
        isinstance(rho, EllipticRatio) and rho.is_constant
    ):
        return []
    tau = data.domain.tau if data.domain.kind == "torus" else None
    z, (wrap_r, wrap_c) = grid.points(tau)

    def s_of(pts):
        with np.errstate(all="ignore"):
            return np.abs(np.asarray(rho(pts))) - 1.0

    if data.domain.kind == "torus":
        bad = data.lattice.distance_to_lattice(z) < 0.02
    else:
        bad = np.zeros(z.shape, dtype=bool)
        for p in data.domain.finite_ends():
            bad |= np.abs(z - p) < 0.02
    s = np.full(z.shape, np.nan)
    with np.errstate(all="ignore"):
        vals = s_of(z[~bad])
    s[~bad] = np.where(np.isfinite(vals), vals, np.nan)
    found = []

    def refine(z1, z2, s1, s2):
        a, b, fa = z1, z2, s1
        for _ in range(90):
            m = 0.5 * (a + b)
            fm = float(s_of(m))
            if abs(fm) < tol:
                return m
            if fa * fm < 0:
                b = m
            else:
                a, fa = m, fm
        return None

    n, m = z.shape
    row_step = 1.0 / n if data.domain.kind == "torus" else None
    col_step = tau / m if data.domain.kind == "torus" else None
    for i in range(n):
        for j in range(m):
            edges = []
            if j + 1 < m:
                edges.append((z[i, j + 1], s[i, j + 1]))
            elif wrap_c:
                # wrapped edge: unwrapped target for the torus, seam chord else
                z2 = z[i, j] + col_step if col_step is not None else z[i, 0]
                edges.append((z2, s[i, 0]))
            if i + 1 < n:
                edges.append((z[i + 1, j], s[i + 1, j]))
            elif wrap_r and row_step is not None:
                edges.append((z[i, j] + row_step, s[0, j]))
            s1 = s[i, j]
            for z2, s2 in edges:
                if np.isnan(s1) or np.isnan(s2) or s1 * s2 >= 0:
                    continue
                pt = refine(z[i, j], z2, s1, s2)
                if pt is not None:
                    found.append(complex(pt))
                    if len(found) >= max_points:
                        return found
    return found


def equiaffine_transform(
    data: WeierstrassData, alpha, beta, mu, lam
) -> WeierstrassData:
    """New data (alpha F + beta G + mu, conj(beta) F + conj(alpha) G + lam).

    Requires |alpha|^2 - |beta|^2 = 1 (to 1e-12); the result is an
    equiaffinely equivalent front on the same domain.
    """
    alpha, beta = complex(alpha), complex(beta)
    mu, lam = complex(mu), complex(lam)
    if abs(abs(alpha) ** 2 - abs(beta) ** 2 - 1.0) > 1e-12:
        raise NotUnimodular(
            f"|alpha|^2 - |beta|^2 = {abs(alpha)**2 - abs(beta)**2:+.3e} != 1"
        )
    F2 = alpha * data.F + beta * data.G + mu
    G2 = np.conj(beta) * data.F + np.conj(alpha) * data.G + lam
    return WeierstrassData(data.domain, F2, G2, base_point=data.base_point)
