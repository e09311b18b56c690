"""Per-end analysis: embeddedness, asymptotic type, and the global ledger.

An end is embedded iff F and G have at most simple poles there (with at
least one actual simple pole).  Embedded ends are normalized exactly as in
the classification argument: swap F and G if needed so the simple pole
with nonzero residue sits in F, change to the coordinate w = 1/F, and read
off the Laurent coefficients b_{-1} and b_1 of G in w.  The type is then

    type P:  b_1 = 0            (paraboloid model)
    type R:  b_1 != 0, b_{-1} = 0   (rotational model)
    type NR: b_1 != 0, b_{-1} != 0  (non-rotational model)

The swap is a formal device of the classification, not an equiaffine
motion; reports record whether it happened.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InequalityViolated, NotEmbeddedEnd
from .rational import INF, RationalFunction
from .surface import DomainSpec, WeierstrassData, evaluate_psi, total_curvature

__all__ = [
    "EndReport",
    "OssermanLedger",
    "end_orders",
    "classify_end",
    "asymptotic_model",
    "osserman_report",
    "asymptotic_deviation",
]

TYPE_P = "TypeP"
TYPE_R = "TypeR"
TYPE_NR = "TypeNR"
NOT_EMBEDDED = "NotEmbedded"


@dataclass(frozen=True)
class EndReport:
    puncture: object
    ord_F: int
    ord_G: int
    embedded: bool
    asym_type: str
    b_minus1: complex = None
    b_1: complex = None
    b_0: complex = None
    swapped: bool = False

    def to_json(self):
        p = "inf" if self.puncture is INF else [
            complex(self.puncture).real,
            complex(self.puncture).imag,
        ]
        return {
            "p": p,
            "ordF": self.ord_F,
            "ordG": self.ord_G,
            "embedded": self.embedded,
            "type": self.asym_type,
            "swapped": self.swapped,
        }


@dataclass(frozen=True)
class OssermanLedger:
    genus: int
    n_ends: int
    deg_rho: int
    rhs: int
    equality: bool

    def to_json(self):
        return {
            "genus": self.genus,
            "n_ends": self.n_ends,
            "deg": self.deg_rho,
            "rhs": self.rhs,
            "equality": self.equality,
        }


def _order_at(f, p, torus):
    if torus:
        return f.order_at_origin()
    if f.is_zero:
        return 0
    return f.order_at(p)


def end_orders(data: WeierstrassData, p):
    """Laurent orders (ord_F, ord_G) of the data at the end p."""
    torus = data.domain.kind == "torus"
    return _order_at(data.F, p, torus), _order_at(data.G, p, torus)


# -- truncated power-series helpers for the normalization ------------------------

_NTERMS = 10


def _series_mul(a, b):
    n = _NTERMS
    out = np.zeros(n, dtype=complex)
    for i in range(min(n, len(a))):
        if a[i] == 0:
            continue
        top = min(n - i, len(b))
        out[i : i + top] += a[i] * b[:top]
    return out


def _series_inv(a):
    # 1 / (a0 + a1 t + ...) with a0 != 0
    n = _NTERMS
    out = np.zeros(n, dtype=complex)
    out[0] = 1.0 / a[0]
    for k in range(1, n):
        s = 0j
        for j in range(1, k + 1):
            if j < len(a):
                s += a[j] * out[k - j]
        out[k] = -s / a[0]
    return out


def _invert_unit_series(w):
    """Invert t -> w = w1 t + w2 t^2 + ... (w1 != 0) to t(w) as a series."""
    n = _NTERMS
    t = np.zeros(n, dtype=complex)
    t[1] = 1.0 / w[1]
    for _ in range(n):
        # t <- (w_target - sum_{k>=2} w_k t^k) / w_1 with w_target = w
        acc = np.zeros(n, dtype=complex)
        acc[1] = 1.0
        powers = t.copy()
        for k in range(2, n):
            powers = _series_mul(powers, t)
            acc -= w[k] * powers
        t = acc / w[1]
    return t


def _local_laurent(f: RationalFunction, p, nterms=_NTERMS):
    return f.local_expansion(p, nterms=nterms)


def classify_end(data: WeierstrassData, p) -> EndReport:
    """Classify the end at p, normalizing exactly as the theory prescribes."""
    oF, oG = end_orders(data, p)
    embedded = (oF >= -1 and oG >= -1) and (oF == -1 or oG == -1)
    if not embedded:
        return EndReport(p, oF, oG, False, NOT_EMBEDDED)

    swapped = oF != -1
    Fh, Gh = (data.G, data.F) if swapped else (data.F, data.G)

    kf, a = _local_laurent(Fh, p)  # Fh = sum a[j] t^(kf + j), kf = -1
    # w(t) = 1/Fh = t * (1 / sum a[j] t^j); invert to t(w) = w * T(w)
    inv_a = _series_inv(a)
    w = np.zeros(_NTERMS, dtype=complex)
    w[1:] = inv_a[:-1]
    t_of_w = _invert_unit_series(w)
    T = np.zeros(_NTERMS, dtype=complex)
    T[:-1] = t_of_w[1:]
    T_inv = _series_inv(T)

    # G(t(w)) = sum_j g[j] w^e T^e with e = kg + j; t^e starts at w^e, so
    # only e in {-1, 0, 1} reaches the coefficients of w^-1, w^0, w^1
    b_m1 = 0j
    b_0 = 0j
    b_1 = 0j
    if Gh.is_zero:
        g = np.zeros(1, dtype=complex)
    else:
        kg, g = _local_laurent(Gh, p)
        for j, gj in enumerate(g):
            if gj == 0:
                continue
            e = kg + j
            if e == -1:
                b_m1 += gj * T_inv[0]
                b_0 += gj * T_inv[1]
                b_1 += gj * T_inv[2]
            elif e == 0:
                b_0 += gj
            elif e == 1:
                b_1 += gj * T[0]
            elif e > 1:
                break
    scale = max(1.0, abs(b_m1), abs(b_1), float(np.max(np.abs(g))) if len(g) else 1.0)
    tol = 1e-9 * scale
    if abs(b_1) < tol:
        typ = TYPE_P
        b_1 = 0j
    elif abs(b_m1) < tol:
        typ = TYPE_R
        b_m1 = 0j
    else:
        typ = TYPE_NR
    return EndReport(
        p, oF, oG, True, typ, complex(b_m1), complex(b_1), complex(b_0), swapped
    )


def asymptotic_model(report: EndReport) -> WeierstrassData:
    """The model front the end converges to: F = 1/z with the matching G."""
    if not report.embedded:
        raise NotEmbeddedEnd(f"end at {report.puncture} is not embedded")
    F = RationalFunction([1], [0, 1])
    if report.asym_type == TYPE_R:
        G = RationalFunction([0, report.b_1], [1])
    elif report.asym_type == TYPE_P:
        G = RationalFunction([report.b_minus1], [0, 1])
    else:
        G = RationalFunction([report.b_minus1, 0, report.b_1], [0, 1])
    return WeierstrassData(DomainSpec("plane", (0j,)), F, G, base_point=1.0)


def osserman_report(data: WeierstrassData) -> OssermanLedger:
    """deg(rho) against 2(g - 1 + n); raises if the inequality fails."""
    g = data.domain.genus
    n = len(data.domain.ends())
    deg, _ = total_curvature(data)
    rhs = 2 * (g - 1 + n)
    if deg < rhs:
        raise InequalityViolated(
            f"deg rho = {deg} < {rhs} = 2(g-1+n); data cannot be complete"
        )
    return OssermanLedger(g, n, deg, rhs, deg == rhs)


# -- numeric decay protocol -------------------------------------------------------


def _invert_to_domain(data, report, wvals):
    """Map local coordinates w back to domain points z with F_used(z) = 1/w."""
    p = report.puncture
    Fh = data.G if report.swapped else data.F
    dFh = Fh.derivative()
    kf, a = _local_laurent(Fh, p)
    inv_a = _series_inv(a)
    w_series = np.zeros(_NTERMS, dtype=complex)
    w_series[1:] = inv_a[:-1]
    t_of_w = _invert_unit_series(w_series)
    t0 = np.polynomial.polynomial.polyval(wvals, t_of_w)
    z = 1.0 / t0 if p is INF else p + t0
    target = 1.0 / wvals
    for _ in range(8):
        z = z - (Fh(z) - target) / dFh(z)
    return z


def asymptotic_deviation(data, p, radii=(1e-1, 1e-2, 1e-3), nargs=16, force=False):
    """max |psi - psi_model| over circles |w| = r, constants aligned.

    The surface is first put in the classification's normal form: F and G
    swapped if the simple pole sits in G, and the constant term b_0 of G
    removed (a translation of the image, which otherwise contributes a
    divergent cross term near the end).  The remaining additive constant is
    estimated on a much smaller reference circle and subtracted.
    """
    report = classify_end(data, p)
    if not report.embedded:
        raise NotEmbeddedEnd(f"end at {p} is not embedded")
    model = asymptotic_model(report)
    Fh, Gh = (data.G, data.F) if report.swapped else (data.F, data.G)
    normalized = WeierstrassData(
        data.domain, Fh, Gh - report.b_0, base_point=data.base_point
    )

    def diff(r, n):
        w = r * np.exp(2j * np.pi * np.arange(n) / n)
        z = _invert_to_domain(data, report, w)
        ps = evaluate_psi(normalized, z, force=force)
        x, x3 = np.asarray(ps.x), np.asarray(ps.x3)
        pm = evaluate_psi(model, w)
        return np.stack(
            [np.real(x - pm.x), np.imag(x - pm.x), x3 - np.asarray(pm.x3)]
        )

    ref = diff(1e-4, 8).mean(axis=1)
    out = {}
    for r in radii:
        d = diff(r, nargs) - ref[:, None]
        out[r] = float(np.max(np.linalg.norm(d, axis=0)))
    return out
