"""Arithmetic for rational functions of one complex variable.

Coefficients are stored in ascending degree.  Poles, zeros, residues and
closed-form antiderivatives are computed from the root structure, which is
obtained from companion-matrix eigenvalues followed by a Newton polish.
The point at infinity is handled through the substitution w = 1/z, never as
a numeric sentinel.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ZeroFunction

__all__ = [
    "INF",
    "Polynomial",
    "RationalFunction",
    "PoleZeroProfile",
    "differentiate",
    "poles_zeros",
    "residue",
    "degree",
    "antiderivative",
]


class _Infinity:
    """Singleton marker for the point at infinity on the Riemann sphere."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"


INF = _Infinity()

_TRIM_REL = 1e-12


def _trim(coeffs):
    c = np.asarray(coeffs, dtype=complex)
    if c.ndim == 0:
        c = c.reshape(1)
    scale = np.max(np.abs(c)) if c.size else 0.0
    if scale == 0.0:
        return np.zeros(1, dtype=complex)
    keep = np.abs(c) > _TRIM_REL * scale
    last = int(np.max(np.nonzero(keep)[0])) if keep.any() else 0
    out = c[: last + 1].copy()
    out[np.abs(out) <= _TRIM_REL * scale] = 0.0
    return out


class Polynomial:
    """Polynomial with complex coefficients in ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = _trim(coeffs)

    # -- basics ------------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return len(self.coeffs) == 1 and self.coeffs[0] == 0

    @property
    def is_constant(self):
        return self.degree == 0

    def __call__(self, z):
        return np.polynomial.polynomial.polyval(z, self.coeffs)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)})"

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return len(self.coeffs) == len(other.coeffs) and np.allclose(
            self.coeffs, other.coeffs, rtol=1e-10, atol=1e-12
        )

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = np.zeros(n, dtype=complex)
        a[: len(self.coeffs)] = self.coeffs
        a[: len(other.coeffs)] += other.coeffs
        return Polynomial(a)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) + (-self)

    def __mul__(self, other):
        if np.isscalar(other):
            return Polynomial(self.coeffs * other)
        other = _as_poly(other)
        if self.is_zero or other.is_zero:
            return Polynomial([0])
        return Polynomial(np.convolve(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def divmod(self, other):
        """Quotient and remainder with respect to ``other``."""
        other = _as_poly(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero or self.degree < other.degree:
            return Polynomial([0]), Polynomial(self.coeffs)
        q, r = np.polynomial.polynomial.polydiv(self.coeffs, other.coeffs)
        return Polynomial(q), Polynomial(r)

    def derivative(self):
        if self.degree == 0:
            return Polynomial([0])
        k = np.arange(1, len(self.coeffs))
        return Polynomial(self.coeffs[1:] * k)

    def antiderivative(self):
        k = np.arange(1, len(self.coeffs) + 1)
        return Polynomial(np.concatenate(([0], self.coeffs / k)))

    def shifted(self, c):
        """Coefficients of p(t + c), i.e. the Taylor expansion about z = c."""
        out = np.zeros(len(self.coeffs), dtype=complex)
        for a in self.coeffs[::-1]:
            # multiply by (t + c) and add a: synthetic Horner
            out[1:] = out[:-1].copy()
            out[0] = a
            out[:-1] += c * out[1:]
        return Polynomial(out)

    def reversed(self, at_degree=None):
        """Coefficients of w^d * p(1/w) with d = at_degree (default deg p)."""
        d = self.degree if at_degree is None else at_degree
        c = np.zeros(d + 1, dtype=complex)
        c[d - self.degree :] = self.coeffs[::-1]
        return Polynomial(c)

    # -- roots ---------------------------------------------------------------

    def roots(self):
        """Roots with multiplicities as a list of (root, multiplicity).

        Companion-matrix eigenvalues, one Newton polish step, then a
        multiplicity-aware clustering pass: an exact m-fold root of a
        perturbed polynomial splits by about eps**(1/m), so the merge
        radius must grow with the hypothesized multiplicity.  A merged
        cluster of size m is re-polished on the (m-1)-th derivative (where
        the root is simple) and kept only if the polynomial itself still
        vanishes there; otherwise the members were genuinely distinct
        roots and the cluster is split back.
        """
        if self.is_zero:
            raise ZeroFunction("zero polynomial has no root structure")
        if self.degree == 0:
            return []
        raw = np.polynomial.polynomial.polyroots(self.coeffs)
        dp = self.derivative()
        polished = []
        for r in raw:
            fr, fpr = self(r), dp(r)
            if abs(fpr) > 1e-30:
                step = fr / fpr
                if abs(step) < 0.1 * max(1.0, abs(r)):
                    r = r - step
            polished.append(complex(r))
        polished.sort(key=lambda w: (round(w.real, 7), round(w.imag, 7)))
        clusters = [[r] for r in polished]
        merged = True
        while merged:
            merged = False
            out = []
            for cl in clusters:
                if out:
                    prev = out[-1]
                    c1 = sum(prev) / len(prev)
                    c2 = sum(cl) / len(cl)
                    # quadruple roots of well-conditioned polynomials split
                    # by ~ eps**(1/4) ~ 1e-4; distinct roots closer than the
                    # merge radius are caught by the verification below
                    radius = 1e-3 * max(1.0, abs(c1), abs(c2))
                    if abs(c1 - c2) < radius:
                        prev.extend(cl)
                        merged = True
                        continue
                out.append(cl)
            clusters = out
        coeff_scale = float(np.max(np.abs(self.coeffs)))
        results = []
        for cl in clusters:
            m = len(cl)
            center = sum(cl) / m
            if m == 1:
                results.append((center, 1))
                continue
            # polish on the (m-1)-th derivative, where the root is simple
            d = self
            for _ in range(m - 1):
                d = d.derivative()
            dd = d.derivative()
            for _ in range(6):
                denom = dd(center)
                if abs(denom) < 1e-30:
                    break
                center = center - d(center) / denom
            scale_p = coeff_scale * max(1.0, abs(center)) ** self.degree
            if abs(self(center)) <= 1e-7 * scale_p:
                results.append((center, m))
            else:
                # not a multiple root after all: keep the members as simple
                results.extend((r, 1) for r in cl)
        results.sort(key=lambda t: (round(t[0].real, 7), round(t[0].imag, 7)))
        return results


def _as_poly(p):
    if isinstance(p, Polynomial):
        return p
    if np.isscalar(p):
        return Polynomial([p])
    return Polynomial(p)


@dataclass(frozen=True)
class PoleZeroProfile:
    """Zeros and poles on the Riemann sphere: (point, signed order) entries.

    Positive order marks a zero, negative a pole.  Orders over the whole
    sphere (including the point at infinity) sum to zero.
    """

    entries: tuple

    def order_at(self, p):
        for q, m in self.entries:
            if q is INF:
                if p is INF:
                    return m
            elif p is not INF and abs(q - p) < 1e-8 * max(1.0, abs(q)):
                return m
        return 0

    def poles(self):
        return [(p, -m) for p, m in self.entries if m < 0]

    def zeros(self):
        return [(p, m) for p, m in self.entries if m > 0]

    def total_order(self):
        return sum(m for _, m in self.entries)


class RationalFunction:
    """Quotient of two polynomials, kept in reduced form.

    Common roots of numerator and denominator (clustered by the root
    finder) are deflated at construction, so pole/zero bookkeeping sees
    only genuine structure.
    """

    __slots__ = ("num", "den", "_profile")

    def __init__(self, num, den=1, reduce=True):
        num = _as_poly(num)
        den = _as_poly(den)
        if den.is_zero:
            raise ZeroDivisionError("denominator is the zero polynomial")
        if reduce and not num.is_zero and den.degree > 0:
            num, den = _reduce_pair(num, den)
        # normalize: monic-ish denominator keeps comparisons stable
        lead = den.coeffs[-1]
        self.num = Polynomial(num.coeffs / lead)
        self.den = Polynomial(den.coeffs / lead)
        self._profile = None

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def from_poles(terms, extra=0):
        """Sum of simple-pole terms c/(z - p) plus a polynomial ``extra``."""
        total = RationalFunction(_as_poly(extra))
        for p, c in terms:
            total = total + RationalFunction([c], [-p, 1])
        return total

    # -- basics ---------------------------------------------------------------

    @property
    def is_zero(self):
        return self.num.is_zero

    @property
    def is_constant(self):
        return self.num.degree == 0 and self.den.degree == 0 or self.is_zero

    def constant_value(self):
        if not self.is_constant:
            raise ValueError("not a constant")
        return self.num.coeffs[0] / self.den.coeffs[0]

    def __call__(self, z):
        with np.errstate(divide="ignore", invalid="ignore"):
            return self.num(z) / self.den(z)

    def __repr__(self):
        return f"RationalFunction({list(self.num.coeffs)}, {list(self.den.coeffs)})"

    # -- algebra ----------------------------------------------------------------

    def __add__(self, other):
        other = _as_rational(other)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-_as_rational(other))

    def __rsub__(self, other):
        return _as_rational(other) + (-self)

    def __mul__(self, other):
        if np.isscalar(other):
            return RationalFunction(self.num * other, self.den, reduce=False)
        other = _as_rational(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rational(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    # -- calculus ----------------------------------------------------------------

    def derivative(self):
        n = self.num.derivative() * self.den - self.num * self.den.derivative()
        return RationalFunction(n, self.den * self.den)

    def at_infinity(self):
        """The substituted function f(1/w) as a RationalFunction of w."""
        d = max(self.num.degree, self.den.degree)
        return RationalFunction(
            self.num.reversed(at_degree=d), self.den.reversed(at_degree=d)
        )

    def order_at(self, p):
        """Laurent order at p: positive for zeros, negative for poles."""
        if p is INF:
            return self.den.degree - self.num.degree
        return self.profile().order_at(p)

    def profile(self):
        if self._profile is None:
            self._profile = poles_zeros(self)
        return self._profile

    def local_expansion(self, p, nterms=8):
        """Laurent coefficients about p (or about w=0 for p=INF).

        Returns (k0, coeffs) with f = sum coeffs[j] * t**(k0 + j) in the
        local coordinate t = z - p, or t = 1/z at infinity.
        """
        f = self.at_infinity() if p is INF else self
        c = 0 if p is INF else p
        n = f.num.shifted(c).coeffs
        d = f.den.shifted(c).coeffs
        an = _leading_zero_count(n)
        ad = _leading_zero_count(d)
        k0 = an - ad
        series = _series_div(n[an:], d[ad:], nterms)
        return k0, series


def _leading_zero_count(c):
    tol = 1e-12 * max(1.0, float(np.max(np.abs(c))))
    for i, v in enumerate(c):
        if abs(v) > tol:
            return i
    return len(c)


def _series_div(a, b, nterms):
    """Power-series quotient a/b to nterms coefficients (b[0] != 0)."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    out = np.zeros(nterms, dtype=complex)
    for k in range(nterms):
        s = a[k] if k < len(a) else 0.0
        for j in range(1, k + 1):
            if j < len(b):
                s -= b[j] * out[k - j]
        out[k] = s / b[0]
    return out


def _reduce_pair(num, den):
    """Deflate common roots of num and den (to clustering tolerance)."""
    try:
        rn = num.roots()
        rd = den.roots()
    except ZeroFunction:
        return num, den
    used = [False] * len(rn)
    common = []
    for pd, md in rd:
        for i, (pn, mn) in enumerate(rn):
            if used[i]:
                continue
            if abs(pd - pn) < 1e-7 * max(1.0, abs(pd)):
                common.append(((pd + pn) / 2, min(md, mn)))
                used[i] = True
                break
    if not common:
        return num, den
    for p, m in common:
        for _ in range(m):
            num = _deflate(num, p)
            den = _deflate(den, p)
    return num, den


def _deflate(poly, r):
    """Synthetic division of poly by (z - r)."""
    c = poly.coeffs
    n = len(c) - 1
    out = np.zeros(n, dtype=complex)
    acc = c[n]
    for k in range(n - 1, -1, -1):
        out[k] = acc
        acc = c[k] + r * acc
    return Polynomial(out)


def _as_rational(f):
    if isinstance(f, RationalFunction):
        return f
    if isinstance(f, Polynomial) or np.isscalar(f):
        return RationalFunction(_as_poly(f))
    raise TypeError(f"cannot coerce {type(f)!r} to RationalFunction")


# -- module-level operations ------------------------------------------------


def differentiate(f: RationalFunction) -> RationalFunction:
    """d/dz of f, in reduced form."""
    return f.derivative()


def poles_zeros(f: RationalFunction) -> PoleZeroProfile:
    """All poles and zeros on the Riemann sphere, with signed orders."""
    if f.is_zero:
        raise ZeroFunction("pole/zero profile of the zero function")
    entries = []
    if f.num.degree > 0:
        entries += [(p, m) for p, m in f.num.roots()]
    if f.den.degree > 0:
        entries += [(p, -m) for p, m in f.den.roots()]
    inf_order = f.den.degree - f.num.degree
    if inf_order != 0:
        entries.append((INF, inf_order))
    return PoleZeroProfile(tuple(entries))


def residue(f: RationalFunction, p) -> complex:
    """Coefficient of 1/(z - p) in the Laurent expansion about finite p."""
    if p is INF:
        raise ValueError("residue defined here for finite points only")
    if f.is_zero:
        return 0j
    m = -f.order_at(p)
    if m <= 0:
        return 0j
    k0, series = f.local_expansion(p, nterms=m)
    # series starts at t**k0 with k0 = -m; residue is the t**(-1) coefficient
    return complex(series[m - 1])


def degree(f: RationalFunction) -> int:
    """Mapping degree: max(deg num, deg den) of the reduced form."""
    if f.is_zero:
        return 0
    return max(f.num.degree, f.den.degree)


def partial_fraction_antiderivative(f: RationalFunction):
    """Antiderivative as structured parts: (pole_terms, polynomial, log_terms).

    pole_terms is a list of (coeff, pole, k) meaning coeff / (z - pole)**k;
    keeping the terms separate lets them be evaluated stably arbitrarily
    close to the poles, which an expanded numerator/denominator cannot do.
    """
    quot, rem = f.num.divmod(f.den)
    poly_part = quot.antiderivative()
    pole_terms = []
    log_terms = []
    if not rem.is_zero and f.den.degree > 0:
        proper = RationalFunction(rem, f.den, reduce=False)
        for p, m in f.den.roots():
            k0, series = proper.local_expansion(p, nterms=m)
            # series[j] is the coefficient of (z-p)**(j - m)
            for j in range(m):
                a = series[j]
                order = j - m  # exponent of (z-p)
                if abs(a) < 1e-13 * max(1.0, float(np.max(np.abs(series)))):
                    continue
                if order == -1:
                    log_terms.append((p, complex(a)))
                else:
                    # integral of a (z-p)^order -> a (z-p)^(order+1)/(order+1)
                    pole_terms.append(
                        (complex(a / (order + 1)), complex(p), -(order + 1))
                    )
    return pole_terms, poly_part, log_terms


def eval_pole_terms(pole_terms, z):
    """Evaluate sum of coeff / (z - pole)**k without expanding."""
    z = np.asarray(z, dtype=complex)
    total = np.zeros_like(z)
    for a, p, k in pole_terms:
        total = total + a / (z - p) ** k
    return total


def antiderivative(f: RationalFunction):
    """Closed-form antiderivative split into parts.

    Returns (rational_part, polynomial_part, log_terms) with

        d/dz [ rational_part + polynomial_part + sum r_k log(z - p_k) ] = f,

    log_terms being a list of (pole, residue) pairs.
    """
    pole_terms, poly_part, log_terms = partial_fraction_antiderivative(f)
    rational_part = RationalFunction(Polynomial([0]))
    for a, p, k in pole_terms:
        denpoly = Polynomial([1])
        for _ in range(k):
            denpoly = denpoly * Polynomial([-p, 1])
        rational_part = rational_part + RationalFunction(
            Polynomial([a]), denpoly, reduce=False
        )
    return rational_part, poly_part, log_terms
