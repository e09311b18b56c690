"""JSON serialization of surface data.

Surface spec layout:

    {"domain": {"kind": "sphere|plane|torus", "tau": [re, im]?,
                "punctures": [[re, im] | "inf", ...]},
     "F": <fn>, "G": <fn>, "base_point": [re, im]}

with rational functions as {"type": "rational", "num": [[re, im], ...],
"den": [[re, im], ...]} (coefficients in ascending degree) and elliptic
ones as {"type": "elliptic", "tau": [re, im],
"terms": [{"basis": "wp|wp1|wp2|wp3", "coeff": [re, im]}],
"const": [re, im]}.
"""

from __future__ import annotations

import json

import numpy as np

from .elliptic import EllipticCombination, EllipticFunction, lattice_invariants
from .rational import INF, Polynomial, RationalFunction
from .surface import DomainSpec, WeierstrassData

__all__ = ["data_to_json", "data_from_json", "dump_data", "load_data"]

_BASIS = {"wp": 0, "wp1": 1, "wp2": 2, "wp3": 3}
_BASIS_REV = {v: k for k, v in _BASIS.items()}


def _pair(x):
    x = complex(x)
    return [x.real, x.imag]


def _unpair(v):
    return complex(v[0], v[1])


def _combination_from_function(f: EllipticFunction) -> EllipticCombination:
    """Invert the (P, Q) form into basis terms; possible iff deg P <= 2 and
    deg Q <= 1, which covers all serializable surface data."""
    P, Q = f.P, f.Q
    if len(P) > 3 or len(Q) > 2:
        raise ValueError("elliptic function is not a wp-basis combination")
    g2 = f.lattice.g2
    terms = []
    const = P[0] if len(P) > 0 else 0j
    if len(P) == 3 and P[2] != 0:
        terms.append((2, P[2] / 6.0))
        const = const + P[2] * g2 / 12.0
    if len(P) >= 2 and P[1] != 0:
        terms.append((0, P[1]))
    if len(Q) == 2 and Q[1] != 0:
        terms.append((3, Q[1] / 12.0))
    if len(Q) >= 1 and Q[0] != 0:
        terms.append((1, Q[0]))
    return EllipticCombination(f.lattice, tuple(terms), complex(const))


def fn_to_json(f):
    if isinstance(f, RationalFunction):
        return {
            "type": "rational",
            "num": [_pair(c) for c in f.num.coeffs],
            "den": [_pair(c) for c in f.den.coeffs],
        }
    if isinstance(f, EllipticCombination):
        combo = f
    elif isinstance(f, EllipticFunction):
        combo = _combination_from_function(f)
    else:
        raise TypeError(f"cannot serialize {type(f)!r}")
    return {
        "type": "elliptic",
        "tau": _pair(combo.lattice.tau),
        "terms": [
            {"basis": _BASIS_REV[k], "coeff": _pair(c)} for k, c in combo.terms
        ],
        "const": _pair(combo.constant),
    }


def fn_from_json(obj, lattice=None):
    if obj["type"] == "rational":
        return RationalFunction(
            Polynomial([_unpair(c) for c in obj["num"]]),
            Polynomial([_unpair(c) for c in obj["den"]]),
        )
    if obj["type"] == "elliptic":
        tau = _unpair(obj["tau"])
        if lattice is None or abs(lattice.tau - tau) > 1e-12:
            lattice = lattice_invariants(tau)
        terms = tuple(
            (_BASIS[t["basis"]], _unpair(t["coeff"])) for t in obj["terms"]
        )
        return EllipticCombination(lattice, terms, _unpair(obj.get("const", [0, 0])))
    raise ValueError(f"unknown function type {obj.get('type')!r}")


def data_to_json(data: WeierstrassData) -> dict:
    dom = data.domain
    punctures = ["inf" if p is INF else _pair(p) for p in dom.punctures]
    out = {
        "domain": {"kind": dom.kind, "punctures": punctures},
        "F": fn_to_json(data.F),
        "G": fn_to_json(data.G),
        "base_point": _pair(data.base_point),
    }
    if dom.kind == "torus":
        out["domain"]["tau"] = _pair(dom.tau)
    return out


def data_from_json(obj: dict) -> WeierstrassData:
    d = obj["domain"]
    punctures = tuple(INF if p == "inf" else _unpair(p) for p in d["punctures"])
    tau = _unpair(d["tau"]) if "tau" in d and d["tau"] is not None else None
    dom = DomainSpec(d["kind"], punctures, tau)
    lattice = lattice_invariants(tau) if dom.kind == "torus" else None
    F = fn_from_json(obj["F"], lattice)
    G = fn_from_json(obj["G"], lattice)
    base = _unpair(obj["base_point"]) if "base_point" in obj else None
    return WeierstrassData(dom, F, G, base_point=base)


def dump_data(data: WeierstrassData, path):
    with open(path, "w") as fh:
        json.dump(data_to_json(data), fh, indent=2)


def load_data(path) -> WeierstrassData:
    with open(path) as fh:
        return data_from_json(json.load(fh))
