"""Parameterized constructors for every classified family and named example.

Each entry carries executable constraint predicates and the expected
(genus, number of ends, deg rho, all-ends-embedded) signature, which is
re-verified on every build together with the closed-form period condition.
Families whose printed parameter conditions disagree with what the period
integrals actually require carry the corrected predicate; the original
inequalities are kept alongside wherever they are coherent.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .elliptic import lattice_invariants
from .errors import ConstraintViolated, UnknownId
from .rational import INF, Polynomial, RationalFunction, residue
from .surface import DomainSpec, WeierstrassData, total_curvature, validate

__all__ = ["CatalogEntry", "catalog_list", "catalog_build"]

_EPS = 1e-13


def _real(x):
    x = complex(x)
    return abs(x.imag) <= 1e-12 * max(1.0, abs(x))


def _nonzero(x):
    return abs(complex(x)) > _EPS


def _pos(x):
    x = complex(x)
    return _real(x) and x.real > 0


def _zpow(k: int) -> RationalFunction:
    if k >= 0:
        c = np.zeros(k + 1, dtype=complex)
        c[k] = 1.0
        return RationalFunction(Polynomial(c))
    c = np.zeros(-k + 1, dtype=complex)
    c[-k] = 1.0
    return RationalFunction(Polynomial([1]), Polynomial(c))


def _zsum(powers: dict) -> RationalFunction:
    total = RationalFunction(Polynomial([0]))
    for k, coeff in powers.items():
        if coeff != 0:
            total = total + complex(coeff) * _zpow(k)
    return total


def _pole_term(coeff, pole, order=1) -> RationalFunction:
    den = Polynomial([1])
    for _ in range(order):
        den = den * Polynomial([-pole, 1])
    return RationalFunction(Polynomial([coeff]), den)


def _dF_at(F: RationalFunction, x) -> complex:
    return complex(F.derivative()(complex(x)))


@dataclass(frozen=True)
class CatalogEntry:
    """Descriptor of one family: id, defaults, constraints, expectations."""

    id: str
    params: dict
    constraints: tuple  # of (label, predicate(params, F, G) -> bool)
    expected: tuple  # (genus, n_ends, deg_rho, all_embedded)
    description: str = ""
    notes: str = ""

    @property
    def constraint_text(self):
        return ", ".join(label for label, _ in self.constraints)

    def to_json(self):
        def enc(v):
            if isinstance(v, (tuple, list)):
                return [enc(x) for x in v]
            if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
                return int(v)
            v = complex(v)
            return [v.real, v.imag]

        return {
            "id": self.id,
            "params": {k: enc(v) for k, v in self.params.items()},
            "constraints": [label for label, _ in self.constraints],
            "expected": {
                "genus": self.expected[0],
                "n_ends": self.expected[1],
                "deg_rho": self.expected[2],
                "all_embedded": self.expected[3],
            },
            "description": self.description,
        }


_REGISTRY = {}
_BUILDERS = {}


def _register(entry: CatalogEntry, builder):
    _REGISTRY[entry.id] = entry
    _BUILDERS[entry.id] = builder


def _c(label, fn):
    return (label, fn)


# -- named examples ----------------------------------------------------------------

_register(
    CatalogEntry(
        id="paraboloid",
        params={"b": 2.0 + 0j},
        constraints=(_c("|b|≠1", lambda p, F, G: abs(abs(complex(p["b"])) - 1.0) > _EPS),),
        expected=(0, 1, 0, True),
        description="elliptic paraboloid: F=1/z, G=b/z on the sphere minus {0}",
    ),
    lambda p: (
        DomainSpec("sphere", (0j,)),
        _zpow(-1),
        complex(p["b"]) * _zpow(-1),
    ),
)

_register(
    CatalogEntry(
        id="rotational",
        params={"a": 2.0 + 0j},
        constraints=(
            _c("a∈R∖{0}", lambda p, F, G: _real(p["a"]) and _nonzero(p["a"])),
        ),
        expected=(0, 2, 2, True),
        description="rotational front: F=1/z, G=a z on C minus {0}",
    ),
    lambda p: (DomainSpec("plane", (0j,)), _zpow(-1), complex(p["a"]) * _zpow(1)),
)

_register(
    CatalogEntry(
        id="nonrotational",
        params={"a": 1.0 + 0j, "b": 2.0 + 0j},
        constraints=(
            _c("a∈R∖{0}", lambda p, F, G: _real(p["a"]) and _nonzero(p["a"])),
            _c("b≠0", lambda p, F, G: _nonzero(p["b"])),
            _c("|b|≠1", lambda p, F, G: abs(abs(complex(p["b"])) - 1.0) > _EPS),
        ),
        expected=(0, 2, 2, True),
        description="non-rotational front: F=1/z, G=a z + b/z on C minus {0}",
    ),
    lambda p: (
        DomainSpec("plane", (0j,)),
        _zpow(-1),
        _zsum({1: p["a"], -1: p["b"]}),
    ),
)

# -- one-end polynomial families (total curvature -2pi, -4pi, -6pi, -8pi) -----------


def _poly_entry(eid, fshape, gshape, params, constraints, deg, description, notes=""):
    n_ends = 1
    _register(
        CatalogEntry(
            id=eid,
            params=params,
            constraints=tuple(constraints),
            expected=(0, n_ends, deg, False),
            description=description,
            notes=notes,
        ),
        lambda p: (DomainSpec("sphere", (INF,)), _zsum(fshape(p)), _zsum(gshape(p))),
    )


_poly_entry(
    "tc2",
    lambda p: {2: p["a"]},
    lambda p: {1: 1},
    {"a": 1.0 + 0j},
    [_c("a>0", lambda p, F, G: _pos(p["a"]))],
    1,
    "total curvature -2pi: F=a z^2, G=z",
)

_poly_entry(
    "tc4_1",
    lambda p: {3: p["a"], 1: p["b"]},
    lambda p: {1: 1},
    {"a": 1.0 + 0j, "b": 1.0 + 0j},
    [_c("a>0", lambda p, F, G: _pos(p["a"]))],
    2,
    "-4pi, one end: F=a z^3 + b z, G=z",
)

_poly_entry(
    "tc4_2",
    lambda p: {3: p["a"], 2: p["b"], 1: p["c"]},
    lambda p: {2: 1},
    {"a": 1.0 + 0j, "b": 0j, "c": 1.0 + 0j},
    [
        _c("a>0", lambda p, F, G: _pos(p["a"])),
        _c("c≠0", lambda p, F, G: _nonzero(p["c"])),
    ],
    2,
    "-4pi, one end: F=a z^3 + b z^2 + c z, G=z^2",
)

_poly_entry(
    "tc6_601_1",
    lambda p: {4: p["a"], 2: p["b"], 1: p["c"]},
    lambda p: {1: 1},
    {"a": 1.0 + 0j, "b": 1.0 + 0j, "c": 1.0 + 0j},
    [_c("a>0", lambda p, F, G: _pos(p["a"]))],
    3,
    "-6pi, one end: F=a z^4 + b z^2 + c z, G=z",
)

_poly_entry(
    "tc6_601_2",
    lambda p: {4: p["a"], 3: p["b"], 2: p["c"], 1: p["d"]},
    lambda p: {2: 1},
    {"a": 1.0 + 0j, "b": 0j, "c": 1.0 + 0j, "d": 1.0 + 0j},
    [
        _c("a>0", lambda p, F, G: _pos(p["a"])),
        _c("d≠0", lambda p, F, G: _nonzero(p["d"])),
    ],
    3,
    "-6pi, one end: F=a z^4 + b z^3 + c z^2 + d z, G=z^2",
    notes="the structural requirement is d != 0 (pole of rho at the origin)",
)

_poly_entry(
    "tc6_601_3",
    lambda p: {4: p["a"], 3: p["b"], 2: p["c"], 1: p["d"]},
    lambda p: {3: 1},
    {"a": 1.0 + 0j, "b": 0j, "c": 0j, "d": 1.0 + 0j},
    [
        _c("a>0", lambda p, F, G: _pos(p["a"])),
        _c("d≠0", lambda p, F, G: _nonzero(p["d"])),
    ],
    3,
    "-6pi, one end: F=a z^4 + b z^3 + c z^2 + d z, G=z^3",
)

_poly_entry(
    "tc6_601_4",
    lambda p: {4: p["a"], 3: p["b"], 2: p["c"], 1: p["d"]},
    lambda p: {3: 2 * p["alpha"], 2: -3 * p["alpha"]},
    {"a": 1.0 + 0j, "b": 0j, "c": 0j, "d": 1.0 + 0j, "alpha": 1.0 + 0j},
    [
        _c("a>0", lambda p, F, G: _pos(p["a"])),
        _c("d≠0", lambda p, F, G: _nonzero(p["d"])),
        _c("α≠0", lambda p, F, G: _nonzero(p["alpha"])),
        _c("F′(1)≠0", lambda p, F, G: _nonzero(_dF_at(F, 1.0))),
    ],
    3,
    "-6pi, one end: F quartic, G=alpha(2 z^3 - 3 z^2)",
)

_poly_entry(
    "tc8_801_1",
    lambda p: {5: p["a"], 3: p["b"], 2: p["c"], 1: p["d"]},
    lambda p: {1: 1},
    {"a": 1.0 + 0j, "b": 1.0 + 0j, "c": 1.0 + 0j, "d": 1.0 + 0j},
    [_c("a>0", lambda p, F, G: _pos(p["a"]))],
    4,
    "-8pi, one end: F=a z^5 + b z^3 + c z^2 + d z, G=z",
)

for _k, _gs in (("tc8_801_2", 2), ("tc8_801_3", 3), ("tc8_801_4", 4)):
    _poly_entry(
        _k,
        lambda p: {5: p["a"], 4: p["b"], 3: p["c"], 2: p["d"], 1: p["e"]},
        (lambda gs: (lambda p: {gs: 1}))(_gs),
        {"a": 1.0 + 0j, "b": 0j, "c": 0j, "d": 0j, "e": 1.0 + 0j},
        [
            _c("a>0", lambda p, F, G: _pos(p["a"])),
            _c("e≠0", lambda p, F, G: _nonzero(p["e"])),
        ],
        4,
        f"-8pi, one end: F quintic, G=z^{_gs}",
    )

_poly_entry(
    "tc8_801_5",
    lambda p: {5: p["a"], 4: p["b"], 3: p["c"], 2: p["d"], 1: p["e"]},
    lambda p: {3: 2 * p["alpha"], 2: -3 * p["alpha"]},
    {"a": 1.0 + 0j, "b": 0j, "c": 0j, "d": 0j, "e": 1.0 + 0j, "alpha": 1.0 + 0j},
    [
        _c("a>0", lambda p, F, G: _pos(p["a"])),
        _c("e≠0", lambda p, F, G: _nonzero(p["e"])),
        _c("α≠0", lambda p, F, G: _nonzero(p["alpha"])),
        _c("F′(1)≠0", lambda p, F, G: _nonzero(_dF_at(F, 1.0))),
    ],
    4,
    "-8pi, one end: F quintic, G=alpha(2 z^3 - 3 z^2)",
)

_poly_entry(
    "tc8_801_6",
    lambda p: {5: p["a"], 4: p["b"], 3: p["c"], 2: p["d"], 1: p["e"]},
    lambda p: {4: 3 * p["alpha"], 3: -4 * p["alpha"]},
    {"a": 1.0 + 0j, "b": 0j, "c": 0j, "d": 0j, "e": 1.0 + 0j, "alpha": 1.0 + 0j},
    [
        _c("a>0", lambda p, F, G: _pos(p["a"])),
        _c("e≠0", lambda p, F, G: _nonzero(p["e"])),
        _c("α≠0", lambda p, F, G: _nonzero(p["alpha"])),
        _c("F′(1)≠0", lambda p, F, G: _nonzero(_dF_at(F, 1.0))),
    ],
    4,
    "-8pi, one end: F quintic, G=alpha(3 z^4 - 4 z^3)",
)

_poly_entry(
    "tc8_801_7",
    lambda p: {5: p["a"], 4: p["b"], 3: p["c"], 2: p["d"], 1: p["e"]},
    lambda p: {
        4: 3 * p["alpha"],
        3: -4 * (1 + p["r"]) * p["alpha"],
        2: 6 * p["r"] * p["alpha"],
    },
    {
        "a": 1.0 + 0j, "b": 0j, "c": 0j, "d": 0j, "e": 1.0 + 0j,
        "alpha": 1.0 + 0j, "r": 2.0 + 0j,
    },
    [
        _c("a>0", lambda p, F, G: _pos(p["a"])),
        _c("e≠0", lambda p, F, G: _nonzero(p["e"])),
        _c("α≠0", lambda p, F, G: _nonzero(p["alpha"])),
        _c("r∉{0,1}", lambda p, F, G: _nonzero(p["r"]) and _nonzero(complex(p["r"]) - 1)),
        _c("F′(1)≠0", lambda p, F, G: _nonzero(_dF_at(F, 1.0))),
        _c("F′(r)≠0", lambda p, F, G: _nonzero(_dF_at(F, p["r"]))),
    ],
    4,
    "-8pi, one end: F quintic, G=alpha(3 z^4 - 4(1+r) z^3 + 6 r z^2)",
)


# -- two-end families on C minus {0} --------------------------------------------------


def _two_end_entry(eid, fshape, gshape, params, constraints, deg, description, notes=""):
    _register(
        CatalogEntry(
            id=eid,
            params=params,
            constraints=tuple(constraints),
            expected=(0, 2, deg, False),
            description=description,
            notes=notes,
        ),
        lambda p: (DomainSpec("plane", (0j,)), _zsum(fshape(p)), _zsum(gshape(p))),
    )


_two_end_entry(
    "tc6_602_1",
    lambda p: {2: p["a"], 1: p["b"], -1: p["c"]},
    lambda p: {-1: 1},
    {"a": 1.0 + 0j, "b": 1.0 + 0j, "c": 2.0 + 0j},
    [
        _c("a>0", lambda p, F, G: _pos(p["a"])),
        _c("b∈R", lambda p, F, G: _real(p["b"])),
        _c("|c|≠1", lambda p, F, G: abs(abs(complex(p["c"])) - 1.0) > _EPS),
    ],
    3,
    "-6pi, two ends: F=a z^2 + b z + c/z, G=1/z",
)

_two_end_entry(
    "tc6_602_2",
    lambda p: {1: p["a"], -1: p["b"], -2: p["c"]},
    lambda p: {-2: 1},
    {"a": 1.0 + 0j, "b": 1.0 + 0j, "c": 2.0 + 0j},
    [
        _c("a>0", lambda p, F, G: _pos(p["a"])),
        _c("|c|≠1", lambda p, F, G: abs(abs(complex(p["c"])) - 1.0) > _EPS),
    ],
    3,
    "-6pi, two ends: F=a z + b/z + c/z^2, G=1/z^2",
)

_two_end_entry(
    "tc6_602_3",
    lambda p: {-2: p["a"], -1: p["b"], 1: p["c"]},
    lambda p: {-1: 1},
    {"a": 1.0 + 0j, "b": 1.0 + 0j, "c": 1.0 + 0j},
    [
        _c("a>0", lambda p, F, G: _pos(p["a"])),
        _c("c∈R∖{0}", lambda p, F, G: _real(p["c"]) and _nonzero(p["c"])),
    ],
    3,
    "-6pi, two ends: F=a/z^2 + b/z + c z, G=1/z",
)

_two_end_entry(
    "tc6_602_4",
    lambda p: {1: p["a"], -1: p["b"], -2: p["c"]},
    lambda p: {-2: p["alpha"] / 2, -1: -p["alpha"]},
    {"a": 1.0 + 0j, "b": 1.0 + 0j, "c": 1.0 + 0j, "alpha": 1.0 + 0j},
    [
        _c("a>0", lambda p, F, G: _pos(p["a"])),
        _c("α≠0", lambda p, F, G: _nonzero(p["alpha"])),
        _c(
            "2|c|≠|α|",
            lambda p, F, G: abs(2 * abs(complex(p["c"])) - abs(complex(p["alpha"]))) > _EPS,
        ),
        _c("F′(1)≠0", lambda p, F, G: _nonzero(_dF_at(F, 1.0))),
    ],
    3,
    "-6pi, two ends: F=a z + b/z + c/z^2, G=alpha(1/(2 z^2) - 1/z)",
)

_two_end_entry(
    "tc6_602_6",
    lambda p: {2: p["a"], 1: p["b"], -1: p["c"]},
    lambda p: {1: p["alpha"], -1: p["alpha"]},
    {"a": 1.0 + 0j, "b": 1.0 + 0j, "c": 2.0 + 0j, "alpha": 1.0 + 0j},
    [
        _c("a>0", lambda p, F, G: _pos(p["a"])),
        _c("b≠0", lambda p, F, G: _nonzero(p["b"])),
        _c("α≠0", lambda p, F, G: _nonzero(p["alpha"])),
        _c("c−a∈R", lambda p, F, G: _real(complex(p["c"]) - complex(p["a"]))),
        _c(
            "α(c−b)∈R",
            lambda p, F, G: _real(complex(p["alpha"]) * (complex(p["c"]) - complex(p["b"]))),
        ),
        _c(
            "|c|≠|α|",
            lambda p, F, G: abs(abs(complex(p["c"])) - abs(complex(p["alpha"]))) > _EPS,
        ),
        _c("F′(1)≠0", lambda p, F, G: _nonzero(_dF_at(F, 1.0))),
        _c("F′(−1)≠0", lambda p, F, G: _nonzero(_dF_at(F, -1.0))),
    ],
    3,
    "-6pi, two ends: F=a z^2 + b z + c/z, G=alpha(z + 1/z)",
    notes="the period integral requires alpha(c-b) real; c-a real is kept as printed",
)

_two_end_entry(
    "tc8_802_1",
    lambda p: {3: p["a"], 2: p["b"], 1: p["c"], -1: p["d"]},
    lambda p: {-1: 1},
    {"a": 1.0 + 0j, "b": 1.0 + 0j, "c": 1.0 + 0j, "d": 2.0 + 0j},
    [
        _c("a>0", lambda p, F, G: _pos(p["a"])),
        _c("c∈R", lambda p, F, G: _real(p["c"])),
        _c("|d|≠1", lambda p, F, G: abs(abs(complex(p["d"])) - 1.0) > _EPS),
    ],
    4,
    "-8pi, two ends: F=a z^3 + b z^2 + c z + d/z, G=1/z",
)

_two_end_entry(
    "tc8_802_2",
    lambda p: {2: p["a"], 1: p["b"], -1: p["c"], -2: p["d"]},
    lambda p: {-2: 1},
    {"a": 1.0 + 0j, "b": 1.0 + 0j, "c": 1.0 + 0j, "d": 2.0 + 0j},
    [
        _c("a>0", lambda p, F, G: _pos(p["a"])),
        _c("|d|≠1", lambda p, F, G: abs(abs(complex(p["d"])) - 1.0) > _EPS),
    ],
    4,
    "-8pi, two ends: F=a z^2 + b z + c/z + d/z^2, G=1/z^2",
)

_two_end_entry(
    "tc8_802_3",
    lambda p: {2: p["a"], 1: p["b"], -1: p["c"], -2: p["d"]},
    lambda p: {-1: 1},
    {"a": 1.0 + 0j, "b": 1.0 + 0j, "c": 1.0 + 0j, "d": 1.0 + 0j},
    [
        _c("a>0", lambda p, F, G: _pos(p["a"])),
        _c("b∈R", lambda p, F, G: _real(p["b"])),
        _c("d≠0", lambda p, F, G: _nonzero(p["d"])),
    ],
    4,
    "-8pi, two ends: F=a z^2 + b z + c/z + d/z^2, G=1/z",
    notes="residue of F dG at 0 is -b, so b must be real",
)

_two_end_entry(
    "tc8_802_4",
    lambda p: {1: p["a"], -1: p["b"], -2: p["c"], -3: p["d"]},
    lambda p: {-2: 1},
    {"a": 1.0 + 0j, "b": 1.0 + 0j, "c": 1.0 + 0j, "d": 1.0 + 0j},
    [
        _c("a>0", lambda p, F, G: _pos(p["a"])),
        _c("d≠0", lambda p, F, G: _nonzero(p["d"])),
    ],
    4,
    "-8pi, two ends: F=a z + b/z + c/z^2 + d/z^3, G=1/z^2",
)

_two_end_entry(
    "tc8_802_5",
    lambda p: {2: p["a"], 1: p["b"], -1: p["c"], -2: p["d"]},
    lambda p: {-1: -p["alpha"], -2: p["alpha"] / 2},
    {"a": 1.0 + 0j, "b": 1.0 + 0j, "c": 1.0 + 0j, "d": 2.0 + 0j, "alpha": 1.0 + 0j},
    [
        _c("a>0", lambda p, F, G: _pos(p["a"])),
        _c("b∈R", lambda p, F, G: _real(p["b"])),
        _c("α≠0", lambda p, F, G: _nonzero(p["alpha"])),
        _c(
            "α(b−a)∈R",
            lambda p, F, G: _real(complex(p["alpha"]) * (complex(p["b"]) - complex(p["a"]))),
        ),
        _c("F′(1)≠0", lambda p, F, G: _nonzero(_dF_at(F, 1.0))),
        _c(
            "2|d|≠|α|",
            lambda p, F, G: abs(2 * abs(complex(p["d"])) - abs(complex(p["alpha"]))) > _EPS,
        ),
    ],
    4,
    "-8pi, two ends: F=a z^2 + b z + c/z + d/z^2, G=alpha(-1/z + 1/(2 z^2))",
)

_two_end_entry(
    "tc8_802_6",
    lambda p: {1: p["a"], -1: p["b"], -2: p["c"], -3: p["d"]},
    lambda p: {-2: -p["alpha"] / 2, -3: p["alpha"] / 3},
    {"a": 1.0 + 0j, "b": 1.0 + 0j, "c": 1.0 + 0j, "d": 1.0 + 0j, "alpha": 1.0 + 0j},
    [
        _c("a>0", lambda p, F, G: _pos(p["a"])),
        _c("α≠0", lambda p, F, G: _nonzero(p["alpha"])),
        _c("F′(1)≠0", lambda p, F, G: _nonzero(_dF_at(F, 1.0))),
        _c(
            "3|d|≠|α|",
            lambda p, F, G: abs(3 * abs(complex(p["d"])) - abs(complex(p["alpha"]))) > _EPS,
        ),
    ],
    4,
    "-8pi, two ends: F=a z + b/z + c/z^2 + d/z^3, G=alpha(-1/(2 z^2) + 1/(3 z^3))",
)

_two_end_entry(
    "tc8_802_7",
    lambda p: {1: p["a"], -1: p["b"], -2: p["c"], -3: p["d"]},
    lambda p: {-1: 1},
    {"a": 1.0 + 0j, "b": 1.0 + 0j, "c": 1.0 + 0j, "d": 1.0 + 0j},
    [
        _c("a>0", lambda p, F, G: _pos(p["a"])),
        _c("d≠0", lambda p, F, G: _nonzero(p["d"])),
    ],
    4,
    "-8pi, two ends: F=a z + b/z + c/z^2 + d/z^3, G=1/z",
)

_two_end_entry(
    "tc8_802_8",
    lambda p: {1: p["a"], -1: p["b"], -2: p["c"], -3: p["d"]},
    lambda p: {-1: -p["alpha"], -2: p["alpha"], -3: -p["alpha"] / 3},
    {"a": 1.0 + 0j, "b": 1.0 + 0j, "c": 1.0 + 0j, "d": 1.0 + 0j, "alpha": 1.0 + 0j},
    [
        _c("a>0", lambda p, F, G: _pos(p["a"])),
        _c("α≠0", lambda p, F, G: _nonzero(p["alpha"])),
        _c("αa∈R", lambda p, F, G: _real(complex(p["alpha"]) * complex(p["a"]))),
        _c("F′(1)≠0", lambda p, F, G: _nonzero(_dF_at(F, 1.0))),
        _c(
            "3|d|≠|α|",
            lambda p, F, G: abs(3 * abs(complex(p["d"])) - abs(complex(p["alpha"]))) > _EPS,
        ),
    ],
    4,
    "-8pi, two ends: F=a z + b/z + c/z^2 + d/z^3, G=alpha(-1/z + 1/z^2 - 1/(3 z^3))",
    notes="residue of F dG at 0 is alpha a, so alpha a must be real",
)

_two_end_entry(
    "tc8_802_11",
    lambda p: {1: p["a"], -1: p["b"], -2: p["c"], -3: p["d"]},
    lambda p: {-2: p["alpha"] / 2, -1: -p["alpha"]},
    {"a": 1.0 + 0j, "b": 1.0 + 0j, "c": 1.0 + 0j, "d": 1.0 + 0j, "alpha": 1.0 + 0j},
    [
        _c("a>0", lambda p, F, G: _pos(p["a"])),
        _c("α≠0", lambda p, F, G: _nonzero(p["alpha"])),
        _c("d≠0", lambda p, F, G: _nonzero(p["d"])),
        _c("αa∈R", lambda p, F, G: _real(complex(p["alpha"]) * complex(p["a"]))),
        _c("F′(1)≠0", lambda p, F, G: _nonzero(_dF_at(F, 1.0))),
    ],
    4,
    "-8pi, two ends: F=a z + b/z + c/z^2 + d/z^3, G=alpha(1/(2 z^2) - 1/z)",
)

_two_end_entry(
    "tc8_802_12",
    lambda p: {3: p["a"], 2: p["b"], 1: p["c"], -1: p["d"]},
    lambda p: {1: p["alpha"], -1: p["alpha"]},
    {"a": 1.0 + 0j, "b": 0j, "c": 1.0 + 0j, "d": 2.0 + 0j, "alpha": 1.0 + 0j},
    [
        _c("a>0", lambda p, F, G: _pos(p["a"])),
        _c("α≠0", lambda p, F, G: _nonzero(p["alpha"])),
        _c(
            "α(d−c)∈R",
            lambda p, F, G: _real(complex(p["alpha"]) * (complex(p["d"]) - complex(p["c"]))),
        ),
        _c(
            "|d|≠|α|",
            lambda p, F, G: abs(abs(complex(p["d"])) - abs(complex(p["alpha"]))) > _EPS,
        ),
        _c("F′(1)≠0", lambda p, F, G: _nonzero(_dF_at(F, 1.0))),
        _c("F′(−1)≠0", lambda p, F, G: _nonzero(_dF_at(F, -1.0))),
    ],
    4,
    "-8pi, two ends: F=a z^3 + b z^2 + c z + d/z, G=alpha(z + 1/z)",
)

_two_end_entry(
    "tc8_802_13",
    lambda p: {1: p["a"], -1: p["b"], -2: p["c"], -3: p["d"]},
    lambda p: {
        -1: -p["alpha"],
        -2: p["alpha"] * (complex(p["p"]) + 1) / 2,
        -3: -p["alpha"] * complex(p["p"]) / 3,
    },
    {
        "a": 1.0 + 0j, "b": 1.0 + 0j, "c": 1.0 + 0j, "d": 1.0 + 0j,
        "alpha": 1.0 + 0j, "p": 2.0 + 0j,
    },
    [
        _c("a>0", lambda p, F, G: _pos(p["a"])),
        _c("α∈R∖{0}", lambda p, F, G: _real(p["alpha"]) and _nonzero(p["alpha"])),
        _c(
            "p∉{0,1}",
            lambda p, F, G: _nonzero(p["p"]) and _nonzero(complex(p["p"]) - 1),
        ),
        _c("F′(1)≠0", lambda p, F, G: _nonzero(_dF_at(F, 1.0))),
        _c("F′(p)≠0", lambda p, F, G: _nonzero(_dF_at(F, p["p"]))),
        _c(
            "3|d|≠|α||p|",
            lambda p, F, G: abs(
                3 * abs(complex(p["d"])) - abs(complex(p["alpha"])) * abs(complex(p["p"]))
            )
            > _EPS,
        ),
    ],
    4,
    "-8pi, two ends: F=a z + b/z + c/z^2 + d/z^3, "
    "G=alpha(-1/z + (p+1)/(2 z^2) - p/(3 z^3))",
)

_two_end_entry(
    "tc8_802_15",
    lambda p: {3: p["a"], 2: p["b"], 1: p["c"], -1: p["d"]},
    lambda p: {2: p["alpha"], 1: 6 * p["alpha"], -1: 8 * p["alpha"]},
    {"a": 1.0 + 0j, "b": 0j, "c": 1.0 + 0j, "d": 1.0 + 0j, "alpha": 1.0 + 0j},
    [
        _c("a>0", lambda p, F, G: _pos(p["a"])),
        _c("α≠0", lambda p, F, G: _nonzero(p["alpha"])),
        _c(
            "α(3d−4c)∈R",
            lambda p, F, G: _real(
                complex(p["alpha"]) * (3 * complex(p["d"]) - 4 * complex(p["c"]))
            ),
        ),
        _c("F′(1)≠0", lambda p, F, G: _nonzero(_dF_at(F, 1.0))),
        _c("F′(−2)≠0", lambda p, F, G: _nonzero(_dF_at(F, -2.0))),
        _c(
            "|d|≠8|α|",
            lambda p, F, G: abs(abs(complex(p["d"])) - 8 * abs(complex(p["alpha"]))) > _EPS,
        ),
    ],
    4,
    "-8pi, two ends: F=a z^3 + b z^2 + c z + d/z, G=alpha(z^2 + 6 z + 8/z)",
    notes="G' = 2 alpha (z-1)(z+2)^2/z^2, matching the F'(1), F'(-2) conditions",
)

_two_end_entry(
    "tc8_802_16",
    lambda p: {2: p["a"], 1: p["b"], -1: p["c"], -2: p["d"]},
    lambda p: {1: p["alpha"], -1: 3 * p["alpha"] / 4, -2: p["alpha"] / 8},
    {"a": 1.0 + 0j, "b": 1.0 + 0j, "c": 1.0 + 0j, "d": 2.0 + 0j, "alpha": 1.0 + 0j},
    [
        _c("a>0", lambda p, F, G: _pos(p["a"])),
        _c("α≠0", lambda p, F, G: _nonzero(p["alpha"])),
        _c(
            "α(a+3b−4c)∈R",
            lambda p, F, G: _real(
                complex(p["alpha"])
                * (complex(p["a"]) + 3 * complex(p["b"]) - 4 * complex(p["c"]))
            ),
        ),
        _c("F′(1)≠0", lambda p, F, G: _nonzero(_dF_at(F, 1.0))),
        _c("F′(−1/2)≠0", lambda p, F, G: _nonzero(_dF_at(F, -0.5))),
        _c(
            "2|d|≠|α|",
            lambda p, F, G: abs(2 * abs(complex(p["d"])) - abs(complex(p["alpha"]))) > _EPS,
        ),
        _c(
            "8|d|≠|α|",
            lambda p, F, G: abs(8 * abs(complex(p["d"])) - abs(complex(p["alpha"]))) > _EPS,
        ),
    ],
    4,
    "-8pi, two ends: F=a z^2 + b z + c/z + d/z^2, G=alpha(z + 3/(4 z) + 1/(8 z^2))",
    notes="rho(0) = 8 d / alpha, so 8|d| != |alpha| is the structural end condition",
)

_two_end_entry(
    "tc8_802_17",
    lambda p: {2: p["a"], 1: p["b"], -1: p["c"], -2: p["d"]},
    lambda p: {1: p["alpha"], -1: p["alpha"]},
    {"a": 1.0 + 0j, "b": 1.0 + 0j, "c": 1.0 + 0j, "d": 2.0 + 0j, "alpha": 1.0 + 0j},
    [
        _c("a>0", lambda p, F, G: _pos(p["a"])),
        _c("α≠0", lambda p, F, G: _nonzero(p["alpha"])),
        _c("d≠0", lambda p, F, G: _nonzero(p["d"])),
        _c(
            "α(b−c)∈R",
            lambda p, F, G: _real(complex(p["alpha"]) * (complex(p["b"]) - complex(p["c"]))),
        ),
        _c("F′(1)≠0", lambda p, F, G: _nonzero(_dF_at(F, 1.0))),
        _c("F′(−1)≠0", lambda p, F, G: _nonzero(_dF_at(F, -1.0))),
    ],
    4,
    "-8pi, two ends: F=a z^2 + b z + c/z + d/z^2, G=alpha(z + 1/z)",
)

_two_end_entry(
    "tc8_802_18",
    lambda p: {3: p["a"], 2: p["b"], 1: p["c"], -1: p["d"]},
    lambda p: {
        2: p["alpha"],
        1: 2 * (complex(p["p"]) * complex(p["q"]) - 1) * p["alpha"],
        -1: 2 * complex(p["p"]) * complex(p["q"]) * p["alpha"],
    },
    {
        "a": 1.0 + 0j, "b": 0j, "c": 1.0 + 0j, "d": 1.0 + 0j,
        "alpha": 1.0 + 0j, "p": -1.0 + 1.0j, "q": -1.0 - 1.0j,
    },
    [
        _c("a>0", lambda p, F, G: _pos(p["a"])),
        _c("α≠0", lambda p, F, G: _nonzero(p["alpha"])),
        _c("p≠q", lambda p, F, G: _nonzero(complex(p["p"]) - complex(p["q"]))),
        _c(
            "p,q∉{0,1}",
            lambda p, F, G: all(
                _nonzero(v) and _nonzero(complex(v) - 1) for v in (p["p"], p["q"])
            ),
        ),
        _c(
            "p+q=−pq",
            lambda p, F, G: abs(
                complex(p["p"]) + complex(p["q"]) + complex(p["p"]) * complex(p["q"])
            )
            < 1e-10,
        ),
        _c(
            "α((d−c)pq−d)∈R",
            lambda p, F, G: _real(
                complex(p["alpha"])
                * (
                    (complex(p["d"]) - complex(p["c"])) * complex(p["p"]) * complex(p["q"])
                    - complex(p["d"])
                )
            ),
        ),
        _c(
            "|d|≠2|αpq|",
            lambda p, F, G: abs(
                abs(complex(p["d"]))
                - 2 * abs(complex(p["alpha"]) * complex(p["p"]) * complex(p["q"]))
            )
            > _EPS,
        ),
        _c("F′(1)≠0", lambda p, F, G: _nonzero(_dF_at(F, 1.0))),
        _c("F′(p)≠0", lambda p, F, G: _nonzero(_dF_at(F, p["p"]))),
        _c("F′(q)≠0", lambda p, F, G: _nonzero(_dF_at(F, p["q"]))),
    ],
    4,
    "-8pi, two ends: F=a z^3 + b z^2 + c z + d/z, "
    "G=alpha(z^2 + 2(pq-1) z + 2 pq/z)",
    notes="G' factors as 2 alpha (z-p)(z-q)(z-1)/z^2 exactly when p+q=-pq",
)

_two_end_entry(
    "tc8_802_19",
    lambda p: {2: p["a"], 1: p["b"], -1: p["c"], -2: p["d"]},
    lambda p: {
        1: p["alpha"],
        -1: (complex(p["q"]) ** 2 + complex(p["q"]) + 1) * p["alpha"],
        -2: -complex(p["q"]) * (complex(p["q"]) + 1) / 2 * p["alpha"],
    },
    {"a": 1.0 + 0j, "b": 1.0 + 0j, "c": 1.0 + 0j, "d": 2.0 + 0j, "alpha": 1.0 + 0j, "q": 2.0 + 0j},
    [
        _c("a>0", lambda p, F, G: _pos(p["a"])),
        _c("α≠0", lambda p, F, G: _nonzero(p["alpha"])),
        _c(
            "q∉{0,±1}",
            lambda p, F, G: _nonzero(p["q"])
            and _nonzero(complex(p["q"]) - 1)
            and _nonzero(complex(p["q"]) + 1),
        ),
        _c(
            "α(aq(q+1)−b(q²+q+1)+c)∈R",
            lambda p, F, G: _real(
                complex(p["alpha"])
                * (
                    complex(p["a"]) * complex(p["q"]) * (complex(p["q"]) + 1)
                    - complex(p["b"]) * (complex(p["q"]) ** 2 + complex(p["q"]) + 1)
                    + complex(p["c"])
                )
            ),
        ),
        _c(
            "2|d|≠|αq(q+1)|",
            lambda p, F, G: abs(
                2 * abs(complex(p["d"]))
                - abs(complex(p["alpha"]) * complex(p["q"]) * (complex(p["q"]) + 1))
            )
            > _EPS,
        ),
        _c(
            "4|d|≠|αq(q+1)|",
            lambda p, F, G: abs(
                4 * abs(complex(p["d"]))
                - abs(complex(p["alpha"]) * complex(p["q"]) * (complex(p["q"]) + 1))
            )
            > _EPS,
        ),
        _c("F′(1)≠0", lambda p, F, G: _nonzero(_dF_at(F, 1.0))),
        _c("F′(q)≠0", lambda p, F, G: _nonzero(_dF_at(F, p["q"]))),
        _c("F′(−1−q)≠0", lambda p, F, G: _nonzero(_dF_at(F, -1 - complex(p["q"])))),
    ],
    4,
    "-8pi, two ends: F=a z^2 + b z + c/z + d/z^2, "
    "G=alpha(z + (q^2+q+1)/z - q(q+1)/(2 z^2))",
    notes="G' factors as alpha (z-1)(z-q)(z+1+q)/z^3",
)


# -- three-end families on C minus {0, 1} ----------------------------------------------


def _three_end_builder(fshape, gshape):
    def build(p):
        dom = DomainSpec("sphere", (0j, 1.0 + 0j, INF))
        return dom, fshape(p), gshape(p)

    return build


def _F_803(p):
    return (
        complex(p["a"]) * _zpow(1)
        + _pole_term(complex(p["b"]), 1.0)
        + _pole_term(complex(p["c"]), 0.0)
    )


_register(
    CatalogEntry(
        id="tc8_803_1",
        params={"a": 1.0 + 0j, "b": 0.5 + 0j, "c": 1.0 + 0j, "alpha": 1.0 + 0j},
        constraints=(
            _c("a>0", lambda p, F, G: _pos(p["a"])),
            _c("c∈R∖{0}", lambda p, F, G: _real(p["c"]) and _nonzero(p["c"])),
            _c("α∈R∖{0}", lambda p, F, G: _real(p["alpha"]) and _nonzero(p["alpha"])),
            _c(
                "|b|≠|α|",
                lambda p, F, G: abs(abs(complex(p["b"])) - abs(complex(p["alpha"]))) > _EPS,
            ),
        ),
        expected=(0, 3, 4, True),
        description="-8pi, three embedded ends: F=a z + b/(z-1) + c/z, G=alpha/(z-1)",
    ),
    _three_end_builder(_F_803, lambda p: _pole_term(complex(p["alpha"]), 1.0)),
)

_register(
    CatalogEntry(
        id="tc8_803_2",
        params={"a": 1.0 + 0j, "b": 0.3 + 0j, "c": 0.4 + 0j, "alpha": 1.0 + 0j},
        constraints=(
            _c("a>0", lambda p, F, G: _pos(p["a"])),
            _c("α≠0", lambda p, F, G: _nonzero(p["alpha"])),
            _c("Im(b+c)=0", lambda p, F, G: _real(complex(p["b"]) + complex(p["c"]))),
            _c(
                "α(b+c−a)∈R",
                lambda p, F, G: _real(
                    complex(p["alpha"])
                    * (complex(p["b"]) + complex(p["c"]) - complex(p["a"]))
                ),
            ),
            _c(
                "|b|≠|α|",
                lambda p, F, G: abs(abs(complex(p["b"])) - abs(complex(p["alpha"]))) > _EPS,
            ),
            _c(
                "|c|≠|α|",
                lambda p, F, G: abs(abs(complex(p["c"])) - abs(complex(p["alpha"]))) > _EPS,
            ),
            _c("F′(1/2)≠0", lambda p, F, G: _nonzero(_dF_at(F, 0.5))),
        ),
        expected=(0, 3, 4, True),
        description="-8pi, three embedded ends: F=a z + b/(z-1) + c/z, "
        "G=alpha(1/z - 1/(z-1))",
    ),
    _three_end_builder(
        _F_803,
        lambda p: _pole_term(complex(p["alpha"]), 0.0)
        + _pole_term(-complex(p["alpha"]), 1.0),
    ),
)

_register(
    CatalogEntry(
        id="tc8_803_3",
        params={
            "a": 1.0 + 0j, "b": 0.5 + 0j, "c": 0.4 + 0j, "alpha": 0.5 + 0j,
            "p": -1.0 + np.sqrt(2.0), "q": -1.0 - np.sqrt(2.0),
        },
        constraints=(
            _c("a>0", lambda p, F, G: _pos(p["a"])),
            _c("α∈R∖{0}", lambda p, F, G: _real(p["alpha"]) and _nonzero(p["alpha"])),
            _c(
                "p,q∉{0,1}",
                lambda p, F, G: all(
                    _nonzero(v) and _nonzero(complex(v) - 1) for v in (p["p"], p["q"])
                ),
            ),
            _c(
                "pq≠1",
                lambda p, F, G: _nonzero(complex(p["p"]) * complex(p["q"]) - 1),
            ),
            _c(
                "p+q=2pq",
                lambda p, F, G: abs(
                    complex(p["p"]) + complex(p["q"]) - 2 * complex(p["p"]) * complex(p["q"])
                )
                < 1e-10,
            ),
            _c(
                "Im(1−2pq)=0",
                lambda p, F, G: _real(1 - 2 * complex(p["p"]) * complex(p["q"])),
            ),
            _c(
                "Im(c+pq(a−b−c))=0",
                lambda p, F, G: _real(
                    complex(p["c"])
                    + complex(p["p"])
                    * complex(p["q"])
                    * (complex(p["a"]) - complex(p["b"]) - complex(p["c"]))
                ),
            ),
            _c(
                "|c|≠|αpq|",
                lambda p, F, G: abs(
                    abs(complex(p["c"]))
                    - abs(complex(p["alpha"]) * complex(p["p"]) * complex(p["q"]))
                )
                > _EPS,
            ),
            _c(
                "|b|≠|α(pq−1)|",
                lambda p, F, G: abs(
                    abs(complex(p["b"]))
                    - abs(complex(p["alpha"]) * (complex(p["p"]) * complex(p["q"]) - 1))
                )
                > _EPS,
            ),
            _c("F′(p)≠0", lambda p, F, G: _nonzero(_dF_at(F, p["p"]))),
            _c("F′(q)≠0", lambda p, F, G: _nonzero(_dF_at(F, p["q"]))),
        ),
        expected=(0, 3, 4, True),
        description="-8pi, three embedded ends: F=a z + b/(z-1) + c/z, "
        "G=alpha((pq-1)/(z-1) - pq/z)",
    ),
    _three_end_builder(
        _F_803,
        lambda p: _pole_term(
            complex(p["alpha"]) * (complex(p["p"]) * complex(p["q"]) - 1), 1.0
        )
        + _pole_term(-complex(p["alpha"]) * complex(p["p"]) * complex(p["q"]), 0.0),
    ),
)


# -- noids --------------------------------------------------------------------------


def _jorge_meeks_build(p):
    n = int(np.real(p["n"]))
    lam = [complex(v) for v in p["lam"]]
    mu = [complex(v) for v in p["mu"]]
    zeta = np.exp(2j * np.pi / n)
    eta = np.exp(1j * np.pi / n)
    punctures = [zeta**j for j in range(n)] + [eta * zeta**k for k in range(n)]
    F = RationalFunction(Polynomial([0]))
    G = RationalFunction(Polynomial([0]))
    for j in range(n):
        F = F + _pole_term(lam[j] * eta * zeta**j, zeta**j)
        G = G + _pole_term(mu[j] * zeta**j, eta * zeta**j)
    return DomainSpec("sphere", tuple(punctures)), F, G


def _jm_expected(p):
    n = int(np.real(p["n"]))
    return (0, 2 * n, 4 * n - 2, True)


_register(
    CatalogEntry(
        id="jorge_meeks_2n",
        params={"n": 2, "lam": (1.0, -1.0), "mu": (1.0, -1.0)},
        constraints=(
            _c("n≥2", lambda p, F, G: int(np.real(p["n"])) >= 2),
            _c(
                "λ_j∈R∖{0}",
                lambda p, F, G: all(_real(v) and _nonzero(v) for v in p["lam"]),
            ),
            _c(
                "μ_k∈R∖{0}",
                lambda p, F, G: all(_real(v) and _nonzero(v) for v in p["mu"]),
            ),
            _c(
                "len(λ)=len(μ)=n",
                lambda p, F, G: len(p["lam"]) == len(p["mu"]) == int(np.real(p["n"])),
            ),
        ),
        expected=(0, 4, 6, True),  # for the default n = 2
        description="2n embedded ends at the 2n-th roots of unity: "
        "F and G are sums of simple poles with rotational symmetry",
        notes="expected signature scales with n: (0, 2n, 4n-2, all embedded)",
    ),
    _jorge_meeks_build,
)

_register(
    CatalogEntry(
        id="fournoid",
        params={},
        constraints=(),
        expected=(0, 4, 6, True),
        description="four embedded ends at {1,-1,i,-i}: "
        "F=1/(z-1)+1/(z+1), G=1/(z-i)+1/(z+i)",
    ),
    lambda p: (
        DomainSpec("sphere", (1.0 + 0j, -1.0 + 0j, 1j, -1j)),
        _pole_term(1.0, 1.0) + _pole_term(1.0, -1.0),
        _pole_term(1.0, 1j) + _pole_term(1.0, -1j),
    ),
)


# -- genus-1 entries ------------------------------------------------------------------


def _torus_8pi_build(p):
    from .genus1 import build_genus1_8pi

    data = build_genus1_8pi(a=float(np.real(p["a"])), b=complex(p["b"]))
    return data


def _torus_10pi_build(p):
    from .genus1 import build_genus1_10pi

    return build_genus1_10pi()


_register(
    CatalogEntry(
        id="torus_8pi",
        params={"a": 1.0 + 0j, "b": 0j},
        constraints=(_c("a>0", lambda p, F, G: _pos(p["a"])),),
        expected=(1, 1, 4, False),
        description="genus 1, total curvature -8pi: F=a wp' + b wp, G=c wp on "
        "the solved modulus e^(i alpha0)",
    ),
    _torus_8pi_build,
)

_register(
    CatalogEntry(
        id="torus_10pi",
        params={},
        constraints=(),
        expected=(1, 1, 5, False),
        description="genus 1, total curvature -10pi on the square torus: "
        "F=wp'' + (5 g2 / 7 pi) wp, G=wp'",
    ),
    _torus_10pi_build,
)


# -- public operations ---------------------------------------------------------------


def catalog_list():
    """Descriptors for every registered family, in registration order."""
    return list(_REGISTRY.values())


def _expected_for(entry, params):
    if entry.id == "jorge_meeks_2n":
        return _jm_expected(params)
    return entry.expected


def _quick_period_check(data, tol=1e-9):
    """Closed-form only: residues real (genus 0), quasi-period parts (torus)."""
    if data.domain.kind == "torus":
        H = data.height_antiderivative()
        for w in (1, 2):
            v = H.lattice_period(w)
            if abs(v.real) > tol * max(1.0, abs(v)):
                return False
        return True
    fg = data.F * data.dG()
    for q in data.domain.finite_ends():
        r = residue(fg, q)
        if abs(r.imag) > tol * max(1.0, abs(r)):
            return False
    return True


def catalog_build(id: str, params=None, verify=True, **kwargs) -> WeierstrassData:
    """Build a catalog entry, enforcing its constraints and verifying the
    expected (genus, ends, deg rho, embeddedness) signature plus the
    closed-form period condition.

    Raises UnknownId or ConstraintViolated (naming the predicate).
    """
    if id not in _REGISTRY:
        raise UnknownId(f"no catalog entry {id!r}; see catalog_list()")
    entry = _REGISTRY[id]
    p = dict(entry.params)
    if params:
        p.update(params)
    p.update(kwargs)
    unknown = set(p) - set(entry.params)
    if unknown:
        raise ConstraintViolated(
            f"unknown parameter(s) {sorted(unknown)}", f"{id} accepts {sorted(entry.params)}"
        )

    built = _BUILDERS[id](p)
    if isinstance(built, WeierstrassData):
        data = built
        F, G = data.F, data.G
    else:
        dom, F, G = built
        data = None
    for label, pred in entry.constraints:
        if not pred(p, F, G):
            raise ConstraintViolated(label, f"{id}: constraint {label} violated")
    if data is None:
        data = WeierstrassData(dom, F, G)
    validate(data)
    if verify:
        g, n, deg, emb = _expected_for(entry, p)
        got_deg, _ = total_curvature(data)
        got_n = len(data.domain.ends())
        ok = (data.domain.genus, got_n, got_deg) == (g, n, deg)
        if not ok:
            raise AssertionError(
                f"{id}: measured (genus, n, deg) = "
                f"({data.domain.genus}, {got_n}, {got_deg}), expected ({g}, {n}, {deg})"
            )
        from .ends import classify_end

        all_emb = all(classify_end(data, q).embedded for q in data.domain.ends())
        if all_emb != emb:
            raise AssertionError(f"{id}: embeddedness {all_emb}, expected {emb}")
        if not _quick_period_check(data):
            raise AssertionError(f"{id}: closed-form period condition failed")
    data.catalog_id = id
    data.catalog_params = p
    return data
